//! Trace symbols and the two coefficient rings built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::grassmann::Element;
use crate::{AlgebraConfig, Error, Rational, Result};

/// A formal trace. Variant order is the canonical symbol order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceSymbol {
    /// `tr(A^i)`, `i >= 1`
    EvenA(u32),
    /// `tr(B^{2i})`, `i >= 1`
    EvenB2(u32),
    /// `tr(A^r B A^s)`; `(0, 0)` is `tr(B)`
    MixedOdd(u32, u32),
    /// `tr(B^t)`, `t >= 1` odd
    OddB(u32),
}

impl TraceSymbol {
    pub fn is_odd(self) -> bool {
        matches!(self, TraceSymbol::MixedOdd(..) | TraceSymbol::OddB(_))
    }

    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            TraceSymbol::EvenA(i) | TraceSymbol::EvenB2(i) => i >= 1,
            TraceSymbol::MixedOdd(..) => true,
            TraceSymbol::OddB(t) => t % 2 == 1,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Parse(format!("trace symbol {self:?} out of range")))
        }
    }
}

/// A product of even trace symbols with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<TraceSymbol, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn of(symbol: TraceSymbol) -> Self {
        Monomial(BTreeMap::from([(symbol, 1)]))
    }

    pub fn from_factors<I: IntoIterator<Item = (TraceSymbol, u32)>>(factors: I) -> Self {
        let mut m = Monomial::one();
        for (s, e) in factors {
            if e > 0 {
                *m.0.entry(s).or_insert(0) += e;
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (TraceSymbol, u32)> + '_ {
        self.0.iter().map(|(s, e)| (*s, *e))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(self.factors().chain(other.factors()))
    }
}

/// Commutative polynomial in even trace symbols with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EvenTracePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl EvenTracePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(q: Rational) -> Self {
        Self::monomial(Monomial::one(), q)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// # Panics
    ///
    /// Panics on an odd symbol.
    pub fn symbol(s: TraceSymbol) -> Self {
        assert!(!s.is_odd(), "{s:?} is not an even symbol");
        Self::monomial(Monomial::of(s), Rational::one())
    }

    pub fn monomial(m: Monomial, q: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, q);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The polynomial is a rational constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), q.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                out.add_term(ma.mul(mb), qa * qb);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        EvenTracePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = TraceSymbol> + '_ {
        self.terms.keys().flat_map(|m| m.0.keys().copied())
    }

    /// Value after replacing each symbol by `value(symbol)`.
    pub fn evaluate(
        &self,
        config: AlgebraConfig,
        value: &mut impl FnMut(TraceSymbol) -> Result<Element>,
    ) -> Result<Element> {
        let mut acc = Element::zero(config);
        for (m, q) in &self.terms {
            let mut prod = Element::scalar(config, q.clone());
            for (s, e) in m.factors() {
                let v = value(s)?;
                for _ in 0..e {
                    prod = prod.checked_mul(&v)?;
                }
            }
            acc = acc.checked_add(&prod)?;
        }
        Ok(acc)
    }

    pub(crate) fn from_raw(terms: BTreeMap<Monomial, Rational>) -> Result<Self> {
        for m in terms.keys() {
            if let Some((s, _)) = m.factors().find(|(s, _)| s.is_odd()) {
                return Err(Error::Parse(format!("odd symbol {s:?} in an even polynomial")));
            }
        }
        Ok(EvenTracePoly {
            terms: terms.into_iter().filter(|(_, q)| !q.is_zero()).collect(),
        })
    }
}

/// Linear combination of odd trace symbols with [`EvenTracePoly`]
/// coefficients. Products of two odd symbols cannot be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OddTraceLinear {
    terms: BTreeMap<TraceSymbol, EvenTracePoly>,
}

impl OddTraceLinear {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * symbol`.
    ///
    /// # Panics
    ///
    /// Panics on an even symbol.
    pub fn term(symbol: TraceSymbol, coeff: EvenTracePoly) -> Self {
        assert!(symbol.is_odd(), "{symbol:?} is not an odd symbol");
        let mut out = Self::zero();
        if !coeff.is_zero() {
            out.terms.insert(symbol, coeff);
        }
        out
    }

    pub fn symbol(symbol: TraceSymbol) -> Self {
        Self::term(symbol, EvenTracePoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (TraceSymbol, &EvenTracePoly)> {
        self.terms.iter().map(|(s, p)| (*s, p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, p) in &other.terms {
            let sum = out.terms.get(s).map_or_else(|| p.clone(), |q| q.add(p));
            if sum.is_zero() {
                out.terms.remove(s);
            } else {
                out.terms.insert(*s, sum);
            }
        }
        out
    }

    pub fn mul_even(&self, p: &EvenTracePoly) -> Self {
        OddTraceLinear {
            terms: self
                .terms
                .iter()
                .map(|(s, q)| (*s, q.mul(p)))
                .filter(|(_, q)| !q.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.mul_even(&EvenTracePoly::constant(q.clone()))
    }

    /// Holds when every key is odd and every coefficient is free of odd
    /// symbols, so the expression has degree exactly one in odd symbols.
    pub fn is_linear(&self) -> bool {
        self.terms
            .iter()
            .all(|(s, p)| s.is_odd() && p.symbols().all(|t| !t.is_odd()))
    }

    pub fn evaluate(
        &self,
        config: AlgebraConfig,
        value: &mut impl FnMut(TraceSymbol) -> Result<Element>,
    ) -> Result<Element> {
        let mut acc = Element::zero(config);
        for (s, p) in &self.terms {
            let coeff = p.evaluate(config, value)?;
            acc = acc.checked_add(&coeff.checked_mul(&value(*s)?)?)?;
        }
        Ok(acc)
    }

    pub(crate) fn from_raw(terms: BTreeMap<TraceSymbol, EvenTracePoly>) -> Result<Self> {
        if let Some(s) = terms.keys().find(|s| !s.is_odd()) {
            return Err(Error::Parse(format!("even symbol {s:?} used as an odd key")));
        }
        Ok(OddTraceLinear {
            terms: terms.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
        })
    }
}

impl fmt::Display for TraceSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceSymbol::EvenA(i) => write!(f, "tr(A^{i})"),
            TraceSymbol::EvenB2(i) => write!(f, "tr(B^{})", 2 * i),
            TraceSymbol::MixedOdd(r, s) => write!(f, "tr(A^{r} B A^{s})"),
            TraceSymbol::OddB(t) => write!(f, "tr(B^{t})"),
        }
    }
}
