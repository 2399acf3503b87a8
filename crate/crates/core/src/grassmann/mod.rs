//! Exact arithmetic in the Grassmann algebra `E` on generators `v_1..v_G`
//! over the rationals, and in its extension `F` by one more anticommuting
//! generator `w` (stored as index 0).

mod blade;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use blade::{Blade, Sign, MAX_INDEX};
pub use text::{parse_rational, ElementJson, TermJson};

use crate::{Error, Rational, Result};

/// Generator count used when none is given.
pub const DEFAULT_GENERATORS: u32 = 16;

/// Which algebra an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Context {
    /// `E = K<v_1..v_G>`.
    E,
    /// `F = K<w, v_1..v_G>`; admits index 0.
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraConfig {
    generators: u32,
    context: Context,
}

impl AlgebraConfig {
    pub fn new(generators: u32, context: Context) -> Result<Self> {
        if generators == 0 || generators > MAX_INDEX {
            return Err(Error::InvalidConfig(format!(
                "generator count must be in 1..={MAX_INDEX}, got {generators}"
            )));
        }
        Ok(AlgebraConfig { generators, context })
    }

    /// `E` with `generators` generators.
    pub fn e(generators: u32) -> Result<Self> {
        Self::new(generators, Context::E)
    }

    /// `F` with `generators` generators plus `w`.
    pub fn f(generators: u32) -> Result<Self> {
        Self::new(generators, Context::F)
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn with_context(self, context: Context) -> Self {
        AlgebraConfig { context, ..self }
    }

    pub fn admits(&self, blade: Blade) -> bool {
        match blade.max_index() {
            None => true,
            Some(top) => top <= self.generators && (self.context == Context::F || !blade.contains(0)),
        }
    }

    fn check_index(&self, index: u32) -> Result<()> {
        let ok = index <= self.generators && (index != 0 || self.context == Context::F);
        if ok {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index, config: *self })
        }
    }
}

impl Default for AlgebraConfig {
    fn default() -> Self {
        AlgebraConfig {
            generators: DEFAULT_GENERATORS,
            context: Context::E,
        }
    }
}

impl fmt::Display for AlgebraConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(G={})", self.context, self.generators)
    }
}

/// Z2-grading class of an element. Zero belongs to both parts and is kept
/// as its own class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Zero,
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn is_even_or_zero(self) -> bool {
        matches!(self, Parity::Even | Parity::Zero)
    }

    pub fn is_odd_or_zero(self) -> bool {
        matches!(self, Parity::Odd | Parity::Zero)
    }

    /// Parity of a sum of parts classified as `self` and `other`.
    pub fn join(self, other: Parity) -> Parity {
        match (self, other) {
            (Parity::Zero, p) | (p, Parity::Zero) => p,
            (a, b) if a == b => a,
            _ => Parity::Mixed,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Zero => "zero",
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Mixed => "mixed",
        })
    }
}

/// A rational linear combination of blades under a fixed [`AlgebraConfig`].
///
/// No zero coefficients are stored, so the empty term map is zero and
/// structural equality is algebraic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    config: AlgebraConfig,
    terms: BTreeMap<Blade, Rational>,
}

impl Element {
    pub fn zero(config: AlgebraConfig) -> Self {
        Element {
            config,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(config: AlgebraConfig) -> Self {
        Self::scalar(config, Rational::one())
    }

    /// Image of a rational under `K -> E` (or `K -> F`).
    pub fn scalar(config: AlgebraConfig, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Blade::EMPTY, q);
        }
        Element { config, terms }
    }

    pub fn from_integer(config: AlgebraConfig, k: i64) -> Self {
        Self::scalar(config, Rational::from_integer(k.into()))
    }

    /// The generator `v_index` (or `w` for index 0 in `F`).
    pub fn generator(config: AlgebraConfig, index: u32) -> Result<Self> {
        config.check_index(index)?;
        Ok(Self::from_blade(config, Blade::generator(index), Rational::one()))
    }

    /// The generator `w` of `F`.
    pub fn w(config: AlgebraConfig) -> Result<Self> {
        Self::generator(config, 0)
    }

    /// `coeff * g_{i1} g_{i2} ... g_{ik}` in the given order.
    pub fn monomial(config: AlgebraConfig, indices: &[u32], coeff: Rational) -> Result<Self> {
        for &i in indices {
            config.check_index(i)?;
        }
        Ok(match Blade::product_of(indices.iter().copied()) {
            None => Self::zero(config),
            Some((sign, blade)) => {
                let c = if sign.is_negative() { -coeff } else { coeff };
                Self::from_blade(config, blade, c)
            }
        })
    }

    /// Sum of ordered monomials.
    pub fn from_terms<'a, I>(config: AlgebraConfig, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [u32], Rational)>,
    {
        let mut acc = Self::zero(config);
        for (indices, coeff) in terms {
            let m = Self::monomial(config, indices, coeff)?;
            acc.add_assign_unchecked(&m);
        }
        Ok(acc)
    }

    fn from_blade(config: AlgebraConfig, blade: Blade, coeff: Rational) -> Self {
        debug_assert!(config.admits(blade));
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(blade, coeff);
        }
        Element { config, terms }
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (degree, then index sequence).
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    /// The element is a rational multiple of 1.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Blade::EMPTY).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|b| b.degree()).max()
    }

    pub fn parity(&self) -> Parity {
        self.terms.keys().fold(Parity::Zero, |p, b| {
            p.join(if b.is_odd() { Parity::Odd } else { Parity::Even })
        })
    }

    /// Whether some term contains `w`.
    pub fn contains_w(&self) -> bool {
        self.terms.keys().any(|b| b.contains(0))
    }

    fn ensure_same(&self, other: &Element) -> Result<()> {
        if self.config == other.config {
            Ok(())
        } else {
            Err(Error::ConfigMismatch {
                left: self.config,
                right: other.config,
            })
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &-Rational::one());
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        let mut acc: BTreeMap<Blade, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, blade)) = a.wedge(*b) {
                    let c = ca * cb;
                    let slot = acc.entry(blade).or_insert_with(Rational::zero);
                    if sign.is_negative() {
                        *slot -= c;
                    } else {
                        *slot += c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Element {
            config: self.config,
            terms: acc,
        })
    }

    /// `self += other` assuming matching configs.
    pub(crate) fn add_assign_unchecked(&mut self, other: &Element) {
        for (b, c) in &other.terms {
            self.add_term(*b, c);
        }
    }

    /// `self += q * other` assuming matching configs.
    pub(crate) fn add_scaled_unchecked(&mut self, other: &Element, q: &Rational) {
        if q.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(*b, &(c * q));
        }
    }

    fn add_term(&mut self, blade: Blade, c: &Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(blade) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Element {
        if q.is_zero() {
            return Element::zero(self.config);
        }
        Element {
            config: self.config,
            terms: self.terms.iter().map(|(b, c)| (*b, c * q)).collect(),
        }
    }

    /// Image under the inclusion `E -> F`. Elements already in `F` are
    /// returned unchanged.
    pub fn embed_in_f(&self) -> Element {
        Element {
            config: self.config.with_context(Context::F),
            terms: self.terms.clone(),
        }
    }

    /// Splits `lambda` in `F` as `alpha + w * beta` with `alpha`, `beta` free
    /// of `w`, both returned in `E`.
    ///
    /// `w` is the lowest index, so factoring it out on the left never
    /// introduces a sign.
    pub fn decompose_w(&self) -> (Element, Element) {
        let config = self.config.with_context(Context::E);
        let mut alpha = BTreeMap::new();
        let mut beta = BTreeMap::new();
        for (b, c) in &self.terms {
            if b.contains(0) {
                beta.insert(b.without(0), c.clone());
            } else {
                alpha.insert(*b, c.clone());
            }
        }
        (Element { config, terms: alpha }, Element { config, terms: beta })
    }

    /// Inverse of [`Element::decompose_w`]: `alpha + w * beta` in `F`.
    pub fn compose_w(alpha: &Element, beta: &Element) -> Result<Element> {
        alpha.ensure_same(beta)?;
        let w = Element::w(alpha.config.with_context(Context::F))?;
        let mut out = alpha.embed_in_f();
        out.add_assign_unchecked(&(&w * &beta.embed_in_f()));
        Ok(out)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.config, self)
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            config: self.config,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(mut self) -> Element {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

// Operator forms panic on a configuration mismatch; use the `checked_*`
// methods where inputs come from outside.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;

            fn $method(self, rhs: &Element) -> Element {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<Element> for Element {
            type Output = Element;

            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> AlgebraConfig {
        AlgebraConfig::e(6).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn v(i: u32) -> Element {
        Element::generator(cfg(), i).unwrap()
    }

    fn int(k: i64) -> Element {
        Element::from_integer(cfg(), k)
    }

    #[test]
    fn addition_prunes_zeros() {
        assert!((v(1) + -v(1)).is_zero());
        assert_eq!((v(1) + v(2)).len(), 2);
        let e12 = v(1) * v(2);
        assert_eq!((int(1) + e12.clone()) + (int(1) - e12), int(2));
    }

    #[test]
    fn multiplication_examples() {
        let s = v(1) + v(2);
        assert!((&s * &s).is_zero());
        let e12 = v(1) * v(2);
        let x = int(1) + e12.clone();
        // (1 + e)(1 + e) = 1 + 2e + e^2, and e^2 = v1v2v1v2 = 0
        assert_eq!(&x * &x, int(1) + e12.scale(&q(2, 1)));
        assert_eq!(v(2) * v(1), -(v(1) * v(2)));
    }

    #[test]
    fn parity_classes() {
        assert_eq!((int(3) + v(1) * v(2)).parity(), Parity::Even);
        assert_eq!((v(1) + v(1) * v(2) * v(3)).parity(), Parity::Odd);
        assert_eq!((int(1) + v(1)).parity(), Parity::Mixed);
        assert_eq!(Element::zero(cfg()).parity(), Parity::Zero);
    }

    #[test]
    fn decompose_examples() {
        let f = cfg().with_context(Context::F);
        let w = Element::w(f).unwrap();
        let fv = |i| Element::generator(f, i).unwrap();
        let (a, b) = (Element::from_integer(f, 3) + &w * &fv(1)).decompose_w();
        assert_eq!((a, b), (int(3), v(1)));
        let lam = fv(1) * fv(2) + w.clone() * fv(1) * fv(2) * fv(3);
        assert_eq!(lam.decompose_w(), (v(1) * v(2), v(1) * v(2) * v(3)));
        assert_eq!(w.decompose_w(), (Element::zero(cfg()), int(1)));
    }

    #[test]
    fn embed_and_lift() {
        let e = v(1).embed_in_f();
        assert_eq!(e.config().context(), Context::F);
        assert_eq!(e.decompose_w().0, v(1));
        assert!(Element::scalar(cfg(), q(0, 1)).is_zero());
        let c = Element::scalar(cfg(), q(-5, 2));
        assert_eq!(c.as_scalar(), Some(q(-5, 2)));
    }

    #[test]
    fn config_errors() {
        let other = Element::one(AlgebraConfig::e(7).unwrap());
        assert!(matches!(v(1).checked_add(&other), Err(Error::ConfigMismatch { .. })));
        assert!(Element::generator(cfg(), 7).is_err());
        assert!(Element::w(cfg()).is_err());
        assert!(AlgebraConfig::e(0).is_err());
        assert!(AlgebraConfig::e(128).is_err());
    }
}
