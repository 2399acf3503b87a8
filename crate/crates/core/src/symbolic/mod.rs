//! The graded recursions run over formal trace symbols.
//!
//! [`symbolic_theorem21`] and [`symbolic_theorem23`] produce the identities
//! for a given size `n` with coefficients that are polynomials in traces.
//! No trace relations are imposed: `tr(AB)` and `tr(BA)` stay distinct even
//! though they agree on every concrete input.

mod emit;
mod json;
mod poly;

use serde::{Deserialize, Serialize};

use crate::graded::{mixed_pairs, GradedCharData};
use crate::{AlgebraConfig, Context, Element, Error, Matrix, Parity, Rational, Result};

pub use emit::{emit, latex, sexpr, Format};
pub use poly::{EvenTracePoly, Monomial, OddTraceLinear, TraceSymbol};

/// Which identity a [`SymbolicIdentity`] encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Even `A`, odd `B`: `beta_0 I + sum_k {beta_k A^k + alpha_k (word sum)} = 0`.
    Thm21,
    /// Odd `B`: `delta_0 I + sum_k {k gamma_k B^{2k-1} + delta_k B^{2k}} = 0`.
    Thm23,
}

/// Matrix word multiplied by a coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    Identity,
    /// `A^k`
    PowerA(u32),
    /// `A^{k-1}B + A^{k-2}BA + ... + BA^{k-1}`
    WordSum(u32),
    /// `B^m`
    PowerB(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficient {
    Even(EvenTracePoly),
    Odd(OddTraceLinear),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Even(p) => p.is_zero(),
            Coefficient::Odd(p) => p.is_zero(),
        }
    }

    fn evaluate(
        &self,
        config: AlgebraConfig,
        value: &mut impl FnMut(TraceSymbol) -> Result<Element>,
    ) -> Result<Element> {
        match self {
            Coefficient::Even(p) => p.evaluate(config, value),
            Coefficient::Odd(p) => p.evaluate(config, value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicTerm {
    pub pattern: Pattern,
    pub coeff: Coefficient,
}

/// A trace identity of size `n`: the even coefficient list (`alpha` or
/// `gamma`), the odd one (`beta` or `delta`), and the assembled terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicIdentity {
    pub theorem: Theorem,
    pub n: usize,
    pub even: Vec<EvenTracePoly>,
    pub odd: Vec<OddTraceLinear>,
    pub terms: Vec<SymbolicTerm>,
}

impl SymbolicIdentity {
    /// Highest `B` power among nonzero terms and its coefficient.
    pub fn leading_b_term(&self) -> Option<(u32, &Coefficient)> {
        self.terms
            .iter()
            .filter(|t| !t.coeff.is_zero())
            .filter_map(|t| match t.pattern {
                Pattern::PowerB(m) => Some((m, &t.coeff)),
                _ => None,
            })
            .max_by_key(|(m, _)| *m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("identity JSON is always valid")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn inv(k: usize) -> Rational {
    Rational::new(1.into(), (k as i64).into())
}

/// Even recursion `c_k = -1/(n-k) sum_{i=1}^{n-k} c_{k+i} even(i)`.
fn even_recursion(n: usize, even: impl Fn(u32) -> TraceSymbol) -> Vec<EvenTracePoly> {
    let mut c = vec![EvenTracePoly::zero(); n + 1];
    c[n] = EvenTracePoly::one();
    for k in (0..n).rev() {
        let mut acc = EvenTracePoly::zero();
        for i in 1..=n - k {
            acc = acc.add(&c[k + i].mul(&EvenTracePoly::symbol(even(i as u32))));
        }
        c[k] = acc.scale(&-inv(n - k));
    }
    c
}

/// Odd recursion over the symbols, mirroring the concrete one in
/// [`crate::graded`].
fn odd_recursion(
    n: usize,
    even_coeffs: &[EvenTracePoly],
    even: impl Fn(u32) -> TraceSymbol,
    odd: impl Fn(u32, u32) -> TraceSymbol,
) -> Vec<OddTraceLinear> {
    let mut d = vec![OddTraceLinear::zero(); n + 1];
    for k in (0..n).rev() {
        let mut acc = OddTraceLinear::zero();
        for i in 1..=n - k {
            acc = acc.add(&d[k + i].mul_even(&EvenTracePoly::symbol(even(i as u32))));
        }
        for (r, s) in mixed_pairs(n - k - 1) {
            let sym = odd(r as u32, s as u32);
            acc = acc.add(&OddTraceLinear::term(sym, even_coeffs[k + r + s + 1].clone()));
        }
        d[k] = acc.scale(&-inv(n - k));
    }
    d
}

/// The even/odd pair identity of size `n` over trace symbols.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn symbolic_theorem21(n: usize) -> SymbolicIdentity {
    assert!(n >= 1, "identities need n >= 1");
    let alpha = even_recursion(n, TraceSymbol::EvenA);
    let beta = odd_recursion(n, &alpha, TraceSymbol::EvenA, TraceSymbol::MixedOdd);
    let mut terms = vec![SymbolicTerm {
        pattern: Pattern::Identity,
        coeff: Coefficient::Odd(beta[0].clone()),
    }];
    for k in 1..=n {
        if k < n {
            terms.push(SymbolicTerm {
                pattern: Pattern::PowerA(k as u32),
                coeff: Coefficient::Odd(beta[k].clone()),
            });
        }
        terms.push(SymbolicTerm {
            pattern: Pattern::WordSum(k as u32),
            coeff: Coefficient::Even(alpha[k].clone()),
        });
    }
    SymbolicIdentity {
        theorem: Theorem::Thm21,
        n,
        even: alpha,
        odd: beta,
        terms,
    }
}

/// The degree `2n-1` identity for an odd matrix of size `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn symbolic_theorem23(n: usize) -> SymbolicIdentity {
    assert!(n >= 1, "identities need n >= 1");
    let gamma = even_recursion(n, TraceSymbol::EvenB2);
    let delta = odd_recursion(n, &gamma, TraceSymbol::EvenB2, |r, s| {
        TraceSymbol::OddB(2 * r + 2 * s + 1)
    });
    let mut terms = vec![SymbolicTerm {
        pattern: Pattern::Identity,
        coeff: Coefficient::Odd(delta[0].clone()),
    }];
    for k in 1..=n {
        terms.push(SymbolicTerm {
            pattern: Pattern::PowerB(2 * k as u32 - 1),
            coeff: Coefficient::Even(gamma[k].scale(&Rational::from_integer((k as i64).into()))),
        });
        if k < n {
            terms.push(SymbolicTerm {
                pattern: Pattern::PowerB(2 * k as u32),
                coeff: Coefficient::Odd(delta[k].clone()),
            });
        }
    }
    SymbolicIdentity {
        theorem: Theorem::Thm23,
        n,
        even: gamma,
        odd: delta,
        terms,
    }
}

/// Concrete values of trace symbols and matrix words for one `(A, B)`.
struct Valuation<'a> {
    a: Option<&'a Matrix>,
    b: &'a Matrix,
    a_pows: Vec<Matrix>,
    b_pows: Vec<Matrix>,
}

impl<'a> Valuation<'a> {
    fn new(identity: &SymbolicIdentity, a: Option<&'a Matrix>, b: &'a Matrix) -> Result<Self> {
        let n = identity.n;
        if b.n() != n {
            return Err(Error::SizeMismatch { left: n, right: b.n() });
        }
        if b.config().context() != Context::E {
            return Err(Error::InvalidConfig("substitution takes matrices over E".into()));
        }
        b.require_parity("B", Parity::Odd)?;
        if let Some(a) = a {
            if a.n() != n {
                return Err(Error::SizeMismatch { left: n, right: a.n() });
            }
            if a.config() != b.config() {
                return Err(Error::ConfigMismatch {
                    left: a.config(),
                    right: b.config(),
                });
            }
            a.require_parity("A", Parity::Even)?;
        } else if identity.theorem == Theorem::Thm21 {
            return Err(Error::InvalidConfig("this identity needs an even matrix A".into()));
        }
        Ok(Valuation {
            a,
            b,
            a_pows: a.map(|m| vec![Matrix::identity(m.n(), m.config())]).unwrap_or_default(),
            b_pows: vec![Matrix::identity(n, b.config())],
        })
    }

    fn a(&self) -> Result<&'a Matrix> {
        self.a
            .ok_or_else(|| Error::InvalidConfig("symbol refers to A but no A was given".into()))
    }

    fn a_pow(&mut self, k: u32) -> Result<&Matrix> {
        let a = self.a()?;
        while self.a_pows.len() <= k as usize {
            let next = self.a_pows.last().unwrap() * a;
            self.a_pows.push(next);
        }
        Ok(&self.a_pows[k as usize])
    }

    fn b_pow(&mut self, k: u32) -> &Matrix {
        while self.b_pows.len() <= k as usize {
            let next = self.b_pows.last().unwrap() * self.b;
            self.b_pows.push(next);
        }
        &self.b_pows[k as usize]
    }

    fn trace(&mut self, s: TraceSymbol) -> Result<Element> {
        Ok(match s {
            TraceSymbol::EvenA(i) => self.a_pow(i)?.trace(),
            TraceSymbol::EvenB2(i) => self.b_pow(2 * i).trace(),
            TraceSymbol::OddB(t) => self.b_pow(t).trace(),
            TraceSymbol::MixedOdd(r, s) => {
                let left = self.a_pow(r)?.clone();
                let right = self.a_pow(s)?.clone();
                (&(&left * self.b) * &right).trace()
            }
        })
    }

    fn word(&mut self, p: Pattern) -> Result<Matrix> {
        Ok(match p {
            Pattern::Identity => Matrix::identity(self.b.n(), self.b.config()),
            Pattern::PowerA(k) => self.a_pow(k)?.clone(),
            Pattern::PowerB(m) => self.b_pow(m).clone(),
            Pattern::WordSum(k) => {
                let mut acc = Matrix::zero(self.b.n(), self.b.config());
                for j in 0..k {
                    let left = self.a_pow(k - 1 - j)?.clone();
                    let right = self.a_pow(j)?.clone();
                    acc = &acc + &(&(&left * self.b) * &right);
                }
                acc
            }
        })
    }
}

/// Replaces every trace symbol by its value on `(A, B)` and every pattern by
/// the corresponding matrix word, returning the left-hand side. `A` is
/// required for the pair identity and ignored by the odd-only one.
pub fn substitute(identity: &SymbolicIdentity, a: Option<&Matrix>, b: &Matrix) -> Result<Matrix> {
    let mut val = Valuation::new(identity, a, b)?;
    let config = b.config();
    let mut acc = Matrix::zero(b.n(), config);
    for term in &identity.terms {
        let c = term.coeff.evaluate(config, &mut |s| val.trace(s))?;
        if c.is_zero() {
            continue;
        }
        let w = val.word(term.pattern)?;
        acc = &acc + &w.scalar_mul(&c)?;
    }
    Ok(acc)
}

/// The coefficient lists evaluated on `(A, B)`.
pub fn evaluate_data(identity: &SymbolicIdentity, a: Option<&Matrix>, b: &Matrix) -> Result<GradedCharData> {
    let mut val = Valuation::new(identity, a, b)?;
    let config = b.config();
    let alpha = identity
        .even
        .iter()
        .map(|p| p.evaluate(config, &mut |s| val.trace(s)))
        .collect::<Result<Vec<_>>>()?;
    let beta = identity
        .odd
        .iter()
        .map(|p| p.evaluate(config, &mut |s| val.trace(s)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedCharData {
        n: identity.n,
        alpha,
        beta,
    })
}
