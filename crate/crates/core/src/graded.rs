//! Graded characteristic data of an even/odd matrix pair and the trace
//! identities it produces.
//!
//! For `A` over `E_0` and `B` over `E_1`, the matrix `A + wB` (called the
//! companion matrix here, which is unrelated to the companion matrix of a
//! polynomial) has entries in the commutative ring `F_0`. Splitting its
//! characteristic coefficients as `lambda_k = alpha_k + w beta_k` gives the
//! data `(alpha, beta)`. It is computed twice: directly from the trace
//! recursions ([`theorem21_data`]) and through the companion matrix
//! ([`theorem21_data_via_companion`]).

use serde::Serialize;

use crate::charpoly::{descending_recursion, faddeev_leverrier};
use crate::{AlgebraConfig, Context, Element, Error, Matrix, Parity, Rational, Result};

/// `alpha_0..alpha_n` (even) and `beta_0..beta_n` (odd), with
/// `alpha_n = 1` and `beta_n = 0`. The odd-only specialisation uses the same
/// type for `(gamma, delta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedCharData {
    pub n: usize,
    pub alpha: Vec<Element>,
    pub beta: Vec<Element>,
}

impl GradedCharData {
    /// Checks the length, normalisation and parity invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if self.alpha.len() != n + 1 || self.beta.len() != n + 1 {
            return Err(Error::SizeMismatch {
                left: n + 1,
                right: self.alpha.len().min(self.beta.len()),
            });
        }
        let config = self.alpha[n].config();
        if self.alpha[n] != Element::one(config) || !self.beta[n].is_zero() {
            return Err(Error::Parse("expected alpha_n = 1 and beta_n = 0".into()));
        }
        for a in &self.alpha {
            if !a.parity().is_even_or_zero() {
                return Err(Error::Parity {
                    what: "alpha coefficient",
                    expected: Parity::Even,
                    found: a.parity(),
                });
            }
        }
        for b in &self.beta {
            if !b.parity().is_odd_or_zero() {
                return Err(Error::Parity {
                    what: "beta coefficient",
                    expected: Parity::Odd,
                    found: b.parity(),
                });
            }
        }
        Ok(())
    }
}

/// Which matrix word a term of an identity's left-hand side multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "power", rename_all = "snake_case")]
pub enum TermLabel {
    Identity,
    /// `A^k`
    PowerA(u32),
    /// `A^{k-1}B + A^{k-2}BA + ... + BA^{k-1}`
    WordSum(u32),
    /// `B^m`
    PowerB(u32),
    /// A single fixed word such as `AB`, used by the closed forms.
    Word(&'static str),
}

/// One summand `coefficient * word` of a left-hand side, kept separate so
/// callers can inspect it before everything is added up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LhsTerm {
    pub label: TermLabel,
    pub coefficient: Element,
    pub value: Matrix,
}

impl LhsTerm {
    fn new(label: TermLabel, coefficient: Element, word: &Matrix) -> Self {
        let value = word
            .scalar_mul(&coefficient)
            .expect("coefficient and word share a config");
        LhsTerm {
            label,
            coefficient,
            value,
        }
    }
}

/// Sum of the term values.
pub fn sum_terms(n: usize, config: AlgebraConfig, terms: &[LhsTerm]) -> Matrix {
    terms.iter().fold(Matrix::zero(n, config), |acc, t| &acc + &t.value)
}

/// Checks that `A` is even, `B` odd, both over `E` with the same size.
fn check_pair(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.config() != b.config() {
        return Err(Error::ConfigMismatch {
            left: a.config(),
            right: b.config(),
        });
    }
    if a.config().context() != Context::E {
        return Err(Error::InvalidConfig(
            "graded identities take matrices over E, not F".into(),
        ));
    }
    a.require_parity("A", Parity::Even)?;
    b.require_parity("B", Parity::Odd)
}

fn check_odd(b: &Matrix) -> Result<()> {
    if b.config().context() != Context::E {
        return Err(Error::InvalidConfig(
            "graded identities take matrices over E, not F".into(),
        ));
    }
    b.require_parity("B", Parity::Odd)
}

fn inv(k: usize) -> Rational {
    Rational::new(1.into(), (k as i64).into())
}

/// `A + wB` over `F`; its entries are even in `F`.
pub fn companion(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    check_pair(a, b)?;
    let fa = a.embed_in_f();
    let w = Element::w(fa.config())?;
    fa.checked_add(&b.embed_in_f().scalar_mul(&w)?)
}

/// `sum_{j=0}^{k-1} A^{k-1-j} B A^j` from precomputed powers of `A`.
fn word_sum(a_pows: &[Matrix], b: &Matrix, k: usize) -> Matrix {
    (0..k).fold(Matrix::zero(b.n(), b.config()), |acc, j| {
        &acc + &(&(&a_pows[k - 1 - j] * b) * &a_pows[j])
    })
}

/// Components of `(A + wB)^i = A^i + w (A^{i-1}B + ... + BA^{i-1})`,
/// computed directly over `E`.
pub fn expand_companion_power(a: &Matrix, b: &Matrix, i: u32) -> Result<(Matrix, Matrix)> {
    check_pair(a, b)?;
    if i == 0 {
        return Err(Error::UnsupportedSize {
            n: 0,
            reason: "companion power expansion needs an exponent >= 1",
        });
    }
    let a_pows = a.powers(i);
    let odd = word_sum(&a_pows, b, i as usize);
    Ok((a_pows[i as usize].clone(), odd))
}

/// `(r, s)` with `r + s <= bound`, in lexicographic order.
pub fn mixed_pairs(bound: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=bound).flat_map(move |r| (0..=bound - r).map(move |s| (r, s)))
}

/// The odd-part recursion shared by both identities:
///
/// `beta_k = -1/(n-k) { sum_{i=1}^{n-k} beta_{k+i} even[i]
///                    + sum_{r+s<=n-k-1} alpha_{k+r+s+1} odd(r, s) }`.
fn odd_recursion(
    n: usize,
    config: AlgebraConfig,
    alpha: &[Element],
    even_traces: &[Element],
    odd_trace: impl Fn(usize, usize) -> Element,
) -> Vec<Element> {
    let mut beta = vec![Element::zero(config); n + 1];
    for k in (0..n).rev() {
        let mut acc = Element::zero(config);
        for i in 1..=n - k {
            acc.add_assign_unchecked(&(&beta[k + i] * &even_traces[i]));
        }
        for (r, s) in mixed_pairs(n - k - 1) {
            acc.add_assign_unchecked(&(&alpha[k + r + s + 1] * &odd_trace(r, s)));
        }
        beta[k] = acc.scale(&-inv(n - k));
    }
    beta
}

/// `(alpha, beta)` by the direct trace recursions: `alpha` is the
/// characteristic polynomial of `A`, `beta` uses `tr(A^i)` and
/// `tr(A^r B A^s)`.
pub fn theorem21_data(a: &Matrix, b: &Matrix) -> Result<GradedCharData> {
    check_pair(a, b)?;
    let n = a.n();
    let a_pows = a.powers(n as u32);
    let traces: Vec<Element> = a_pows.iter().map(Matrix::trace).collect();
    let alpha = descending_recursion(n, a.config(), &traces);
    let beta = odd_recursion(n, a.config(), &alpha, &traces, |r, s| {
        (&(&a_pows[r] * b) * &a_pows[s]).trace()
    });
    Ok(GradedCharData { n, alpha, beta })
}

/// `(alpha, beta)` by running Faddeev-LeVerrier on `A + wB` over `F_0` and
/// splitting each coefficient as `alpha_k + w beta_k`.
pub fn theorem21_data_via_companion(a: &Matrix, b: &Matrix) -> Result<GradedCharData> {
    let c = companion(a, b)?;
    let p = faddeev_leverrier(&c)?;
    let (alpha, beta) = p.coeffs().iter().map(Element::decompose_w).unzip();
    Ok(GradedCharData { n: a.n(), alpha, beta })
}

/// Summands of `beta_0 I + sum_{k=1}^n { beta_k A^k + alpha_k (A^{k-1}B + ... + BA^{k-1}) }`.
/// The `beta_n A^n` summand is omitted since `beta_n = 0`.
pub fn theorem21_terms(a: &Matrix, b: &Matrix) -> Result<Vec<LhsTerm>> {
    let data = theorem21_data(a, b)?;
    let n = a.n();
    let a_pows = a.powers(n as u32);
    let mut terms = vec![LhsTerm::new(TermLabel::Identity, data.beta[0].clone(), &a_pows[0])];
    for k in 1..=n {
        if k < n {
            terms.push(LhsTerm::new(
                TermLabel::PowerA(k as u32),
                data.beta[k].clone(),
                &a_pows[k],
            ));
        }
        terms.push(LhsTerm::new(
            TermLabel::WordSum(k as u32),
            data.alpha[k].clone(),
            &word_sum(&a_pows, b, k),
        ));
    }
    Ok(terms)
}

/// Left-hand side of the even/odd pair identity; always the zero matrix.
pub fn theorem21_lhs(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    Ok(sum_terms(a.n(), a.config(), &theorem21_terms(a, b)?))
}

/// `(gamma, delta)` for odd `B`: `gamma` is the characteristic polynomial of
/// `B^2`; `delta` follows the odd-part recursion with `tr(B^{2i})` and
/// `tr(B^{2r+2s+1})`.
pub fn theorem23_data(b: &Matrix) -> Result<GradedCharData> {
    check_odd(b)?;
    let pows = b.powers(2 * b.n() as u32);
    Ok(theorem23_data_from_powers(b, &pows))
}

fn theorem23_data_from_powers(b: &Matrix, pows: &[Matrix]) -> GradedCharData {
    let n = b.n();
    let config = b.config();
    let traces: Vec<Element> = pows.iter().map(Matrix::trace).collect();
    let even: Vec<Element> = (0..=n).map(|i| traces[2 * i].clone()).collect();
    let gamma = descending_recursion(n, config, &even);
    let delta = odd_recursion(n, config, &gamma, &even, |r, s| traces[2 * r + 2 * s + 1].clone());
    GradedCharData {
        n,
        alpha: gamma,
        beta: delta,
    }
}

/// Summands of `delta_0 I + sum_{k=1}^n { k gamma_k B^{2k-1} + delta_k B^{2k} }`
/// in ascending powers. `delta_n B^{2n}` is omitted since `delta_n = 0`, so
/// the last term is `n B^{2n-1}`.
pub fn theorem23_terms(b: &Matrix) -> Result<Vec<LhsTerm>> {
    check_odd(b)?;
    let n = b.n();
    let pows = b.powers(2 * n as u32);
    let data = theorem23_data_from_powers(b, &pows);
    let mut terms = vec![LhsTerm::new(TermLabel::Identity, data.beta[0].clone(), &pows[0])];
    for k in 1..=n {
        let kq = Rational::from_integer((k as i64).into());
        terms.push(LhsTerm::new(
            TermLabel::PowerB(2 * k as u32 - 1),
            data.alpha[k].scale(&kq),
            &pows[2 * k - 1],
        ));
        if k < n {
            terms.push(LhsTerm::new(
                TermLabel::PowerB(2 * k as u32),
                data.beta[k].clone(),
                &pows[2 * k],
            ));
        }
    }
    Ok(terms)
}

/// Left-hand side of the degree `2n-1` identity for odd `B`; always zero.
pub fn theorem23_lhs(b: &Matrix) -> Result<Matrix> {
    Ok(sum_terms(b.n(), b.config(), &theorem23_terms(b)?))
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// Summands of the printed `n = 2` closed form
/// `{1/2 tr(B)tr(A) + 1/2 tr(A)tr(B) - 1/2 tr(AB) - 1/2 tr(BA)} I - tr(B)A - tr(A)B + AB + BA`.
pub fn corollary22_terms(a: &Matrix, b: &Matrix) -> Result<Vec<LhsTerm>> {
    check_pair(a, b)?;
    if a.n() != 2 {
        return Err(Error::UnsupportedSize {
            n: a.n(),
            reason: "the closed form applies to 2x2 matrices only",
        });
    }
    let (ta, tb) = (a.trace(), b.trace());
    let ab = a * b;
    let ba = b * a;
    let scalar = (&(&tb * &ta) + &(&ta * &tb)).scale(&half()) - (&ab.trace() + &ba.trace()).scale(&half());
    let i2 = Matrix::identity(2, a.config());
    Ok(vec![
        LhsTerm::new(TermLabel::Identity, scalar, &i2),
        LhsTerm::new(TermLabel::PowerA(1), -&tb, a),
        LhsTerm::new(TermLabel::PowerB(1), -&ta, b),
        LhsTerm::new(TermLabel::Word("AB"), Element::one(a.config()), &ab),
        LhsTerm::new(TermLabel::Word("BA"), Element::one(a.config()), &ba),
    ])
}

pub fn corollary22_lhs(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    Ok(sum_terms(2, a.config(), &corollary22_terms(a, b)?))
}

/// Summands of the printed closed forms for `n = 2` and `n = 3`:
///
/// - `{tr(B)tr(B^2) - tr(B^3)} I - tr(B^2)B - tr(B)B^2 + 2B^3`
/// - `{-1/2 tr^2(B^2)tr(B) + tr(B^3)tr(B^2) + 1/2 tr(B^4)tr(B) - tr(B^5)} I
///   + {1/2 tr^2(B^2) - 1/2 tr(B^4)} B + {tr(B^2)tr(B) - tr(B^3)} B^2
///   - 2tr(B^2)B^3 - tr(B)B^4 + 3B^5`
pub fn corollary27_terms(b: &Matrix) -> Result<Vec<LhsTerm>> {
    check_odd(b)?;
    let n = b.n();
    let config = b.config();
    let int = |k: i64| Element::from_integer(config, k);
    let pows = b.powers(2 * n as u32 - 1);
    let t: Vec<Element> = pows.iter().map(Matrix::trace).collect();
    let coeffs: Vec<Element> = match n {
        2 => vec![&(&t[1] * &t[2]) - &t[3], -&t[2], -&t[1], int(2)],
        3 => vec![
            (&(&t[2] * &t[2]) * &t[1]).scale(&-half()) + &t[3] * &t[2] + (&t[4] * &t[1]).scale(&half()) - t[5].clone(),
            (&t[2] * &t[2]).scale(&half()) - t[4].scale(&half()),
            &(&t[2] * &t[1]) - &t[3],
            t[2].scale(&Rational::from_integer((-2).into())),
            -&t[1],
            int(3),
        ],
        _ => {
            return Err(Error::UnsupportedSize {
                n,
                reason: "closed forms exist for n = 2 and n = 3 only",
            })
        }
    };
    Ok(coeffs
        .into_iter()
        .enumerate()
        .map(|(m, c)| {
            let label = if m == 0 {
                TermLabel::Identity
            } else {
                TermLabel::PowerB(m as u32)
            };
            LhsTerm::new(label, c, &pows[m])
        })
        .collect())
}

pub fn corollary27_lhs(b: &Matrix) -> Result<Matrix> {
    Ok(sum_terms(b.n(), b.config(), &corollary27_terms(b)?))
}

/// Outcome of the vanishing-trace check on an odd matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Corollary25Verdict {
    /// `tr(B^power) != 0` for some `1 <= power <= 2n-2`.
    HypothesisNotSatisfied { power: u32 },
    /// `n B^{2n-1} = tr(B^{2n-1}) I`. When the trace is zero,
    /// `power_vanishes` records whether `B^{2n-1} = 0`.
    Holds {
        top_trace: Element,
        power_vanishes: Option<bool>,
    },
    /// The conclusion failed on a matrix meeting the hypothesis.
    Violated { top_trace: Element, difference: Matrix },
}

/// If `tr(B^t) = 0` for `1 <= t <= 2n-2`, checks `n B^{2n-1} = tr(B^{2n-1}) I`.
pub fn corollary25_check(b: &Matrix) -> Result<Corollary25Verdict> {
    check_odd(b)?;
    let n = b.n();
    if n < 2 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "the vanishing-trace check needs n >= 2",
        });
    }
    let top = 2 * n as u32 - 1;
    let pows = b.powers(top);
    if let Some(t) = (1..top).find(|&t| !pows[t as usize].trace().is_zero()) {
        return Ok(Corollary25Verdict::HypothesisNotSatisfied { power: t });
    }
    let top_pow = &pows[top as usize];
    let top_trace = top_pow.trace();
    let lhs = top_pow.scale(&Rational::from_integer((n as i64).into()));
    let rhs = Matrix::scalar(n, &top_trace);
    let difference = &lhs - &rhs;
    if !difference.is_zero() {
        return Ok(Corollary25Verdict::Violated { top_trace, difference });
    }
    let power_vanishes = top_trace.is_zero().then(|| top_pow.is_zero());
    Ok(Corollary25Verdict::Holds {
        top_trace,
        power_vanishes,
    })
}
