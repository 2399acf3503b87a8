//! Characteristic polynomials over the commutative ring of even elements.

use crate::{AlgebraConfig, Element, Error, Matrix, Parity, Rational, Result};

/// Monic polynomial `lambda_0 + lambda_1 x + ... + lambda_n x^n` with even
/// coefficients, `lambda_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<Element>,
}

impl CharPoly {
    /// Validates degree `>= 1`, monicity, shared config and even coefficients.
    pub fn new(coeffs: Vec<Element>) -> Result<Self> {
        let Some(lead) = coeffs.last() else {
            return Err(Error::UnsupportedSize {
                n: 0,
                reason: "empty coefficient list",
            });
        };
        if coeffs.len() < 2 {
            return Err(Error::UnsupportedSize {
                n: 0,
                reason: "characteristic polynomials have degree at least 1",
            });
        }
        let config = lead.config();
        if *lead != Element::one(config) {
            return Err(Error::Parse(format!("leading coefficient must be 1, got {lead}")));
        }
        for c in &coeffs {
            if c.config() != config {
                return Err(Error::ConfigMismatch {
                    left: config,
                    right: c.config(),
                });
            }
            if !c.parity().is_even_or_zero() {
                return Err(Error::Parity {
                    what: "characteristic coefficient",
                    expected: Parity::Even,
                    found: c.parity(),
                });
            }
        }
        Ok(CharPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn config(&self) -> AlgebraConfig {
        self.coeffs[0].config()
    }

    /// `lambda_0, ..., lambda_n`.
    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Element {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<Element> {
        self.coeffs
    }
}

/// Coefficients of `det(xI - H)` for `H` with even (pairwise commuting)
/// entries, by the descending Faddeev-LeVerrier recursion
///
/// `lambda_k = -1/(n-k) * sum_{i=1}^{n-k} lambda_{k+i} tr(H^i)`, `lambda_n = 1`.
///
/// Works over `E_0` and over `F_0` alike.
pub fn faddeev_leverrier(h: &Matrix) -> Result<CharPoly> {
    h.require_parity("matrix for the characteristic polynomial", Parity::Even)?;
    let traces: Vec<Element> = h.powers(h.n() as u32).iter().map(Matrix::trace).collect();
    Ok(CharPoly {
        coeffs: descending_recursion(h.n(), h.config(), &traces),
    })
}

/// The recursion itself, given `traces[i] = tr(H^i)` for `i = 1..=n`.
pub(crate) fn descending_recursion(n: usize, config: AlgebraConfig, traces: &[Element]) -> Vec<Element> {
    let mut lambda = vec![Element::zero(config); n + 1];
    lambda[n] = Element::one(config);
    for k in (0..n).rev() {
        let mut acc = Element::zero(config);
        for i in 1..=n - k {
            acc.add_assign_unchecked(&(&lambda[k + i] * &traces[i]));
        }
        lambda[k] = acc.scale(&-Rational::new(1.into(), ((n - k) as i64).into()));
    }
    lambda
}

/// `sum_k lambda_k M^k` with `M^0 = I` and coefficients acting on the left.
pub fn eval_poly(p: &CharPoly, m: &Matrix) -> Result<Matrix> {
    if p.degree() != m.n() {
        return Err(Error::SizeMismatch {
            left: p.degree(),
            right: m.n(),
        });
    }
    if p.config() != m.config() {
        return Err(Error::ConfigMismatch {
            left: p.config(),
            right: m.config(),
        });
    }
    let mut acc = Matrix::zero(m.n(), m.config());
    for (c, power) in p.coeffs.iter().zip(m.powers(p.degree() as u32)) {
        acc = &acc + &power.scalar_mul(c)?;
    }
    Ok(acc)
}

/// Reference characteristic polynomial by Leibniz expansion of `det(xI - H)`
/// over `E_0[x]`. Exponential in `n`; meant for checking the recursion.
pub mod oracle {
    use super::*;

    /// Largest size the oracle accepts.
    pub const MAX_N: usize = 5;

    // polynomial in x, lowest degree first
    type Poly = Vec<Element>;

    fn poly_mul(a: &Poly, b: &Poly, config: AlgebraConfig) -> Poly {
        let mut out = vec![Element::zero(config); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j].add_assign_unchecked(&(x * y));
            }
        }
        out
    }

    /// All permutations of `0..n` with their signs.
    pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
            let n = used.len();
            if prefix.len() == n {
                let mut inversions = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if prefix[i] > prefix[j] {
                            inversions += 1;
                        }
                    }
                }
                out.push((prefix.clone(), inversions % 2 == 1));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    pub fn charpoly_oracle(h: &Matrix) -> Result<CharPoly> {
        h.require_parity("matrix for the characteristic polynomial", Parity::Even)?;
        let n = h.n();
        if n > MAX_N {
            return Err(Error::UnsupportedSize {
                n,
                reason: "the Leibniz oracle is limited to n <= 5",
            });
        }
        let config = h.config();
        // entries of xI - H as polynomials in x
        let entry = |i: usize, j: usize| -> Poly {
            let c = -h.get(i, j);
            if i == j {
                vec![c, Element::one(config)]
            } else {
                vec![c]
            }
        };
        let mut total: Poly = vec![Element::zero(config); n + 1];
        for (perm, odd) in permutations(n) {
            let mut prod: Poly = vec![Element::one(config)];
            for (i, &j) in perm.iter().enumerate() {
                prod = poly_mul(&prod, &entry(i, j), config);
            }
            for (k, c) in prod.iter().enumerate() {
                if odd {
                    total[k] = &total[k] - c;
                } else {
                    total[k].add_assign_unchecked(c);
                }
            }
        }
        CharPoly::new(total)
    }

    /// `det(H)` by the same expansion.
    pub fn determinant(h: &Matrix) -> Result<Element> {
        h.require_parity("matrix for the determinant", Parity::Even)?;
        let config = h.config();
        let mut acc = Element::zero(config);
        for (perm, odd) in permutations(h.n()) {
            let mut prod = Element::one(config);
            for (i, &j) in perm.iter().enumerate() {
                prod = &prod * h.get(i, j);
            }
            acc = if odd { &acc - &prod } else { &acc + &prod };
        }
        Ok(acc)
    }
}
