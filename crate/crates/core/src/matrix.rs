//! Square matrices over `E` or `F`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::grassmann::{AlgebraConfig, Context, ElementJson};
use crate::{Element, Error, Parity, Rational, Result};

/// An `n x n` matrix whose entries share one [`AlgebraConfig`].
///
/// Homogeneity is not enforced; operations that need an even or odd matrix
/// check [`Matrix::parity`] themselves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    config: AlgebraConfig,
    entries: Vec<Element>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(n: usize, config: AlgebraConfig, entries: Vec<Element>) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedSize {
                n,
                reason: "matrices must be at least 1x1",
            });
        }
        if entries.len() != n * n {
            return Err(Error::SizeMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.config() != config) {
            return Err(Error::ConfigMismatch {
                left: config,
                right: bad.config(),
            });
        }
        Ok(Matrix { n, config, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let n = rows.len();
        let config = rows
            .first()
            .and_then(|r| r.first())
            .map(Element::config)
            .ok_or(Error::UnsupportedSize {
                n: 0,
                reason: "matrices must be at least 1x1",
            })?;
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: r.len(),
            });
        }
        Self::new(n, config, rows.into_iter().flatten().collect())
    }

    pub fn zero(n: usize, config: AlgebraConfig) -> Self {
        Self::from_fn(n, config, |_, _| Element::zero(config))
    }

    pub fn identity(n: usize, config: AlgebraConfig) -> Self {
        Self::scalar(n, &Element::one(config))
    }

    /// `lambda * I_n`.
    pub fn scalar(n: usize, lambda: &Element) -> Self {
        let config = lambda.config();
        Self::from_fn(
            n,
            config,
            |i, j| {
                if i == j {
                    lambda.clone()
                } else {
                    Element::zero(config)
                }
            },
        )
    }

    pub fn diagonal(diag: Vec<Element>) -> Result<Self> {
        let n = diag.len();
        let config = diag.first().map(Element::config).ok_or(Error::UnsupportedSize {
            n: 0,
            reason: "matrices must be at least 1x1",
        })?;
        let mut m = Self::zero(n, config);
        for (i, d) in diag.into_iter().enumerate() {
            if d.config() != config {
                return Err(Error::ConfigMismatch {
                    left: config,
                    right: d.config(),
                });
            }
            m.entries[i * n + i] = d;
        }
        Ok(m)
    }

    /// # Panics
    ///
    /// Panics if `n == 0` or `f` yields an entry under another config.
    pub fn from_fn(n: usize, config: AlgebraConfig, mut f: impl FnMut(usize, usize) -> Element) -> Self {
        assert!(n > 0, "matrices must be at least 1x1");
        let entries: Vec<Element> = (0..n * n).map(|k| f(k / n, k % n)).collect();
        assert!(entries.iter().all(|e| e.config() == config));
        Matrix { n, config, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Element)> {
        self.entries
            .iter()
            .position(|e| !e.is_zero())
            .map(|k| (k / self.n, k % self.n, &self.entries[k]))
    }

    /// Even iff every entry is even or zero, odd iff every entry is odd or zero.
    pub fn parity(&self) -> Parity {
        self.entries.iter().fold(Parity::Zero, |p, e| p.join(e.parity()))
    }

    pub(crate) fn require_parity(&self, what: &'static str, expected: Parity) -> Result<()> {
        let found = self.parity();
        let ok = match expected {
            Parity::Even => found.is_even_or_zero(),
            Parity::Odd => found.is_odd_or_zero(),
            other => found == other,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parity { what, expected, found })
        }
    }

    fn ensure_compatible(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.config != other.config {
            return Err(Error::ConfigMismatch {
                left: self.config,
                right: other.config,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            a.add_assign_unchecked(b);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_compatible(other)?;
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Element::zero(self.config);
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign_unchecked(&(a * b));
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            n,
            config: self.config,
            entries,
        })
    }

    /// Left scalar multiplication `lambda * M`.
    pub fn scalar_mul(&self, lambda: &Element) -> Result<Matrix> {
        if lambda.config() != self.config {
            return Err(Error::ConfigMismatch {
                left: lambda.config(),
                right: self.config,
            });
        }
        Ok(Matrix {
            n: self.n,
            config: self.config,
            entries: self.entries.iter().map(|e| lambda * e).collect(),
        })
    }

    pub fn scale(&self, q: &Rational) -> Matrix {
        Matrix {
            n: self.n,
            config: self.config,
            entries: self.entries.iter().map(|e| e.scale(q)).collect(),
        }
    }

    /// `M^k` by repeated multiplication; `M^0 = I`.
    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.n, self.config);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[I, M, M^2, ..., M^max]`.
    pub fn powers(&self, max: u32) -> Vec<Matrix> {
        let mut out = Vec::with_capacity(max as usize + 1);
        out.push(Matrix::identity(self.n, self.config));
        for k in 1..=max as usize {
            let next = &out[k - 1] * self;
            out.push(next);
        }
        out
    }

    pub fn trace(&self) -> Element {
        let mut acc = Element::zero(self.config);
        for i in 0..self.n {
            acc.add_assign_unchecked(self.get(i, i));
        }
        acc
    }

    pub fn embed_in_f(&self) -> Matrix {
        Matrix {
            n: self.n,
            config: self.config.with_context(Context::F),
            entries: self.entries.iter().map(Element::embed_in_f).collect(),
        }
    }

    /// Entrywise split `M = M_alpha + w * M_beta` with both parts over `E`.
    pub fn decompose_w(&self) -> (Matrix, Matrix) {
        let config = self.config.with_context(Context::E);
        let (a, b): (Vec<_>, Vec<_>) = self.entries.iter().map(Element::decompose_w).unzip();
        (
            Matrix {
                n: self.n,
                config,
                entries: a,
            },
            Matrix {
                n: self.n,
                config,
                entries: b,
            },
        )
    }

    /// Parses the JSON matrix form. Without an explicit `config` the generator
    /// count is the largest index mentioned (at least 1) and the context is
    /// `F` exactly when `w` appears.
    pub fn from_json_str(s: &str, config: Option<AlgebraConfig>) -> Result<Matrix> {
        let json: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        json.into_matrix(config)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::from(self)
    }
}

/// JSON shape `{"n": 2, "entries": [[<element>, ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<ElementJson>>,
}

impl MatrixJson {
    pub fn into_matrix(&self, config: Option<AlgebraConfig>) -> Result<Matrix> {
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(Error::Parse(format!("entries do not form a {0}x{0} array", self.n)));
        }
        let config = match config {
            Some(c) => c,
            None => {
                let (top, has_w) = self
                    .entries
                    .iter()
                    .flatten()
                    .map(ElementJson::index_extent)
                    .fold((1, false), |(m, w), (t, h)| (m.max(t), w || h));
                AlgebraConfig::new(top, if has_w { Context::F } else { Context::E })?
            }
        };
        let entries = self
            .entries
            .iter()
            .flatten()
            .map(|e| e.into_element(config))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.n, config, entries)
    }
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson {
            n: m.n,
            entries: m.rows().map(|r| r.iter().map(ElementJson::from).collect()).collect(),
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(serializer)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}; {}]{}", self.n, self.config, self)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            n: self.n,
            config: self.config,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Matrix> for &Matrix {
            type Output = Matrix;

            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
