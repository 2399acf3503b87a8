#![allow(dead_code)]

use proptest::prelude::*;
use supertrace::{AlgebraConfig, Element, Matrix, Parity, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn el(config: AlgebraConfig, s: &str) -> Element {
    Element::parse(config, s).unwrap()
}

pub fn mat(config: AlgebraConfig, rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| el(config, s)).collect()).collect()).unwrap()
}

/// Raw terms: (blade bit set over 1..=g, numerator, denominator).
fn raw_terms(g: u32, max_terms: usize) -> impl Strategy<Value = Vec<(u64, i64, i64)>> {
    let mask = (1u64 << g) - 1;
    prop::collection::vec(
        (any::<u64>().prop_map(move |b| b & mask), -9i64..=9, 1i64..=4),
        0..=max_terms,
    )
}

fn build(config: AlgebraConfig, raw: Vec<(u64, i64, i64)>, parity: Option<Parity>) -> Element {
    let mut acc = Element::zero(config);
    for (bits, num, den) in raw {
        let indices: Vec<u32> = (0..64).filter(|i| bits >> i & 1 == 1).map(|i| i + 1).collect();
        let odd = indices.len() % 2 == 1;
        let keep = match parity {
            Some(Parity::Even) => !odd,
            Some(Parity::Odd) => odd,
            _ => true,
        };
        if keep {
            acc = acc + Element::monomial(config, &indices, q(num, den)).unwrap();
        }
    }
    acc
}

/// Elements of `E` with `g` generators; restricted to one parity if asked.
pub fn element(g: u32, max_terms: usize, parity: Option<Parity>) -> impl Strategy<Value = Element> {
    let config = AlgebraConfig::e(g).unwrap();
    raw_terms(g, max_terms).prop_map(move |raw| build(config, raw, parity))
}

pub fn matrix(n: usize, g: u32, max_terms: usize, parity: Option<Parity>) -> impl Strategy<Value = Matrix> {
    let config = AlgebraConfig::e(g).unwrap();
    prop::collection::vec(element(g, max_terms, parity), n * n)
        .prop_map(move |entries| Matrix::new(n, config, entries).unwrap())
}
