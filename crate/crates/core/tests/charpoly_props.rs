mod common;

use common::*;
use proptest::prelude::*;
use supertrace::charpoly::oracle::{charpoly_oracle, determinant};
use supertrace::charpoly::{eval_poly, faddeev_leverrier};
use supertrace::{Element, Matrix, Parity};

const G: u32 = 8;

fn even_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4).prop_flat_map(|n| matrix(n, G, 2, Some(Parity::Even)))
}

/// Coefficients of the product of two polynomials.
fn poly_product(a: &[Element], b: &[Element]) -> Vec<Element> {
    let config = a[0].config();
    let mut out = vec![Element::zero(config); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn block_diag(x: &Matrix, y: &Matrix) -> Matrix {
    let (p, r) = (x.n(), y.n());
    Matrix::from_fn(p + r, x.config(), |i, j| match (i < p, j < p) {
        (true, true) => x.get(i, j).clone(),
        (false, false) => y.get(i - p, j - p).clone(),
        _ => Element::zero(x.config()),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn agrees_with_leibniz(h in even_matrix()) {
        let fl = faddeev_leverrier(&h).unwrap();
        prop_assert_eq!(&fl, &charpoly_oracle(&h).unwrap());
        prop_assert!(eval_poly(&fl, &h).unwrap().is_zero());
        prop_assert!(fl.coeffs().iter().all(|c| c.parity().is_even_or_zero()));
    }

    #[test]
    fn constant_term_is_signed_determinant(h in even_matrix()) {
        let fl = faddeev_leverrier(&h).unwrap();
        let det = determinant(&h).unwrap();
        let signed = if h.n() % 2 == 0 { det } else { -det };
        prop_assert_eq!(fl.coeff(0), &signed);
    }

    #[test]
    fn block_diagonal_multiplies(x in matrix(2, G, 2, Some(Parity::Even)), y in (1usize..=2).prop_flat_map(|n| matrix(n, G, 2, Some(Parity::Even)))) {
        let whole = faddeev_leverrier(&block_diag(&x, &y)).unwrap();
        let px = faddeev_leverrier(&x).unwrap();
        let py = faddeev_leverrier(&y).unwrap();
        let product = poly_product(px.coeffs(), py.coeffs());
        prop_assert_eq!(whole.coeffs(), product.as_slice());
    }
}

#[test]
fn upper_triangular_has_linear_factors() {
    let c = supertrace::AlgebraConfig::e(6).unwrap();
    let h = mat(
        c,
        &[&["2", "v1^v2", "v3^v4"], &["0", "-1/3", "5"], &["0", "0", "v5^v6"]],
    );
    // (x - 2)(x + 1/3)(x - v5v6)
    let d = el(c, "v5^v6");
    let lin = |r: Element| vec![-r, Element::one(c)];
    let expect = poly_product(&poly_product(&lin(el(c, "2")), &lin(el(c, "-1/3"))), &lin(d));
    assert_eq!(charpoly_oracle(&h).unwrap().coeffs(), expect.as_slice());
    assert_eq!(faddeev_leverrier(&h).unwrap().coeffs(), expect.as_slice());
}

#[test]
fn oracle_limits_size() {
    let c = supertrace::AlgebraConfig::e(6).unwrap();
    assert!(charpoly_oracle(&Matrix::identity(6, c)).is_err());
    assert!(charpoly_oracle(&Matrix::identity(5, c)).is_ok());
}
