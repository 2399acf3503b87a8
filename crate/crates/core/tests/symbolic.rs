mod common;

use common::{el, mat, q};
use supertrace::graded::{theorem21_data, theorem23_data};
use supertrace::harness::{golden_corollary22, golden_corollary27, random_homogeneous_matrix, trial_rng};
use supertrace::symbolic::*;
use supertrace::{AlgebraConfig, Matrix, Parity};

use TraceSymbol::{EvenA, EvenB2, MixedOdd, OddB};

fn ev(s: TraceSymbol) -> EvenTracePoly {
    EvenTracePoly::symbol(s)
}

fn c(num: i64, den: i64) -> EvenTracePoly {
    EvenTracePoly::constant(q(num, den))
}

fn odd(terms: &[(TraceSymbol, EvenTracePoly)]) -> OddTraceLinear {
    terms.iter().fold(OddTraceLinear::zero(), |acc, (s, p)| {
        acc.add(&OddTraceLinear::term(*s, p.clone()))
    })
}

#[test]
fn pair_identity_small_sizes() {
    let one = symbolic_theorem21(1);
    assert_eq!(one.odd[0], odd(&[(MixedOdd(0, 0), c(-1, 1))]));
    assert_eq!(one.even[0], ev(EvenA(1)).scale(&q(-1, 1)));

    let two = symbolic_theorem21(2);
    assert_eq!(
        two.odd[0],
        odd(&[
            (MixedOdd(0, 0), ev(EvenA(1))),
            (MixedOdd(1, 0), c(-1, 2)),
            (MixedOdd(0, 1), c(-1, 2))
        ])
    );
    assert_eq!(two.even[1], ev(EvenA(1)).scale(&q(-1, 1)));
    assert_eq!(two.odd[1], odd(&[(MixedOdd(0, 0), c(-1, 1))]));
    assert_eq!(two.terms, golden_corollary22());
}

#[test]
fn odd_identity_small_sizes() {
    let one = symbolic_theorem23(1);
    assert_eq!(one.odd[0], odd(&[(OddB(1), c(-1, 1))]));

    let two = symbolic_theorem23(2);
    assert_eq!(two.odd[0], odd(&[(OddB(1), ev(EvenB2(1))), (OddB(3), c(-1, 1))]));
    assert_eq!(two.even[1], ev(EvenB2(1)).scale(&q(-1, 1)));
    assert_eq!(two.odd[1], odd(&[(OddB(1), c(-1, 1))]));
    assert_eq!(two.terms, golden_corollary27(2));

    let three = symbolic_theorem23(3);
    let t = ev(EvenB2(1));
    let t_sq = t.mul(&t);
    assert_eq!(
        three.odd[0],
        odd(&[
            (OddB(1), t_sq.scale(&q(-1, 2)).add(&ev(EvenB2(2)).scale(&q(1, 2)))),
            (OddB(3), t.clone()),
            (OddB(5), c(-1, 1)),
        ])
    );
    assert_eq!(three.even[1], t_sq.scale(&q(1, 2)).add(&ev(EvenB2(2)).scale(&q(-1, 2))));
    assert_eq!(three.odd[1], odd(&[(OddB(1), t.clone()), (OddB(3), c(-1, 1))]));
    assert_eq!(three.even[2], t.scale(&q(-1, 1)));
    assert_eq!(three.odd[2], odd(&[(OddB(1), c(-1, 1))]));
    assert_eq!(three.terms, golden_corollary27(3));
}

#[test]
fn odd_coefficients_are_linear() {
    for n in 1..=5 {
        assert!(symbolic_theorem21(n).odd.iter().all(OddTraceLinear::is_linear));
        assert!(symbolic_theorem23(n).odd.iter().all(OddTraceLinear::is_linear));
    }
}

#[test]
fn mixed_symbols_stay_distinct() {
    let two = symbolic_theorem21(2);
    let symbols: Vec<_> = two.odd[0].terms().map(|(s, _)| s).collect();
    assert!(symbols.contains(&MixedOdd(1, 0)) && symbols.contains(&MixedOdd(0, 1)));
}

#[test]
fn leading_odd_power() {
    for n in 1..=5 {
        let id = symbolic_theorem23(n);
        let (m, coeff) = id.leading_b_term().unwrap();
        assert_eq!(m, 2 * n as u32 - 1);
        assert_eq!(coeff, &Coefficient::Even(c(n as i64, 1)));
    }
}

#[test]
fn evaluation_reproduces_concrete_recursions() {
    for n in 1..=3 {
        let config = AlgebraConfig::e(12).unwrap();
        let pair21 = symbolic_theorem21(n);
        let pair23 = symbolic_theorem23(n);
        for i in 0..6 {
            let mut rng = trial_rng(42 + n as u64, i);
            let a = random_homogeneous_matrix(n, Parity::Even, config, 3, 2, &mut rng).unwrap();
            let b = random_homogeneous_matrix(n, Parity::Odd, config, 3, 2, &mut rng).unwrap();
            assert_eq!(
                evaluate_data(&pair21, Some(&a), &b).unwrap(),
                theorem21_data(&a, &b).unwrap()
            );
            assert_eq!(evaluate_data(&pair23, None, &b).unwrap(), theorem23_data(&b).unwrap());
            assert!(substitute(&pair21, Some(&a), &b).unwrap().is_zero());
            assert!(substitute(&pair23, None, &b).unwrap().is_zero());
        }
    }
}

#[test]
fn substitution_examples() {
    let g = AlgebraConfig::e(4).unwrap();
    let a = mat(g, &[&["1", "0"], &["0", "0"]]);
    let b = mat(g, &[&["0", "v1"], &["v2", "0"]]);
    assert!(substitute(&symbolic_theorem21(2), Some(&a), &b).unwrap().is_zero());

    let zero = Matrix::zero(2, g);
    let a = mat(g, &[&["2 + v1^v2", "v3^v4"], &["3", "-1"]]);
    assert!(substitute(&symbolic_theorem21(2), Some(&a), &zero).unwrap().is_zero());

    let b = mat(g, &[&["v1", "v2"], &["v3", "-v1"]]);
    assert!(substitute(&symbolic_theorem23(2), None, &b).unwrap().is_zero());
    assert_eq!(b.trace(), el(g, "0"));
}

#[test]
fn substitution_rejects_bad_inputs() {
    let g = AlgebraConfig::e(4).unwrap();
    let even = mat(g, &[&["1", "0"], &["0", "1"]]);
    let odd = mat(g, &[&["v1", "0"], &["0", "v2"]]);
    assert!(substitute(&symbolic_theorem23(2), None, &even).is_err());
    assert!(substitute(&symbolic_theorem21(2), Some(&odd), &odd).is_err());
    assert!(substitute(&symbolic_theorem21(2), None, &odd).is_err());
    assert!(substitute(&symbolic_theorem23(3), None, &odd).is_err());
}

#[test]
fn latex_rendering() {
    assert_eq!(latex(&symbolic_theorem23(1)), r"-\mathrm{tr}(B)I_{1}+B=0");
    assert!(latex(&symbolic_theorem23(2)).contains("2B^{3}"));
    assert!(latex(&symbolic_theorem23(3)).ends_with("3B^{5}=0"));
    assert_eq!(
        latex(&symbolic_theorem21(2)),
        r"\left(\mathrm{tr}(A)\mathrm{tr}(B)-\frac{1}{2}\mathrm{tr}(BA)-\frac{1}{2}\mathrm{tr}(AB)\right)I_{2}-\mathrm{tr}(B)A-\mathrm{tr}(A)B+AB+BA=0"
    );
}

#[test]
fn emission_is_deterministic_and_parseable() {
    for n in 1..=4 {
        for id in [symbolic_theorem21(n), symbolic_theorem23(n)] {
            for format in [Format::Latex, Format::Sexpr, Format::Json] {
                assert_eq!(emit(&id, format), emit(&id.clone(), format));
            }
            let json = emit(&id, Format::Json);
            assert_eq!(SymbolicIdentity::from_json(&json).unwrap(), id);
            let s = sexpr(&id);
            let mut depth = 0i32;
            for ch in s.chars() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                assert!(depth >= 0);
            }
            assert_eq!(depth, 0);
            assert!(s.starts_with('('));
        }
    }
}

#[test]
fn unknown_format_is_an_error() {
    assert!("latex".parse::<Format>().is_ok());
    assert!("mathml".parse::<Format>().is_err());
}
