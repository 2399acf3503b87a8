mod common;

use proptest::prelude::*;
use supertrace::charpoly::{eval_poly, faddeev_leverrier};
use supertrace::graded::*;
use supertrace::harness::random_homogeneous_matrix;
use supertrace::{AlgebraConfig, Element, Matrix, Parity};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random even `A` and odd `B` of size `n` over `G` generators.
fn pair(n: usize, g: u32, seed: u64) -> (Matrix, Matrix) {
    let config = AlgebraConfig::e(g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_homogeneous_matrix(n, Parity::Even, config, 3, 2, &mut rng).unwrap();
    let b = random_homogeneous_matrix(n, Parity::Odd, config, 3, 2, &mut rng).unwrap();
    (a, b)
}

fn pair_strategy() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=3, prop::sample::select(vec![6u32, 10, 16]), any::<u64>()).prop_map(|(n, g, s)| pair(n, g, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pair_identity_vanishes((a, b) in pair_strategy()) {
        prop_assert!(theorem21_lhs(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn routes_agree((a, b) in pair_strategy()) {
        let direct = theorem21_data(&a, &b).unwrap();
        direct.validate().unwrap();
        prop_assert_eq!(direct, theorem21_data_via_companion(&a, &b).unwrap());
    }

    #[test]
    fn odd_identity_is_a_specialisation((_, b) in pair_strategy()) {
        let b2 = b.pow(2);
        let data = theorem23_data(&b).unwrap();
        data.validate().unwrap();
        prop_assert_eq!(&data, &theorem21_data(&b2, &b).unwrap());
        prop_assert!(theorem23_lhs(&b).unwrap().is_zero());
        prop_assert_eq!(theorem23_lhs(&b).unwrap(), theorem21_lhs(&b2, &b).unwrap());
    }

    #[test]
    fn companion_powers_split((a, b) in pair_strategy()) {
        let n = a.n() as u32;
        let c = companion(&a, &b).unwrap();
        prop_assert!(c.parity().is_even_or_zero());
        let w = Element::w(c.config()).unwrap();
        let mut power = c.clone();
        for i in 1..=2 * n {
            let (even, odd) = expand_companion_power(&a, &b, i).unwrap();
            let rebuilt = &even.embed_in_f() + &odd.embed_in_f().scalar_mul(&w).unwrap();
            prop_assert_eq!(&power, &rebuilt, "power {}", i);
            prop_assert_eq!(power.decompose_w(), (even, odd));
            power = &power * &c;
        }
    }

    #[test]
    fn alpha_is_the_characteristic_polynomial_of_a((a, b) in pair_strategy()) {
        let data = theorem21_data(&a, &b).unwrap();
        let p = faddeev_leverrier(&a).unwrap();
        prop_assert_eq!(data.alpha.as_slice(), p.coeffs());
    }
}

#[test]
fn zero_odd_part_is_classical() {
    for seed in 0..5 {
        let (a, _) = pair(3, 10, seed);
        let zero = Matrix::zero(3, a.config());
        let data = theorem21_data(&a, &zero).unwrap();
        assert!(data.beta.iter().all(Element::is_zero));
        let p = faddeev_leverrier(&a).unwrap();
        assert_eq!(theorem21_lhs(&a, &zero).unwrap(), eval_poly(&p, &a).unwrap());
        assert!(theorem21_lhs(&a, &zero).unwrap().is_zero());
    }
}

#[test]
fn leading_term_of_odd_identity() {
    for n in 1..=4 {
        let (_, b) = pair(n, 16, 99 + n as u64);
        let terms = theorem23_terms(&b).unwrap();
        let last = terms.last().unwrap();
        assert_eq!(last.label, TermLabel::PowerB(2 * n as u32 - 1));
        assert_eq!(last.coefficient, Element::from_integer(b.config(), n as i64));
        assert!(terms.iter().all(|t| match t.label {
            TermLabel::PowerB(m) => m < 2 * n as u32,
            TermLabel::Identity => true,
            _ => false,
        }));
    }
}

#[test]
fn closed_forms_match_recursions() {
    for seed in 0..8 {
        let (a, b) = pair(2, 16, seed);
        assert!(corollary22_lhs(&a, &b).unwrap().is_zero());
        assert_eq!(corollary22_lhs(&a, &b).unwrap(), theorem21_lhs(&a, &b).unwrap());
        assert!(corollary27_lhs(&b).unwrap().is_zero());
        let (_, b3) = pair(3, 16, seed);
        assert!(corollary27_lhs(&b3).unwrap().is_zero());
        assert_eq!(corollary27_lhs(&b3).unwrap(), theorem23_lhs(&b3).unwrap());
    }
}

#[test]
fn four_by_four_pairs() {
    for seed in 0..3 {
        let (a, b) = pair(4, 10, seed);
        assert!(theorem21_lhs(&a, &b).unwrap().is_zero());
        assert_eq!(
            theorem21_data(&a, &b).unwrap(),
            theorem21_data_via_companion(&a, &b).unwrap()
        );
    }
}
