//! One line per acceptance criterion; exits nonzero if any fails.
//! Run with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use supertrace::charpoly::oracle::charpoly_oracle;
use supertrace::charpoly::{eval_poly, faddeev_leverrier};
use supertrace::graded::*;
use supertrace::harness::*;
use supertrace::symbolic::*;
use supertrace::{AlgebraConfig, Element, Matrix, Parity, Rational};

const SWEEP_N: [usize; 4] = [1, 2, 3, 4];
const SWEEP_G: [u32; 3] = [6, 10, 16];
const SWEEP_TRIALS: usize = 25;
const SWEEP_SEED: u64 = 2024;
const NON_VACUOUS_MIN: f64 = 0.8;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn criterion(id: u32, name: &str, bound: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = bound.is_none_or(|b| elapsed < b);
    let ok = out.ok && in_time;
    let bound = bound.map_or("none".to_string(), |b| format!("{} ms", b.as_millis()));
    println!(
        "{} [{id}] {name}: {} ({} ms, bound {bound})",
        if ok { "PASS" } else { "FAIL" },
        if in_time {
            out.detail
        } else {
            format!("{}; over time bound", out.detail)
        },
        elapsed.as_millis(),
    );
    ok
}

/// The seeded pair `(A, B)` of trial `index` in a sweep cell.
fn sweep_inputs(n: usize, g: u32, index: usize) -> (Matrix, Matrix) {
    let cfg = TrialConfig::new(TheoremSelector::Thm21, n, SWEEP_TRIALS, SWEEP_SEED).with_generators(g);
    let inputs = trial_inputs(&cfg, index).unwrap();
    (inputs.a.unwrap(), inputs.b)
}

fn sweep_cells() -> Vec<(usize, u32, usize)> {
    SWEEP_N
        .into_iter()
        .flat_map(|n| {
            SWEEP_G
                .into_iter()
                .flat_map(move |g| (0..SWEEP_TRIALS).map(move |i| (n, g, i)))
        })
        .collect()
}

/// First sweep instance where `check` reports a problem.
fn sweep_find(check: impl Fn(Matrix, Matrix) -> Option<&'static str> + Sync) -> Option<String> {
    sweep_cells()
        .into_par_iter()
        .filter_map(|(n, g, i)| {
            let (a, b) = sweep_inputs(n, g, i);
            check(a, b).map(|what| format!("{what} at n={n} G={g} trial {i}"))
        })
        .find_first(|_| true)
}

fn golden_pair() -> Outcome {
    let id = symbolic_theorem21(2);
    if id.terms != golden_corollary22() {
        return fail(format!("got {}", latex(&id)));
    }
    pass("symbolic n=2 pair identity equals the hand-encoded closed form")
}

fn golden_odd() -> Outcome {
    for n in [2, 3] {
        let id = symbolic_theorem23(n);
        if id.terms != golden_corollary27(n) {
            return fail(format!("n={n}: got {}", latex(&id)));
        }
    }
    pass("symbolic n=2 and n=3 odd identities equal the hand-encoded closed forms")
}

fn zero_sweep() -> Outcome {
    let mut lines = Vec::new();
    for n in SWEEP_N {
        for g in SWEEP_G {
            for theorem in [TheoremSelector::Thm21, TheoremSelector::Thm23] {
                let cfg = TrialConfig::new(theorem, n, SWEEP_TRIALS, SWEEP_SEED).with_generators(g);
                let report = run_trials(&cfg).unwrap();
                if !report.summary.all_zero {
                    let first = report.failures().next().map(|t| t.index);
                    return fail(format!("{theorem} n={n} G={g}: nonzero LHS at trial {first:?}"));
                }
                let frac = report.summary.non_vacuous_fraction;
                if n <= 3 && g == 16 {
                    if frac < NON_VACUOUS_MIN {
                        return fail(format!(
                            "{theorem} n={n} G=16: non-vacuous {frac:.2} < {NON_VACUOUS_MIN}"
                        ));
                    }
                    lines.push(format!("{theorem}/n{n}:{:.0}%", 100.0 * frac));
                }
            }
        }
    }
    pass(format!(
        "{} LHS evaluations exactly zero; non-vacuous at G=16 {}",
        2 * SWEEP_N.len() * SWEEP_G.len() * SWEEP_TRIALS,
        lines.join(" ")
    ))
}

fn route_equivalence() -> Outcome {
    let found = sweep_find(|a, b| {
        (theorem21_data(&a, &b).unwrap() != theorem21_data_via_companion(&a, &b).unwrap()).then_some("routes differ")
    });
    match found {
        Some(msg) => fail(msg),
        None => pass(format!("{} instances agree coefficientwise", sweep_cells().len())),
    }
}

fn specialization() -> Outcome {
    let found = sweep_find(|_, b| {
        let b2 = b.pow(2);
        if theorem23_data(&b).unwrap() != theorem21_data(&b2, &b).unwrap() {
            Some("data differ")
        } else if theorem23_lhs(&b).unwrap() != theorem21_lhs(&b2, &b).unwrap() {
            Some("LHS differ")
        } else {
            None
        }
    });
    match found {
        Some(msg) => fail(msg),
        None => pass(format!("{} instances agree (data and LHS)", sweep_cells().len())),
    }
}

fn charpoly_against_oracle() -> Outcome {
    let config = AlgebraConfig::e(8).unwrap();
    for i in 0..100u64 {
        let n = 1 + (i % 4) as usize;
        let h = random_homogeneous_matrix(n, Parity::Even, config, 4, 2, &mut trial_rng(77, i)).unwrap();
        let p = faddeev_leverrier(&h).unwrap();
        if p != charpoly_oracle(&h).unwrap() {
            return fail(format!(
                "instance {i} (n={n}): recursion differs from permutation expansion"
            ));
        }
        if !eval_poly(&p, &h).unwrap().is_zero() {
            return fail(format!("instance {i} (n={n}): p_H(H) != 0"));
        }
    }
    pass("100 even matrices (n<=4, degree<=4) match and satisfy p_H(H)=0")
}

/// Product of two generator words by sorting with adjacent swaps; `None`
/// when a generator repeats.
fn word_product(x: &[u32], y: &[u32]) -> Option<(i64, Vec<u32>)> {
    let mut w: Vec<u32> = x.iter().chain(y).copied().collect();
    let mut sign = 1;
    for end in (1..w.len()).rev() {
        for j in 0..end {
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((sign, w))
}

type Poly = Vec<(i64, Vec<u32>)>;

fn normalize(p: Poly) -> Poly {
    let mut map = std::collections::BTreeMap::new();
    for (c, w) in p {
        *map.entry(w).or_insert(0) += c;
    }
    map.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect()
}

fn poly_mul(x: &Poly, y: &Poly) -> Poly {
    let mut out = Vec::new();
    for (cx, wx) in x {
        for (cy, wy) in y {
            if let Some((s, w)) = word_product(wx, wy) {
                out.push((s * cx * cy, w));
            }
        }
    }
    normalize(out)
}

fn poly_add(x: &Poly, y: &Poly) -> Poly {
    normalize(x.iter().chain(y).cloned().collect())
}

fn brute_mat_mul(x: &[[Poly; 2]; 2], y: &[[Poly; 2]; 2]) -> [[Poly; 2]; 2] {
    let entry = |i: usize, j: usize| poly_add(&poly_mul(&x[i][0], &y[0][j]), &poly_mul(&x[i][1], &y[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn to_element(config: AlgebraConfig, p: &Poly) -> Element {
    p.iter().fold(Element::zero(config), |acc, (c, w)| {
        acc + Element::monomial(config, w, Rational::from_integer((*c).into())).unwrap()
    })
}

fn scalar_witness() -> Outcome {
    let config = AlgebraConfig::e(3).unwrap();
    let v = |i: u32| vec![(1i64, vec![i])];
    let brute = [[v(1), v(2)], [v(3), vec![(-1, vec![1])]]];
    let brute2 = brute_mat_mul(&brute, &brute);
    let brute3 = brute_mat_mul(&brute2, &brute);
    let v123 = vec![(3i64, vec![1u32, 2, 3])];
    if brute3 != [[v123.clone(), vec![]], [vec![], v123]] {
        return fail("adjacent-swap expansion does not give B^3 = 3 v1v2v3 I");
    }

    let rows = |m: &[[Poly; 2]; 2]| {
        m.iter()
            .map(|r| r.iter().map(|p| to_element(config, p)).collect())
            .collect::<Vec<Vec<Element>>>()
    };
    let b = Matrix::from_rows(rows(&brute)).unwrap();
    let b3 = b.pow(3);
    let vvv = Element::monomial(config, &[1, 2, 3], Rational::from_integer(1.into())).unwrap();
    let three = Element::from_integer(config, 3);
    let six = Element::from_integer(config, 6);
    let checks = [
        ("tr(B) = 0", b.trace().is_zero()),
        ("tr(B^2) = 0", b.pow(2).trace().is_zero()),
        ("B^2 agrees", b.pow(2) == Matrix::from_rows(rows(&brute2)).unwrap()),
        ("B^3 = 3v1v2v3 I", b3 == Matrix::scalar(2, &(&three * &vvv))),
        ("tr(B^3) = 6v1v2v3", b3.trace() == &six * &vvv),
        (
            "2B^3 = tr(B^3) I",
            b3.scale(&Rational::from_integer(2.into())) == Matrix::scalar(2, &b3.trace()),
        ),
    ];
    if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
        return fail(format!("{name} fails"));
    }
    match corollary25_check(&b).unwrap() {
        Corollary25Verdict::Holds { .. } => {}
        other => return fail(format!("checker verdict {other:?}")),
    }
    pass("B=[[v1,v2],[v3,-v1]]: traces vanish, B^3 = 3v1v2v3 I, tr(B^3) = 6v1v2v3, 2B^3 = tr(B^3) I")
}

fn leading_term() -> Outcome {
    for n in 1..=4usize {
        let top = 2 * n as u32 - 1;
        let id = symbolic_theorem23(n);
        let expected = Coefficient::Even(EvenTracePoly::constant(Rational::from_integer((n as i64).into())));
        match id.leading_b_term() {
            Some((m, c)) if m == top && *c == expected => {}
            other => return fail(format!("symbolic n={n}: leading term {other:?}")),
        }
        let (_, b) = sweep_inputs(n, 16, 0);
        let terms = theorem23_terms(&b).unwrap();
        let last = terms.last().unwrap();
        let n_elem = Element::from_integer(b.config(), n as i64);
        if last.label != TermLabel::PowerB(top) || last.coefficient != n_elem {
            return fail(format!("concrete n={n}: last term {:?}", last.label));
        }
    }
    pass("highest power 2n-1 with coefficient n for n=1..4 (symbolic and concrete)")
}

fn homomorphism() -> Outcome {
    let config = AlgebraConfig::e(12).unwrap();
    for n in 1..=3usize {
        let pair = symbolic_theorem21(n);
        let single = symbolic_theorem23(n);
        for i in 0..10u64 {
            let mut rng = trial_rng(SWEEP_SEED + n as u64, i);
            let a = random_homogeneous_matrix(n, Parity::Even, config, 3, 2, &mut rng).unwrap();
            let b = random_homogeneous_matrix(n, Parity::Odd, config, 3, 2, &mut rng).unwrap();
            if evaluate_data(&pair, Some(&a), &b).unwrap() != theorem21_data(&a, &b).unwrap() {
                return fail(format!("pair identity n={n} instance {i}"));
            }
            if evaluate_data(&single, None, &b).unwrap() != theorem23_data(&b).unwrap() {
                return fail(format!("odd identity n={n} instance {i}"));
            }
        }
    }
    pass("10 instances at each n<=3 reproduce both recursions")
}

fn main() {
    let second = Some(Duration::from_secs(1));
    let start = Instant::now();
    let results = [
        criterion(1, "golden n=2 pair identity", second, golden_pair),
        criterion(2, "golden n=2,3 odd identities", second, golden_odd),
        criterion(3, "zero-identity sweep", Some(Duration::from_secs(60)), zero_sweep),
        criterion(4, "route equivalence", None, route_equivalence),
        criterion(5, "specialization A=B^2", None, specialization),
        criterion(
            6,
            "characteristic polynomial vs oracle",
            Some(Duration::from_secs(30)),
            charpoly_against_oracle,
        ),
        criterion(7, "scalar-power witness", second, scalar_witness),
        criterion(8, "leading power 2n-1", None, leading_term),
        criterion(9, "evaluation homomorphism", None, homomorphism),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!(
        "{passed}/{} criteria passed in {} ms",
        results.len(),
        start.elapsed().as_millis()
    );
    if passed != results.len() {
        std::process::exit(1);
    }
}
