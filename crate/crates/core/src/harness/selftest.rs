//! Built-in checks run by `supertrace selftest`: golden symbolic forms and
//! small hand-computed examples.

use serde::Serialize;

use crate::charpoly::{eval_poly, faddeev_leverrier, oracle::charpoly_oracle};
use crate::graded::{
    corollary22_lhs, corollary25_check, theorem21_data, theorem21_data_via_companion, theorem21_lhs, theorem23_data,
    theorem23_lhs, Corollary25Verdict,
};
use crate::symbolic::{
    latex, substitute, symbolic_theorem21, symbolic_theorem23, Coefficient, EvenTracePoly, Monomial, OddTraceLinear,
    Pattern, SymbolicTerm, TraceSymbol,
};
use crate::{AlgebraConfig, Blade, Element, Matrix, Rational, Result};

use TraceSymbol::{EvenA, EvenB2, MixedOdd, OddB};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestCheck {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `(numerator, denominator, factors)` of one monomial.
type RawMonomial<'a> = (i64, i64, &'a [(TraceSymbol, u32)]);

/// `sum q * prod factors`, written out by hand.
fn poly(monos: &[RawMonomial]) -> EvenTracePoly {
    monos.iter().fold(EvenTracePoly::zero(), |acc, (n, d, f)| {
        acc.add(&EvenTracePoly::monomial(
            Monomial::from_factors(f.iter().copied()),
            q(*n, *d),
        ))
    })
}

fn odd(parts: &[(TraceSymbol, EvenTracePoly)]) -> OddTraceLinear {
    parts.iter().fold(OddTraceLinear::zero(), |acc, (s, p)| {
        acc.add(&OddTraceLinear::term(*s, p.clone()))
    })
}

fn term(pattern: Pattern, coeff: Coefficient) -> SymbolicTerm {
    SymbolicTerm { pattern, coeff }
}

/// The `n = 2` pair identity as printed, with the two `1/2 tr(A)tr(B)`
/// summands merged:
/// `{tr(A)tr(B) - 1/2 tr(AB) - 1/2 tr(BA)} I - tr(B)A - tr(A)B + AB + BA`.
pub fn golden_corollary22() -> Vec<SymbolicTerm> {
    let one: &[(TraceSymbol, u32)] = &[];
    vec![
        term(
            Pattern::Identity,
            Coefficient::Odd(odd(&[
                (MixedOdd(0, 0), poly(&[(1, 1, &[(EvenA(1), 1)])])),
                (MixedOdd(1, 0), poly(&[(-1, 2, one)])),
                (MixedOdd(0, 1), poly(&[(-1, 2, one)])),
            ])),
        ),
        term(
            Pattern::PowerA(1),
            Coefficient::Odd(odd(&[(MixedOdd(0, 0), poly(&[(-1, 1, one)]))])),
        ),
        term(
            Pattern::WordSum(1),
            Coefficient::Even(poly(&[(-1, 1, &[(EvenA(1), 1)])])),
        ),
        term(Pattern::WordSum(2), Coefficient::Even(poly(&[(1, 1, one)]))),
    ]
}

/// The printed odd-only identities for `n = 2` and `n = 3`.
///
/// # Panics
///
/// Panics for other `n`.
pub fn golden_corollary27(n: usize) -> Vec<SymbolicTerm> {
    let one: &[(TraceSymbol, u32)] = &[];
    let t2 = (EvenB2(1), 1);
    match n {
        2 => vec![
            term(
                Pattern::Identity,
                Coefficient::Odd(odd(&[
                    (OddB(1), poly(&[(1, 1, &[t2])])),
                    (OddB(3), poly(&[(-1, 1, one)])),
                ])),
            ),
            term(Pattern::PowerB(1), Coefficient::Even(poly(&[(-1, 1, &[t2])]))),
            term(
                Pattern::PowerB(2),
                Coefficient::Odd(odd(&[(OddB(1), poly(&[(-1, 1, one)]))])),
            ),
            term(Pattern::PowerB(3), Coefficient::Even(poly(&[(2, 1, one)]))),
        ],
        3 => vec![
            // {-1/2 tr^2(B^2)tr(B) + tr(B^3)tr(B^2) + 1/2 tr(B^4)tr(B) - tr(B^5)} I
            term(
                Pattern::Identity,
                Coefficient::Odd(odd(&[
                    (OddB(1), poly(&[(-1, 2, &[(EvenB2(1), 2)]), (1, 2, &[(EvenB2(2), 1)])])),
                    (OddB(3), poly(&[(1, 1, &[t2])])),
                    (OddB(5), poly(&[(-1, 1, one)])),
                ])),
            ),
            // {1/2 tr^2(B^2) - 1/2 tr(B^4)} B
            term(
                Pattern::PowerB(1),
                Coefficient::Even(poly(&[(1, 2, &[(EvenB2(1), 2)]), (-1, 2, &[(EvenB2(2), 1)])])),
            ),
            // {tr(B^2)tr(B) - tr(B^3)} B^2
            term(
                Pattern::PowerB(2),
                Coefficient::Odd(odd(&[
                    (OddB(1), poly(&[(1, 1, &[t2])])),
                    (OddB(3), poly(&[(-1, 1, one)])),
                ])),
            ),
            term(Pattern::PowerB(3), Coefficient::Even(poly(&[(-2, 1, &[t2])]))),
            term(
                Pattern::PowerB(4),
                Coefficient::Odd(odd(&[(OddB(1), poly(&[(-1, 1, one)]))])),
            ),
            term(Pattern::PowerB(5), Coefficient::Even(poly(&[(3, 1, one)]))),
        ],
        _ => panic!("no printed closed form for n = {n}"),
    }
}

fn check(name: &'static str, f: impl FnOnce() -> Result<Option<String>>) -> SelftestCheck {
    match f() {
        Ok(None) => SelftestCheck {
            name,
            passed: true,
            detail: None,
        },
        Ok(Some(msg)) => SelftestCheck {
            name,
            passed: false,
            detail: Some(msg),
        },
        Err(e) => SelftestCheck {
            name,
            passed: false,
            detail: Some(e.to_string()),
        },
    }
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok((!ok).then(msg))
}

fn mat(config: AlgebraConfig, rows: &[&[&str]]) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| Element::parse(config, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn selftest() -> Vec<SelftestCheck> {
    let e6 = AlgebraConfig::e(6).expect("valid");
    vec![
        check("golden pair identity n=2", || {
            let got = symbolic_theorem21(2).terms;
            expect(got == golden_corollary22(), || format!("got {got:?}"))
        }),
        check("golden odd identity n=2", || {
            let got = symbolic_theorem23(2).terms;
            expect(got == golden_corollary27(2), || format!("got {got:?}"))
        }),
        check("golden odd identity n=3", || {
            let got = symbolic_theorem23(3).terms;
            expect(got == golden_corollary27(3), || format!("got {got:?}"))
        }),
        check("latex odd identity n=1", || {
            let s = latex(&symbolic_theorem23(1));
            expect(s == r"-\mathrm{tr}(B)I_{1}+B=0", || s.clone())
        }),
        check("blade sign v1v3 * v2", || {
            let a = Blade::from_set([1, 3]).expect("valid");
            let b = Blade::from_set([2]).expect("valid");
            let got = a.wedge(b);
            let want = Blade::from_set([1, 2, 3]).map(|u| (crate::grassmann::Sign::Minus, u));
            expect(got == want, || format!("got {got:?}"))
        }),
        check("(1 + v1v2)^2 = 1 + 2 v1v2", || {
            let x = Element::parse(e6, "1 + v1^v2")?;
            let want = Element::parse(e6, "1 + 2 * v1^v2")?;
            let got = &x * &x;
            expect(got == want, || format!("got {got}"))
        }),
        check("characteristic polynomial of [[1,2],[3,4]]", || {
            let h = mat(e6, &[&["1", "2"], &["3", "4"]])?;
            let p = faddeev_leverrier(&h)?;
            let want: Vec<Element> = [-2, -5, 1].iter().map(|&k| Element::from_integer(e6, k)).collect();
            let ok = p.coeffs() == want.as_slice() && charpoly_oracle(&h)? == p && eval_poly(&p, &h)?.is_zero();
            expect(ok, || format!("got {:?}", p.coeffs()))
        }),
        check("odd 2x2 with vanishing traces", || {
            let b = mat(e6, &[&["v1", "v2"], &["v3", "-v1"]])?;
            let cube = Element::parse(e6, "3 * v1^v2^v3")?;
            let t3 = Element::parse(e6, "6 * v1^v2^v3")?;
            let ok = b.trace().is_zero()
                && b.pow(2).trace().is_zero()
                && b.pow(3) == Matrix::scalar(2, &cube)
                && b.pow(3).trace() == t3
                && theorem23_lhs(&b)?.is_zero()
                && corollary25_check(&b)?
                    == Corollary25Verdict::Holds {
                        top_trace: t3,
                        power_vanishes: None,
                    };
            expect(ok, || format!("B^3 = {}", b.pow(3)))
        }),
        check("diagonal pair", || {
            let a = mat(e6, &[&["1", "0"], &["0", "0"]])?;
            let b = mat(e6, &[&["0", "v1"], &["v2", "0"]])?;
            let d = theorem21_data(&a, &b)?;
            let ok = d.alpha[1] == Element::from_integer(e6, -1)
                && d.beta.iter().all(Element::is_zero)
                && theorem21_lhs(&a, &b)?.is_zero()
                && corollary22_lhs(&a, &b)?.is_zero()
                && substitute(&symbolic_theorem21(2), Some(&a), &b)?.is_zero();
            expect(ok, || format!("data {d:?}"))
        }),
        check("two routes agree on a fixed pair", || {
            let a = mat(e6, &[&["1 + v1^v2", "v3^v4"], &["2", "-1/2 * v5^v6"]])?;
            let b = mat(e6, &[&["v1", "v2 + v3^v4^v5"], &["-v6", "3/2 * v4"]])?;
            let direct = theorem21_data(&a, &b)?;
            let via = theorem21_data_via_companion(&a, &b)?;
            let specialised = theorem23_data(&b)? == theorem21_data(&b.pow(2), &b)?;
            expect(direct == via && specialised, || format!("direct {direct:?} vs {via:?}"))
        }),
    ]
}
