//! Rendering of symbolic identities.
//!
//! LaTeX output is a bare fragment (no preamble) using `\mathrm{tr}(\cdot)`.
//! The S-expression grammar is
//!
//! ```text
//! identity := (identity THEOREM N term*)
//! term     := (term pattern coeff)
//! pattern  := (I) | (A K) | (words K) | (B M)
//! coeff    := (+ mono*)
//! mono     := (* RATIONAL factor*)
//! factor   := sym | (^ sym E)
//! sym      := (tr-a I) | (tr-b2 I) | (tr-aba R S) | (tr-b T)
//! ```
//!
//! where `(tr-b2 I)` is `tr(B^{2I})` and `(tr-aba R S)` is `tr(A^R B A^S)`.

use std::fmt::Write;
use std::str::FromStr;

use num_traits::{One, Signed};

use super::{Coefficient, Pattern, SymbolicIdentity, TraceSymbol};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Latex,
    Sexpr,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "latex" => Ok(Format::Latex),
            "sexpr" => Ok(Format::Sexpr),
            "json" => Ok(Format::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn emit(identity: &SymbolicIdentity, format: Format) -> String {
    match format {
        Format::Latex => latex(identity),
        Format::Sexpr => sexpr(identity),
        Format::Json => identity.to_json(),
    }
}

/// One signed product `q * f_1^{e_1} ... f_k^{e_k}` of a coefficient.
struct Atom {
    q: Rational,
    factors: Vec<(TraceSymbol, u32)>,
}

fn atoms(c: &Coefficient) -> Vec<Atom> {
    match c {
        Coefficient::Even(p) => p
            .terms()
            .map(|(m, q)| Atom {
                q: q.clone(),
                factors: m.factors().collect(),
            })
            .collect(),
        Coefficient::Odd(l) => l
            .terms()
            .flat_map(|(sym, p)| {
                p.terms().map(move |(m, q)| Atom {
                    q: q.clone(),
                    factors: m.factors().chain([(sym, 1)]).collect(),
                })
            })
            .collect(),
    }
}

fn latex_power(base: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{{{e}}}"),
    }
}

fn latex_symbol(s: TraceSymbol, exp: u32) -> String {
    let arg = match s {
        TraceSymbol::EvenA(i) => latex_power("A", i),
        TraceSymbol::EvenB2(i) => latex_power("B", 2 * i),
        TraceSymbol::OddB(t) => latex_power("B", t),
        TraceSymbol::MixedOdd(r, s) => format!("{}B{}", latex_power("A", r), latex_power("A", s)),
    };
    if exp == 1 {
        format!("\\mathrm{{tr}}({arg})")
    } else {
        format!("\\mathrm{{tr}}^{{{exp}}}({arg})")
    }
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Unsigned rendering of an atom; a unit coefficient is dropped when
/// there are factors.
fn latex_atom_abs(a: &Atom) -> String {
    let q = a.q.abs();
    let mut out = String::new();
    if a.factors.is_empty() || !q.is_one() {
        out.push_str(&latex_rational(&q));
    }
    for (s, e) in &a.factors {
        out.push_str(&latex_symbol(*s, *e));
    }
    out
}

fn latex_words(p: Pattern, n: usize) -> Vec<String> {
    match p {
        Pattern::Identity => vec![format!("I_{{{n}}}")],
        Pattern::PowerA(k) => vec![latex_power("A", k)],
        Pattern::PowerB(m) => vec![latex_power("B", m)],
        Pattern::WordSum(k) => (0..k)
            .map(|j| format!("{}B{}", latex_power("A", k - 1 - j), latex_power("A", j)))
            .collect(),
    }
}

/// LaTeX fragment `... = 0`, terms in identity order, zero terms skipped.
pub fn latex(identity: &SymbolicIdentity) -> String {
    let mut out = String::new();
    for term in &identity.terms {
        let atoms = atoms(&term.coeff);
        if atoms.is_empty() {
            continue;
        }
        let words = latex_words(term.pattern, identity.n);
        let word = if words.len() == 1 {
            words[0].clone()
        } else {
            words.join("+")
        };
        let first = out.is_empty();
        if atoms.len() == 1 {
            let a = &atoms[0];
            let negative = a.q.is_negative();
            if negative {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            let unit = a.factors.is_empty() && a.q.abs().is_one();
            if unit {
                if words.len() > 1 && negative {
                    let _ = write!(out, "\\left({word}\\right)");
                } else {
                    out.push_str(&word);
                }
            } else {
                out.push_str(&latex_atom_abs(a));
                if words.len() > 1 {
                    let _ = write!(out, "\\left({word}\\right)");
                } else {
                    out.push_str(&word);
                }
            }
        } else {
            if !first {
                out.push('+');
            }
            out.push_str("\\left(");
            for (i, a) in atoms.iter().enumerate() {
                if a.q.is_negative() {
                    out.push('-');
                } else if i > 0 {
                    out.push('+');
                }
                out.push_str(&latex_atom_abs(a));
            }
            out.push_str("\\right)");
            if words.len() > 1 {
                let _ = write!(out, "\\left({word}\\right)");
            } else {
                out.push_str(&word);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str("=0");
    out
}

fn sexpr_symbol(s: TraceSymbol) -> String {
    match s {
        TraceSymbol::EvenA(i) => format!("(tr-a {i})"),
        TraceSymbol::EvenB2(i) => format!("(tr-b2 {i})"),
        TraceSymbol::MixedOdd(r, s) => format!("(tr-aba {r} {s})"),
        TraceSymbol::OddB(t) => format!("(tr-b {t})"),
    }
}

fn sexpr_pattern(p: Pattern) -> String {
    match p {
        Pattern::Identity => "(I)".into(),
        Pattern::PowerA(k) => format!("(A {k})"),
        Pattern::WordSum(k) => format!("(words {k})"),
        Pattern::PowerB(m) => format!("(B {m})"),
    }
}

pub fn sexpr(identity: &SymbolicIdentity) -> String {
    let theorem = match identity.theorem {
        super::Theorem::Thm21 => "thm21",
        super::Theorem::Thm23 => "thm23",
    };
    let mut out = format!("(identity {theorem} {}", identity.n);
    for term in &identity.terms {
        let _ = write!(out, "\n  (term {} (+", sexpr_pattern(term.pattern));
        for a in atoms(&term.coeff) {
            let _ = write!(out, " (* {}", a.q);
            for (s, e) in &a.factors {
                if *e == 1 {
                    let _ = write!(out, " {}", sexpr_symbol(*s));
                } else {
                    let _ = write!(out, " (^ {} {e})", sexpr_symbol(*s));
                }
            }
            out.push(')');
        }
        out.push_str("))");
    }
    out.push(')');
    out
}
