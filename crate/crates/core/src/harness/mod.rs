//! Seeded random trials behind the `verify` command.
//!
//! Each trial draws its inputs from a ChaCha8 stream seeded with
//! `seed_from_u64(seed)` and positioned on stream `trial index`, so trials
//! are independent, can run in parallel, and replay individually.

mod selftest;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::graded::{
    corollary22_terms, corollary25_check, corollary27_terms, theorem21_terms, theorem23_terms, Corollary25Verdict,
    LhsTerm,
};
use crate::matrix::MatrixJson;
use crate::{AlgebraConfig, Element, Error, Matrix, Parity, Rational, Result};

pub use selftest::{golden_corollary22, golden_corollary27, selftest, SelftestCheck};

/// Report layout version.
pub const SCHEMA_VERSION: u32 = 1;

/// PRNG identification echoed in every report.
pub const PRNG_NAME: &str = "ChaCha8 (rand_chacha 0.3)";
pub const PRNG_SEEDING: &str = "ChaCha8Rng::seed_from_u64(seed), set_stream(trial_index)";

/// Default share of trials that must have a nonzero partial term.
pub const DEFAULT_MIN_NON_VACUOUS: f64 = 0.8;

/// Numerators of random coefficients are drawn from `-9..=9` without 0.
pub const COEFF_NUMERATOR_MAX: i64 = 9;
/// Denominators of random coefficients are drawn from `1..=4`.
pub const COEFF_DENOMINATOR_MAX: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremSelector {
    Thm21,
    Thm23,
    Cor22,
    Cor25,
    Cor27,
}

impl TheoremSelector {
    pub const ALL: [TheoremSelector; 5] = [
        TheoremSelector::Thm21,
        TheoremSelector::Thm23,
        TheoremSelector::Cor22,
        TheoremSelector::Cor25,
        TheoremSelector::Cor27,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremSelector::Thm21 => "thm21",
            TheoremSelector::Thm23 => "thm23",
            TheoremSelector::Cor22 => "cor22",
            TheoremSelector::Cor25 => "cor25",
            TheoremSelector::Cor27 => "cor27",
        }
    }

    /// Whether trials draw an even matrix `A` besides `B`.
    pub fn uses_a(self) -> bool {
        matches!(self, TheoremSelector::Thm21 | TheoremSelector::Cor22)
    }

    /// Default generator count: `4n(2n-1)` for the odd-only identities so
    /// that `B^{2n-1}` can survive, 16 otherwise. Capped at the blade width.
    pub fn default_generators(self, n: usize) -> u32 {
        match self {
            TheoremSelector::Thm21 | TheoremSelector::Cor22 => crate::grassmann::DEFAULT_GENERATORS,
            _ => {
                let g = 4 * n * (2 * n).saturating_sub(1);
                g.clamp(1, crate::grassmann::MAX_INDEX as usize) as u32
            }
        }
    }
}

impl FromStr for TheoremSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremSelector::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem `{s}`")))
    }
}

impl fmt::Display for TheoremSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialConfig {
    pub theorem: TheoremSelector,
    pub n: usize,
    pub generators: u32,
    /// Where `generators` came from: `flag`, `env:<VAR>` or `default`.
    pub generators_source: String,
    pub trials: usize,
    pub seed: u64,
    pub degree: u32,
    pub terms: usize,
    pub min_non_vacuous: f64,
}

impl TrialConfig {
    /// Config with the documented defaults (`d = 3`, `t = 2`).
    pub fn new(theorem: TheoremSelector, n: usize, trials: usize, seed: u64) -> Self {
        TrialConfig {
            theorem,
            n,
            generators: theorem.default_generators(n),
            generators_source: "default".into(),
            trials,
            seed,
            degree: 3,
            terms: 2,
            min_non_vacuous: DEFAULT_MIN_NON_VACUOUS,
        }
    }

    pub fn with_generators(mut self, generators: u32) -> Self {
        self.generators = generators;
        self.generators_source = "flag".into();
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n == 0 {
            return fail("n must be at least 1".into());
        }
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.degree == 0 {
            return fail("degree must be at least 1".into());
        }
        if self.terms == 0 {
            return fail("terms must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.min_non_vacuous) {
            return fail("non-vacuity threshold must lie in [0, 1]".into());
        }
        AlgebraConfig::e(self.generators)?;
        match self.theorem {
            TheoremSelector::Cor22 if self.n != 2 => fail(format!("cor22 requires n = 2, got {}", self.n)),
            TheoremSelector::Cor27 if !(2..=3).contains(&self.n) => {
                fail(format!("cor27 requires n = 2 or 3, got {}", self.n))
            }
            TheoremSelector::Cor25 if self.n < 2 => fail(format!("cor25 requires n >= 2, got {}", self.n)),
            _ => Ok(()),
        }
    }

    fn algebra(&self) -> AlgebraConfig {
        AlgebraConfig::e(self.generators).expect("validated")
    }
}

/// PRNG for one trial.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let mut num = rng.gen_range(-COEFF_NUMERATOR_MAX..COEFF_NUMERATOR_MAX);
    if num >= 0 {
        num += 1;
    }
    let den = rng.gen_range(1..=COEFF_DENOMINATOR_MAX);
    Rational::new(num.into(), den.into())
}

/// Degrees `<= min(d, G)` of the requested parity.
fn allowed_degrees(parity: Parity, config: AlgebraConfig, degree: u32) -> Result<Vec<u32>> {
    let start = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
        other => {
            return Err(Error::InvalidConfig(format!(
                "random matrices must be even or odd, not {other}"
            )))
        }
    };
    let top = degree.min(config.generators());
    let degrees: Vec<u32> = (start..=top).step_by(2).collect();
    if degrees.is_empty() {
        return Err(Error::InvalidConfig(format!(
            "no {parity} blades of degree <= {degree} with {} generators",
            config.generators()
        )));
    }
    Ok(degrees)
}

/// A random element: `terms` terms, each a blade of the requested parity
/// (degree drawn uniformly from the allowed degrees, then a uniform subset of
/// generators of that size) times a random nonzero coefficient.
pub fn random_element<R: Rng + ?Sized>(
    config: AlgebraConfig,
    parity: Parity,
    degree: u32,
    terms: usize,
    rng: &mut R,
) -> Result<Element> {
    let degrees = allowed_degrees(parity, config, degree)?;
    let g = config.generators() as usize;
    let mut acc = Element::zero(config);
    for _ in 0..terms {
        let k = degrees[rng.gen_range(0..degrees.len())] as usize;
        let mut indices: Vec<u32> = sample(rng, g, k).into_iter().map(|i| i as u32 + 1).collect();
        indices.sort_unstable();
        let c = random_coefficient(rng);
        acc.add_assign_unchecked(&Element::monomial(config, &indices, c)?);
    }
    Ok(acc)
}

/// An `n x n` matrix of random homogeneous entries; a pure function of the
/// PRNG state.
pub fn random_homogeneous_matrix<R: Rng + ?Sized>(
    n: usize,
    parity: Parity,
    config: AlgebraConfig,
    degree: u32,
    terms: usize,
    rng: &mut R,
) -> Result<Matrix> {
    let entries = (0..n * n)
        .map(|_| random_element(config, parity, degree, terms, rng))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(n, config, entries)
}

/// `[[b, c], [d, -b]]` with `b, c, d` rational multiples of distinct single
/// generators. Both `tr(B)` and `tr(B^2)` vanish and `B^3` is a nonzero
/// scalar matrix.
pub fn patterned_odd_matrix<R: Rng + ?Sized>(config: AlgebraConfig, rng: &mut R) -> Result<Matrix> {
    if config.generators() < 3 {
        return Err(Error::InvalidConfig(
            "the patterned family needs at least 3 generators".into(),
        ));
    }
    let idx = sample(rng, config.generators() as usize, 3).into_vec();
    let mut gen = |k: usize| Element::monomial(config, &[idx[k] as u32 + 1], random_coefficient(rng));
    let (b, c, d) = (gen(0)?, gen(1)?, gen(2)?);
    Matrix::from_rows(vec![vec![b.clone(), c], vec![d, -b]])
}

/// Random odd matrix that is zero on and below (`upper`) or on and above
/// the diagonal.
pub fn strictly_triangular_odd<R: Rng + ?Sized>(
    n: usize,
    upper: bool,
    config: AlgebraConfig,
    degree: u32,
    terms: usize,
    rng: &mut R,
) -> Result<Matrix> {
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let inside = if upper { j > i } else { j < i };
            entries.push(if inside {
                random_element(config, Parity::Odd, degree, terms, rng)?
            } else {
                Element::zero(config)
            });
        }
    }
    Matrix::new(n, config, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Zero,
    Nonzero,
    HypothesisNotSatisfied,
}

/// Everything needed to replay a failing trial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub entry: String,
    pub a: Option<MatrixJson>,
    pub b: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub verdict: Verdict,
    pub partial_terms: usize,
    pub nonzero_partial_terms: usize,
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    #[serde(flatten)]
    pub config: TrialConfig,
    pub prng: &'static str,
    pub seeding: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub all_zero: bool,
    pub passed: bool,
    pub vacuous_count: usize,
    pub non_vacuous_fraction: f64,
    pub non_vacuity_ok: bool,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub trials: Vec<TrialRecord>,
    pub summary: Summary,
}

impl TrialReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report JSON is always valid")
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.trials.iter().filter(|t| t.verdict != Verdict::Zero)
    }
}

/// Inputs drawn for one trial.
#[derive(Debug, Clone)]
pub struct TrialInputs {
    pub a: Option<Matrix>,
    pub b: Matrix,
    pub family: Option<&'static str>,
}

/// Regenerates the inputs of trial `index`.
pub fn trial_inputs(cfg: &TrialConfig, index: usize) -> Result<TrialInputs> {
    let algebra = cfg.algebra();
    let mut rng = trial_rng(cfg.seed, index as u64);
    let (n, d, t) = (cfg.n, cfg.degree, cfg.terms);
    Ok(match cfg.theorem {
        TheoremSelector::Thm21 | TheoremSelector::Cor22 => {
            let a = random_homogeneous_matrix(n, Parity::Even, algebra, d, t, &mut rng)?;
            let b = random_homogeneous_matrix(n, Parity::Odd, algebra, d, t, &mut rng)?;
            TrialInputs {
                a: Some(a),
                b,
                family: None,
            }
        }
        TheoremSelector::Thm23 | TheoremSelector::Cor27 => TrialInputs {
            a: None,
            b: random_homogeneous_matrix(n, Parity::Odd, algebra, d, t, &mut rng)?,
            family: None,
        },
        TheoremSelector::Cor25 => {
            // n = 2 alternates the patterned family with triangular ones
            let (b, family) = if n == 2 && index.is_multiple_of(2) && algebra.generators() >= 3 {
                (patterned_odd_matrix(algebra, &mut rng)?, "patterned")
            } else if (index / if n == 2 { 2 } else { 1 }).is_multiple_of(2) {
                (
                    strictly_triangular_odd(n, true, algebra, d, t, &mut rng)?,
                    "strictly_upper",
                )
            } else {
                (
                    strictly_triangular_odd(n, false, algebra, d, t, &mut rng)?,
                    "strictly_lower",
                )
            };
            TrialInputs {
                a: None,
                b,
                family: Some(family),
            }
        }
    })
}

fn evaluate_terms(theorem: TheoremSelector, inputs: &TrialInputs) -> Result<Vec<LhsTerm>> {
    let b = &inputs.b;
    let a = || inputs.a.as_ref().expect("pair identities draw A");
    match theorem {
        TheoremSelector::Thm21 => theorem21_terms(a(), b),
        TheoremSelector::Cor22 => corollary22_terms(a(), b),
        TheoremSelector::Thm23 => theorem23_terms(b),
        TheoremSelector::Cor27 => corollary27_terms(b),
        TheoremSelector::Cor25 => unreachable!("handled separately"),
    }
}

fn witness(inputs: &TrialInputs, m: &Matrix) -> Option<Witness> {
    m.first_nonzero().map(|(row, col, e)| Witness {
        row,
        col,
        entry: e.to_string(),
        a: inputs.a.as_ref().map(Matrix::to_json),
        b: inputs.b.to_json(),
    })
}

/// Runs one trial: evaluates the selected left-hand side and counts the
/// nonzero summands before they are added.
pub fn run_trial(cfg: &TrialConfig, index: usize) -> Result<TrialRecord> {
    let inputs = trial_inputs(cfg, index)?;
    let n = cfg.n;
    let (verdict, partial, nonzero, wit) = if cfg.theorem == TheoremSelector::Cor25 {
        let b = &inputs.b;
        let top = b.pow(2 * n as u32 - 1);
        let parts = [
            top.scale(&Rational::from_integer((n as i64).into())),
            Matrix::scalar(n, &top.trace()),
        ];
        let nonzero = parts.iter().filter(|m| !m.is_zero()).count();
        match corollary25_check(b)? {
            Corollary25Verdict::Holds { .. } => (Verdict::Zero, 2, nonzero, None),
            Corollary25Verdict::Violated { difference, .. } => {
                (Verdict::Nonzero, 2, nonzero, witness(&inputs, &difference))
            }
            Corollary25Verdict::HypothesisNotSatisfied { power } => {
                let t = b.pow(power);
                (Verdict::HypothesisNotSatisfied, 2, nonzero, witness(&inputs, &t))
            }
        }
    } else {
        let terms = evaluate_terms(cfg.theorem, &inputs)?;
        let nonzero = terms.iter().filter(|t| !t.value.is_zero()).count();
        let lhs = crate::graded::sum_terms(n, inputs.b.config(), &terms);
        if lhs.is_zero() {
            (Verdict::Zero, terms.len(), nonzero, None)
        } else {
            (Verdict::Nonzero, terms.len(), nonzero, witness(&inputs, &lhs))
        }
    };
    Ok(TrialRecord {
        index,
        verdict,
        partial_terms: partial,
        nonzero_partial_terms: nonzero,
        vacuous: nonzero == 0,
        family: inputs.family,
        witness: wit,
    })
}

/// Runs all trials (in parallel) and assembles the report in index order.
///
/// A nonzero left-hand side does not stop the run; every failing trial is
/// reported with its witness and `summary.passed` is false.
pub fn run_trials(cfg: &TrialConfig) -> Result<TrialReport> {
    cfg.validate()?;
    let start = Instant::now();
    let trials = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect::<Result<Vec<_>>>()?;
    let elapsed_ms = start.elapsed().as_millis();
    let vacuous_count = trials.iter().filter(|t| t.vacuous).count();
    let all_zero = trials.iter().all(|t| t.verdict != Verdict::Nonzero);
    let passed = trials.iter().all(|t| t.verdict == Verdict::Zero);
    let non_vacuous_fraction = (cfg.trials - vacuous_count) as f64 / cfg.trials as f64;
    Ok(TrialReport {
        schema_version: SCHEMA_VERSION,
        config: ConfigEcho {
            config: cfg.clone(),
            prng: PRNG_NAME,
            seeding: PRNG_SEEDING,
        },
        trials,
        summary: Summary {
            all_zero,
            passed,
            vacuous_count,
            non_vacuous_fraction,
            non_vacuity_ok: non_vacuous_fraction >= cfg.min_non_vacuous,
            elapsed_ms,
        },
    })
}
