//! Invariant suites behind `isoclifford verify`.

mod algebra;
mod flavor;
mod lie;

use std::fmt;

use isoclifford_core::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{Check, PaperComparison, Report};

pub const DEFAULT_SEED: u64 = 0xC1F0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    All,
    Clifford,
    Isotopy,
    Octonion,
    Su3,
    Su6,
    Dirac,
    Flavor,
}

impl Suite {
    pub const CONCRETE: [Suite; 7] = [
        Suite::Clifford,
        Suite::Isotopy,
        Suite::Octonion,
        Suite::Su3,
        Suite::Su6,
        Suite::Dirac,
        Suite::Flavor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Clifford => "clifford",
            Suite::Isotopy => "isotopy",
            Suite::Octonion => "octonion",
            Suite::Su3 => "su3",
            Suite::Su6 => "su6",
            Suite::Dirac => "dirac",
            Suite::Flavor => "flavor",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether a residual must stay below or reach its threshold.
#[derive(Debug, Clone, Copy)]
enum Bound {
    AtMost,
    AtLeast,
}

/// Collects checks for one suite. Every suite owns an RNG seeded from the
/// run seed and its own position, so a suite draws the same numbers alone
/// or inside `all`.
pub struct Runner {
    pub rng: ChaCha8Rng,
    tol_override: Option<f64>,
    checks: Vec<Check>,
    comparisons: Vec<PaperComparison>,
}

impl Runner {
    fn new(seed: u64, suite: Suite, tol_override: Option<f64>) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed.wrapping_add(suite as u64)),
            tol_override,
            checks: Vec::new(),
            comparisons: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, residual: Result<f64>, tolerance: f64, bound: Bound) {
        let tol = self.tol_override.unwrap_or(tolerance);
        let check = match residual {
            Ok(r) if r.is_finite() => {
                let pass = match bound {
                    Bound::AtMost => r <= tol,
                    Bound::AtLeast => r >= tol,
                };
                Check::new(name, pass, Some(r), tol)
            }
            _ => Check::new(name, false, None, tol),
        };
        self.checks.push(check);
    }

    /// Passes when the residual is at most `tolerance`.
    pub fn check(&mut self, name: &str, tolerance: f64, f: impl FnOnce(&mut ChaCha8Rng) -> Result<f64>) {
        let r = f(&mut self.rng);
        self.record(name, r, tolerance, Bound::AtMost);
    }

    /// Passes when the measured value reaches `threshold`.
    pub fn check_at_least(&mut self, name: &str, threshold: f64, f: impl FnOnce(&mut ChaCha8Rng) -> Result<f64>) {
        let r = f(&mut self.rng);
        self.record(name, r, threshold, Bound::AtLeast);
    }

    pub fn compare(&mut self, c: PaperComparison) {
        self.comparisons.push(c);
    }
}

/// Runs `suite` and returns its sorted report.
pub fn run_suite(suite: Suite, seed: u64, tol_override: Option<f64>) -> Report {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::CONCRETE.to_vec(),
        s => vec![s],
    };
    let mut report = Report::new("verify");
    report.suite = Some(suite.name().into());
    let mut comparisons = Vec::new();
    for s in suites {
        let mut r = Runner::new(seed, s, tol_override);
        match s {
            Suite::Clifford => algebra::clifford(&mut r),
            Suite::Isotopy => algebra::isotopy(&mut r),
            Suite::Octonion => algebra::octonion(&mut r),
            Suite::Dirac => algebra::dirac(&mut r),
            Suite::Su3 => lie::su3(&mut r),
            Suite::Su6 => lie::su6(&mut r),
            Suite::Flavor => flavor::flavor(&mut r),
            Suite::All => unreachable!("expanded above"),
        }
        for mut c in r.checks {
            c.name = format!("{}.{}", s.name(), c.name);
            report.checks.push(c);
        }
        for mut c in r.comparisons {
            c.name = format!("{}.{}", s.name(), c.name);
            comparisons.push(c);
        }
    }
    report.paper_comparisons = Some(comparisons);
    report.normalize();
    report
}

/// Largest value of `f` over `count` draws.
pub(crate) fn worst<R>(rng: &mut R, count: usize, mut f: impl FnMut(&mut R) -> Result<f64>) -> Result<f64> {
    let mut w: f64 = 0.0;
    for _ in 0..count {
        w = w.max(f(rng)?);
    }
    Ok(w)
}
