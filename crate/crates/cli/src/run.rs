use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use isoclifford_core::flavor::{
    common_iso_mass, decompose_mass, equal_mass_params, iso_mass_operator, mass_operator,
    paper_mass_coefficients, param_intervals, FlavorGroup,
};
use isoclifford_core::ComplexMatrix;

use crate::masses::parse_mass_file;
use crate::report::{sig6, Check, Format, IntervalRow, PaperComparison, Param, Report};
use crate::suites::{run_suite, Suite, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "isoclifford", version, about = "Clifford-algebra isotopy checks and flavor isounits")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Replace every check's tolerance.
        #[arg(long, value_parser = positive_float)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Seed of the random samples (decimal or 0x-prefixed hex).
        #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Solve the equal-iso-mass isounit for a mass file.
    Flavor {
        #[arg(long, value_enum)]
        group: Group,
        /// JSON file of per-flavor mass bounds in MeV.
        #[arg(long)]
        masses: PathBuf,
        /// Add parameter intervals over the file's bounds.
        #[arg(long)]
        intervals: bool,
        /// Replace every check's tolerance.
        #[arg(long, value_parser = positive_float)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-render a saved JSON report.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Su3,
    Su6,
}

impl From<Group> for FlavorGroup {
    fn from(g: Group) -> Self {
        match g {
            Group::Su3 => FlavorGroup::Su3,
            Group::Su6 => FlavorGroup::Su6,
        }
    }
}

fn positive_float(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("expected a positive finite number, got {s}"))
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s}: {e}"))
}

/// Exit code and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(report: &Report, format: Format) -> Self {
        Self {
            code: if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED },
            stdout: report.render(format),
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(EXIT_USAGE, text)
            } else {
                // --help and --version
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match config.command {
        Command::Verify { suite, tol, format, seed } => {
            Outcome::report(&run_suite(suite, seed, tol), format)
        }
        Command::Flavor {
            group,
            masses,
            intervals,
            tol,
            format,
        } => cmd_flavor(group.into(), &masses, intervals, tol, format),
        Command::Report { input, format } => {
            let text = match std::fs::read_to_string(&input) {
                Ok(t) => t,
                Err(e) => return Outcome::error(EXIT_USAGE, format!("cannot read {}: {e}", input.display())),
            };
            match serde_json::from_str::<Report>(&text) {
                Ok(r) => Outcome::report(&r, format),
                Err(e) => Outcome::error(EXIT_USAGE, format!("{}: {e}", input.display())),
            }
        }
    }
}

fn cmd_flavor(
    group: FlavorGroup,
    path: &std::path::Path,
    intervals: bool,
    tol: Option<f64>,
    format: Format,
) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(EXIT_USAGE, format!("cannot read {}: {e}", path.display())),
    };
    let bounds = match parse_mass_file(&text, group) {
        Ok(b) => b,
        Err(e) => return Outcome::error(EXIT_USAGE, format!("{}: {e}", path.display())),
    };
    match flavor_report(group, &bounds, intervals, tol) {
        Ok(r) => Outcome::report(&r, format),
        Err(e) => Outcome::error(EXIT_DOMAIN, format!("{}: {e}", path.display())),
    }
}

/// Parameters, iso-mass matrix and consistency checks for the central
/// masses; optionally intervals over the bounds box.
pub fn flavor_report(
    group: FlavorGroup,
    bounds: &isoclifford_core::flavor::QuarkMassBounds,
    intervals: bool,
    tol: Option<f64>,
) -> isoclifford_core::Result<Report> {
    let masses = bounds.central(group)?;
    if intervals {
        bounds.for_group(group)?;
    }
    let zeta = equal_mass_params(&masses)?;
    let g = common_iso_mass(&masses)?;
    let iso = iso_mass_operator(&zeta, &masses)?;
    let n = group.n();

    let mut report = Report::new("flavor");
    report.group = Some(group.name().into());
    report.params = Some(
        group
            .param_names()
            .iter()
            .zip(zeta.params())
            .map(|(name, &v)| Param {
                name: (*name).into(),
                value: sig6(v),
            })
            .collect(),
    );
    report.common_iso_mass = Some(sig6(g));
    report.iso_mass_matrix = Some(
        (0..n)
            .map(|i| (0..n).map(|j| sig6(iso.get(i, j).re)).collect())
            .collect(),
    );

    let mut check = |name: &str, residual: f64, tolerance: f64| {
        let t = tol.unwrap_or(tolerance);
        report.checks.push(Check::new(name, residual <= t, Some(residual), t));
    };
    check("det_isounit", (zeta.determinant() - 1.0).abs(), 1e-12);
    check(
        "equal_iso_mass",
        iso.max_abs_diff(&ComplexMatrix::identity(n).scale(g)) / g,
        1e-12,
    );
    let mut eig: f64 = 0.0;
    let mut expect: f64 = 0.0;
    for (s, &m) in zeta.iso_states().iter().zip(&masses) {
        for (o, v) in s.iso_apply(&iso)?.iter().zip(s.vector()) {
            eig = eig.max((o - v * m).norm() / (m * v.norm().max(1.0)));
        }
        expect = expect.max((s.iso_expectation(&iso)?.re - m).abs() / m);
    }
    check("eigenvalue_isoequation", eig, 1e-12);
    check("iso_expectation_mass", expect, 1e-12);
    let decomposition = decompose_mass(&masses)?;
    let max_mass = masses.iter().cloned().fold(0.0, f64::max);
    check(
        "decomposition_reconstruction",
        decomposition.reconstruct(n)?.max_abs_diff(&mass_operator(&masses)?) / max_mass,
        1e-12,
    );

    let mut comparisons = Vec::new();
    let coeffs = decomposition.coefficients();
    let paper = paper_mass_coefficients(&masses)?;
    let ok = coeffs.iter().zip(&paper).all(|(a, b)| (a - b).abs() <= 1e-9 * b.abs().max(1.0));
    comparisons.push(
        PaperComparison::new("mass_decomposition", &coeffs, &paper, ok)
            .with_note("identity coefficient first, then the diagonal generators"),
    );

    if intervals {
        let rows = param_intervals(bounds, group)?;
        let mut out = Vec::new();
        for iv in &rows {
            let pair = |i: &isoclifford_core::flavor::Interval| [sig6(i.lo), sig6(i.hi)];
            out.push(IntervalRow {
                name: iv.name.into(),
                rigorous: pair(&iv.rigorous),
                joint: pair(&iv.joint),
                paper: pair(&iv.paper),
                rigorous_match: iv.rigorous_matches_paper(),
                joint_match: iv.joint_matches_paper(),
            });
            comparisons.push(PaperComparison::new(
                format!("interval.{}", iv.name),
                &[iv.rigorous.lo, iv.rigorous.hi],
                &[iv.paper.lo, iv.paper.hi],
                iv.rigorous_matches_paper(),
            ));
        }
        report.intervals = Some(out);
        let contained = zeta
            .params()
            .iter()
            .zip(&rows)
            .all(|(p, iv)| iv.rigorous.contains(*p));
        report.checks.push(Check::new(
            "central_params_inside_intervals",
            contained,
            Some(if contained { 0.0 } else { 1.0 }),
            0.0,
        ));
    }
    report.paper_comparisons = Some(comparisons);
    report.normalize();
    Ok(report)
}
