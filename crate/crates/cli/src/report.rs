//! Machine-readable reports and their renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// `x` rounded to six significant digits. Non-finite values pass through.
pub fn sig6(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.5e}").parse().expect("formatted float parses")
}

fn sig6_opt(x: Option<f64>) -> Option<f64> {
    x.filter(|v| v.is_finite()).map(sig6)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// `null` when the computation itself failed or diverged.
    pub residual: Option<f64>,
    pub tolerance: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, residual: Option<f64>, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            pass,
            residual: sig6_opt(residual),
            tolerance: sig6(tolerance),
        }
    }
}

/// A computed quantity next to the value printed in the literature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaperComparison {
    pub name: String,
    pub computed: Vec<f64>,
    pub paper: Vec<f64>,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PaperComparison {
    pub fn new(name: impl Into<String>, computed: &[f64], paper: &[f64], matches: bool) -> Self {
        Self {
            name: name.into(),
            computed: computed.iter().map(|&x| sig6(x)).collect(),
            paper: paper.iter().map(|&x| sig6(x)).collect(),
            matches,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalRow {
    pub name: String,
    pub rigorous: [f64; 2],
    pub joint: [f64; 2],
    pub paper: [f64; 2],
    pub rigorous_match: bool,
    pub joint_match: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<Param>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub common_iso_mass: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso_mass_matrix: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<IntervalRow>>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paper_comparisons: Option<Vec<PaperComparison>>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            suite: None,
            group: None,
            params: None,
            common_iso_mass: None,
            iso_mass_matrix: None,
            intervals: None,
            checks: Vec::new(),
            paper_comparisons: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Sorts checks and comparisons by name so output order never depends on
    /// evaluation order.
    pub fn normalize(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        if let Some(c) = &mut self.paper_comparisons {
            c.sort_by(|a, b| a.name.cmp(&b.name));
            if c.is_empty() {
                self.paper_comparisons = None;
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head = self.command.clone();
        for part in [&self.suite, &self.group].into_iter().flatten() {
            head.push(' ');
            head.push_str(part);
        }
        writeln!(out, "{head}").unwrap();
        if let Some(params) = &self.params {
            for p in params {
                writeln!(out, "  {} = {}", p.name, p.value).unwrap();
            }
        }
        if let Some(m) = self.common_iso_mass {
            writeln!(out, "  common iso-mass = {m}").unwrap();
        }
        if let Some(rows) = &self.iso_mass_matrix {
            writeln!(out, "  iso mass matrix:").unwrap();
            for r in rows {
                let cells: Vec<String> = r.iter().map(|x| format!("{x}")).collect();
                writeln!(out, "    [{}]", cells.join(", ")).unwrap();
            }
        }
        if let Some(ivs) = &self.intervals {
            writeln!(out, "  intervals (rigorous | joint | paper):").unwrap();
            for iv in ivs {
                writeln!(
                    out,
                    "    {}: [{}, {}] | [{}, {}] | [{}, {}]{}",
                    iv.name,
                    iv.rigorous[0],
                    iv.rigorous[1],
                    iv.joint[0],
                    iv.joint[1],
                    iv.paper[0],
                    iv.paper[1],
                    if iv.rigorous_match || iv.joint_match { "" } else { "  MISMATCH" }
                )
                .unwrap();
            }
        }
        for c in &self.checks {
            let residual = c.residual.map_or("n/a".to_string(), |r| format!("{r}"));
            writeln!(
                out,
                "{} {} residual={} tol={}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                residual,
                c.tolerance
            )
            .unwrap();
        }
        if let Some(cmp) = &self.paper_comparisons {
            for c in cmp {
                writeln!(
                    out,
                    "{} {} computed={:?} paper={:?}{}",
                    if c.matches { "MATCH" } else { "DIFFER" },
                    c.name,
                    c.computed,
                    c.paper,
                    c.note.as_ref().map_or(String::new(), |n| format!(" ({n})"))
                )
                .unwrap();
            }
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        writeln!(out, "{} checks, {} failed", self.checks.len(), failed).unwrap();
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("kind,name,pass,residual,tolerance\n");
        for c in &self.checks {
            let residual = c.residual.map_or(String::new(), |r| format!("{r}"));
            writeln!(out, "check,{},{},{},{}", csv_field(&c.name), c.pass, residual, c.tolerance).unwrap();
        }
        if let Some(params) = &self.params {
            for p in params {
                writeln!(out, "param,{},,{},", csv_field(&p.name), p.value).unwrap();
            }
        }
        if let Some(cmp) = &self.paper_comparisons {
            for c in cmp {
                let joined = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(
                    out,
                    "comparison,{},{},{},{}",
                    csv_field(&c.name),
                    c.matches,
                    csv_field(&joined(&c.computed)),
                    csv_field(&joined(&c.paper))
                )
                .unwrap();
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}
