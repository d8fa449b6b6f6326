use std::collections::BTreeMap;

use num_complex::Complex64;

use super::gell_mann::{diagonal_generator_indices, gell_mann};
use super::isounit::{Flavor, FlavorGroup, FlavorIsoUnit};
use crate::error::{Error, Result};
use crate::linalg::{re, ComplexMatrix};

/// Relative tolerance used when comparing computed and published interval endpoints.
pub const INTERVAL_MATCH_TOLERANCE: f64 = 1e-3;

/// Bounds of one quark mass, in MeV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassBound {
    pub min: f64,
    pub max: f64,
    pub central: f64,
}

impl MassBound {
    /// `central` defaults to the midpoint.
    pub fn new(min: f64, max: f64, central: Option<f64>) -> Self {
        Self {
            min,
            max,
            central: central.unwrap_or(0.5 * (min + max)),
        }
    }

    pub fn point(m: f64) -> Self {
        Self::new(m, m, Some(m))
    }

    fn validate(&self, flavor: Flavor) -> Result<()> {
        for v in [self.min, self.max, self.central] {
            if !v.is_finite() {
                return Err(Error::InvalidBounds {
                    flavor: flavor.name().into(),
                    reason: format!("non-finite value {v}"),
                });
            }
            if v <= 0.0 {
                return Err(Error::NonPositiveMass {
                    flavor: flavor.name().into(),
                    value: v,
                });
            }
        }
        if !(self.min <= self.central && self.central <= self.max) {
            return Err(Error::InvalidBounds {
                flavor: flavor.name().into(),
                reason: format!(
                    "expected min <= central <= max, got {} / {} / {}",
                    self.min, self.central, self.max
                ),
            });
        }
        Ok(())
    }
}

/// Per-flavor mass bounds, in MeV.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct QuarkMassBounds {
    bounds: BTreeMap<Flavor, MassBound>,
}

impl QuarkMassBounds {
    pub fn new() -> Self {
        Self::default()
    }

    /// u 1.5–3.0, d 3–7, s 70–110, c 1160–1340, b 4130–4270, t 170900–177500 MeV.
    pub fn reference() -> Self {
        let mut b = Self::new();
        for (f, lo, hi) in [
            (Flavor::U, 1.5, 3.0),
            (Flavor::D, 3.0, 7.0),
            (Flavor::S, 70.0, 110.0),
            (Flavor::C, 1160.0, 1340.0),
            (Flavor::B, 4130.0, 4270.0),
            (Flavor::T, 170_900.0, 177_500.0),
        ] {
            b.insert(f, MassBound::new(lo, hi, None));
        }
        b
    }

    pub fn insert(&mut self, flavor: Flavor, bound: MassBound) {
        self.bounds.insert(flavor, bound);
    }

    pub fn get(&self, flavor: Flavor) -> Option<&MassBound> {
        self.bounds.get(&flavor)
    }

    /// The bounds of the group's flavors, validated, in flavor order.
    pub fn for_group(&self, group: FlavorGroup) -> Result<Vec<MassBound>> {
        group
            .flavors()
            .iter()
            .map(|&f| {
                let b = self.bounds.get(&f).ok_or_else(|| Error::InvalidBounds {
                    flavor: f.name().into(),
                    reason: format!("missing, required for {group}"),
                })?;
                b.validate(f)?;
                Ok(*b)
            })
            .collect()
    }

    pub fn central(&self, group: FlavorGroup) -> Result<Vec<f64>> {
        Ok(self.for_group(group)?.iter().map(|b| b.central).collect())
    }
}

fn group_for(masses: &[f64]) -> Result<FlavorGroup> {
    let group = match masses.len() {
        3 => FlavorGroup::Su3,
        6 => FlavorGroup::Su6,
        n => {
            return Err(Error::DimensionMismatch {
                expected: "3 or 6 masses".into(),
                found: n.to_string(),
            })
        }
    };
    for (&f, &m) in group.flavors().iter().zip(masses) {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::NonPositiveMass {
                flavor: f.name().into(),
                value: m,
            });
        }
    }
    Ok(group)
}

/// `diag(m_u, m_d, …)`.
pub fn mass_operator(masses: &[f64]) -> Result<ComplexMatrix> {
    group_for(masses)?;
    Ok(ComplexMatrix::from_real_diagonal(masses))
}

/// `M = c₀ I + Σ_k c_k λ_{d_k}` over the diagonal generators.
#[derive(Debug, Clone, PartialEq)]
pub struct MassDecomposition {
    pub identity: f64,
    /// `(zero-based generator index, coefficient)`.
    pub generators: Vec<(usize, f64)>,
}

impl MassDecomposition {
    pub fn coefficients(&self) -> Vec<f64> {
        std::iter::once(self.identity)
            .chain(self.generators.iter().map(|&(_, c)| c))
            .collect()
    }

    pub fn reconstruct(&self, n: usize) -> Result<ComplexMatrix> {
        let lambdas = gell_mann(n)?;
        let mut m = ComplexMatrix::identity(n).scale(self.identity);
        for &(k, c) in &self.generators {
            m = &m + &lambdas[k].scale(c);
        }
        Ok(m)
    }
}

/// Solves for the coefficients of `diag(masses)` over `I` and the diagonal generators.
pub fn decompose_mass(masses: &[f64]) -> Result<MassDecomposition> {
    let n = group_for(masses)?.n();
    let lambdas = gell_mann(n)?;
    let idx = diagonal_generator_indices(n);
    let system = ComplexMatrix::from_fn(n, n, |r, c| {
        if c == 0 {
            re(1.0)
        } else {
            lambdas[idx[c - 1]].get(r, r)
        }
    });
    let rhs: Vec<Complex64> = masses.iter().map(|&m| re(m)).collect();
    let x = system
        .solve(&rhs)
        .expect("identity and diagonal generators span the diagonal matrices");
    Ok(MassDecomposition {
        identity: x[0].re,
        generators: idx.iter().zip(&x[1..]).map(|(&k, c)| (k, c.re)).collect(),
    })
}

/// The published decomposition coefficients, identity first.
pub fn paper_mass_coefficients(masses: &[f64]) -> Result<Vec<f64>> {
    let group = group_for(masses)?;
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    let total: f64 = masses.iter().sum();
    Ok(match group {
        FlavorGroup::Su3 => {
            let (u, d, s) = (masses[0], masses[1], masses[2]);
            vec![total / 3.0, 0.5 * (u - d), s3 / 6.0 * (u + d - 2.0 * s)]
        }
        FlavorGroup::Su6 => {
            let (u, d, s, c, b, t) = (masses[0], masses[1], masses[2], masses[3], masses[4], masses[5]);
            vec![
                total / 3.0,
                107.0 / 144.0 * (u - d),
                -55.0 * s3 / 144.0 * (u + d - 2.0 * s),
                -55.0 * s6 / 144.0 * (u + d + s - 3.0 * c),
                -11.0 * s6 / 24.0 * (u + d + s + c - 4.0 * b),
                -30f64.sqrt() / 6.0 * (u + d + s + c + b - 5.0 * t),
            ]
        }
    })
}

/// `p_i = (m_i^{n−1} / Π_{j≠i} m_j)^{1/n}` for the first `n − 1` flavors.
pub fn param_values(masses: &[f64]) -> Result<Vec<f64>> {
    let n = group_for(masses)?.n();
    let log_sum: f64 = masses.iter().map(|m| m.ln()).sum();
    Ok(masses[..n - 1]
        .iter()
        .map(|m| ((n as f64 * m.ln() - log_sum) / n as f64).exp())
        .collect())
}

/// The isounit that makes every entry of `ζM` equal.
pub fn equal_mass_params(masses: &[f64]) -> Result<FlavorIsoUnit> {
    let group = group_for(masses)?;
    FlavorIsoUnit::new(group, &param_values(masses)?, 1.0)
}

/// Geometric mean of the masses.
pub fn common_iso_mass(masses: &[f64]) -> Result<f64> {
    group_for(masses)?;
    let log_mean = masses.iter().map(|m| m.ln()).sum::<f64>() / masses.len() as f64;
    Ok(log_mean.exp())
}

/// `ζ M`.
pub fn iso_mass_operator(zeta: &FlavorIsoUnit, masses: &[f64]) -> Result<ComplexMatrix> {
    let group = group_for(masses)?;
    if group != zeta.group() {
        return Err(Error::DimensionMismatch {
            expected: format!("{} masses", zeta.group().n()),
            found: masses.len().to_string(),
        });
    }
    zeta.lift_observable(&mass_operator(masses)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Both endpoints agree within `rel_tol`.
    pub fn matches(&self, other: &Interval, rel_tol: f64) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= rel_tol * b.abs().max(a.abs());
        close(self.lo, other.lo) && close(self.hi, other.hi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamInterval {
    pub name: &'static str,
    /// Corner evaluation: exact range over the bounds box.
    pub rigorous: Interval,
    /// All masses at their minima, then all at their maxima.
    pub joint: Interval,
    pub paper: Interval,
}

impl ParamInterval {
    pub fn rigorous_matches_paper(&self) -> bool {
        self.rigorous.matches(&self.paper, INTERVAL_MATCH_TOLERANCE)
    }

    pub fn joint_matches_paper(&self) -> bool {
        self.joint.matches(&self.paper, INTERVAL_MATCH_TOLERANCE)
    }

    pub fn rigorous_contains_paper(&self) -> bool {
        self.rigorous.contains_interval(&self.paper)
    }
}

/// The published parameter intervals.
pub fn paper_intervals(group: FlavorGroup) -> Vec<Interval> {
    let iv = |lo, hi| Interval { lo, hi };
    match group {
        FlavorGroup::Su3 => vec![iv(0.2204, 0.2638), iv(0.2768, 0.3057)],
        FlavorGroup::Su6 => vec![
            iv(5.945e-3, 8.212e-3),
            iv(1.189e-2, 1.920e-2),
            iv(2.774e-1, 3.018e-1),
            iv(3.676, 4.598),
            iv(486.938, 677.379),
        ],
    }
}

/// Both interval conventions for every parameter, next to the published values.
///
/// `p_i` increases in `m_i` and decreases in every other mass, so its range
/// over the box is attained at the corners `(m_i min, others max)` and
/// `(m_i max, others min)`.
pub fn param_intervals(bounds: &QuarkMassBounds, group: FlavorGroup) -> Result<Vec<ParamInterval>> {
    let b = bounds.for_group(group)?;
    let n = group.n();
    let lows: Vec<f64> = b.iter().map(|x| x.min).collect();
    let highs: Vec<f64> = b.iter().map(|x| x.max).collect();
    let at_min = param_values(&lows)?;
    let at_max = param_values(&highs)?;
    let paper = paper_intervals(group);
    (0..n - 1)
        .map(|i| {
            let corner = |own_high: bool| -> Result<f64> {
                let m: Vec<f64> = (0..n)
                    .map(|j| if (j == i) == own_high { highs[j] } else { lows[j] })
                    .collect();
                Ok(param_values(&m)?[i])
            };
            Ok(ParamInterval {
                name: group.param_names()[i],
                rigorous: Interval {
                    lo: corner(false)?,
                    hi: corner(true)?,
                },
                joint: Interval {
                    lo: at_min[i].min(at_max[i]),
                    hi: at_min[i].max(at_max[i]),
                },
                paper: paper[i],
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SU3_MASSES: [f64; 3] = [2.25, 5.0, 90.0];

    #[test]
    fn su3_decomposition_matches_closed_form() {
        let d = decompose_mass(&SU3_MASSES).unwrap();
        let expected = paper_mass_coefficients(&SU3_MASSES).unwrap();
        for (a, b) in d.coefficients().iter().zip(&expected) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!((d.identity - 32.416_666_666_666_664).abs() < 1e-12);
        assert!((d.generators[0].1 + 1.375).abs() < 1e-12);
        assert!((d.generators[1].1 + 49.868_6).abs() < 1e-4);
    }

    #[test]
    fn su3_params_from_formula() {
        let p = param_values(&SU3_MASSES).unwrap();
        let alpha = (2.25f64 * 2.25 / (90.0 * 5.0)).cbrt();
        let beta = (25.0f64 / (90.0 * 2.25)).cbrt();
        assert!((p[0] - alpha).abs() < 1e-14);
        assert!((p[1] - beta).abs() < 1e-14);
        assert!((p[0] - 0.22407).abs() < 1e-4);
        assert!((p[1] - 0.49792).abs() < 1e-4);
        assert!((common_iso_mass(&SU3_MASSES).unwrap() - 1012.5f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn equal_masses_give_unit_params() {
        let z = equal_mass_params(&[7.0; 6]).unwrap();
        for p in z.params() {
            assert!((p - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn rigorous_alpha_interval() {
        let iv = param_intervals(&QuarkMassBounds::reference(), FlavorGroup::Su3).unwrap();
        let lo = (1.5f64 * 1.5 / (7.0 * 110.0)).cbrt();
        let hi = (3.0f64 * 3.0 / (3.0 * 70.0)).cbrt();
        assert!((iv[0].rigorous.lo - lo).abs() < 1e-14);
        assert!((iv[0].rigorous.hi - hi).abs() < 1e-14);
        assert!((iv[0].rigorous.lo - 0.1430).abs() < 1e-3);
        assert!((iv[0].rigorous.hi - 0.3499).abs() < 1e-3);
        assert!(iv[0].rigorous_contains_paper());
        assert!(!iv[1].rigorous_contains_paper());
    }

    #[test]
    fn degenerate_bounds_collapse() {
        let mut b = QuarkMassBounds::new();
        for (f, m) in Flavor::ALL.iter().zip([2.0, 4.0, 90.0, 1200.0, 4200.0, 172_000.0]) {
            b.insert(*f, MassBound::point(m));
        }
        let masses = b.central(FlavorGroup::Su6).unwrap();
        let p = param_values(&masses).unwrap();
        for (iv, v) in param_intervals(&b, FlavorGroup::Su6).unwrap().iter().zip(&p) {
            assert!((iv.rigorous.lo - v).abs() < 1e-12 * v);
            assert!((iv.rigorous.hi - v).abs() < 1e-12 * v);
            assert!((iv.joint.lo - v).abs() < 1e-12 * v);
        }
    }

    #[test]
    fn validation_errors() {
        let mut b = QuarkMassBounds::reference();
        b.insert(Flavor::D, MassBound::new(-1.0, 2.0, None));
        assert!(matches!(b.central(FlavorGroup::Su3), Err(Error::NonPositiveMass { .. })));
        b.insert(Flavor::D, MassBound::new(5.0, 2.0, None));
        assert!(matches!(b.central(FlavorGroup::Su3), Err(Error::InvalidBounds { .. })));
        let mut partial = QuarkMassBounds::new();
        partial.insert(Flavor::U, MassBound::point(2.0));
        assert!(partial.central(FlavorGroup::Su3).is_err());
        assert!(matches!(mass_operator(&[1.0, 0.0, 2.0]), Err(Error::NonPositiveMass { .. })));
    }
}
