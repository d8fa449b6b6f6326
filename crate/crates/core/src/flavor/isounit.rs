use std::fmt;

use num_complex::Complex64;

use super::gell_mann::gell_mann;
use crate::error::{Error, Result};
use crate::linalg::{re, ComplexMatrix};

/// Tolerance of the iso-normalization check on states.
pub const STATE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    U,
    D,
    S,
    C,
    B,
    T,
}

impl Flavor {
    pub const ALL: [Flavor; 6] = [Flavor::U, Flavor::D, Flavor::S, Flavor::C, Flavor::B, Flavor::T];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::U => "u",
            Flavor::D => "d",
            Flavor::S => "s",
            Flavor::C => "c",
            Flavor::B => "b",
            Flavor::T => "t",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlavorGroup {
    Su3,
    Su6,
}

impl FlavorGroup {
    /// Number of flavors.
    pub fn n(self) -> usize {
        match self {
            FlavorGroup::Su3 => 3,
            FlavorGroup::Su6 => 6,
        }
    }

    pub fn flavors(self) -> &'static [Flavor] {
        &Flavor::ALL[..self.n()]
    }

    /// α, β (SU3) or α, β, ω, κ, τ (SU6).
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FlavorGroup::Su3 => &["alpha", "beta"],
            FlavorGroup::Su6 => &["alpha", "beta", "omega", "kappa", "tau"],
        }
    }

    /// Order of the block embedding into a Clifford-algebra representation.
    pub fn embedding_size(self) -> usize {
        match self {
            FlavorGroup::Su3 => 4,
            FlavorGroup::Su6 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FlavorGroup::Su3 => "su3",
            FlavorGroup::Su6 => "su6",
        }
    }
}

impl fmt::Display for FlavorGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A diagonal unit-determinant isounit
/// `ζ = diag(p₁⁻¹, …, p_{n−1}⁻¹, p₁⋯p_{n−1})` together with the free
/// normalization δ of the lifted generators.
#[derive(Debug, Clone, PartialEq)]
pub struct FlavorIsoUnit {
    group: FlavorGroup,
    params: Vec<f64>,
    delta: f64,
    diagonal: Vec<f64>,
}

impl FlavorIsoUnit {
    pub fn new(group: FlavorGroup, params: &[f64], delta: f64) -> Result<Self> {
        if params.len() != group.n() - 1 {
            return Err(Error::DimensionMismatch {
                expected: format!("{} parameters", group.n() - 1),
                found: params.len().to_string(),
            });
        }
        for (name, &p) in group.param_names().iter().zip(params) {
            if !(p.is_finite() && p > 0.0) {
                return Err(Error::InvalidBounds {
                    flavor: (*name).to_string(),
                    reason: format!("isounit parameter must be positive and finite, got {p}"),
                });
            }
        }
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidBounds {
                flavor: "delta".into(),
                reason: format!("normalization must be positive and finite, got {delta}"),
            });
        }
        let mut diagonal: Vec<f64> = params.iter().map(|p| 1.0 / p).collect();
        diagonal.push(params.iter().product());
        Ok(Self {
            group,
            params: params.to_vec(),
            delta,
            diagonal,
        })
    }

    pub fn identity(group: FlavorGroup) -> Self {
        Self::new(group, &vec![1.0; group.n() - 1], 1.0).expect("unit parameters are valid")
    }

    pub fn with_delta(&self, delta: f64) -> Result<Self> {
        Self::new(self.group, &self.params, delta)
    }

    pub fn group(&self) -> FlavorGroup {
        self.group
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&self.diagonal)
    }

    pub fn inverse_matrix(&self) -> ComplexMatrix {
        let inv: Vec<f64> = self.diagonal.iter().map(|g| 1.0 / g).collect();
        ComplexMatrix::from_real_diagonal(&inv)
    }

    pub fn determinant(&self) -> f64 {
        self.diagonal.iter().product()
    }

    /// ζ padded with ones to the 4×4 or 8×8 block form.
    pub fn embedded_matrix(&self) -> Result<ComplexMatrix> {
        self.matrix().block_embed(self.group.embedding_size())
    }

    fn check_dim(&self, m: &ComplexMatrix) -> Result<()> {
        let n = self.group.n();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        Ok(())
    }

    /// `δ^{−1/2} ζ m`.
    pub fn lift_operator(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_dim(m)?;
        Ok((&self.matrix() * m).scale(self.delta.powf(-0.5)))
    }

    /// `ζ m`, the lift used for physical observables.
    pub fn lift_observable(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_dim(m)?;
        Ok(&self.matrix() * m)
    }

    /// `a ζ⁻¹ b − b ζ⁻¹ a`.
    pub fn iso_commutator(&self, a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let zi = self.inverse_matrix();
        Ok(&(&(a * &zi) * b) - &(&(b * &zi) * a))
    }

    /// Lifted generators `δ^{−1/2} ζ λ_a`.
    pub fn lifted_generators(&self) -> Result<Vec<ComplexMatrix>> {
        gell_mann(self.group.n())?
            .iter()
            .map(|l| self.lift_operator(l))
            .collect()
    }

    /// `Y^ζ = ζ λ8 / (2√3)`.
    pub fn hypercharge(&self) -> Result<ComplexMatrix> {
        let l = gell_mann(self.group.n())?;
        self.lift_observable(&l[7].scale(1.0 / (2.0 * 3f64.sqrt())))
    }

    /// `I₃^ζ = ζ λ3 / 2`.
    pub fn isospin3(&self) -> Result<ComplexMatrix> {
        let l = gell_mann(self.group.n())?;
        self.lift_observable(&l[2].scale(0.5))
    }

    /// `Q^ζ = Y^ζ + I₃^ζ`; SU3 only.
    pub fn charge(&self) -> Result<ComplexMatrix> {
        if self.group != FlavorGroup::Su3 {
            return Err(Error::DimensionMismatch {
                expected: "su3 isounit".into(),
                found: self.group.name().into(),
            });
        }
        Ok(&self.hypercharge()? + &self.isospin3()?)
    }

    /// One iso-normalized basis state per flavor: `e_i √ζ_ii`.
    pub fn iso_states(&self) -> Vec<IsoState> {
        self.group
            .flavors()
            .iter()
            .map(|&flavor| {
                let mut v = vec![Complex64::new(0.0, 0.0); self.group.n()];
                v[flavor.index()] = re(self.diagonal[flavor.index()].sqrt());
                IsoState {
                    flavor: Some(flavor),
                    vector: v,
                    context: self.clone(),
                }
            })
            .collect()
    }
}

/// A flavor state together with the isounit it is normalized against.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoState {
    pub flavor: Option<Flavor>,
    vector: Vec<Complex64>,
    context: FlavorIsoUnit,
}

impl IsoState {
    /// Checks `⟨ψ|ζ⁻¹|ψ⟩ = 1`.
    pub fn new(context: &FlavorIsoUnit, vector: Vec<Complex64>) -> Result<Self> {
        if vector.len() != context.group.n() {
            return Err(Error::DimensionMismatch {
                expected: format!("state of length {}", context.group.n()),
                found: vector.len().to_string(),
            });
        }
        let s = Self {
            flavor: None,
            vector,
            context: context.clone(),
        };
        let value = s.iso_inner(&s)?.re;
        if (value - 1.0).abs() > STATE_TOLERANCE {
            return Err(Error::NotIsoNormalized { value });
        }
        Ok(s)
    }

    pub fn vector(&self) -> &[Complex64] {
        &self.vector
    }

    pub fn context(&self) -> &FlavorIsoUnit {
        &self.context
    }

    /// `⟨ψ|ζ⁻¹|φ⟩`, the scalar factor of `⟨ψ≀φ⟩ = ⟨ψ|ζ⁻¹|φ⟩ ζ`.
    pub fn iso_inner(&self, other: &IsoState) -> Result<Complex64> {
        let zi = self.context.inverse_matrix().apply(&other.vector)?;
        Ok(self.vector.iter().zip(&zi).map(|(a, b)| a.conj() * b).sum())
    }

    /// `⟨ψ|ζ⁻¹ O ζ⁻¹|ψ⟩`.
    pub fn iso_expectation(&self, op: &ComplexMatrix) -> Result<Complex64> {
        self.context.check_dim(op)?;
        let zi = self.context.inverse_matrix();
        let right = zi.apply(&self.vector)?;
        let middle = op.apply(&right)?;
        let left = zi.apply(&middle)?;
        Ok(self.vector.iter().zip(&left).map(|(a, b)| a.conj() * b).sum())
    }

    /// `ζ⁻¹ O |ψ⟩`, the ⋄ action of an operator on the state.
    pub fn iso_apply(&self, op: &ComplexMatrix) -> Result<Vec<Complex64>> {
        self.context.check_dim(op)?;
        (&self.context.inverse_matrix() * op).apply(&self.vector)
    }
}
