use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use super::blade::{blade_product, BasisBlade};
use super::Signature;
use crate::error::{Error, Result};

/// Coefficients with modulus below this are dropped after every operation.
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// Sparse element of `Cl(p,q) ⊗ C`: a map from basis blade to coefficient.
///
/// Zero coefficients are never stored and every blade is valid for the
/// signature.
#[derive(Clone, PartialEq)]
pub struct Multivector {
    signature: Signature,
    terms: BTreeMap<u32, Complex64>,
}

impl Multivector {
    pub fn zero(signature: Signature) -> Self {
        Self {
            signature,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(signature: Signature, value: impl Into<Complex64>) -> Self {
        Self::blade(signature, BasisBlade::SCALAR, value)
    }

    pub fn one(signature: Signature) -> Self {
        Self::scalar(signature, 1.0)
    }

    /// `coeff * blade`. Panics if the blade does not fit the signature.
    pub fn blade(signature: Signature, blade: BasisBlade, coeff: impl Into<Complex64>) -> Self {
        assert!(
            blade.is_valid_for(signature),
            "blade {:#b} out of range for {signature}",
            blade.0
        );
        let mut mv = Self::zero(signature);
        mv.insert(blade.0, coeff.into());
        mv
    }

    /// Basis vector `e_index`.
    pub fn basis_vector(signature: Signature, index: usize) -> Result<Self> {
        if index >= signature.dimension() {
            return Err(Error::InvalidBasisIndex { index, signature });
        }
        Ok(Self::blade(signature, BasisBlade::vector(index), 1.0))
    }

    /// Product of basis vectors in the given order, e.g. `[2, 1]` is `e2 e1 = -e12`.
    pub fn basis_product(signature: Signature, indices: &[usize]) -> Result<Self> {
        let mut out = Self::one(signature);
        for &i in indices {
            out = out.geometric_product(&Self::basis_vector(signature, i)?)?;
        }
        Ok(out)
    }

    /// Vector `Σ c_i e_i`.
    pub fn vector<C: Into<Complex64> + Copy>(signature: Signature, coeffs: &[C]) -> Result<Self> {
        if coeffs.len() != signature.dimension() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} vector components", signature.dimension()),
                found: coeffs.len().to_string(),
            });
        }
        Self::from_terms(
            signature,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (BasisBlade::vector(i), c.into())),
        )
    }

    /// Builds from `(blade, coefficient)` pairs, summing repeated blades.
    pub fn from_terms(
        signature: Signature,
        terms: impl IntoIterator<Item = (BasisBlade, Complex64)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<u32, Complex64> = BTreeMap::new();
        for (blade, c) in terms {
            if !blade.is_valid_for(signature) {
                return Err(Error::InvalidBlade {
                    mask: blade.0,
                    signature,
                });
            }
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::NonFinite { mask: blade.0 });
            }
            *acc.entry(blade.0).or_default() += c;
        }
        acc.retain(|_, c| c.norm() >= PRUNE_THRESHOLD);
        Ok(Self {
            signature,
            terms: acc,
        })
    }

    /// Dense coefficient vector indexed by blade mask.
    pub fn from_dense(signature: Signature, coeffs: &[Complex64]) -> Result<Self> {
        if coeffs.len() != signature.blade_count() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} coefficients", signature.blade_count()),
                found: coeffs.len().to_string(),
            });
        }
        Self::from_terms(
            signature,
            coeffs
                .iter()
                .enumerate()
                .map(|(m, &c)| (BasisBlade(m as u32), c)),
        )
    }

    pub fn to_dense(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.signature.blade_count()];
        for (&m, &c) in &self.terms {
            out[m as usize] = c;
        }
        out
    }

    fn insert(&mut self, mask: u32, c: Complex64) {
        if c.norm() >= PRUNE_THRESHOLD {
            self.terms.insert(mask, c);
        }
    }

    fn from_accumulator(signature: Signature, acc: Vec<Complex64>) -> Self {
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| c.norm() >= PRUNE_THRESHOLD)
            .map(|(m, c)| (m as u32, c))
            .collect();
        Self { signature, terms }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, Complex64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (BasisBlade(m), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, blade: BasisBlade) -> Complex64 {
        self.terms.get(&blade.0).copied().unwrap_or_default()
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.coefficient(BasisBlade::SCALAR)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Grades that carry at least one nonzero term.
    pub fn grades(&self) -> Vec<usize> {
        let mut gs: Vec<usize> = self.terms.keys().map(|&m| m.count_ones() as usize).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Sum of coefficient moduli; submultiplicative under the geometric product.
    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    /// Largest coefficient deviation between two multivectors of the same signature.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        let mut worst: f64 = 0.0;
        for (m, c) in &self.terms {
            let d = (*c - other.terms.get(m).copied().unwrap_or_default()).norm();
            worst = worst.max(d);
        }
        for (m, c) in &other.terms {
            if !self.terms.contains_key(m) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.signature == other.signature && self.max_abs_diff(other) <= tol
    }

    pub(crate) fn check_same(&self, other: &Multivector) -> Result<()> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch {
                left: self.signature,
                right: other.signature,
            });
        }
        Ok(())
    }

    fn bilinear(&self, other: &Multivector, kernel: impl Fn(u32, u32) -> Option<(u32, f64)>) -> Result<Self> {
        self.check_same(other)?;
        let mut acc = vec![Complex64::new(0.0, 0.0); self.signature.blade_count()];
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                if let Some((m, s)) = kernel(a, b) {
                    acc[m as usize] += ca * cb * s;
                }
            }
        }
        Ok(Self::from_accumulator(self.signature, acc))
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Self> {
        let neg = self.signature.negative_mask();
        self.bilinear(other, |a, b| Some(blade_product(a, b, neg)))
    }

    /// Exterior product: only pairs of blades with no common factor survive.
    pub fn wedge(&self, other: &Multivector) -> Result<Self> {
        let neg = self.signature.negative_mask();
        self.bilinear(other, |a, b| (a & b == 0).then(|| blade_product(a, b, neg)))
    }

    /// Left contraction `a ⌟ b`: for blades, the grade `|b| - |a|` part of `ab`,
    /// nonzero only when the factors of `a` are contained in `b`.
    pub fn left_contraction(&self, other: &Multivector) -> Result<Self> {
        let neg = self.signature.negative_mask();
        self.bilinear(other, |a, b| (a & b == a).then(|| blade_product(a, b, neg)))
    }

    /// Right contraction `a ⌞ b`: the grade `|a| - |b|` part of `ab` for blades.
    pub fn right_contraction(&self, other: &Multivector) -> Result<Self> {
        let neg = self.signature.negative_mask();
        self.bilinear(other, |a, b| (a & b == b).then(|| blade_product(a, b, neg)))
    }

    fn map_signs(&self, sign: impl Fn(BasisBlade) -> f64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&m, &c)| (m, c * sign(BasisBlade(m))))
            .collect();
        Self {
            signature: self.signature,
            terms,
        }
    }

    /// `ψ̃`: grade-k part scaled by `(-1)^{⌊k/2⌋}`.
    pub fn reversion(&self) -> Self {
        self.map_signs(BasisBlade::reversion_sign)
    }

    /// `ψ̂`: grade-k part scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_signs(BasisBlade::involution_sign)
    }

    /// Reversion followed by grade involution.
    pub fn conjugation(&self) -> Self {
        self.map_signs(BasisBlade::conjugation_sign)
    }

    /// Entrywise complex conjugate of the coefficients.
    pub fn complex_conjugate(&self) -> Self {
        let terms = self.terms.iter().map(|(&m, c)| (m, c.conj())).collect();
        Self {
            signature: self.signature,
            terms,
        }
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self> {
        if grade > self.signature.dimension() {
            return Err(Error::GradeOutOfRange {
                grade,
                signature: self.signature,
            });
        }
        Ok(self.filter_grades(|k| k == grade))
    }

    pub(crate) fn filter_grades(&self, keep: impl Fn(usize) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(&m, _)| keep(m.count_ones() as usize))
            .map(|(&m, &c)| (m, c))
            .collect();
        Self {
            signature: self.signature,
            terms,
        }
    }

    pub fn scale(&self, factor: impl Into<Complex64>) -> Self {
        let f = factor.into();
        let mut out = Self::zero(self.signature);
        for (&m, &c) in &self.terms {
            out.insert(m, c * f);
        }
        out
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (&m, &c) in &other.terms {
            *terms.entry(m).or_default() += c;
        }
        terms.retain(|_, c| c.norm() >= PRUNE_THRESHOLD);
        Ok(Self {
            signature: self.signature,
            terms,
        })
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, other: &Multivector) -> Result<Self> {
        self.geometric_product(other)?
            .try_sub(&other.geometric_product(self)?)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.signature, self)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            if m != 0 {
                write!(f, "·e")?;
                for i in BasisBlade(m).indices() {
                    write!(f, "{i}")?;
                }
            }
        }
        Ok(())
    }
}

// Operator forms panic on signature mismatch; use the `try_*` and named
// methods where mixing signatures is possible.

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signature mismatch in +")
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        *self = &*self + rhs;
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signature mismatch in -")
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
            .expect("signature mismatch in geometric product")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<Complex64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Complex64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Complex64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}
