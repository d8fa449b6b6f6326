//! Isotopic liftings of a Clifford algebra.
//!
//! An [`IsoContext`] fixes an invertible isounit ζ; the lifted product is
//! `A ⋄ B = A ζ⁻¹ B`, for which ζ is the two-sided unit.

mod field;
mod nonassoc;

pub use field::IsoComplex;
pub use nonassoc::BaseIsotope;

use crate::clifford::{exp_series, Multivector, Signature, EXP_TAIL_TOLERANCE};
use crate::error::{Error, Result};

/// Largest accepted `|ζζ⁻¹ − 1|` for a supplied inverse.
pub const CONTEXT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct IsoContext {
    zeta: Multivector,
    zeta_inv: Multivector,
}

impl IsoContext {
    pub fn new(zeta: Multivector) -> Result<Self> {
        let zeta_inv = zeta.inverse()?;
        Self::with_inverse(zeta, zeta_inv)
    }

    /// Uses a precomputed inverse after checking it.
    pub fn with_inverse(zeta: Multivector, zeta_inv: Multivector) -> Result<Self> {
        zeta.check_same(&zeta_inv)?;
        let one = Multivector::one(zeta.signature());
        let residual = zeta.geometric_product(&zeta_inv)?.max_abs_diff(&one);
        if residual > CONTEXT_TOLERANCE {
            return Err(Error::NonInvertible { residual });
        }
        Ok(Self { zeta, zeta_inv })
    }

    /// ζ = 1: every iso operation reduces to its ordinary counterpart.
    pub fn identity(signature: Signature) -> Self {
        Self {
            zeta: Multivector::one(signature),
            zeta_inv: Multivector::one(signature),
        }
    }

    pub fn zeta(&self) -> &Multivector {
        &self.zeta
    }

    pub fn zeta_inv(&self) -> &Multivector {
        &self.zeta_inv
    }

    pub fn signature(&self) -> Signature {
        self.zeta.signature()
    }

    /// `a ζ⁻¹ b`.
    pub fn iso_product(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        a.geometric_product(&self.zeta_inv)?.geometric_product(b)
    }

    /// `a ζ`.
    pub fn lift(&self, a: &Multivector) -> Result<Multivector> {
        a.geometric_product(&self.zeta)
    }

    /// `a ζ⁻¹`, the inverse of [`lift`](Self::lift).
    pub fn unlift(&self, a: &Multivector) -> Result<Multivector> {
        a.geometric_product(&self.zeta_inv)
    }

    /// `ζ⁻¹ a`.
    pub fn zeta_apply(&self, a: &Multivector) -> Result<Multivector> {
        self.zeta_inv.geometric_product(a)
    }

    /// `a ⋄ b − b ⋄ a`.
    pub fn iso_commutator(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        self.iso_product(a, b)?.try_sub(&self.iso_product(b, a)?)
    }

    /// Grade involution transported to lifted elements: `(x ζ⁻¹)^ ζ`.
    ///
    /// Agrees with the plain grade involution whenever ζ is even.
    pub fn iso_hat(&self, x: &Multivector) -> Result<Multivector> {
        self.lift(&self.unlift(x)?.grade_involution())
    }

    /// `½(v ⋄ ψ + ψ̂ ⋄ v)` with ψ̂ taken by [`iso_hat`](Self::iso_hat).
    pub fn iso_wedge(&self, v: &Multivector, psi: &Multivector) -> Result<Multivector> {
        let hat = self.iso_hat(psi)?;
        Ok(self.iso_product(v, psi)?.try_add(&self.iso_product(&hat, v)?)?.scale(0.5))
    }

    /// `½(v ⋄ ψ − ψ̂ ⋄ v)` with ψ̂ taken by [`iso_hat`](Self::iso_hat).
    pub fn iso_contraction(&self, v: &Multivector, psi: &Multivector) -> Result<Multivector> {
        let hat = self.iso_hat(psi)?;
        Ok(self.iso_product(v, psi)?.try_sub(&self.iso_product(&hat, v)?)?.scale(0.5))
    }

    /// The half-sum with the untransported grade involution `ψ̂`.
    pub fn iso_wedge_plain_hat(&self, v: &Multivector, psi: &Multivector) -> Result<Multivector> {
        let hat = psi.grade_involution();
        Ok(self.iso_product(v, psi)?.try_add(&self.iso_product(&hat, v)?)?.scale(0.5))
    }

    /// `v₁ ∧ (v₂ ∧ (… ∧ vₖ))` under [`iso_wedge`](Self::iso_wedge).
    pub fn iso_wedge_chain(&self, factors: &[Multivector]) -> Result<Multivector> {
        let (last, rest) = factors.split_last().ok_or_else(|| Error::DimensionMismatch {
            expected: "at least one factor".into(),
            found: "0".into(),
        })?;
        rest.iter()
            .rev()
            .try_fold(last.clone(), |acc, v| self.iso_wedge(v, &acc))
    }

    /// `½(ψ ⋄ φ + φ ⋄ ψ)`; equals `g(u, v) ζ` for lifted vectors `ψ = uζ`, `φ = vζ`.
    pub fn iso_metric(&self, psi: &Multivector, phi: &Multivector) -> Result<Multivector> {
        Ok(self.iso_product(psi, phi)?.try_add(&self.iso_product(phi, psi)?)?.scale(0.5))
    }

    /// `exp(a ζ⁻¹) ζ`.
    pub fn iso_exp(&self, a: &Multivector) -> Result<Multivector> {
        self.lift(&self.unlift(a)?.exp()?)
    }

    /// `Σ a^{⋄k}/k!` summed term by term with `a^{⋄0} = ζ`.
    pub fn iso_exp_series(&self, a: &Multivector) -> Result<Multivector> {
        exp_series(
            a,
            |x, y| self.iso_product(x, y),
            self.zeta.clone(),
            EXP_TAIL_TOLERANCE,
        )
    }
}

/// `a ζ⁻¹ b − b ξ⁻¹ a` with ζ from `left` and ξ from `right`.
pub fn geno_commutator(
    left: &IsoContext,
    right: &IsoContext,
    a: &Multivector,
    b: &Multivector,
) -> Result<Multivector> {
    left.iso_product(a, b)?.try_sub(&right.iso_product(b, a)?)
}
