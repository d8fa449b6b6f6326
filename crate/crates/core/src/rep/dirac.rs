//! The complex 4×4 representation of `Cl(1,3)`.
//!
//! Γ0 = diag(1, 1, −1, −1) and Γk = [[0, Uk], [Uk, 0]] where the Uk are the
//! Pauli images of the quaternion units: U1 = σ3σ2, U2 = σ3σ1, U3 = σ1σ2.

use num_complex::Complex64;

use crate::clifford::{BasisBlade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::isotopy::IsoContext;
use crate::linalg::{re, ComplexMatrix, I};

/// Tolerance of the Spin⁺ predicates.
pub const SPIN_TOLERANCE: f64 = 1e-9;

/// Matrix positions of the eight independent entries `a₁ b₁ d₁ f₁ a₂ b₂ d₂ f₂`
/// of the printed quaternionic block layout.
pub const PRINTED_ENTRY_POSITIONS: [(usize, usize); 8] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, 3),
];

/// σ1, σ2, σ3.
pub fn pauli() -> [ComplexMatrix; 3] {
    let z = Complex64::new(0.0, 0.0);
    [
        ComplexMatrix::from_rows(&[vec![z, re(1.0)], vec![re(1.0), z]]),
        ComplexMatrix::from_rows(&[vec![z, -I], vec![I, z]]),
        ComplexMatrix::from_rows(&[vec![re(1.0), z], vec![z, re(-1.0)]]),
    ]
}

fn off_diagonal_blocks(u: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(4, 4, |i, j| match (i < 2, j < 2) {
        (true, false) => u.get(i, j - 2),
        (false, true) => u.get(i - 2, j),
        _ => Complex64::new(0.0, 0.0),
    })
}

#[derive(Debug, Clone)]
pub struct DiracRep {
    gamma: [ComplexMatrix; 4],
    blade_images: Vec<ComplexMatrix>,
    gram_inverse: ComplexMatrix,
}

impl Default for DiracRep {
    fn default() -> Self {
        Self::build()
    }
}

impl DiracRep {
    pub fn build() -> Self {
        let [s1, s2, s3] = pauli();
        let units = [&s3 * &s2, &s3 * &s1, &s1 * &s2];
        let gamma = [
            ComplexMatrix::from_real_diagonal(&[1.0, 1.0, -1.0, -1.0]),
            off_diagonal_blocks(&units[0]),
            off_diagonal_blocks(&units[1]),
            off_diagonal_blocks(&units[2]),
        ];
        let blade_images: Vec<ComplexMatrix> = (0..16u32)
            .map(|mask| {
                BasisBlade(mask)
                    .indices()
                    .fold(ComplexMatrix::identity(4), |acc, i| &acc * &gamma[i])
            })
            .collect();
        let gram = ComplexMatrix::from_fn(16, 16, |a, b| {
            (&blade_images[a] * &blade_images[b]).trace()
        });
        let gram_inverse = gram
            .try_inverse()
            .expect("blade images of the Dirac representation are independent");
        Self {
            gamma,
            blade_images,
            gram_inverse,
        }
    }

    pub fn gammas(&self) -> &[ComplexMatrix; 4] {
        &self.gamma
    }

    pub fn gamma(&self, mu: usize) -> &ComplexMatrix {
        &self.gamma[mu]
    }

    /// Γ0Γ1Γ2Γ3, the image of the volume element e5.
    pub fn gamma5(&self) -> &ComplexMatrix {
        &self.blade_images[0b1111]
    }

    pub fn blade_image(&self, blade: BasisBlade) -> &ComplexMatrix {
        &self.blade_images[blade.0 as usize]
    }

    /// Trace-pairing Gram matrix `tr(B_a B_b)` of the sixteen blade images.
    pub fn gram(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(16, 16, |a, b| {
            (&self.blade_images[a] * &self.blade_images[b]).trace()
        })
    }

    pub fn rep(&self, a: &Multivector) -> Result<ComplexMatrix> {
        check_spacetime(a)?;
        let mut out = ComplexMatrix::zeros(4, 4);
        for (blade, c) in a.terms() {
            out = &out + &self.blade_images[blade.0 as usize].scale(c);
        }
        Ok(out)
    }

    /// Recovers the multivector whose image is `m`.
    pub fn rep_inverse(&self, m: &ComplexMatrix) -> Result<Multivector> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::DimensionMismatch {
                expected: "4x4".into(),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        let t: Vec<Complex64> = self
            .blade_images
            .iter()
            .map(|b| (b * m).trace())
            .collect();
        let coeffs = self.gram_inverse.apply(&t)?;
        let mv = Multivector::from_dense(Signature::spacetime(), &coeffs)?;
        let residual = self.rep(&mv)?.max_abs_diff(m);
        if residual > 1e-8 {
            return Err(Error::NotInSpan { residual });
        }
        Ok(mv)
    }

    /// `R` is even and `RR̃ = 1`, checked in the algebra and in the matrix image.
    pub fn spin_plus_check(&self, r: &Multivector) -> bool {
        if check_spacetime(r).is_err() || !r.is_even() {
            return false;
        }
        let one = Multivector::one(r.signature());
        let product = r * &r.reversion();
        let (Ok(m), Ok(mr)) = (self.rep(r), self.rep(&r.reversion())) else {
            return false;
        };
        product.approx_eq(&one, SPIN_TOLERANCE)
            && (&m * &mr).max_abs_diff(&ComplexMatrix::identity(4)) <= SPIN_TOLERANCE
    }

    /// `R` is even and `R ⋄ R̃ = ζ`.
    pub fn iso_spin_plus_check(&self, ctx: &IsoContext, r: &Multivector) -> bool {
        if check_spacetime(r).is_err() || !r.is_even() {
            return false;
        }
        match ctx.iso_product(r, &r.reversion()) {
            Ok(p) => p.approx_eq(ctx.zeta(), SPIN_TOLERANCE),
            Err(_) => false,
        }
    }
}

fn check_spacetime(a: &Multivector) -> Result<()> {
    if a.signature() != Signature::spacetime() {
        return Err(Error::SignatureMismatch {
            left: Signature::spacetime(),
            right: a.signature(),
        });
    }
    Ok(())
}

/// The primitive idempotent `f = ½(1 + e0)`.
pub fn idempotent() -> Multivector {
    let sig = Signature::spacetime();
    Multivector::from_terms(
        sig,
        [
            (BasisBlade::SCALAR, re(0.5)),
            (BasisBlade::vector(0), re(0.5)),
        ],
    )
    .expect("valid blades")
}

/// The volume element `e5 = e0e1e2e3`.
pub fn volume_element() -> Multivector {
    Multivector::blade(Signature::spacetime(), BasisBlade(0b1111), 1.0)
}

/// Two-sided Peirce components of `x` with respect to `f` and
/// `f̄ = 1 − f = −e5 f e5`: `[f x f, f x f̄, f̄ x f, f̄ x f̄]`.
pub fn peirce_components(x: &Multivector) -> Result<[Multivector; 4]> {
    check_spacetime(x)?;
    let f = idempotent();
    let e5 = volume_element();
    let fbar = -(&(&e5 * &f) * &e5);
    Ok([
        &(&f * x) * &f,
        &(&f * x) * &fbar,
        &(&fbar * x) * &f,
        &(&fbar * x) * &fbar,
    ])
}

/// The four-term sum `f x f + f x e5 f − f e5 x f − f e5 x e5 f`.
pub fn printed_ideal_sum(x: &Multivector) -> Result<Multivector> {
    check_spacetime(x)?;
    let f = idempotent();
    let e5 = volume_element();
    let fx = &f * x;
    let fe5 = &f * &e5;
    let fe5x = &fe5 * x;
    Ok(&(&(&fx * &f) + &(&(&fx * &e5) * &f)) - &(&(&fe5x * &f) + &(&(&fe5x * &e5) * &f)))
}

/// The eight printed entry formulas, evaluated on the coefficients of `a`,
/// in the order of [`PRINTED_ENTRY_POSITIONS`].
pub fn printed_entries(a: &Multivector) -> Result<[Complex64; 8]> {
    check_spacetime(a)?;
    let c = |idx: &[usize]| {
        let (blade, sign) = BasisBlade::from_indices(idx);
        a.coefficient(blade) * sign
    };
    Ok([
        c(&[]) + c(&[0]) + I * (c(&[1, 2]) + c(&[0, 1, 2])),
        -c(&[1, 3]) - c(&[0, 1, 3]) + I * (c(&[2, 3]) + c(&[0, 2, 3])),
        -c(&[1, 2, 3]) + c(&[0, 1, 2, 3]) + I * (c(&[3]) - c(&[0, 3])),
        c(&[2]) - c(&[0, 2]) + I * (c(&[1]) - c(&[0, 1])),
        -c(&[1, 2, 3]) - c(&[0, 1, 2, 3]) + I * (c(&[3]) + c(&[0, 3])),
        -c(&[1, 2, 3]) - c(&[0, 1, 2, 3]) - I * (c(&[3]) + c(&[0, 3])),
        -c(&[2, 3]) + c(&[0, 2, 3]) + I * (-c(&[1, 3]) + c(&[0, 1, 3])),
        c(&[2, 3]) - c(&[0, 2, 3]) + I * (-c(&[1, 3]) + c(&[0, 1, 3])),
    ])
}
