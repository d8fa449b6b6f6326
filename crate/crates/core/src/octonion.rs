//! Octonions as paravectors of `Cl(0,7)`.
//!
//! The unit `e_a` (a = 1..7) is the basis vector with index `a − 1`. The
//! product is `A ∘ B = ⟨A B (1 − ψ)⟩₀₊₁` with ψ the sum of seven trivectors
//! read off the Fano cycles below.

use num_complex::Complex64;

use crate::clifford::{BasisBlade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::isotopy::BaseIsotope;

/// Oriented triples `(a, b, c)` with `e_a ∘ e_b = e_c`.
pub const FANO_CYCLES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

pub fn signature() -> Signature {
    Signature::octonionic()
}

/// `1` for `a = 0`, otherwise `e_a`.
pub fn unit(a: usize) -> Multivector {
    assert!(a <= 7, "octonion unit index {a} out of range");
    if a == 0 {
        Multivector::one(signature())
    } else {
        Multivector::blade(signature(), BasisBlade::vector(a - 1), 1.0)
    }
}

/// `ψ = e124 + e235 + e346 + e457 + e561 + e672 + e713`, each term the
/// ordered product of its three vectors.
pub fn psi_trivector() -> Multivector {
    let terms = FANO_CYCLES.iter().map(|cycle| {
        let idx: Vec<usize> = cycle.iter().map(|&a| a - 1).collect();
        let (blade, sign) = BasisBlade::from_indices(&idx);
        (blade, Complex64::new(sign, 0.0))
    });
    Multivector::from_terms(signature(), terms).expect("valid trivector")
}

/// Totally antisymmetric `ε_abc` generated from [`FANO_CYCLES`].
pub fn epsilon(a: usize, b: usize, c: usize) -> f64 {
    for cycle in FANO_CYCLES {
        for shift in 0..3 {
            let (x, y, z) = (cycle[shift], cycle[(shift + 1) % 3], cycle[(shift + 2) % 3]);
            if (a, b, c) == (x, y, z) {
                return 1.0;
            }
            if (a, b, c) == (y, x, z) {
                return -1.0;
            }
        }
    }
    0.0
}

/// `e_a ∘ e_b = ε_ab^c e_c − δ_ab` for `a, b ∈ 1..=7`, as a multivector.
pub fn table_product(a: usize, b: usize) -> Multivector {
    let mut out = Multivector::zero(signature());
    if a == b {
        out = &out - &unit(0);
    }
    for c in 1..=7 {
        let e = epsilon(a, b, c);
        if e != 0.0 {
            out = &out + &unit(c).scale(e);
        }
    }
    out
}

fn check_paravector(a: &Multivector) -> Result<()> {
    if a.signature() != signature() {
        return Err(Error::SignatureMismatch {
            left: signature(),
            right: a.signature(),
        });
    }
    if a.grades().iter().any(|&g| g > 1) {
        return Err(Error::NotParavector);
    }
    Ok(())
}

/// `⟨A B (1 − ψ)⟩₀₊₁`.
pub fn oct_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    check_paravector(a)?;
    check_paravector(b)?;
    let one_minus_psi = &Multivector::one(signature()) - &psi_trivector();
    let full = a.geometric_product(b)?.geometric_product(&one_minus_psi)?;
    Ok(full.filter_grades(|k| k <= 1))
}

/// Scalar part minus vector part.
pub fn oct_conjugate(a: &Multivector) -> Result<Multivector> {
    check_paravector(a)?;
    Ok(a.grade_involution())
}

/// `Ā / (A ∘ Ā)`.
pub fn oct_inverse(a: &Multivector) -> Result<Multivector> {
    let conj = oct_conjugate(a)?;
    let n = oct_product(a, &conj)?.scalar_part();
    if n.norm() < 1e-300 {
        return Err(Error::NonInvertible {
            residual: f64::INFINITY,
        });
    }
    Ok(conj.scale(n.inv()))
}

/// Euclidean norm of the eight coefficients.
pub fn oct_norm(a: &Multivector) -> f64 {
    a.norm()
}

pub type OctProduct = fn(&Multivector, &Multivector) -> Result<Multivector>;

/// Isotopes of `∘` with isounit `zeta`.
pub fn oct_isotope(zeta: &Multivector) -> Result<BaseIsotope<OctProduct>> {
    let inv = oct_inverse(zeta)?;
    BaseIsotope::new(oct_product as OctProduct, zeta.clone(), inv)
}

/// `A ∘ (ζ⁻¹ ∘ B)`.
pub fn oct_isotope_right(zeta: &Multivector, a: &Multivector, b: &Multivector) -> Result<Multivector> {
    oct_isotope(zeta)?.right_product(a, b)
}

/// `(A ∘ ζ⁻¹) ∘ B`.
pub fn oct_isotope_left(zeta: &Multivector, a: &Multivector, b: &Multivector) -> Result<Multivector> {
    oct_isotope(zeta)?.left_product(a, b)
}
