//! Random elements for property checks.

use num_complex::Complex64;
use rand::seq::index::sample;
use rand::Rng;

use crate::clifford::{BasisBlade, Multivector, Signature};
use crate::linalg::c64;

fn coeff<R: Rng + ?Sized>(rng: &mut R, complex: bool) -> Complex64 {
    let re = rng.random_range(-1.0..1.0);
    let im = if complex { rng.random_range(-1.0..1.0) } else { 0.0 };
    c64(re, im)
}

/// Up to `max_terms` distinct blades with coefficients in `[-1, 1)`.
pub fn multivector<R: Rng + ?Sized>(rng: &mut R, sig: Signature, max_terms: usize, complex: bool) -> Multivector {
    let blades = sig.blade_count();
    let k = rng.random_range(1..=max_terms.min(blades));
    let picked = sample(rng, blades, k);
    let terms: Vec<_> = picked
        .into_iter()
        .map(|b| (BasisBlade(b as u32), coeff(rng, complex)))
        .collect();
    Multivector::from_terms(sig, terms).expect("blades are in range")
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, sig: Signature) -> Multivector {
    let c: Vec<f64> = (0..sig.dimension()).map(|_| rng.random_range(-1.0..1.0)).collect();
    Multivector::vector(sig, &c).expect("length matches")
}

/// Scalar plus vector part, real coefficients.
pub fn paravector<R: Rng + ?Sized>(rng: &mut R, sig: Signature) -> Multivector {
    let s = rng.random_range(-1.0..1.0);
    &vector(rng, sig) + &Multivector::scalar(sig, s)
}

/// Rescales `x` to the given l1 norm.
pub fn with_l1_norm(x: &Multivector, target: f64) -> Multivector {
    let n = x.l1_norm();
    if n == 0.0 {
        x.clone()
    } else {
        x.scale(target / n)
    }
}

/// `2 + x` with `‖x‖₁ ≤ 1.5`, hence invertible by a convergent Neumann series.
pub fn isounit<R: Rng + ?Sized>(rng: &mut R, sig: Signature, complex: bool) -> Multivector {
    let x = multivector(rng, sig, 6, complex);
    let scale = rng.random_range(0.1..1.5);
    &Multivector::scalar(sig, 2.0) + &with_l1_norm(&x, scale)
}

/// Product of one to three random non-null vectors.
pub fn versor<R: Rng + ?Sized>(rng: &mut R, sig: Signature) -> Multivector {
    let k = rng.random_range(1..=3);
    let mut out = Multivector::one(sig);
    for _ in 0..k {
        let v = loop {
            let v = vector(rng, sig);
            if v.geometric_product(&v).expect("same signature").scalar_part().norm() > 0.1 {
                break v;
            }
        };
        out = out.geometric_product(&v).expect("same signature");
    }
    out
}

/// Random element with l1 norm at most `max_l1`.
pub fn small<R: Rng + ?Sized>(rng: &mut R, sig: Signature, max_l1: f64, complex: bool) -> Multivector {
    let x = multivector(rng, sig, 6, complex);
    with_l1_norm(&x, rng.random_range(0.0..max_l1))
}

/// Positive numbers with product one.
pub fn unit_determinant_diagonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let logs: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    let mean = logs.iter().sum::<f64>() / n as f64;
    logs.iter().map(|l| (l - mean).exp()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn isounits_invert() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for sig in [Signature::euclidean3(), Signature::spacetime(), Signature::octonionic()] {
            for _ in 0..20 {
                assert!(isounit(&mut rng, sig, true).inverse().is_ok());
            }
        }
    }

    #[test]
    fn diagonal_has_unit_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d = unit_determinant_diagonal(&mut rng, 6);
        assert!((d.iter().product::<f64>() - 1.0).abs() < 1e-14);
    }
}
