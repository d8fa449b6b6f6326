//! Shared inputs for the criterion benchmarks.

use isoclifford_core::clifford::BasisBlade;
use isoclifford_core::{Complex64, IsoContext, Multivector, Signature};

/// A dense-ish multivector with `terms` blades and reproducible coefficients.
pub fn fixture(sig: Signature, terms: usize, salt: u32) -> Multivector {
    let n = sig.blade_count() as u32;
    let terms = (0..terms as u32).map(|k| {
        let blade = (k.wrapping_mul(2_654_435_761).wrapping_add(salt)) % n;
        let x = f64::from(k + salt);
        (BasisBlade(blade), Complex64::new((0.7 * x).sin(), (1.3 * x).cos() * 0.5))
    });
    Multivector::from_terms(sig, terms).expect("blades within signature")
}

/// `2 + 0.3 v` with `v` a fixed vector: always invertible.
pub fn isounit(sig: Signature) -> IsoContext {
    let mut zeta = Multivector::scalar(sig, 2.0);
    for i in 0..sig.dimension() {
        let c = 0.3 * ((i + 1) as f64).sin() / sig.dimension() as f64;
        zeta = &zeta + &Multivector::basis_vector(sig, i).unwrap().scale(c);
    }
    IsoContext::new(zeta).expect("dominant scalar part")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        let sig = Signature::spacetime();
        assert_eq!(fixture(sig, 8, 3), fixture(sig, 8, 3));
        assert!(isounit(Signature::new(6, 0).unwrap()).zeta().term_count() > 1);
    }
}
