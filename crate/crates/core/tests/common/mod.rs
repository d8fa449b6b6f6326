#![allow(dead_code)]

use isoclifford_core::{BasisBlade, Complex64, Multivector, Signature};
use proptest::prelude::*;

pub fn signatures() -> [Signature; 3] {
    [Signature::euclidean3(), Signature::spacetime(), Signature::octonionic()]
}

pub fn any_signature() -> impl Strategy<Value = Signature> {
    prop::sample::select(signatures().to_vec())
}

fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Sparse complex multivector with up to `max_terms` terms.
pub fn multivector(sig: Signature, max_terms: usize) -> impl Strategy<Value = Multivector> {
    let blades = sig.blade_count() as u32;
    prop::collection::vec((0..blades, coeff()), 1..=max_terms).prop_map(move |terms| {
        let mut out = Multivector::zero(sig);
        for (b, c) in terms {
            out += &Multivector::blade(sig, BasisBlade(b), c);
        }
        out
    })
}

pub fn vector(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-1.0f64..1.0, sig.dimension())
        .prop_map(move |c| Multivector::vector(sig, &c).unwrap())
}

/// `2 + x` with `‖x‖₁` between 0.1 and 1.5.
pub fn isounit(sig: Signature) -> impl Strategy<Value = Multivector> {
    (multivector(sig, 5), 0.1f64..1.5).prop_map(move |(x, l1)| {
        let x = if x.l1_norm() == 0.0 { Multivector::scalar(sig, 0.5) } else { x.scale(l1 / x.l1_norm()) };
        &Multivector::scalar(sig, 2.0) + &x
    })
}

pub fn with_signature<F, S>(f: F) -> impl Strategy<Value = S::Value>
where
    F: Fn(Signature) -> S + 'static,
    S: Strategy + 'static,
{
    any_signature().prop_flat_map(f)
}
