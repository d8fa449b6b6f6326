use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::clifford::{blade_product, Multivector};
use crate::linalg::ComplexMatrix;

/// Matrix of `x ↦ a·x` in the blade basis, ordered by mask.
///
/// Column `j` holds the coefficients of `a · blade_j`.
pub fn regular_representation(a: &Multivector) -> ComplexMatrix {
    let sig = a.signature();
    let n = sig.blade_count();
    let neg = sig.negative_mask();
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for (blade, c) in a.terms() {
            let (m, s) = blade_product(blade.0, j as u32, neg);
            data[j * n + m as usize] += c * s;
        }
    }
    ComplexMatrix::from_dmatrix(DMatrix::from_vec(n, n, data))
}
