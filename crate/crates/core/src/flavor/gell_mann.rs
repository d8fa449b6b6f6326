use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{re, ComplexMatrix, I};

/// The `n² − 1` generalized Gell-Mann matrices, normalized to
/// `tr(λ_a λ_b) = 2δ_ab`.
///
/// For each `k = 2..=n`: the symmetric and antisymmetric pairs `(j, k)` for
/// `j < k`, followed by `diag(1, …, 1, −(k−1), 0, …) · √(2/(k(k−1)))`. For
/// `n = 3` this is the usual λ1 … λ8.
pub fn gell_mann(n: usize) -> Result<Vec<ComplexMatrix>> {
    if !(2..=8).contains(&n) {
        return Err(Error::OutOfRange { n, min: 2, max: 8 });
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(n * n - 1);
    for k in 1..n {
        for j in 0..k {
            out.push(ComplexMatrix::from_fn(n, n, |r, c| {
                if (r, c) == (j, k) || (r, c) == (k, j) {
                    re(1.0)
                } else {
                    zero
                }
            }));
            out.push(ComplexMatrix::from_fn(n, n, |r, c| {
                if (r, c) == (j, k) {
                    -I
                } else if (r, c) == (k, j) {
                    I
                } else {
                    zero
                }
            }));
        }
        let kk = (k + 1) as f64;
        let norm = (2.0 / (kk * (kk - 1.0))).sqrt();
        let diag: Vec<f64> = (0..n)
            .map(|i| match i.cmp(&k) {
                std::cmp::Ordering::Less => norm,
                std::cmp::Ordering::Equal => -(kk - 1.0) * norm,
                std::cmp::Ordering::Greater => 0.0,
            })
            .collect();
        out.push(ComplexMatrix::from_real_diagonal(&diag));
    }
    Ok(out)
}

/// Zero-based positions of the diagonal generators (λ3, λ8, λ15, …).
pub fn diagonal_generator_indices(n: usize) -> Vec<usize> {
    (2..=n).map(|k| k * k - 2).collect()
}

/// `f_abc = −(i/4) tr([λ_a, λ_b] λ_c)`.
pub fn structure_constant(lambdas: &[ComplexMatrix], a: usize, b: usize, c: usize) -> f64 {
    let (la, lb, lc) = (&lambdas[a], &lambdas[b], &lambdas[c]);
    let comm = &(la * lb) - &(lb * la);
    (Complex64::new(0.0, -0.25) * (&comm * lc).trace()).re
}

/// The nonzero su(3) constants `f_abc` (a < b < c, one-based), as listed with
/// `f₁₂₃ = 2f₁₄₇ = −2f₁₅₆ = 2f₂₄₆ = 2f₂₅₇ = 2f₃₄₅ = −2f₃₆₇ = 2f₄₅₈/√3 = 2f₆₇₈/√3 = 1`.
pub fn su3_reference_constants() -> Vec<([usize; 3], f64)> {
    let h = 0.5;
    let r = 3f64.sqrt() / 2.0;
    vec![
        ([1, 2, 3], 1.0),
        ([1, 4, 7], h),
        ([1, 5, 6], -h),
        ([2, 4, 6], h),
        ([2, 5, 7], h),
        ([3, 4, 5], h),
        ([3, 6, 7], -h),
        ([4, 5, 8], r),
        ([6, 7, 8], r),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su3_diagonals() {
        let l = gell_mann(3).unwrap();
        assert_eq!(l.len(), 8);
        assert!(l[2].max_abs_diff(&ComplexMatrix::from_real_diagonal(&[1.0, -1.0, 0.0])) < 1e-15);
        let s = 1.0 / 3f64.sqrt();
        assert!(l[7].max_abs_diff(&ComplexMatrix::from_real_diagonal(&[s, s, -2.0 * s])) < 1e-15);
        assert_eq!(diagonal_generator_indices(3), vec![2, 7]);
        assert_eq!(diagonal_generator_indices(6), vec![2, 7, 14, 23, 34]);
    }

    #[test]
    fn lambda2_sign() {
        let l = gell_mann(3).unwrap();
        assert_eq!(l[1].get(0, 1), -I);
        assert_eq!(l[1].get(1, 0), I);
    }

    #[test]
    fn normalization_for_su6() {
        let l = gell_mann(6).unwrap();
        assert_eq!(l.len(), 35);
        for a in 0..35 {
            assert!(l[a].trace().norm() < 1e-14);
            assert!(l[a].is_hermitian(0.0));
            for b in 0..35 {
                let t = (&l[a] * &l[b]).trace();
                let expected = if a == b { 2.0 } else { 0.0 };
                assert!((t - expected).norm() < 1e-13, "({a},{b})");
            }
        }
    }

    #[test]
    fn listed_constants() {
        let l = gell_mann(3).unwrap();
        for ([a, b, c], f) in su3_reference_constants() {
            assert!((structure_constant(&l, a - 1, b - 1, c - 1) - f).abs() < 1e-14);
        }
    }
}
