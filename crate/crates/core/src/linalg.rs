//! Dense complex matrices.
//!
//! A thin newtype over `nalgebra::DMatrix<Complex64>` exposing only what the
//! representation, structure-constant and flavor code needs.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i] } else { Complex64::default() })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<Complex64> = diag.iter().map(|&x| re(x)).collect();
        Self::from_diagonal(&d)
    }

    /// Row-major construction. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn from_dmatrix(m: DMatrix<Complex64>) -> Self {
        Self(m)
    }

    pub fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        self.0.column(j).iter().copied().collect()
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.rows().min(self.cols())).map(|i| self.get(i, i)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scale(&self, factor: impl Into<Complex64>) -> Self {
        Self(&self.0 * factor.into())
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|c| c.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    /// Largest entrywise deviation; infinite when shapes differ.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        if self.0.shape() != other.0.shape() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    pub fn try_mul(&self, other: &ComplexMatrix) -> Result<Self> {
        if self.cols() != other.rows() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", self.cols()),
                found: other.rows().to_string(),
            });
        }
        Ok(Self(&self.0 * &other.0))
    }

    pub fn try_add(&self, other: &ComplexMatrix) -> Result<Self> {
        if self.0.shape() != other.0.shape() {
            return Err(Error::DimensionMismatch {
                expected: format!("{:?}", self.0.shape()),
                found: format!("{:?}", other.0.shape()),
            });
        }
        Ok(Self(&self.0 + &other.0))
    }

    pub fn try_sub(&self, other: &ComplexMatrix) -> Result<Self> {
        self.try_add(&other.scale(-1.0))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: format!("vector of length {}", self.cols()),
                found: v.len().to_string(),
            });
        }
        Ok((0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.get(i, j) * v[j]).sum())
            .collect())
    }

    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        Self(self.0.kronecker(&other.0))
    }

    /// Embeds a square matrix in the top-left corner of a `size × size`
    /// identity.
    pub fn block_embed(&self, size: usize) -> Result<Self> {
        if !self.is_square() || self.rows() > size {
            return Err(Error::DimensionMismatch {
                expected: format!("square matrix of order <= {size}"),
                found: format!("{}x{}", self.rows(), self.cols()),
            });
        }
        let n = self.rows();
        Ok(Self::from_fn(size, size, |i, j| {
            if i < n && j < n {
                self.get(i, j)
            } else if i == j {
                re(1.0)
            } else {
                Complex64::default()
            }
        }))
    }

    pub fn try_inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        self.0.clone().try_inverse().map(Self)
    }

    /// Solves `self · x = rhs` by LU with partial pivoting.
    pub fn solve(&self, rhs: &[Complex64]) -> Option<Vec<Complex64>> {
        if !self.is_square() || rhs.len() != self.rows() {
            return None;
        }
        let b = nalgebra::DVector::from_column_slice(rhs);
        self.0
            .clone()
            .lu()
            .solve(&b)
            .map(|x| x.iter().copied().collect())
    }

    /// Least-squares solution of `self · X ≈ rhs` via SVD, for every column of `rhs`.
    pub fn least_squares(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.rows() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", self.rows()),
                found: rhs.rows().to_string(),
            });
        }
        // Householder QR when the columns are independent. nalgebra's complex
        // SVD can return inaccurate singular vectors when singular values
        // repeat, so it is kept for the rank-deficient case only.
        if self.rows() >= self.cols() {
            let qr = self.0.clone().qr();
            let r = qr.r();
            let diag: Vec<f64> = (0..self.cols()).map(|i| r[(i, i)].norm()).collect();
            let max = diag.iter().copied().fold(0.0, f64::max);
            if max > 0.0 && diag.iter().all(|&d| d > 1e-10 * max) {
                let qtb = qr.q().adjoint() * &rhs.0;
                if let Some(x) = r.solve_upper_triangular(&qtb) {
                    return Ok(Self(x));
                }
            }
        }
        let svd = self.0.clone().svd(true, true);
        let eps = 1e-12 * svd.singular_values.max().max(1.0);
        svd.solve(&rhs.0, eps)
            .map(Self)
            .map_err(|_| Error::NotInSpan {
                residual: f64::INFINITY,
            })
    }

    pub fn singular_values(&self) -> Vec<f64> {
        self.0.clone().svd(false, false).singular_values.iter().copied().collect()
    }

    /// Numerical rank with singular values below `rel_tol · σ_max` treated as zero.
    pub fn rank(&self, rel_tol: f64) -> usize {
        let sv = self.singular_values();
        let max = sv.iter().copied().fold(0.0, f64::max);
        if max == 0.0 {
            return 0;
        }
        sv.iter().filter(|&&s| s > rel_tol * max).count()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{}", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            let row: Vec<String> = (0..self.cols())
                .map(|j| {
                    let c = self.get(i, j);
                    format!("{:+.4}{:+.4}i", c.re, c.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_mul(rhs).expect("matrix shape mismatch in *")
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix shape mismatch in +")
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self + &rhs
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix shape mismatch in -")
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self - &rhs
    }
}
