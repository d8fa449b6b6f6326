use std::collections::BTreeSet;

use num_complex::Complex64;

use super::GeneratorSet;
use crate::clifford::{BasisBlade, Multivector};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Largest accepted residual of a bracket outside the generator span.
pub const CLOSURE_TOLERANCE: f64 = 1e-8;

/// `[G_i, G_j] = Σ_k c[i][j][k] G_k + s[i][j]·unit`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub c: Vec<Vec<Vec<Complex64>>>,
    pub unit_part: Vec<Vec<Complex64>>,
    pub max_residual: f64,
}

impl StructureConstants {
    pub fn dimension(&self) -> usize {
        self.c.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.c[i][j][k]
    }

    /// Largest `|c_ij^k + c_ji^k|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.dimension();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((self.c[i][j][k] + self.c[j][i][k]).norm());
                }
            }
        }
        worst
    }

    /// Largest violation of the Jacobi identity written in the constants.
    pub fn jacobi_defect(&self) -> f64 {
        let n = self.dimension();
        let c = &self.c;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = Complex64::new(0.0, 0.0);
                        for m in 0..n {
                            s += c[i][j][m] * c[m][k][l]
                                + c[j][k][m] * c[m][i][l]
                                + c[k][i][m] * c[m][j][l];
                        }
                        worst = worst.max(s.norm());
                    }
                }
            }
        }
        worst
    }

    /// Largest entrywise difference between two tensors of equal size.
    pub fn max_abs_diff(&self, other: &StructureConstants) -> f64 {
        if self.dimension() != other.dimension() {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for (a, b) in self.c.iter().flatten().flatten().zip(other.c.iter().flatten().flatten()) {
            worst = worst.max((a - b).norm());
        }
        worst
    }
}

fn support(elements: &[&Multivector]) -> Vec<u32> {
    let set: BTreeSet<u32> = elements
        .iter()
        .flat_map(|m| m.terms().map(|(b, _)| b.0))
        .collect();
    set.into_iter().collect()
}

fn span_matrix(rows: &[u32], columns: &[&Multivector]) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows.len(), columns.len(), |r, c| {
        columns[c].coefficient(BasisBlade(rows[r]))
    })
}

/// Numerical rank of the generators as vectors of coefficients.
pub fn span_rank(gs: &GeneratorSet) -> usize {
    let cols: Vec<&Multivector> = gs.generators.iter().collect();
    let rows = support(&cols);
    span_matrix(&rows, &cols).rank(1e-10)
}

struct Decomposition {
    c: Vec<Vec<Vec<Complex64>>>,
    unit_part: Vec<Vec<Complex64>>,
    residuals: Vec<Vec<f64>>,
}

fn decompose(gs: &GeneratorSet) -> Result<Decomposition> {
    let n = gs.len();
    let unit = gs.unit();
    let mut basis: Vec<&Multivector> = gs.generators.iter().collect();
    basis.push(&unit);
    let rows = support(&basis);
    let a = span_matrix(&rows, &basis);

    let brackets: Vec<Vec<Multivector>> = (0..n)
        .map(|i| (0..n).map(|j| gs.bracket(i, j)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let flat: Vec<&Multivector> = brackets.iter().flatten().collect();
    let rhs = span_matrix(&rows, &flat);
    let x = a.least_squares(&rhs)?;

    let mut c = vec![vec![vec![Complex64::new(0.0, 0.0); n]; n]; n];
    let mut unit_part = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    let mut residuals = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let col = i * n + j;
            let mut rebuilt = Multivector::zero(gs.signature);
            for k in 0..=n {
                let coeff = x.get(k, col);
                rebuilt = rebuilt.try_add(&basis[k].scale(coeff))?;
                if k < n {
                    c[i][j][k] = coeff;
                } else {
                    unit_part[i][j] = coeff;
                }
            }
            // Components outside the support rows show up here.
            residuals[i][j] = rebuilt.max_abs_diff(&brackets[i][j]);
        }
    }
    Ok(Decomposition {
        c,
        unit_part,
        residuals,
    })
}

/// Residual of the best approximation of each bracket `[G_i, G_j]` by the
/// generators and the unit. Never fails on non-closure.
pub fn closure_residuals(gs: &GeneratorSet) -> Result<Vec<Vec<f64>>> {
    Ok(decompose(gs)?.residuals)
}

/// Decomposes every bracket over the generators and the unit by least
/// squares, failing if any pair leaves a residual above [`CLOSURE_TOLERANCE`].
pub fn structure_constants(gs: &GeneratorSet) -> Result<StructureConstants> {
    let d = decompose(gs)?;
    let mut max_residual: f64 = 0.0;
    for (i, row) in d.residuals.iter().enumerate() {
        for (j, &residual) in row.iter().enumerate() {
            if residual > CLOSURE_TOLERANCE {
                return Err(Error::ClosureViolation { i, j, residual });
            }
            max_residual = max_residual.max(residual);
        }
    }
    Ok(StructureConstants {
        c: d.c,
        unit_part: d.unit_part,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{su3_case1_generators, su_n_generators};

    #[test]
    fn su2_closes_antisymmetrically() {
        let gs = su_n_generators(2, None).unwrap();
        let sc = structure_constants(&gs).unwrap();
        assert!(sc.max_residual < 1e-12);
        assert!(sc.antisymmetry_defect() < 1e-12);
        assert!(sc.jacobi_defect() < 1e-10);
        assert_eq!(span_rank(&gs), 3);
    }

    #[test]
    fn su3_bivectors_close() {
        let gs = su_n_generators(3, None).unwrap();
        let sc = structure_constants(&gs).unwrap();
        assert!(sc.max_residual < 1e-12);
        assert_eq!(span_rank(&gs), 8);
    }

    #[test]
    fn printed_cartan_breaks_closure() {
        let mut gs = su_n_generators(3, None).unwrap();
        let k = gs.len() - 2;
        gs.generators[k] = crate::lie::printed_cartan_generator(3, 1).unwrap();
        assert!(matches!(
            structure_constants(&gs),
            Err(Error::ClosureViolation { .. })
        ));
    }

    #[test]
    fn case1_bracket_of_first_pair() {
        let gs = su3_case1_generators(None).unwrap();
        let b = gs.bracket(0, 1).unwrap();
        // [λ¹, λ²] = 2iλ³ with the generators as printed
        assert!(b.approx_eq(&gs.generators[2].scale(Complex64::new(0.0, 2.0)), 1e-14));
    }
}
