use num_complex::Complex64;

use super::{blade_product, Multivector};
use crate::error::{Error, Result};

/// Hard cap on the number of series terms.
pub const EXP_MAX_TERMS: usize = 200;
/// Relative size of the last term at which a series is considered converged.
pub const EXP_TAIL_TOLERANCE: f64 = 1e-12;

impl Multivector {
    /// Ordinary Clifford exponential `Σ aᵏ/k!`.
    ///
    /// The argument is scaled by `2^-s` until its l1 norm is at most ½, the
    /// truncated series is summed, and the result squared `s` times.
    pub fn exp(&self) -> Result<Self> {
        let norm = self.l1_norm();
        let s = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let reduced = self.scale(0.5f64.powi(s as i32));
        let mut out = dense_exp(&reduced)?;
        for _ in 0..s {
            out = out.geometric_product(&out)?;
        }
        Ok(out)
    }
}

/// Taylor series on a dense coefficient vector, so that small terms are not
/// pruned before they are summed.
fn dense_exp(x: &Multivector) -> Result<Multivector> {
    let sig = x.signature();
    let neg = sig.negative_mask();
    let zero = Complex64::new(0.0, 0.0);
    let mut term = vec![zero; sig.blade_count()];
    term[0] = Complex64::new(1.0, 0.0);
    let mut sum = term.clone();
    let l1 = |v: &[Complex64]| v.iter().map(|c| c.norm()).sum::<f64>();
    let mut last = f64::INFINITY;
    for k in 1..EXP_MAX_TERMS {
        let mut next = vec![zero; term.len()];
        for (blade, c) in x.terms() {
            let c = c / k as f64;
            for (j, t) in term.iter().enumerate() {
                if *t != zero {
                    let (m, s) = blade_product(blade.0, j as u32, neg);
                    next[m as usize] += c * t * s;
                }
            }
        }
        term = next;
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
        let t = l1(&term);
        last = t / l1(&sum).max(f64::MIN_POSITIVE);
        if last <= f64::EPSILON * 1e-2 {
            return Multivector::from_dense(sig, &sum);
        }
    }
    Err(Error::Convergence {
        terms: EXP_MAX_TERMS,
        tail: last,
    })
}

/// `Σ_k x^{∘k}/k!` where `x^{∘0} = unit` and `x^{∘(k+1)} = x ∘ x^{∘k}`.
///
/// Stops once a term is below `tail` relative to the running sum, or fails
/// after [`EXP_MAX_TERMS`] terms.
pub(crate) fn exp_series(
    x: &Multivector,
    product: impl Fn(&Multivector, &Multivector) -> Result<Multivector>,
    unit: Multivector,
    tail: f64,
) -> Result<Multivector> {
    let mut term = unit.clone();
    let mut sum = unit;
    let mut last = f64::INFINITY;
    for k in 1..EXP_MAX_TERMS {
        term = product(x, &term)?.scale(1.0 / k as f64);
        sum = sum.try_add(&term)?;
        let t = term.l1_norm();
        last = t / sum.l1_norm().max(f64::MIN_POSITIVE);
        if t == 0.0 || last <= tail {
            return Ok(sum);
        }
    }
    Err(Error::Convergence {
        terms: EXP_MAX_TERMS,
        tail: last,
    })
}
