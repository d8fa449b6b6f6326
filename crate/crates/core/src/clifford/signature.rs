use std::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension `p + q`. Cl(12,0) is needed for su(6).
pub const MAX_DIMENSION: usize = 12;

/// Metric signature of the quadratic space `R^{p,q}`.
///
/// Basis vectors are indexed `0..p+q`; the first `p` square to `+1` and the
/// remaining `q` square to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > MAX_DIMENSION {
            return Err(Error::InvalidSignature {
                p,
                q,
                max: MAX_DIMENSION,
            });
        }
        Ok(Self {
            p: p as u8,
            q: q as u8,
        })
    }

    /// Euclidean `Cl(3,0)`.
    pub const fn euclidean3() -> Self {
        Self { p: 3, q: 0 }
    }

    /// Spacetime algebra `Cl(1,3)` with `e0² = +1`.
    pub const fn spacetime() -> Self {
        Self { p: 1, q: 3 }
    }

    /// `Cl(0,7)`, home of the octonionic paravectors.
    pub const fn octonionic() -> Self {
        Self { p: 0, q: 7 }
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    pub fn dimension(&self) -> usize {
        self.p() + self.q()
    }

    /// Number of basis blades, `2^(p+q)`.
    pub fn blade_count(&self) -> usize {
        1 << self.dimension()
    }

    /// Square of basis vector `i`.
    pub fn metric(&self, i: usize) -> f64 {
        if i < self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Bits of the basis vectors that square to `-1`.
    pub(crate) fn negative_mask(&self) -> u32 {
        let all = (1u32 << self.dimension()) - 1;
        let positive = (1u32 << self.p()) - 1;
        all & !positive
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
