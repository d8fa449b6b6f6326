//! Basis blades as bitmasks.
//!
//! Bit `i` of a mask marks basis vector `e_i` as a factor. The canonical
//! blade is the product of its factors in ascending index order, so
//! `0b101` is `e0 e2`.

use super::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisBlade(pub u32);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub fn vector(index: usize) -> Self {
        BasisBlade(1 << index)
    }

    /// Blade from a list of distinct ascending-or-not indices; returns the
    /// canonical blade and the sign of the reordering.
    pub fn from_indices(indices: &[usize]) -> (Self, f64) {
        let mut mask = 0u32;
        let mut sign = 1.0;
        for &i in indices {
            let v = 1u32 << i;
            debug_assert!(mask & v == 0, "repeated index {i}");
            sign *= reorder_sign(mask, v);
            mask |= v;
        }
        (BasisBlade(mask), sign)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_valid_for(self, sig: Signature) -> bool {
        (self.0 as usize) < sig.blade_count()
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask & (1 << i) != 0)
    }

    pub fn reversion_sign(self) -> f64 {
        let k = self.grade();
        if (k / 2).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    pub fn involution_sign(self) -> f64 {
        if self.grade().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    pub fn conjugation_sign(self) -> f64 {
        self.reversion_sign() * self.involution_sign()
    }
}

/// Sign picked up when the factors of `a` followed by the factors of `b`
/// are sorted into ascending order.
#[inline]
pub fn reorder_sign(a: u32, b: u32) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Geometric product of two basis blades: the resulting blade and its sign.
#[inline]
pub fn blade_product(a: u32, b: u32, negative_mask: u32) -> (u32, f64) {
    let mut sign = reorder_sign(a, b);
    if (a & b & negative_mask).count_ones() & 1 == 1 {
        sign = -sign;
    }
    (a ^ b, sign)
}
