use alloc::vec::Vec;

use super::{Gf2, X, Y, Z};
use crate::error::{Error, Result};

/// An invertible linear map of GF(2)^3, stored as the images of `x`, `y`, `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    pub cols: [Gf2; 3],
}

pub(crate) fn independent(v: [Gf2; 3]) -> bool {
    let [a, b, c] = v;
    !a.is_zero() && !b.is_zero() && a != b && !c.is_zero() && c != a && c != b && c != a + b
}

impl Automorphism {
    pub const IDENTITY: Automorphism = Automorphism { cols: [X, Y, Z] };

    #[inline]
    pub fn apply(&self, v: Gf2) -> Gf2 {
        let mut out = Gf2(0);
        for (i, &c) in self.cols.iter().enumerate() {
            if v.0 >> i & 1 == 1 {
                out += c;
            }
        }
        out
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Automorphism) -> Automorphism {
        Automorphism { cols: first.cols.map(|c| self.apply(c)) }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = [Gf2(0); 3];
        for v in Gf2::nonzero(3) {
            let image = self.apply(v);
            for (i, &basis) in [X, Y, Z].iter().enumerate() {
                if image == basis {
                    inv[i] = v;
                }
            }
        }
        Automorphism { cols: inv }
    }

    /// All 168 automorphisms, in lexicographic order of their columns.
    pub fn all() -> Vec<Automorphism> {
        let mut out = Vec::with_capacity(168);
        for a in Gf2::nonzero(3) {
            for b in Gf2::nonzero(3) {
                for c in Gf2::nonzero(3) {
                    if independent([a, b, c]) {
                        out.push(Automorphism { cols: [a, b, c] });
                    }
                }
            }
        }
        out
    }

    /// The unique automorphism sending `src[i]` to `dst[i]`.
    pub fn extending(src: [Gf2; 3], dst: [Gf2; 3]) -> Result<Automorphism> {
        if !independent(src) || !independent(dst) {
            return Err(Error::Dependent);
        }
        let to_src = Automorphism { cols: src };
        let to_dst = Automorphism { cols: dst };
        Ok(to_dst.compose(&to_src.inverse()))
    }

    /// First automorphism (in `all()` order) satisfying every `(from, to)`
    /// pair and `extra`.
    pub fn find(pairs: &[(Gf2, Gf2)], extra: impl Fn(&Automorphism) -> bool) -> Option<Automorphism> {
        Automorphism::all()
            .into_iter()
            .find(|a| pairs.iter().all(|&(s, d)| a.apply(s) == d) && extra(a))
    }

    /// Like [`Automorphism::find`] without an extra condition.
    pub fn align(pairs: &[(Gf2, Gf2)]) -> Option<Automorphism> {
        Automorphism::find(pairs, |_| true)
    }

    /// The palette permutation of the seven nonzero values.
    pub fn as_permutation(&self) -> [u8; 7] {
        let mut p = [0u8; 7];
        for v in 1..8u8 {
            p[v as usize - 1] = self.apply(Gf2(v)).0;
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_from_standard_basis() {
        assert_eq!(Automorphism::extending([X, Y, Z], [X, Y, Z]).unwrap(), Automorphism::IDENTITY);
    }

    #[test]
    fn count_is_168() {
        // oracle: count invertible 3x3 matrices by determinant over all 512
        let mut invertible = 0;
        for bits in 0u16..512 {
            let m = |r: usize, c: usize| (bits >> (3 * r + c) & 1) as i32;
            let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
            if det.rem_euclid(2) == 1 {
                invertible += 1;
            }
        }
        assert_eq!(invertible, 168);
        let all = Automorphism::all();
        assert_eq!(all.len(), 168);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 168);
    }

    #[test]
    fn swap_is_involution() {
        let s = Automorphism::extending([X, Y, Z], [Y, X, Z]).unwrap();
        assert_eq!(s.compose(&s), Automorphism::IDENTITY);
    }

    #[test]
    fn dependent_rejected() {
        assert_eq!(Automorphism::extending([X, Y, X + Y], [X, Y, Z]), Err(Error::Dependent));
        assert_eq!(Automorphism::extending([X, Y, Z], [X, X, Z]), Err(Error::Dependent));
    }

    #[test]
    fn linear_and_invertible() {
        for a in Automorphism::all() {
            assert_eq!(a.compose(&a.inverse()), Automorphism::IDENTITY);
            for u in 0..8u8 {
                for v in 0..8u8 {
                    assert_eq!(a.apply(Gf2(u) + Gf2(v)), a.apply(Gf2(u)) + a.apply(Gf2(v)));
                }
            }
        }
    }

    #[test]
    fn extending_maps_sources() {
        let src = [X + Y, Z, X];
        let dst = [Y, X + Y + Z, Z];
        let a = Automorphism::extending(src, dst).unwrap();
        for i in 0..3 {
            assert_eq!(a.apply(src[i]), dst[i]);
        }
    }
}
