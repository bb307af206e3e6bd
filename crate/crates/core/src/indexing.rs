//! Index bookkeeping for a layout `ℓ = (ℓ₁,…,ℓ₆)`.
//!
//! Indices run over `0..=2ι₆`: `0` is the distinguished index, `1..=ι₆`
//! are the unbarred indices and `p̄ = p + ι₆` their partners. Vectors are
//! always stored in the interleaved order `(0, 1, 1̄, 2, 2̄, …)`, so the
//! coordinate position of an index is given by [`Layout::pos`].

use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::lattice::GammaVector;
use crate::rational::int;

/// One of the six blocks `I₁ … I₆`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
}

impl Block {
    pub const ALL: [Block; 6] = [Block::I1, Block::I2, Block::I3, Block::I4, Block::I5, Block::I6];

    /// 1-based block number.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// Kinds of `(∂_p, ∂_p̄)` for `p` in this block.
    pub fn pair_kind(self) -> (IndexKind, IndexKind) {
        use IndexKind::*;
        match self {
            Block::I1 => (Grading, Grading),
            Block::I2 => (Grading, Mixed),
            Block::I3 => (Mixed, Mixed),
            Block::I4 => (Grading, DownGrading),
            Block::I5 => (Mixed, DownGrading),
            Block::I6 => (DownGrading, DownGrading),
        }
    }
}

/// Which parts of `∂_p = ∂*_p + ∂_{t_p}` are nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    /// only `∂*_p`
    Grading,
    /// only `∂_{t_p}`
    DownGrading,
    /// both
    Mixed,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::Grading => "g",
            IndexKind::DownGrading => "d",
            IndexKind::Mixed => "m",
        })
    }
}

/// The monoid factor `𝒥₀`: either `{0}` or `ℕ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum J0 {
    Zero,
    Nat,
}

/// A validated layout with its prefix sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layout {
    ell: [usize; 6],
    iota: [usize; 6],
}

impl Layout {
    /// Builds the index scheme; fails with `E_EMPTY_LAYOUT` when all `ℓ_i = 0`.
    ///
    /// ```
    /// use contact_lie::indexing::{Block, Layout};
    /// let l = Layout::new([1, 1, 1, 1, 1, 1]).unwrap();
    /// assert_eq!(l.iota(), [1, 2, 3, 4, 5, 6]);
    /// assert_eq!(l.block(5), Some(Block::I5));
    /// ```
    pub fn new(ell: [usize; 6]) -> Result<Self> {
        if ell.iter().all(|&l| l == 0) {
            return Err(Error::EmptyLayout);
        }
        let mut iota = [0; 6];
        let mut acc = 0;
        for (i, &l) in ell.iter().enumerate() {
            acc += l;
            iota[i] = acc;
        }
        Ok(Layout { ell, iota })
    }

    pub fn ell(&self) -> [usize; 6] {
        self.ell
    }

    pub fn iota(&self) -> [usize; 6] {
        self.iota
    }

    /// `ι_k` for `k ∈ 0..=6`, with `ι₀ = 0`.
    pub fn iota_at(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.iota[k - 1]
        }
    }

    pub fn iota6(&self) -> usize {
        self.iota[5]
    }

    /// Length `1 + 2ι₆` of every coordinate vector.
    pub fn dim(&self) -> usize {
        1 + 2 * self.iota6()
    }

    /// Largest index `2ι₆`.
    pub fn max_index(&self) -> usize {
        2 * self.iota6()
    }

    pub fn check(&self, p: usize) -> Result<()> {
        if p > self.max_index() {
            Err(Error::IndexRange { index: p, max: self.max_index() })
        } else {
            Ok(())
        }
    }

    /// The bar involution; `bar(0) = 0`.
    pub fn bar(&self, p: usize) -> Result<usize> {
        self.check(p)?;
        Ok(self.bar_unchecked(p))
    }

    pub(crate) fn bar_unchecked(&self, p: usize) -> usize {
        let n = self.iota6();
        if p == 0 {
            0
        } else if p <= n {
            p + n
        } else {
            p - n
        }
    }

    pub fn is_barred(&self, p: usize) -> bool {
        p > self.iota6()
    }

    /// Coordinate position of index `p` in the interleaved order.
    pub fn pos(&self, p: usize) -> usize {
        let n = self.iota6();
        if p == 0 {
            0
        } else if p <= n {
            2 * p - 1
        } else {
            2 * (p - n)
        }
    }

    /// Inverse of [`Layout::pos`].
    pub fn index_at(&self, pos: usize) -> usize {
        if pos == 0 {
            0
        } else if pos % 2 == 1 {
            pos.div_ceil(2)
        } else {
            pos / 2 + self.iota6()
        }
    }

    /// `I_k` as an index range (empty when `ℓ_k = 0`).
    pub fn set(&self, k: usize) -> RangeInclusive<usize> {
        self.iota_at(k - 1) + 1..=self.iota_at(k)
    }

    /// `I_{i,j}`.
    pub fn range(&self, i: usize, j: usize) -> RangeInclusive<usize> {
        self.iota_at(i - 1) + 1..=self.iota_at(j)
    }

    /// Unbarred indices `I = 1..=ι₆`.
    pub fn unbarred(&self) -> RangeInclusive<usize> {
        1..=self.iota6()
    }

    /// Block of `p ∈ J`, or `None` for `p = 0`.
    pub fn block(&self, p: usize) -> Option<Block> {
        if p == 0 || p > self.max_index() {
            return None;
        }
        let q = if self.is_barred(p) { p - self.iota6() } else { p };
        Block::ALL.into_iter().find(|b| q <= self.iota[b.number() - 1])
    }

    /// Kind of the single derivation `∂_p`.
    pub fn kind(&self, p: usize) -> IndexKind {
        match self.block(p) {
            None => IndexKind::Mixed,
            Some(b) => {
                let (k, kb) = b.pair_kind();
                if self.is_barred(p) {
                    kb
                } else {
                    k
                }
            }
        }
    }

    /// Whether `∂*_p` can be nonzero, i.e. `p ∉ I₆ ∪ Ī_{4,6}`.
    pub fn star_active(&self, p: usize) -> bool {
        self.kind(p) != IndexKind::DownGrading
    }

    /// Whether `t_p` may carry a nonzero exponent.
    pub fn t_allowed(&self, p: usize, j0: J0) -> bool {
        if p == 0 {
            j0 == J0::Nat
        } else {
            self.kind(p) != IndexKind::Grading
        }
    }

    /// Whether `α_p` enters the weight `ϑ`, i.e. `p ∈ J_{1,3} ∪ I_{4,5}`.
    pub fn weight_alpha(&self, p: usize) -> bool {
        p != 0 && self.kind(p) != IndexKind::DownGrading
    }

    /// Whether `i_p` enters the weight `ϑ`, i.e. `p ∈ I₆ ∪ Ī_{4,6}`.
    pub fn weight_exp(&self, p: usize) -> bool {
        p != 0 && self.kind(p) == IndexKind::DownGrading
    }

    /// The shift vector `σ_p`; `sigma0` selects `σ₀ = 1_[0]`.
    ///
    /// ```
    /// use contact_lie::indexing::Layout;
    /// use contact_lie::rational::int;
    /// let l = Layout::new([1, 0, 0, 0, 0, 0]).unwrap();
    /// let s = l.sigma(1, false).unwrap();
    /// assert_eq!(s.coords(), &[int(0), int(-1), int(-1)]);
    /// ```
    pub fn sigma(&self, p: usize, sigma0: bool) -> Result<GammaVector> {
        self.check(p)?;
        let mut v = GammaVector::zero(self.dim());
        let q = if self.is_barred(p) { self.bar_unchecked(p) } else { p };
        match self.block(q) {
            None => {
                if sigma0 {
                    v.set(0, int(1));
                }
            }
            Some(Block::I1 | Block::I2 | Block::I3) => {
                v.set(self.pos(q), int(-1));
                v.set(self.pos(self.bar_unchecked(q)), int(-1));
            }
            Some(Block::I4 | Block::I5) => v.set(self.pos(q), int(-1)),
            Some(Block::I6) => {}
        }
        Ok(v)
    }

    /// Human-readable index name: `0`, `3` or `3̄` (written `3'`).
    pub fn name(&self, p: usize) -> String {
        if self.is_barred(p) {
            format!("{}'", p - self.iota6())
        } else {
            p.to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_sums_and_blocks() {
        let l = Layout::new([1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(l.iota(), [1; 6]);
        assert_eq!(l.set(1), 1..=1);
        assert!(l.set(2).is_empty());
        assert_eq!(l.max_index(), 2);
        let l = Layout::new([0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(l.block(1), Some(Block::I6));
        assert_eq!(l.block(2), Some(Block::I6));
        let l = Layout::new([1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(l.set(3), 3..=3);
        assert_eq!(l.set(5), 5..=5);
        assert_eq!(Layout::new([0; 6]), Err(Error::EmptyLayout));
    }

    #[test]
    fn bar_is_an_involution() {
        let l = Layout::new([1, 0, 2, 0, 0, 0]).unwrap();
        assert_eq!(l.bar(1).unwrap(), 4);
        assert_eq!(l.bar(5).unwrap(), 2);
        assert_eq!(l.bar(0).unwrap(), 0);
        for p in 0..=l.max_index() {
            assert_eq!(l.bar(l.bar(p).unwrap()).unwrap(), p);
            assert_eq!(l.index_at(l.pos(p)), p);
        }
        assert!(matches!(l.bar(7), Err(Error::IndexRange { .. })));
    }

    #[test]
    fn kinds_follow_pair_types() {
        let l = Layout::new([1, 1, 1, 1, 1, 1]).unwrap();
        let kinds: Vec<String> = (1..=6).map(|p| format!("{}{}", l.kind(p), l.kind(l.bar(p).unwrap()))).collect();
        assert_eq!(kinds, ["gg", "gm", "mm", "gd", "md", "dd"]);
    }

    #[test]
    fn sigma_vectors() {
        let l = Layout::new([0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(l.sigma(1, false).unwrap().coords(), &[int(0), int(-1), int(0)]);
        let l = Layout::new([0, 0, 0, 0, 0, 1]).unwrap();
        assert!(l.sigma(1, false).unwrap().is_zero());
        assert_eq!(l.sigma(0, true).unwrap().coords()[0], int(1));
        let l = Layout::new([2, 0, 1, 0, 0, 0]).unwrap();
        for p in 0..=l.max_index() {
            assert_eq!(l.sigma(p, false).unwrap(), l.sigma(l.bar(p).unwrap(), false).unwrap());
        }
    }
}
