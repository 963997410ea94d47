use std::fmt;

use super::GroupError;

/// An element of the hyperoctahedral group `C_n`.
///
/// Basis vector `e_i` is sent to `(-1)^flips[i] * e_{images[i]}`. Indices
/// are zero-based throughout the crate, so the coordinate reflection the
/// literature calls `r_1` is `SignedPerm::flip(n, 0)`.
///
/// The derived ordering is lexicographic on `(images, flips)`; it is the
/// canonical element order used for deduplication and deterministic output.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<u8>,
    flips: Vec<bool>,
}

impl SignedPerm {
    pub fn new(images: Vec<u8>, flips: Vec<bool>) -> Result<Self, GroupError> {
        let n = images.len();
        if flips.len() != n || n > u8::MAX as usize {
            return Err(GroupError::InvalidElement(format!(
                "images/flips lengths {} and {}",
                n,
                flips.len()
            )));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidElement(format!(
                    "images {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(SignedPerm { images, flips })
    }

    /// Constructs an element of `D_n`, rejecting an odd number of flips.
    pub fn new_even(images: Vec<u8>, flips: Vec<bool>) -> Result<Self, GroupError> {
        let w = Self::new(images, flips)?;
        if !w.has_even_flips() {
            return Err(GroupError::Parity);
        }
        Ok(w)
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            images: (0..n as u8).collect(),
            flips: vec![false; n],
        }
    }

    /// `-1`: every coordinate inverted.
    pub fn neg_identity(n: usize) -> Self {
        SignedPerm {
            images: (0..n as u8).collect(),
            flips: vec![true; n],
        }
    }

    /// Reflection with root `e_i`: inverts coordinate `i`.
    pub fn flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.flips[i] = true;
        w
    }

    /// Reflection with root `e_i - e_j`: swaps coordinates `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        let mut w = Self::identity(n);
        w.images.swap(i, j);
        w
    }

    /// Reflection with root `e_i + e_j`: swaps and inverts `i` and `j`.
    pub fn neg_transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::transposition(n, i, j);
        w.flips[i] = true;
        w.flips[j] = true;
        w
    }

    /// Plain permutation (no flips) from its image vector.
    pub fn from_perm(images: Vec<u8>) -> Result<Self, GroupError> {
        let n = images.len();
        Self::new(images, vec![false; n])
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn flip_count(&self) -> usize {
        self.flips.iter().filter(|&&f| f).count()
    }

    /// Membership in `D_n`.
    pub fn has_even_flips(&self) -> bool {
        self.flip_count().is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
            && self.flips.iter().all(|&f| !f)
    }

    /// `self` then `other`, panicking on a rank mismatch.
    ///
    /// This is the crate's single composition convention: the left factor
    /// acts first, so `a.then(b)` sends `e_i` to `b(a(e_i))`.
    pub fn then(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in composition");
        let (images, flips) = self
            .images
            .iter()
            .zip(&self.flips)
            .map(|(&j, &f)| (other.images[j as usize], f ^ other.flips[j as usize]))
            .unzip();
        SignedPerm { images, flips }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut images = vec![0u8; n];
        let mut flips = vec![false; n];
        for (i, (&j, &f)) in self.images.iter().zip(&self.flips).enumerate() {
            images[j as usize] = i as u8;
            flips[j as usize] = f;
        }
        SignedPerm { images, flips }
    }

    /// Cycles of the underlying permutation, each with the product of the
    /// flips along it (`true` meaning sign `-1`). Cycles are listed by
    /// smallest member.
    pub fn cycles(&self) -> Vec<(usize, bool)> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut neg, mut i) = (0, false, start);
            while !seen[i] {
                seen[i] = true;
                neg ^= self.flips[i];
                len += 1;
                i = self.images[i] as usize;
            }
            out.push((len, neg));
        }
        out
    }
}

/// Checked composition: `a` then `b`.
pub fn compose(a: &SignedPerm, b: &SignedPerm) -> Result<SignedPerm, GroupError> {
    if a.rank() != b.rank() {
        return Err(GroupError::RankMismatch(a.rank(), b.rank()));
    }
    Ok(a.then(b))
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (&j, &fl)) in self.images.iter().zip(&self.flips).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", if fl { "-" } else { "" }, j)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let w = SignedPerm::new(vec![2, 0, 1], vec![true, false, true]).unwrap();
        let e = SignedPerm::identity(3);
        assert_eq!(compose(&e, &w).unwrap(), w);
        assert_eq!(compose(&w, &e).unwrap(), w);
    }

    #[test]
    fn coordinate_flip_is_an_involution() {
        let r1 = SignedPerm::flip(3, 0);
        assert!(compose(&r1, &r1).unwrap().is_identity());
    }

    #[test]
    fn flip_and_transposition_do_not_commute() {
        let r1 = SignedPerm::flip(2, 0);
        let t = SignedPerm::transposition(2, 0, 1);
        let a = compose(&t, &r1).unwrap();
        let b = compose(&r1, &t).unwrap();
        assert_ne!(a, b);
        // As 2x2 signed matrices: t then r1 sends e_0 -> e_1 -> e_1 and
        // e_1 -> e_0 -> -e_0; r1 then t sends e_0 -> -e_1, e_1 -> e_0.
        assert_eq!(a, SignedPerm::new(vec![1, 0], vec![false, true]).unwrap());
        assert_eq!(b, SignedPerm::new(vec![1, 0], vec![true, false]).unwrap());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(matches!(
            compose(&SignedPerm::identity(2), &SignedPerm::identity(3)),
            Err(GroupError::RankMismatch(2, 3))
        ));
    }

    #[test]
    fn rejects_non_bijections_and_odd_parity() {
        assert!(SignedPerm::new(vec![0, 0], vec![false, false]).is_err());
        assert!(SignedPerm::new(vec![0, 2], vec![false, false]).is_err());
        assert!(matches!(
            SignedPerm::new_even(vec![0, 1], vec![true, false]),
            Err(GroupError::Parity)
        ));
        assert!(SignedPerm::new_even(vec![1, 0], vec![true, true]).is_ok());
    }

    #[test]
    fn inverse_undoes() {
        let w = SignedPerm::new(vec![3, 0, 2, 1], vec![true, false, true, true]).unwrap();
        assert!(w.then(&w.inverse()).is_identity());
        assert!(w.inverse().then(&w).is_identity());
    }
}
