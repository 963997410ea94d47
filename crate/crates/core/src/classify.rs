//! Signed cycle-types, involution-types, signs and conjugacy in `C_n`/`D_n`.

use std::fmt;

use thiserror::Error;

use crate::groups::{concrete_group, Element, GroupId, SignedPerm, DEFAULT_ELEMENT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("element has an odd number of coordinate inversions and is not in D_n")]
    Parity,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("D_{0} split class: ambient group too large for a brute-force conjugacy search")]
    SplitClassUndecided(usize),
}

/// Multiset of signed cycle lengths, kept sorted (negative before
/// positive, then by length).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType(Vec<(i8, usize)>);

impl SignedCycleType {
    /// `(length, sign)` pairs with sign `+1` or `-1`.
    pub fn cycles(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.0.iter().map(|&(s, l)| (l, s))
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|&(_, l)| l).sum()
    }

    /// True when every cycle is positive with even length: the case in
    /// which a `C_n` class meets `D_n` in two `D_n` classes.
    pub fn splits_in_d(&self) -> bool {
        self.0.iter().all(|&(s, l)| s > 0 && l % 2 == 0)
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(s, l)| format!("{}{}", if s < 0 { '-' } else { '+' }, l))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `(t, u)`: `t` cycles of signed type `-1` and `u` of type `+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvolutionType {
    pub t: usize,
    pub u: usize,
    pub n: usize,
}

/// `(det of the flip part, det of the permutation part)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignPair {
    pub det_flips: i8,
    pub det_perm: i8,
}

impl SignPair {
    pub fn product(self, other: SignPair) -> SignPair {
        SignPair {
            det_flips: self.det_flips * other.det_flips,
            det_perm: self.det_perm * other.det_perm,
        }
    }
}

pub fn signed_cycle_type(w: &SignedPerm) -> SignedCycleType {
    let mut v: Vec<(i8, usize)> = w
        .cycles()
        .into_iter()
        .map(|(len, neg)| (if neg { -1 } else { 1 }, len))
        .collect();
    v.sort_unstable();
    SignedCycleType(v)
}

/// Involution-type of `w`, or `None` when `w^2 != 1`.
pub fn involution_type(w: &SignedPerm) -> Option<InvolutionType> {
    let (mut t, mut u) = (0, 0);
    for (len, neg) in w.cycles() {
        match (len, neg) {
            (1, true) => t += 1,
            (1, false) => {}
            (2, false) => u += 1,
            _ => return None,
        }
    }
    Some(InvolutionType { t, u, n: w.rank() })
}

pub fn sign_pair(w: &SignedPerm) -> SignPair {
    let det_flips = if w.flip_count().is_multiple_of(2) { 1 } else { -1 };
    // A permutation is odd iff it has an odd number of even-length cycles.
    let even_cycles = w.cycles().iter().filter(|(l, _)| l % 2 == 0).count();
    let det_perm = if even_cycles % 2 == 0 { 1 } else { -1 };
    SignPair { det_flips, det_perm }
}

/// Membership in `(C_n)_1`: sign `(+1, ±1)`.
pub fn in_even_flip_subgroup(w: &SignedPerm) -> bool {
    sign_pair(w).det_flips == 1
}

/// Membership in `+C_n`: sign `(±1, +1)`.
pub fn in_even_perm_subgroup(w: &SignedPerm) -> bool {
    sign_pair(w).det_perm == 1
}

/// Membership in the rotation subgroup `C_n^+`: sign `±(+1, +1)`.
pub fn in_rotation_subgroup(w: &SignedPerm) -> bool {
    let s = sign_pair(w);
    s.det_flips * s.det_perm == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Cn,
    Dn,
}

/// Conjugacy in `C_n` or `D_n`.
///
/// `C_n` classes are exactly the signed cycle-types. In `D_n` the same
/// holds except for classes made only of positive even cycles, which are
/// decided by a brute-force search over `D_n` (refused above the element
/// budget).
pub fn is_conjugate(w1: &SignedPerm, w2: &SignedPerm, ambient: Ambient) -> Result<bool, ClassifyError> {
    if w1.rank() != w2.rank() {
        return Err(ClassifyError::RankMismatch(w1.rank(), w2.rank()));
    }
    if ambient == Ambient::Dn && !(w1.has_even_flips() && w2.has_even_flips()) {
        return Err(ClassifyError::Parity);
    }
    let t1 = signed_cycle_type(w1);
    if t1 != signed_cycle_type(w2) {
        return Ok(false);
    }
    if ambient == Ambient::Cn || !t1.splits_in_d() {
        return Ok(true);
    }
    let n = w1.rank();
    let d = GroupId::d(n as u32)
        .ok()
        .and_then(|id| concrete_group(id, DEFAULT_ELEMENT_BUDGET).ok())
        .ok_or(ClassifyError::SplitClassUndecided(n))?;
    Ok(d.elements().iter().any(|g| match g {
        Element::Signed(g) => g.inverse().then(w1).then(g) == *w2,
        _ => false,
    }))
}

/// `z_0 = r_1 ... r_n`, acting as `-1`.
pub fn central_generator(n: usize) -> SignedPerm {
    SignedPerm::neg_identity(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::enumerate_elements;
    use std::collections::{BTreeMap, HashSet};

    fn c_elements(n: u32) -> Vec<SignedPerm> {
        enumerate_elements(GroupId::c(n).unwrap(), 1_000_000)
            .unwrap()
            .into_iter()
            .map(|e| e.as_signed().unwrap().clone())
            .collect()
    }

    fn ty(s: &[(usize, i8)]) -> SignedCycleType {
        let mut v: Vec<(i8, usize)> = s.iter().map(|&(l, s)| (s, l)).collect();
        v.sort_unstable();
        SignedCycleType(v)
    }

    #[test]
    fn signed_cycle_type_examples() {
        assert_eq!(signed_cycle_type(&SignedPerm::flip(3, 0)), ty(&[(1, -1), (1, 1), (1, 1)]));
        assert_eq!(signed_cycle_type(&central_generator(4)), ty(&[(1, -1); 4]));
        let w = SignedPerm::flip(2, 0).then(&SignedPerm::transposition(2, 0, 1));
        assert_eq!(signed_cycle_type(&w), ty(&[(2, -1)]));
        assert_eq!(sign_pair(&w), SignPair { det_flips: -1, det_perm: -1 });
    }

    #[test]
    fn involution_type_examples() {
        let r = SignedPerm::neg_transposition(4, 1, 3);
        assert_eq!(involution_type(&r), Some(InvolutionType { t: 0, u: 1, n: 4 }));
        let z = central_generator(5);
        assert_eq!(involution_type(&z), Some(InvolutionType { t: 5, u: 0, n: 5 }));
        let three_cycle = SignedPerm::from_perm(vec![1, 2, 0]).unwrap();
        assert_eq!(involution_type(&three_cycle), None);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_pair(&SignedPerm::flip(3, 2)), SignPair { det_flips: -1, det_perm: 1 });
        assert_eq!(
            sign_pair(&SignedPerm::transposition(3, 0, 2)),
            SignPair { det_flips: 1, det_perm: -1 }
        );
        assert_eq!(
            sign_pair(&SignedPerm::neg_transposition(3, 0, 2)),
            SignPair { det_flips: 1, det_perm: -1 }
        );
        assert_eq!(sign_pair(&SignedPerm::identity(3)), SignPair { det_flips: 1, det_perm: 1 });
    }

    #[test]
    fn involution_sign_formula() {
        for w in c_elements(4) {
            if let Some(it) = involution_type(&w) {
                let s = sign_pair(&w);
                assert_eq!(s.det_flips, if it.t % 2 == 0 { 1 } else { -1 });
                assert_eq!(s.det_perm, if it.u % 2 == 0 { 1 } else { -1 });
                assert!(2 * it.t + it.u <= it.n || it.t + 2 * it.u <= it.n);
            }
        }
    }

    #[test]
    fn involution_type_present_iff_square_is_identity() {
        for n in 2..=6 {
            for w in c_elements(n) {
                assert_eq!(w.then(&w).is_identity(), involution_type(&w).is_some());
            }
        }
    }

    #[test]
    fn sign_pair_is_a_homomorphism() {
        let els = c_elements(3);
        for a in &els {
            for b in &els {
                assert_eq!(sign_pair(&a.then(b)), sign_pair(a).product(sign_pair(b)));
            }
        }
    }

    #[test]
    fn sign_subgroups_have_index_two() {
        let els = c_elements(4);
        for pred in [in_even_flip_subgroup, in_even_perm_subgroup, in_rotation_subgroup] {
            assert_eq!(els.iter().filter(|w| pred(w)).count() * 2, els.len());
        }
    }

    #[test]
    fn conjugacy_examples() {
        let r1 = SignedPerm::flip(3, 0);
        let r2 = SignedPerm::flip(3, 1);
        let t = SignedPerm::transposition(3, 0, 1);
        assert!(is_conjugate(&r1, &r2, Ambient::Cn).unwrap());
        assert!(!is_conjugate(&r1, &t, Ambient::Cn).unwrap());
        assert_eq!(is_conjugate(&r1, &r2, Ambient::Dn), Err(ClassifyError::Parity));
    }

    #[test]
    fn d4_class_of_two_positive_transposition_pairs_splits() {
        let w1 = SignedPerm::transposition(4, 0, 1).then(&SignedPerm::transposition(4, 2, 3));
        let w2 = SignedPerm::neg_transposition(4, 0, 1).then(&SignedPerm::transposition(4, 2, 3));
        assert_eq!(signed_cycle_type(&w1), signed_cycle_type(&w2));
        assert!(is_conjugate(&w1, &w2, Ambient::Cn).unwrap());
        assert!(!is_conjugate(&w1, &w2, Ambient::Dn).unwrap());

        // The whole C_4 class (12 elements) falls into two D_4 orbits of 6.
        let d4: Vec<SignedPerm> = enumerate_elements(GroupId::d(4).unwrap(), 1000)
            .unwrap()
            .into_iter()
            .map(|e| e.as_signed().unwrap().clone())
            .collect();
        let class: Vec<_> = d4.iter().filter(|w| signed_cycle_type(w) == signed_cycle_type(&w1)).collect();
        assert_eq!(class.len(), 12);
        let orbit = |x: &SignedPerm| -> HashSet<SignedPerm> {
            d4.iter().map(|g| g.inverse().then(x).then(g)).collect()
        };
        assert_eq!(orbit(&w1).len(), 6);
        assert_eq!(orbit(&w2).len(), 6);
        assert!(orbit(&w1).is_disjoint(&orbit(&w2)));
    }

    /// Exhaustive comparison with brute-force conjugacy orbits.
    #[test]
    fn conjugacy_agrees_with_orbits_for_small_ranks() {
        for n in 2..=4u32 {
            let c = c_elements(n);
            for (ambient, els) in [
                (Ambient::Cn, c.clone()),
                (Ambient::Dn, c.iter().filter(|w| w.has_even_flips()).cloned().collect::<Vec<_>>()),
            ] {
                if ambient == Ambient::Dn && n < 4 {
                    continue;
                }
                let mut class_of: BTreeMap<SignedPerm, usize> = BTreeMap::new();
                let mut next = 0;
                for x in &els {
                    if class_of.contains_key(x) {
                        continue;
                    }
                    for g in &els {
                        class_of.insert(g.inverse().then(x).then(g), next);
                    }
                    next += 1;
                }
                for a in &els {
                    for b in &els {
                        assert_eq!(
                            is_conjugate(a, b, ambient).unwrap(),
                            class_of[a] == class_of[b],
                            "{a:?} {b:?} in {ambient:?}{n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn central_generator_is_central() {
        let z = central_generator(2);
        assert_eq!(z.flips(), &[true, true]);
        assert_eq!(z.images(), &[0, 1]);
        let z = central_generator(3);
        for w in c_elements(3) {
            assert_eq!(z.then(&w), w.then(&z));
        }
    }
}
