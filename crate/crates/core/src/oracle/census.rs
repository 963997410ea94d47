use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::kernel::{image_set, is_injective};
use super::{enumerate_homs, Budget, OracleError, SourceGroup, Target};
use crate::groups::{CoxeterPresentation, Element, GroupId, SignedPerm};

/// Isomorphism type of the subgroups being counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusPattern {
    C2,
    Klein4,
    /// `Sym(k)`, `k >= 2`.
    Sym(u32),
    /// `Z_2 x Sym(k)`, `k >= 2`.
    C2xSym(u32),
    /// `I_2(p)`, dihedral of order `2p`.
    Dihedral(u32),
}

impl fmt::Display for CensusPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusPattern::C2 => write!(f, "Z_2"),
            CensusPattern::Klein4 => write!(f, "Z_2^2"),
            CensusPattern::Sym(k) => write!(f, "Sym({k})"),
            CensusPattern::C2xSym(k) => write!(f, "Z_2 x Sym({k})"),
            CensusPattern::Dihedral(p) => write!(f, "I_2({p})"),
        }
    }
}

/// A Coxeter model of the pattern group.
fn pattern_source(pattern: CensusPattern, budget: &Budget) -> Result<SourceGroup, OracleError> {
    match pattern {
        CensusPattern::Sym(k) => SourceGroup::for_group(GroupId::a(k - 1)?, budget),
        CensusPattern::Dihedral(p) => SourceGroup::for_group(GroupId::i2(p)?, budget),
        CensusPattern::C2xSym(k) => {
            let k = k as usize;
            let pres = CoxeterPresentation::chain(&[]).disjoint_union(&CoxeterPresentation::for_group(GroupId::a(k as u32 - 1)?));
            let gens = std::iter::once(SignedPerm::neg_identity(k))
                .chain((0..k - 1).map(|i| SignedPerm::transposition(k, i, i + 1)))
                .map(Element::Signed)
                .collect();
            SourceGroup::from_parts(pres, gens, budget)
        }
        CensusPattern::C2 | CensusPattern::Klein4 => unreachable!("counted directly"),
    }
}

/// Number of subgroups of `target` isomorphic to `pattern`.
pub fn subgroup_census(target: &Target, pattern: CensusPattern, budget: &Budget) -> Result<BigUint, OracleError> {
    let inv: Vec<u32> = target.candidates().iter().copied().filter(|&x| x != target.group().identity()).collect();
    match pattern {
        CensusPattern::C2 => Ok(BigUint::from(inv.len())),
        CensusPattern::Klein4 => {
            let g = target.group();
            let pairs: usize = inv
                .par_iter()
                .map(|&a| inv.iter().filter(|&&b| a != b && g.mul(a, b) == g.mul(b, a)).count())
                .sum();
            // Each Klein subgroup has 3 * 2 ordered pairs of distinct generators.
            assert_eq!(pairs % 6, 0);
            Ok(BigUint::from(pairs / 6))
        }
        _ => {
            let source = pattern_source(pattern, budget)?;
            let homs = enumerate_homs(&source.presentation, target, budget)?;
            let images: HashSet<Vec<u32>> = homs
                .par_iter()
                .filter(|h| is_injective(h, &source, target))
                .map(|h| image_set(h, &source, target))
                .collect();
            Ok(BigUint::from(images.len()))
        }
    }
}
