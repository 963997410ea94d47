//! Concrete element arithmetic and Coxeter presentations.
//!
//! Composition convention, used everywhere in the crate: the left factor
//! acts first. `a.then(b)` is "apply `a`, then `b`", which is the product
//! `ab` for groups acting on the right. Homomorphisms, words and relations
//! are all read with this convention.

mod concrete;
mod dihedral;
pub mod golden;
mod id;
mod lattice;
mod presentation;
mod signed;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use concrete::{ConcreteGroup, ElemIdx};
pub use dihedral::DihedralElt;
pub use golden::{GoldenInt, GoldenMatrix};
pub use id::{Family, GroupId, GROUP_SPEC_GRAMMAR};
pub use lattice::HalfMatrix;
pub use presentation::CoxeterPresentation;
pub use signed::{compose, SignedPerm};

pub(crate) use id::{factorial, pow2};

/// Default cap on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_BUDGET: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group id {family:?} with parameter {param:?}")]
    InvalidId { family: Family, param: Option<u32> },
    #[error("cannot parse group spec {0:?}; expected {GROUP_SPEC_GRAMMAR}")]
    Parse(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("element has an odd number of coordinate inversions")]
    Parity,
    #[error("invalid Coxeter presentation: {0}")]
    InvalidPresentation(String),
    #[error("{0} has no concrete representation")]
    NoConcreteRepresentation(GroupId),
    #[error("group order exceeds the element budget of {0}")]
    BudgetExceeded(usize),
}

/// Operations the closure and the oracle need from an element type.
pub trait GroupElement: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    /// `self` then `other`.
    fn then(&self, other: &Self) -> Self;
    fn is_identity(&self) -> bool;
    /// Identity of the group `self` belongs to.
    fn identity_like(&self) -> Self;
}

impl GroupElement for SignedPerm {
    fn then(&self, other: &Self) -> Self {
        SignedPerm::then(self, other)
    }
    fn is_identity(&self) -> bool {
        SignedPerm::is_identity(self)
    }
    fn identity_like(&self) -> Self {
        SignedPerm::identity(self.rank())
    }
}

impl GroupElement for DihedralElt {
    fn then(&self, other: &Self) -> Self {
        DihedralElt::then(self, other)
    }
    fn is_identity(&self) -> bool {
        DihedralElt::is_identity(self)
    }
    fn identity_like(&self) -> Self {
        DihedralElt::identity(self.m())
    }
}

impl GroupElement for HalfMatrix {
    fn then(&self, other: &Self) -> Self {
        HalfMatrix::then(self, other)
    }
    fn is_identity(&self) -> bool {
        HalfMatrix::is_identity(self)
    }
    fn identity_like(&self) -> Self {
        HalfMatrix::identity()
    }
}

impl GroupElement for GoldenMatrix {
    fn then(&self, other: &Self) -> Self {
        GoldenMatrix::then(self, other)
    }
    fn is_identity(&self) -> bool {
        GoldenMatrix::is_identity(self)
    }
    fn identity_like(&self) -> Self {
        GoldenMatrix::identity()
    }
}

/// An element of any group with a concrete representation.
///
/// Elements of different variants never meet in one group; composing
/// across variants is a logic error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Signed(SignedPerm),
    Dihedral(DihedralElt),
    Golden(GoldenMatrix),
    Half(HalfMatrix),
}

impl GroupElement for Element {
    fn then(&self, other: &Self) -> Self {
        match (self, other) {
            (Element::Signed(a), Element::Signed(b)) => Element::Signed(a.then(b)),
            (Element::Dihedral(a), Element::Dihedral(b)) => Element::Dihedral(a.then(b)),
            (Element::Golden(a), Element::Golden(b)) => Element::Golden(a.then(b)),
            (Element::Half(a), Element::Half(b)) => Element::Half(a.then(b)),
            _ => panic!("composing elements of different groups"),
        }
    }
    fn is_identity(&self) -> bool {
        match self {
            Element::Signed(a) => a.is_identity(),
            Element::Dihedral(a) => a.is_identity(),
            Element::Golden(a) => a.is_identity(),
            Element::Half(a) => a.is_identity(),
        }
    }
    fn identity_like(&self) -> Self {
        match self {
            Element::Signed(a) => Element::Signed(a.identity_like()),
            Element::Dihedral(a) => Element::Dihedral(a.identity_like()),
            Element::Golden(a) => Element::Golden(a.identity_like()),
            Element::Half(a) => Element::Half(a.identity_like()),
        }
    }
}

impl Element {
    pub fn as_signed(&self) -> Option<&SignedPerm> {
        match self {
            Element::Signed(w) => Some(w),
            _ => None,
        }
    }
}

/// Simple reflections of `id`, in the order of
/// [`CoxeterPresentation::for_group`].
///
/// * `A_n`: adjacent transpositions of `n + 1` letters.
/// * `C_n`: `r_1, r_{+1,1,2}, ..., r_{+1,n-1,n}` (coordinate flip first).
/// * `D_n`: `r_{-1,1,2}, r_{+1,1,2}, ..., r_{+1,n-1,n}`.
/// * `I_2(m)`: `s` and `rs`.
/// * `H_3`: three reflections over `Z[phi]`.
/// * `F_4`: four reflections over `Z/2`.
///
/// These are the textbook simple systems; any conjugate choice would give
/// identical counts.
pub fn coxeter_generators(id: GroupId) -> Result<Vec<Element>, GroupError> {
    let sp = Element::Signed;
    Ok(match id.family() {
        Family::A => {
            let k = id.n() as usize + 1;
            (0..k - 1).map(|i| sp(SignedPerm::transposition(k, i, i + 1))).collect()
        }
        Family::C => {
            let n = id.n() as usize;
            std::iter::once(sp(SignedPerm::flip(n, 0)))
                .chain((0..n - 1).map(|i| sp(SignedPerm::transposition(n, i, i + 1))))
                .collect()
        }
        Family::D => {
            let n = id.n() as usize;
            std::iter::once(sp(SignedPerm::neg_transposition(n, 0, 1)))
                .chain((0..n - 1).map(|i| sp(SignedPerm::transposition(n, i, i + 1))))
                .collect()
        }
        Family::I2 => {
            let m = id.n();
            let s = DihedralElt::s(m);
            let rs = DihedralElt::r(m).then(&s);
            vec![Element::Dihedral(s), Element::Dihedral(rs)]
        }
        Family::H3 => golden::h3_generators().into_iter().map(Element::Golden).collect(),
        Family::F4 => lattice::f4_generators().into_iter().map(Element::Half).collect(),
        _ => return Err(GroupError::NoConcreteRepresentation(id)),
    })
}

/// The concrete group of `id`, closed from its simple reflections.
pub fn concrete_group(id: GroupId, budget: usize) -> Result<ConcreteGroup<Element>, GroupError> {
    let gens = coxeter_generators(id)?;
    if id.order() > budget.into() {
        return Err(GroupError::BudgetExceeded(budget));
    }
    ConcreteGroup::generate(gens, budget)
}

/// All elements of `id` in canonical order.
pub fn enumerate_elements(id: GroupId, budget: usize) -> Result<Vec<Element>, GroupError> {
    Ok(concrete_group(id, budget)?.into_elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn elt_order(x: &Element) -> u32 {
        let mut p = x.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(x);
            k += 1;
        }
        k
    }

    fn ids() -> Vec<GroupId> {
        let mut v = vec![];
        for n in 1..=5 {
            v.push(GroupId::a(n).unwrap());
        }
        for n in 2..=5 {
            v.push(GroupId::c(n).unwrap());
        }
        for n in 4..=5 {
            v.push(GroupId::d(n).unwrap());
        }
        for m in 2..=12 {
            v.push(GroupId::i2(m).unwrap());
        }
        v.push(GroupId::exceptional(Family::H3).unwrap());
        v.push(GroupId::exceptional(Family::F4).unwrap());
        v
    }

    #[test]
    fn generators_satisfy_their_presentation_exactly() {
        for id in ids() {
            let gens = coxeter_generators(id).unwrap();
            let pres = CoxeterPresentation::for_group(id);
            assert_eq!(gens.len(), pres.generator_count(), "{id}");
            for i in 0..gens.len() {
                for j in 0..gens.len() {
                    let o = elt_order(&gens[i].then(&gens[j]));
                    assert_eq!(o, pres.order(i, j), "{id} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn closure_size_equals_order() {
        for id in ids() {
            let g = concrete_group(id, DEFAULT_ELEMENT_BUDGET).unwrap();
            assert_eq!(g.order(), id.order().to_usize().unwrap(), "{id}");
        }
    }

    #[test]
    fn named_examples() {
        assert_eq!(enumerate_elements(GroupId::i2(4).unwrap(), 1000).unwrap().len(), 8);
        assert_eq!(enumerate_elements(GroupId::c(3).unwrap(), 1000).unwrap().len(), 48);
        assert_eq!(enumerate_elements(GroupId::d(4).unwrap(), 1000).unwrap().len(), 192);
        let a2 = coxeter_generators(GroupId::a(2).unwrap()).unwrap();
        assert_eq!(a2[0], Element::Signed(SignedPerm::from_perm(vec![1, 0, 2]).unwrap()));
        assert_eq!(a2[1], Element::Signed(SignedPerm::from_perm(vec![0, 2, 1]).unwrap()));
        let c2 = coxeter_generators(GroupId::c(2).unwrap()).unwrap();
        assert_eq!(elt_order(&c2[0].then(&c2[1])), 4);
    }

    #[test]
    fn d_elements_have_even_flips() {
        for e in enumerate_elements(GroupId::d(5).unwrap(), 10_000).unwrap() {
            assert!(e.as_signed().unwrap().has_even_flips());
        }
    }

    #[test]
    fn budget_and_unsupported_families() {
        assert!(matches!(
            enumerate_elements(GroupId::c(6).unwrap(), 1000),
            Err(GroupError::BudgetExceeded(1000))
        ));
        assert!(matches!(
            coxeter_generators(GroupId::exceptional(Family::H4).unwrap()),
            Err(GroupError::NoConcreteRepresentation(_))
        ));
    }

    #[test]
    fn every_element_has_an_inverse_in_the_set() {
        for id in [GroupId::c(3).unwrap(), GroupId::i2(6).unwrap(), GroupId::exceptional(Family::H3).unwrap()] {
            let g = concrete_group(id, 1000).unwrap();
            for a in 0..g.order() as ElemIdx {
                let inv = g.inverse(a);
                assert_eq!(g.mul(a, inv), g.identity());
                assert_eq!(g.mul(inv, a), g.identity());
            }
        }
    }
}
