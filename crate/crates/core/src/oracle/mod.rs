//! Brute-force ground truth.
//!
//! Homomorphisms out of a Coxeter group are tuples of generator images
//! satisfying the defining relations. Each generator is an involution, so
//! its image is the identity or an involution of the target; the search
//! assigns images generator by generator and checks every relation
//! `(x_i x_j)^{m_ij} = 1` as soon as both sides are assigned.

mod census;
mod kernel;
mod verify;

pub use census::{subgroup_census, CensusPattern};
pub use kernel::{evaluate_all, kernel_classify, KernelClass, SourceGroup};
pub use verify::{verify, verify_suite, Check, SuiteReport, VerifyOptions, VerifyReport, SMALL_SUITE};

use rayon::prelude::*;
use thiserror::Error;

use crate::groups::{concrete_group, ConcreteGroup, CoxeterPresentation, Element, ElemIdx, GroupError, GroupId};

/// Largest group the oracle closes or evaluates over.
pub const DEFAULT_MAX_ORDER: usize = 40_000;

/// Largest raw search space `prod_i |candidates_i|` the oracle attempts.
/// Admits `End(D_5)` (156^5) and refuses `End(C_5)` (312^5).
pub const DEFAULT_SEARCH_BUDGET: u128 = 100_000_000_000;

/// Environment variable overriding [`DEFAULT_SEARCH_BUDGET`].
pub const BUDGET_ENV: &str = "REFLECT_ENDO_BUDGET";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} has order {order}, above the oracle limit of {limit}")]
    OrderTooLarge { what: String, order: String, limit: usize },
    #[error("raw search space {space} for {what} exceeds the budget {budget}; raise it with --budget or {BUDGET_ENV}")]
    SearchTooLarge { what: String, space: u128, budget: u128 },
    #[error("{0} is a stretch target; enable stretch targets to verify it")]
    StretchTarget(GroupId),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Limits for one oracle run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_order: usize,
    pub search: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_order: DEFAULT_MAX_ORDER, search: DEFAULT_SEARCH_BUDGET }
    }
}

impl Budget {
    /// Default limits with the search budget taken from [`BUDGET_ENV`]
    /// when it holds a valid integer.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(v) = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            b.search = v;
        }
        b
    }

    pub fn with_search(self, search: u128) -> Self {
        Budget { search, ..self }
    }

    fn check_order(&self, what: &str, order: usize) -> Result<(), OracleError> {
        if order > self.max_order {
            return Err(OracleError::OrderTooLarge {
                what: what.to_string(),
                order: order.to_string(),
                limit: self.max_order,
            });
        }
        Ok(())
    }
}

/// A closed group as a homomorphism target: candidate generator images
/// with their pairwise product orders and right-multiplication tables.
pub struct Target {
    id: Option<GroupId>,
    group: ConcreteGroup<Element>,
    candidates: Vec<ElemIdx>,
    cand_pos: Vec<Option<u32>>,
    pair_order: Vec<u32>,
    right_mul: Vec<ElemIdx>,
}

impl Target {
    pub fn new(id: GroupId, budget: &Budget) -> Result<Self, OracleError> {
        let order = id.order();
        if order > budget.max_order.into() {
            return Err(OracleError::OrderTooLarge {
                what: id.to_string(),
                order: order.to_string(),
                limit: budget.max_order,
            });
        }
        let mut t = Target::from_group(concrete_group(id, budget.max_order)?);
        t.id = Some(id);
        Ok(t)
    }

    pub fn from_group(group: ConcreteGroup<Element>) -> Self {
        let mut candidates = vec![group.identity()];
        candidates.extend(group.involutions());
        candidates.sort_unstable();
        let c = candidates.len();
        let mut cand_pos = vec![None; group.order()];
        for (k, &x) in candidates.iter().enumerate() {
            cand_pos[x as usize] = Some(k as u32);
        }
        let right_mul: Vec<ElemIdx> = (0..group.order() as ElemIdx)
            .into_par_iter()
            .flat_map_iter(|x| candidates.iter().map(move |&y| (x, y)).collect::<Vec<_>>())
            .map(|(x, y)| group.mul(x, y))
            .collect();
        let mut pair_order = vec![0; c * c];
        for a in 0..c {
            for b in 0..c {
                let p = right_mul[candidates[a] as usize * c + b];
                pair_order[a * c + b] = group.element_order(p);
            }
        }
        Target { id: None, group, candidates, cand_pos, pair_order, right_mul }
    }

    pub fn id(&self) -> Option<GroupId> {
        self.id
    }

    pub fn group(&self) -> &ConcreteGroup<Element> {
        &self.group
    }

    /// Identity and involutions, in canonical order.
    pub fn candidates(&self) -> &[ElemIdx] {
        &self.candidates
    }

    pub fn involution_count(&self) -> usize {
        self.candidates.len() - 1
    }

    /// `x` then candidate number `k`.
    #[inline]
    pub(crate) fn mul_candidate(&self, x: ElemIdx, k: u32) -> ElemIdx {
        self.right_mul[x as usize * self.candidates.len() + k as usize]
    }

    #[inline]
    fn pair_order(&self, a: u32, b: u32) -> u32 {
        self.pair_order[a as usize * self.candidates.len() + b as usize]
    }

    pub(crate) fn candidate_index(&self, x: ElemIdx) -> Option<u32> {
        self.cand_pos[x as usize]
    }

    /// Raw search space for a source with `gens` generators.
    pub fn search_space(&self, gens: usize) -> u128 {
        let c = self.candidates.len() as u128;
        (0..gens).fold(1u128, |acc, _| acc.saturating_mul(c))
    }
}

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenImages {
    /// Target element index of each generator's image.
    pub images: Vec<ElemIdx>,
}

/// Every homomorphism from the Coxeter group of `source` to `target`, in
/// lexicographic order of the image tuples (canonical element order).
pub fn enumerate_homs(
    source: &CoxeterPresentation,
    target: &Target,
    budget: &Budget,
) -> Result<Vec<GenImages>, OracleError> {
    let g = source.generator_count();
    let space = target.search_space(g);
    if space > budget.search {
        let what = match target.id() {
            Some(id) => format!("homomorphisms into {id}"),
            None => "homomorphisms".to_string(),
        };
        return Err(OracleError::SearchTooLarge { what, space, budget: budget.search });
    }
    Ok(search(source, target).into_iter().map(|t| GenImages { images: t }).collect())
}

/// Candidate-index tuples of all homomorphisms.
fn search(source: &CoxeterPresentation, target: &Target) -> Vec<Vec<ElemIdx>> {
    let g = source.generator_count();
    if g == 0 {
        return vec![Vec::new()];
    }
    let c = target.candidates.len() as u32;
    // Only pairs with a relation worth checking: m_ij is finite for all
    // i != j, so every earlier generator constrains the current one.
    let m: Vec<Vec<u32>> = source.matrix().to_vec();
    let mut per_first: Vec<Vec<Vec<u32>>> = (0..c)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut stack = vec![first];
            dfs(&m, target, &mut stack, &mut out);
            out
        })
        .collect();
    per_first
        .iter_mut()
        .flat_map(std::mem::take)
        .map(|t| t.into_iter().map(|k| target.candidates[k as usize]).collect())
        .collect()
}

fn dfs(m: &[Vec<u32>], target: &Target, stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let k = stack.len();
    if k == m.len() {
        out.push(stack.clone());
        return;
    }
    let c = target.candidates.len() as u32;
    for x in 0..c {
        let ok = stack
            .iter()
            .enumerate()
            .all(|(j, &y)| m[j][k].is_multiple_of(target.pair_order(y, x)));
        if ok {
            stack.push(x);
            dfs(m, target, stack, out);
            stack.pop();
        }
    }
}
