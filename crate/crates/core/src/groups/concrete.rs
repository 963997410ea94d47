use std::collections::{HashMap, VecDeque};

use super::{GroupElement, GroupError};

/// Index of an element in a [`ConcreteGroup`]'s canonical ordering.
pub type ElemIdx = u32;

const NO_PARENT: ElemIdx = ElemIdx::MAX;

/// A finite group closed from generators, with every element indexed in
/// canonical (sorted) order and reachable by a breadth-first word.
///
/// Element `i` equals `parent(i)` followed by generator `last_gen(i)`, so a
/// homomorphism can be evaluated on all elements with one product each by
/// walking [`ConcreteGroup::bfs_order`].
#[derive(Debug, Clone)]
pub struct ConcreteGroup<E> {
    elements: Vec<E>,
    lookup: HashMap<E, ElemIdx>,
    identity: ElemIdx,
    generators: Vec<ElemIdx>,
    parent: Vec<ElemIdx>,
    last_gen: Vec<u16>,
    bfs: Vec<ElemIdx>,
    orders: Vec<u32>,
}

impl<E: GroupElement> ConcreteGroup<E> {
    /// Closes `gens` under composition. Fails once more than `budget`
    /// elements appear.
    pub fn generate(gens: Vec<E>, budget: usize) -> Result<Self, GroupError> {
        assert!(!gens.is_empty(), "need at least one generator");
        let id = gens[0].identity_like();
        let mut found: Vec<E> = vec![id.clone()];
        let mut seen: HashMap<E, usize> = HashMap::from([(id, 0)]);
        let mut parent = vec![usize::MAX];
        let mut last_gen = vec![0u16];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                let y = found[x].then(g);
                if seen.contains_key(&y) {
                    continue;
                }
                if found.len() >= budget {
                    return Err(GroupError::BudgetExceeded(budget));
                }
                seen.insert(y.clone(), found.len());
                queue.push_back(found.len());
                found.push(y);
                parent.push(x);
                last_gen.push(gi as u16);
            }
        }

        // Re-index canonically; BFS discovery order is kept in `bfs`.
        let mut sorted: Vec<usize> = (0..found.len()).collect();
        sorted.sort_by(|&a, &b| found[a].cmp(&found[b]));
        let mut rank = vec![0 as ElemIdx; found.len()];
        for (r, &old) in sorted.iter().enumerate() {
            rank[old] = r as ElemIdx;
        }
        let elements: Vec<E> = sorted.iter().map(|&old| found[old].clone()).collect();
        let mut new_parent = vec![NO_PARENT; found.len()];
        let mut new_last = vec![0u16; found.len()];
        for old in 0..found.len() {
            if parent[old] != usize::MAX {
                new_parent[rank[old] as usize] = rank[parent[old]];
                new_last[rank[old] as usize] = last_gen[old];
            }
        }
        let bfs = (0..found.len()).map(|old| rank[old]).collect();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as ElemIdx))
            .collect::<HashMap<_, _>>();
        let generators = gens.iter().map(|g| lookup[g]).collect();
        let identity = rank[0];

        let mut group = ConcreteGroup {
            elements,
            lookup,
            identity,
            generators,
            parent: new_parent,
            last_gen: new_last,
            bfs,
            orders: Vec::new(),
        };
        group.orders = (0..group.order() as ElemIdx).map(|i| group.compute_order(i)).collect();
        Ok(group)
    }

    fn compute_order(&self, i: ElemIdx) -> u32 {
        let x = &self.elements[i as usize];
        let mut p = x.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(x);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemIdx {
        self.identity
    }

    pub fn element(&self, i: ElemIdx) -> &E {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }

    pub fn index_of(&self, e: &E) -> Option<ElemIdx> {
        self.lookup.get(e).copied()
    }

    /// Indices of the generators the group was closed from.
    pub fn generators(&self) -> &[ElemIdx] {
        &self.generators
    }

    /// `a` then `b`.
    pub fn mul(&self, a: ElemIdx, b: ElemIdx) -> ElemIdx {
        let p = self.elements[a as usize].then(&self.elements[b as usize]);
        self.lookup[&p]
    }

    pub fn inverse(&self, a: ElemIdx) -> ElemIdx {
        // x^(k-1) for x of order k.
        let mut p = self.identity;
        for _ in 1..self.orders[a as usize] {
            p = self.mul(p, a);
        }
        p
    }

    pub fn element_order(&self, a: ElemIdx) -> u32 {
        self.orders[a as usize]
    }

    /// Elements of order exactly 2, in canonical order.
    pub fn involutions(&self) -> Vec<ElemIdx> {
        (0..self.order() as ElemIdx).filter(|&i| self.orders[i as usize] == 2).collect()
    }

    /// Element indices in breadth-first discovery order, identity first.
    pub fn bfs_order(&self) -> &[ElemIdx] {
        &self.bfs
    }

    /// `(parent, generator position)` with `element = parent then generator`;
    /// `None` for the identity.
    pub fn parent(&self, i: ElemIdx) -> Option<(ElemIdx, usize)> {
        let p = self.parent[i as usize];
        (p != NO_PARENT).then(|| (p, self.last_gen[i as usize] as usize))
    }

    /// Shortest word in the generators (by position) spelling element `i`.
    pub fn word(&self, mut i: ElemIdx) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.parent(i) {
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }
}
