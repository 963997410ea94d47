use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{Budget, GenImages, OracleError, Target};
use crate::groups::{concrete_group, ConcreteGroup, CoxeterPresentation, Element, ElemIdx, GroupId};
use crate::tables::decimal;

/// A source group: its presentation and a concrete model whose
/// generators follow the presentation's order.
pub struct SourceGroup {
    pub presentation: CoxeterPresentation,
    pub group: ConcreteGroup<Element>,
}

impl SourceGroup {
    pub fn for_group(id: GroupId, budget: &Budget) -> Result<Self, OracleError> {
        budget.check_order(&id.to_string(), id.order().try_into().unwrap_or(usize::MAX))?;
        Ok(SourceGroup {
            presentation: CoxeterPresentation::for_group(id),
            group: concrete_group(id, budget.max_order)?,
        })
    }

    /// `gens` must satisfy `presentation` and generate a group of at most
    /// `budget.max_order` elements.
    pub fn from_parts(
        presentation: CoxeterPresentation,
        gens: Vec<Element>,
        budget: &Budget,
    ) -> Result<Self, OracleError> {
        assert_eq!(presentation.generator_count(), gens.len(), "one element per generator");
        let group = ConcreteGroup::generate(gens, budget.max_order + 1)?;
        budget.check_order("source group", group.order())?;
        Ok(SourceGroup { presentation, group })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Image of every source element (indexed like `source.group`).
pub fn evaluate_all(hom: &GenImages, source: &SourceGroup, target: &Target) -> Vec<ElemIdx> {
    let cands: Vec<u32> = hom
        .images
        .iter()
        .map(|&x| target.candidate_index(x).expect("generator images are identity or involutions"))
        .collect();
    let g = &source.group;
    let mut phi = vec![ElemIdx::MAX; g.order()];
    for &x in g.bfs_order() {
        phi[x as usize] = match g.parent(x) {
            None => target.group().identity(),
            Some((p, k)) => target.mul_candidate(phi[p as usize], cands[k]),
        };
    }
    phi
}

/// Homomorphisms sharing one kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelClass {
    #[serde(with = "decimal")]
    pub kernel_order: BigUint,
    #[serde(with = "decimal")]
    pub kernel_index: BigUint,
    #[serde(with = "decimal")]
    pub image_order: BigUint,
    #[serde(with = "decimal")]
    pub count: BigUint,
}

struct Evaluated {
    kernel: Vec<u64>,
    kernel_order: usize,
    image_order: usize,
}

fn evaluate(hom: &GenImages, source: &SourceGroup, target: &Target) -> Evaluated {
    let phi = evaluate_all(hom, source, target);
    let id = target.group().identity();
    let mut kernel = vec![0u64; source.order().div_ceil(64)];
    let mut image = vec![0u64; target.group().order().div_ceil(64)];
    let mut kernel_order = 0;
    for (x, &y) in phi.iter().enumerate() {
        if y == id {
            kernel[x / 64] |= 1 << (x % 64);
            kernel_order += 1;
        }
        image[y as usize / 64] |= 1 << (y % 64);
    }
    let image_order = image.iter().map(|w| w.count_ones() as usize).sum();
    Evaluated { kernel, kernel_order, image_order }
}

/// Groups homomorphisms by their exact kernel. Classes come out ordered by
/// kernel index, then by kernel element set.
///
/// Panics if some homomorphism violates `|ker| * |im| = |source|`, which
/// would mean the search produced a non-homomorphism.
pub fn kernel_classify(homs: &[GenImages], source: &SourceGroup, target: &Target) -> Vec<KernelClass> {
    let n = source.order();
    let evaluated: Vec<Evaluated> = homs.par_iter().map(|h| evaluate(h, source, target)).collect();
    let mut classes: BTreeMap<(usize, Vec<u64>), (usize, usize)> = BTreeMap::new();
    for ev in evaluated {
        assert_eq!(ev.kernel_order * ev.image_order, n, "first isomorphism theorem violated");
        let entry = classes.entry((n / ev.kernel_order, ev.kernel)).or_insert((ev.image_order, 0));
        entry.1 += 1;
    }
    classes
        .into_iter()
        .map(|((index, _), (image_order, count))| KernelClass {
            kernel_order: BigUint::from(n / index),
            kernel_index: BigUint::from(index),
            image_order: BigUint::from(image_order),
            count: BigUint::from(count),
        })
        .collect()
}

/// Whether `hom` is injective.
pub(crate) fn is_injective(hom: &GenImages, source: &SourceGroup, target: &Target) -> bool {
    let id = target.group().identity();
    evaluate_all(hom, source, target).iter().filter(|&&y| y == id).count() == 1
}

/// Sorted image set of `hom`.
pub(crate) fn image_set(hom: &GenImages, source: &SourceGroup, target: &Target) -> Vec<ElemIdx> {
    let mut v = evaluate_all(hom, source, target);
    v.sort_unstable();
    v.dedup();
    v
}
