use super::{Family, GroupError, GroupId};

/// Coxeter matrix: `orders[i][j]` is the order of `g_i g_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterPresentation {
    orders: Vec<Vec<u32>>,
}

impl CoxeterPresentation {
    /// Validates symmetry, unit diagonal and off-diagonal labels `>= 2`.
    pub fn new(orders: Vec<Vec<u32>>) -> Result<Self, GroupError> {
        let g = orders.len();
        for (i, row) in orders.iter().enumerate() {
            if row.len() != g {
                return Err(GroupError::InvalidPresentation("matrix is not square".into()));
            }
            for (j, &m) in row.iter().enumerate() {
                let ok = if i == j { m == 1 } else { m >= 2 && orders[j][i] == m };
                if !ok {
                    return Err(GroupError::InvalidPresentation(format!(
                        "bad entry m[{i}][{j}] = {m}"
                    )));
                }
            }
        }
        Ok(CoxeterPresentation { orders })
    }

    /// Builds a Coxeter matrix from a diagram: all pairs commute except the
    /// listed edges.
    pub fn from_edges(g: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut orders = vec![vec![2; g]; g];
        for (i, row) in orders.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in edges {
            orders[i][j] = m;
            orders[j][i] = m;
        }
        Self::new(orders).expect("diagram edges form a valid Coxeter matrix")
    }

    /// A linear diagram `g_0 - g_1 - ... - g_{k-1}` with the given labels.
    pub fn chain(labels: &[u32]) -> Self {
        let edges: Vec<_> = labels.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect();
        Self::from_edges(labels.len() + 1, &edges)
    }

    /// Standard presentation of an irreducible group.
    ///
    /// Generator order matches [`super::coxeter_generators`]: for `C_n` the
    /// first generator is the coordinate flip, for `D_n` the first two are
    /// the pair that branches off the third.
    pub fn for_group(id: GroupId) -> Self {
        let chain3 = |k: usize| vec![3; k.saturating_sub(1)];
        match id.family() {
            Family::A => Self::chain(&chain3(id.rank())),
            Family::C => {
                let mut labels = chain3(id.rank());
                labels[0] = 4;
                Self::chain(&labels)
            }
            Family::D => {
                let n = id.rank();
                let mut edges = vec![(0, 2, 3)];
                for i in 1..n - 1 {
                    edges.push((i, i + 1, 3));
                }
                Self::from_edges(n, &edges)
            }
            Family::I2 => Self::chain(&[id.n()]),
            Family::H3 => Self::chain(&[5, 3]),
            Family::H4 => Self::chain(&[5, 3, 3]),
            Family::F4 => Self::chain(&[3, 4, 3]),
            // Bourbaki labelling shifted to zero-based: node 1 hangs off node 3.
            Family::E6 => Self::from_edges(6, &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)]),
            Family::E7 => Self::from_edges(
                7,
                &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (1, 3, 3)],
            ),
            Family::E8 => Self::from_edges(
                8,
                &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (1, 3, 3)],
            ),
        }
    }

    /// Presentation of a direct product: the diagrams side by side.
    pub fn disjoint_union(&self, other: &CoxeterPresentation) -> Self {
        let (a, b) = (self.generator_count(), other.generator_count());
        let mut orders = vec![vec![2; a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                orders[i][j] = self.orders[i][j];
            }
        }
        for i in 0..b {
            for j in 0..b {
                orders[a + i][a + j] = other.orders[i][j];
            }
        }
        CoxeterPresentation { orders }
    }

    /// Reorders generators: the new generator `k` is the old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let g = self.generator_count();
        assert_eq!(perm.len(), g);
        let orders = (0..g)
            .map(|i| (0..g).map(|j| self.orders[perm[i]][perm[j]]).collect())
            .collect();
        CoxeterPresentation { orders }
    }

    pub fn generator_count(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.orders[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.orders
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CoxeterPresentation::new(vec![vec![1, 3], vec![3, 1]]).is_ok());
        assert!(CoxeterPresentation::new(vec![vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterPresentation::new(vec![vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterPresentation::new(vec![vec![1, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn d4_branches() {
        let p = CoxeterPresentation::for_group(GroupId::d(4).unwrap());
        assert_eq!(p.order(0, 1), 2);
        assert_eq!(p.order(0, 2), 3);
        assert_eq!(p.order(1, 2), 3);
        assert_eq!(p.order(2, 3), 3);
        assert_eq!(p.order(0, 3), 2);
    }

    #[test]
    fn e8_has_one_branch_node() {
        let p = CoxeterPresentation::for_group(GroupId::exceptional(Family::E8).unwrap());
        let degree = |i: usize| (0..8).filter(|&j| j != i && p.order(i, j) == 3).count();
        assert_eq!((0..8).filter(|&i| degree(i) == 3).count(), 1);
        assert_eq!((0..8).filter(|&i| degree(i) == 1).count(), 3);
    }
}
