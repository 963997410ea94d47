//! Exact 3x3 matrices over `Z[phi]/2`, used for `H_3`.

/// `a + b*phi` with `phi^2 = phi + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub fn add(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + o.a, self.b + o.b)
    }

    pub fn mul(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)
    }

    fn halve(self) -> GoldenInt {
        assert!(self.a % 2 == 0 && self.b % 2 == 0, "entry left Z[phi]/2");
        GoldenInt::new(self.a / 2, self.b / 2)
    }
}

/// A 3x3 matrix whose entries lie in `Z[phi]/2`, stored doubled so every
/// stored entry is in `Z[phi]`. Acts on row vectors; `a.then(b)` is the
/// matrix product `a * b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenMatrix {
    doubled: [[GoldenInt; 3]; 3],
}

impl GoldenMatrix {
    pub fn identity() -> Self {
        let mut doubled = [[GoldenInt::ZERO; 3]; 3];
        for (i, row) in doubled.iter_mut().enumerate() {
            row[i] = GoldenInt::new(2, 0);
        }
        GoldenMatrix { doubled }
    }

    /// Reflection `I - 2 v v^T / |v|^2` for a root given with doubled
    /// coordinates `u = 2v` of a unit vector `v`.
    pub fn unit_reflection(u: [GoldenInt; 3]) -> Self {
        // 2*(I - 2 v v^T) = 2I - u u^T
        let mut doubled = [[GoldenInt::ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let p = u[i].mul(u[j]);
                let diag = if i == j { 2 } else { 0 };
                doubled[i][j] = GoldenInt::new(diag - p.a, -p.b);
            }
        }
        GoldenMatrix { doubled }
    }

    pub fn then(&self, other: &GoldenMatrix) -> GoldenMatrix {
        let mut doubled = [[GoldenInt::ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = GoldenInt::ZERO;
                for k in 0..3 {
                    acc = acc.add(self.doubled[i][k].mul(other.doubled[k][j]));
                }
                // (2A)(2B) = 4AB, and we store 2AB.
                doubled[i][j] = acc.halve();
            }
        }
        GoldenMatrix { doubled }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

/// Simple reflections of `H_3`: roots `e_0`, `(-phi, 1, phi - 1)/2` and
/// `e_1`, pairwise angles giving Coxeter labels 5, 3 and 2.
pub fn h3_generators() -> Vec<GoldenMatrix> {
    let two = GoldenInt::new(2, 0);
    let zero = GoldenInt::ZERO;
    vec![
        GoldenMatrix::unit_reflection([two, zero, zero]),
        GoldenMatrix::unit_reflection([GoldenInt::new(0, -1), GoldenInt::new(1, 0), GoldenInt::new(-1, 1)]),
        GoldenMatrix::unit_reflection([zero, two, zero]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(m: &GoldenMatrix) -> usize {
        let mut p = m.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(m);
            k += 1;
            assert!(k < 100);
        }
        k
    }

    #[test]
    fn generators_are_involutions_with_h3_labels() {
        let g = h3_generators();
        for x in &g {
            assert_eq!(order(x), 2);
        }
        assert_eq!(order(&g[0].then(&g[1])), 5);
        assert_eq!(order(&g[1].then(&g[2])), 3);
        assert_eq!(order(&g[0].then(&g[2])), 2);
    }

    #[test]
    fn golden_ratio_squares_correctly() {
        let phi = GoldenInt::new(0, 1);
        assert_eq!(phi.mul(phi), GoldenInt::new(1, 1));
    }
}
