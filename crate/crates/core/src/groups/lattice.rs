//! Exact 4x4 matrices with entries in `Z/2`, used for `F_4`.

/// Stored doubled, like [`GoldenMatrix`](super::GoldenMatrix).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfMatrix {
    doubled: [[i32; 4]; 4],
}

impl HalfMatrix {
    pub fn identity() -> Self {
        let mut doubled = [[0; 4]; 4];
        for (i, row) in doubled.iter_mut().enumerate() {
            row[i] = 2;
        }
        HalfMatrix { doubled }
    }

    /// Reflection in the root with doubled coordinates `u`.
    pub fn reflection(u: [i32; 4]) -> Self {
        let uu: i32 = u.iter().map(|x| x * x).sum();
        let mut doubled = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let p = 4 * u[i] * u[j];
                assert!(p % uu == 0, "reflection leaves Z/2");
                doubled[i][j] = if i == j { 2 } else { 0 } - p / uu;
            }
        }
        HalfMatrix { doubled }
    }

    pub fn then(&self, other: &HalfMatrix) -> HalfMatrix {
        let mut doubled = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let acc: i32 = (0..4).map(|k| self.doubled[i][k] * other.doubled[k][j]).sum();
                assert!(acc % 2 == 0, "product left Z/2");
                doubled[i][j] = acc / 2;
            }
        }
        HalfMatrix { doubled }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

/// Simple reflections of `F_4`: roots `e_1 - e_2`, `e_2 - e_3`, `e_3` and
/// `(e_0 - e_1 - e_2 - e_3)/2`, Coxeter labels 3, 4, 3 along the chain.
pub fn f4_generators() -> Vec<HalfMatrix> {
    [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
        .into_iter()
        .map(HalfMatrix::reflection)
        .collect()
}
