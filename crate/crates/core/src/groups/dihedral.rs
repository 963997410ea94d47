/// Element `r^rot` (or `r^rot s` when `refl`) of the dihedral group
/// `I_2(m) = <r, s | r^m = s^2 = (rs)^2 = 1>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElt {
    m: u32,
    rot: u32,
    refl: bool,
}

impl DihedralElt {
    pub fn new(m: u32, rot: i64, refl: bool) -> Self {
        assert!(m >= 1);
        DihedralElt {
            m,
            rot: rot.rem_euclid(m as i64) as u32,
            refl,
        }
    }

    pub fn identity(m: u32) -> Self {
        Self::new(m, 0, false)
    }

    /// The rotation `r`.
    pub fn r(m: u32) -> Self {
        Self::new(m, 1, false)
    }

    /// The reflection `s`.
    pub fn s(m: u32) -> Self {
        Self::new(m, 0, true)
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn rot(&self) -> u32 {
        self.rot
    }
    pub fn refl(&self) -> bool {
        self.refl
    }

    pub fn is_identity(&self) -> bool {
        self.rot == 0 && !self.refl
    }

    /// Group product `self * other` in word order, matching the
    /// left-factor-first convention of [`super::SignedPerm::then`].
    pub fn then(&self, other: &DihedralElt) -> DihedralElt {
        assert_eq!(self.m, other.m, "dihedral order mismatch");
        // r^a s^e * r^b s^f = r^(a + (-1)^e b) s^(e+f)
        let b = if self.refl {
            -(other.rot as i64)
        } else {
            other.rot as i64
        };
        DihedralElt::new(self.m, self.rot as i64 + b, self.refl ^ other.refl)
    }

    pub fn inverse(&self) -> DihedralElt {
        if self.refl {
            *self
        } else {
            DihedralElt::new(self.m, -(self.rot as i64), false)
        }
    }
}
