use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::GroupError;

/// Family of an irreducible spherical reflection group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
    D,
    I2,
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            Family::H3 | Family::H4 | Family::F4 | Family::E6 | Family::E7 | Family::E8
        )
    }
}

/// Identifier of an irreducible spherical reflection group.
///
/// `param` is the rank for `A`, `C`, `D`, the edge label `m` for `I_2(m)`
/// and absent for the exceptional groups. Construction validates ranges:
/// `A_n` needs `n >= 1`, `C_n` needs `n >= 2`, `D_n` needs `n >= 4` and
/// `I_2(m)` needs `m >= 2`. Isomorphisms between families (`C_2 = I_2(4)`,
/// `A_2 = I_2(3)`) are never applied silently: callers name the group they
/// mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct GroupId {
    family: Family,
    param: Option<u32>,
}

impl GroupId {
    pub fn new(family: Family, param: Option<u32>) -> Result<Self, GroupError> {
        let min = match family {
            Family::A => Some(1),
            Family::C => Some(2),
            Family::D => Some(4),
            Family::I2 => Some(2),
            _ => None,
        };
        match (min, param) {
            (Some(lo), Some(p)) if p >= lo => Ok(GroupId { family, param }),
            (None, None) => Ok(GroupId { family, param }),
            _ => Err(GroupError::InvalidId { family, param }),
        }
    }

    pub fn a(n: u32) -> Result<Self, GroupError> {
        Self::new(Family::A, Some(n))
    }
    pub fn c(n: u32) -> Result<Self, GroupError> {
        Self::new(Family::C, Some(n))
    }
    pub fn d(n: u32) -> Result<Self, GroupError> {
        Self::new(Family::D, Some(n))
    }
    pub fn i2(m: u32) -> Result<Self, GroupError> {
        Self::new(Family::I2, Some(m))
    }
    pub fn exceptional(family: Family) -> Result<Self, GroupError> {
        Self::new(family, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank (or edge label for `I_2`); `None` for exceptional groups.
    pub fn param(&self) -> Option<u32> {
        self.param
    }

    /// Parameter of a non-exceptional id. Panics on exceptional ids.
    pub(crate) fn n(&self) -> u32 {
        self.param.expect("exceptional group has no parameter")
    }

    /// Group order as an exact integer.
    pub fn order(&self) -> BigUint {
        match self.family {
            Family::A => factorial(self.n() as u64 + 1),
            Family::C => pow2(self.n()) * factorial(self.n() as u64),
            Family::D => pow2(self.n() - 1) * factorial(self.n() as u64),
            Family::I2 => BigUint::from(2 * self.n() as u64),
            Family::H3 => BigUint::from(120u32),
            Family::H4 => BigUint::from(14400u32),
            Family::F4 => BigUint::from(1152u32),
            Family::E6 => BigUint::from(51840u32),
            Family::E7 => BigUint::from(2903040u32),
            Family::E8 => BigUint::from(696729600u32),
        }
    }

    /// Number of Coxeter generators.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A | Family::C | Family::D => self.n() as usize,
            Family::I2 => 2,
            Family::H3 => 3,
            Family::H4 | Family::F4 => 4,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.param) {
            (Family::A, Some(n)) => write!(f, "A_{n}"),
            (Family::C, Some(n)) => write!(f, "C_{n}"),
            (Family::D, Some(n)) => write!(f, "D_{n}"),
            (Family::I2, Some(m)) => write!(f, "I_2({m})"),
            (fam, _) => {
                let s = format!("{fam:?}");
                write!(f, "{}_{}", &s[..1], &s[1..])
            }
        }
    }
}

/// Grammar: `FAMILY[:param]` with `FAMILY` one of `A`, `C`, `D`, `I2`
/// (parameterised) or `H3`, `H4`, `F4`, `E6`, `E7`, `E8`. The display
/// forms (`C_5`, `I_2(9)`, `E_8`) are accepted as well.
pub const GROUP_SPEC_GRAMMAR: &str =
    "FAMILY[:param], e.g. A:4, C:3, D:5, I2:7, H3, H4, F4, E6, E7, E8";

impl From<GroupId> for String {
    fn from(id: GroupId) -> String {
        id.to_string()
    }
}

impl TryFrom<String> for GroupId {
    type Error = GroupError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl FromStr for GroupId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::Parse(s.to_string());
        let t = s.trim();
        if let Some(m) = t.strip_prefix("I_2(").and_then(|r| r.strip_suffix(')')) {
            let m = m.trim().parse::<u32>().map_err(|_| bad())?;
            return GroupId::new(Family::I2, Some(m)).map_err(|_| bad());
        }
        if let Some((f, p)) = t.split_once('_') {
            let spec = match f.to_ascii_uppercase().as_str() {
                "A" | "C" | "D" => format!("{f}:{p}"),
                _ => format!("{f}{p}"),
            };
            return spec.parse().map_err(|_| bad());
        }
        let (fam, param) = match s.split_once(':') {
            Some((f, p)) => (f, Some(p.trim().parse::<u32>().map_err(|_| bad())?)),
            None => (s, None),
        };
        let family = match fam.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "C" => Family::C,
            "D" => Family::D,
            "I2" => Family::I2,
            "H3" => Family::H3,
            "H4" => Family::H4,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            _ => return Err(bad()),
        };
        GroupId::new(family, param).map_err(|_| bad())
    }
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub(crate) fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_family_formulas() {
        assert_eq!(GroupId::a(4).unwrap().order(), BigUint::from(120u32));
        assert_eq!(GroupId::c(3).unwrap().order(), BigUint::from(48u32));
        assert_eq!(GroupId::d(4).unwrap().order(), BigUint::from(192u32));
        assert_eq!(GroupId::i2(7).unwrap().order(), BigUint::from(14u32));
        assert_eq!(
            GroupId::exceptional(Family::E8).unwrap().order(),
            BigUint::from(696729600u32)
        );
    }

    #[test]
    fn ranges_are_enforced() {
        assert!(GroupId::a(0).is_err());
        assert!(GroupId::c(1).is_err());
        assert!(GroupId::d(3).is_err());
        assert!(GroupId::i2(1).is_err());
        assert!(GroupId::new(Family::H3, Some(3)).is_err());
        assert!(GroupId::new(Family::C, None).is_err());
    }

    #[test]
    fn parse_and_display() {
        let id: GroupId = "C:4".parse().unwrap();
        assert_eq!(id, GroupId::c(4).unwrap());
        assert_eq!(id.to_string(), "C_4");
        assert_eq!("i2:9".parse::<GroupId>().unwrap().to_string(), "I_2(9)");
        assert_eq!("E8".parse::<GroupId>().unwrap().to_string(), "E_8");
        for s in ["A:1", "C:7", "D:4", "I2:2", "I2:12", "H3", "H4", "F4", "E6", "E7", "E8"] {
            let id: GroupId = s.parse().unwrap();
            assert_eq!(id.to_string().parse::<GroupId>().unwrap(), id);
        }
        for bad in ["", "X:3", "C", "C:x", "D:3", "H3:1", "I2:1"] {
            assert!(bad.parse::<GroupId>().is_err(), "{bad}");
        }
    }
}
