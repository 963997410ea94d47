//! Endomorphism and homomorphism tables.
//!
//! A table lists, per normal subgroup `K` of the source, the number `Z` of
//! subgroups of the target isomorphic to the quotient, `|Aut|` of the
//! quotient and their product `E`. The `E` column sums to `|Hom|`.

use std::fmt::Write as _;
use std::io;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting::{self, CountingError};
use crate::groups::{factorial, pow2, Family, GroupId};

/// One normal subgroup `K` of the source and its contribution to `Hom`.
///
/// `aut` is `None` where the quotient's automorphism group is not
/// recorded (always paired with `z = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoTableRow {
    pub kernel_label: String,
    #[serde(with = "decimal")]
    pub kernel_index: BigUint,
    pub quotient_label: String,
    #[serde(with = "decimal")]
    pub z: BigUint,
    #[serde(with = "decimal_or_na")]
    pub aut: Option<BigUint>,
    #[serde(with = "decimal")]
    pub e: BigUint,
}

impl EndoTableRow {
    /// Row with `e = z * aut`.
    pub fn new(
        kernel_label: impl Into<String>,
        kernel_index: BigUint,
        quotient_label: impl Into<String>,
        z: BigUint,
        aut: Option<BigUint>,
    ) -> Self {
        let e = match &aut {
            Some(a) => &z * a,
            None => BigUint::default(),
        };
        EndoTableRow {
            kernel_label: kernel_label.into(),
            kernel_index,
            quotient_label: quotient_label.into(),
            z,
            aut,
            e,
        }
    }
}

/// A full homomorphism table `Hom(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomTable {
    pub source: String,
    pub target: GroupId,
    pub rows: Vec<EndoTableRow>,
    #[serde(with = "decimal")]
    pub total: BigUint,
}

#[derive(Debug, Error)]
pub enum TableParseError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing or malformed `# {0}` line")]
    Meta(&'static str),
    #[error("bad target group: {0}")]
    Target(String),
}

pub const CSV_COLUMNS: [&str; 6] = ["kernel_label", "kernel_index", "quotient_label", "z", "aut", "e"];

impl HomTable {
    fn build(source: String, target: GroupId, mut rows: Vec<EndoTableRow>) -> Self {
        rows.sort_by(|a, b| a.kernel_index.cmp(&b.kernel_index));
        let total = rows.iter().map(|r| &r.e).sum();
        HomTable { source, target, rows, total }
    }

    /// CSV with a header row and a trailing `# total,<n>` comment line.
    /// A leading `# source,<s>,target,<t>` comment records the group pair.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        for r in &self.rows {
            let aut = r.aut.as_ref().map_or(decimal_or_na::NA.to_string(), |a| a.to_string());
            w.write_record([
                r.kernel_label.clone(),
                r.kernel_index.to_string(),
                r.quotient_label.clone(),
                r.z.to_string(),
                aut,
                r.e.to_string(),
            ])
            .expect("in-memory write");
        }
        let body = String::from_utf8(w.into_inner().expect("flush")).expect("utf8");
        let mut out = String::new();
        writeln!(out, "# source,{},target,{}", self.source, self.target).unwrap();
        out.push_str(&body);
        writeln!(out, "# total,{}", self.total).unwrap();
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, TableParseError> {
        let meta = |key: &'static str| -> Result<Vec<String>, TableParseError> {
            text.lines()
                .filter_map(|l| l.strip_prefix("# "))
                .find(|l| l.starts_with(key))
                .map(|l| l.split(',').map(str::to_string).collect())
                .ok_or(TableParseError::Meta(key))
        };
        let head = meta("source")?;
        let (source, target) = match head.as_slice() {
            [_, s, _, t] => (s.clone(), t.clone()),
            _ => return Err(TableParseError::Meta("source")),
        };
        let target: GroupId = target.parse().map_err(|_| TableParseError::Target(target.clone()))?;
        let total: BigUint = match meta("total")?.as_slice() {
            [_, t] => t.parse().map_err(|_| TableParseError::Meta("total"))?,
            _ => return Err(TableParseError::Meta("total")),
        };
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(io::Cursor::new(text.as_bytes()));
        let rows = reader.deserialize().collect::<Result<Vec<EndoTableRow>, _>>()?;
        Ok(HomTable { source, target, rows, total })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn row(k: impl Into<String>, idx: BigUint, q: impl Into<String>, z: BigUint, aut: Option<BigUint>) -> EndoTableRow {
    EndoTableRow::new(k, idx, q, z, aut)
}

/// The endomorphism table of `id`.
pub fn endomorphism_table(id: GroupId) -> HomTable {
    let rows = if counting::has_constants(id) {
        counting::exceptional_constants(id).expect("stored")
    } else {
        let n = id.param().unwrap_or(0);
        match id.family() {
            Family::I2 => i2_rows(n, &id.to_string()),
            Family::C if n == 2 => i2_rows(4, &id.to_string()),
            Family::C => c_rows(id, n),
            Family::D => d_rows(id, n),
            Family::A => a_rows(id, n),
            _ => unreachable!("exceptional ids have stored constants"),
        }
    };
    HomTable::build(id.to_string(), id, rows)
}

fn i2_rows(m: u32, name: &str) -> Vec<EndoTableRow> {
    let one = BigUint::one();
    let mut rows = vec![row(name, one.clone(), "{1}", one.clone(), Some(one.clone()))];
    let even = m.is_multiple_of(2);
    if even {
        for k in ["<r^2,s>", "<r^2,rs>"] {
            rows.push(row(k, big(2), "I_2(1)", big(m as u64 + 1), Some(one.clone())));
        }
    }
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        let kernel = match d {
            1 => "<r>".to_string(),
            _ if d == m => "{1}".to_string(),
            _ => format!("<r^{d}>"),
        };
        let z = if even && d == 1 { m + 1 } else { m / d };
        let aut = if d == 2 { 6 } else { counting::totient(d) * d };
        rows.push(row(kernel, big(2 * d as u64), format!("I_2({d})"), big(z as u64), Some(big(aut as u64))));
    }
    rows
}

fn c_rows(id: GroupId, n: u32) -> Vec<EndoTableRow> {
    let one = BigUint::one();
    let nf = factorial(n as u64);
    let v = counting::involution_count(id);
    let odd = n % 2 == 1;
    let mut rows = vec![row(format!("C_{n}"), one.clone(), "{1}", one.clone(), Some(one.clone()))];
    for k in [format!("C_{n}^+"), format!("(C_{n})_1"), format!("+C_{n}")] {
        rows.push(row(k, big(2), "Z_2", v.clone(), Some(one.clone())));
    }
    let klein = counting::klein_subgroup_count(n).expect("n >= 3");
    rows.push(row(format!("(C_{n})_1^+"), big(4), "Z_2^2", klein, Some(big(6))));
    let sym = counting::symmetric_subgroup_count(id).expect("n >= 3");
    rows.push(row("N", nf.clone(), format!("Sym({n})"), sym, Some(nf.clone())));
    let c2sym = counting::c2_x_symmetric_subgroup_count(n).expect("n >= 3");
    rows.push(row("N^+", big(2) * &nf, format!("Z_2 x Sym({n})"), c2sym, Some(big(2) * &nf)));
    let half = pow2(n - 1) * &nf;
    let z = counting::index2_mod_centre_count(id).expect("n >= 3");
    let aut = odd.then(|| half.clone());
    rows.push(row("{±1}", half.clone(), format!("C_{n}/{{±1}}"), z, aut));
    rows.push(row("{1}", pow2(n) * &nf, format!("C_{n}"), one, Some(counting::aut_order(id))));
    rows
}

fn d_rows(id: GroupId, n: u32) -> Vec<EndoTableRow> {
    let one = BigUint::one();
    let nf = factorial(n as u64);
    let mut rows = vec![
        row(format!("D_{n}"), one.clone(), "{1}", one.clone(), Some(one.clone())),
        row(format!("D_{n}^+"), big(2), "Z_2", counting::involution_count(id), Some(one.clone())),
    ];
    let sym = counting::symmetric_subgroup_count(id).expect("n >= 5");
    rows.push(row("N", nf.clone(), format!("Sym({n})"), sym, Some(nf.clone())));
    if n.is_multiple_of(2) {
        let z = counting::index2_mod_centre_count(id).expect("even n");
        rows.push(row("{±1}", pow2(n - 2) * &nf, format!("D_{n}/{{±1}}"), z, None));
    }
    rows.push(row("{1}", pow2(n - 1) * &nf, format!("D_{n}"), one, Some(counting::aut_order(id))));
    rows
}

fn a_rows(id: GroupId, n: u32) -> Vec<EndoTableRow> {
    let one = BigUint::one();
    let mut rows = vec![row(format!("A_{n}"), one.clone(), "{1}", one.clone(), Some(one.clone()))];
    // In A_1 the rotation subgroup is trivial, so its row is the {1} row.
    if n > 1 {
        rows.push(row(format!("A_{n}^+"), big(2), "Z_2", counting::involution_count(id), Some(one.clone())));
    }
    rows.push(row("{1}", factorial(n as u64 + 1), format!("A_{n}"), one, Some(counting::aut_order(id))));
    rows
}

/// The table of `Hom(I_2(p), target)` for an odd prime `p`.
pub fn hom_table_i2p(p: u32, target: GroupId) -> Result<HomTable, CountingError> {
    let z = counting::dihedral_subgroup_count(p, target)?;
    let one = BigUint::one();
    let rows = vec![
        row(format!("I_2({p})"), one.clone(), "{1}", one.clone(), Some(one.clone())),
        row("<r>", big(2), "Z_2", counting::involution_count(target), Some(one)),
        row("{1}", big(2 * p as u64), format!("I_2({p})"), z, Some(big(p as u64 * (p as u64 - 1)))),
    ];
    Ok(HomTable::build(format!("I_2({p})"), target, rows))
}


/// Big integers as decimal strings, so JSON consumers never see a lossy number.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map_err(D::Error::custom)
    }
}

/// Like [`decimal`], with `"N/A"` for a missing value.
pub mod decimal_or_na {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub const NA: &str = "N/A";

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_str(NA),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let s = String::deserialize(d)?;
        match s.trim() {
            NA => Ok(None),
            t => t.parse().map(Some).map_err(D::Error::custom),
        }
    }
}
