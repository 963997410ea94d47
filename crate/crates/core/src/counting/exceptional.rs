//! Endomorphism tables of the exceptional groups and of the members of
//! the infinite families not covered by the generic formulas.

use num_bigint::BigUint;

use super::CountingError;
use crate::groups::{Family, GroupId};
use crate::tables::EndoTableRow;

/// (kernel, index, quotient, Z, |Aut|, E)
type RawRow = (&'static str, u64, &'static str, u64, Option<u64>, u64);

const H3: &[RawRow] = &[
    ("H_3", 1, "{1}", 1, Some(1), 1),
    ("H_3^+", 2, "Z_2", 31, Some(1), 31),
    ("Z(H_3)", 60, "Alt(5)", 1, Some(120), 120),
    ("{1}", 120, "H_3", 1, Some(120), 120),
];

const H4: &[RawRow] = &[
    ("H_4", 1, "{1}", 1, Some(1), 1),
    ("H_4^+", 2, "Z_2", 571, Some(1), 571),
    ("Z(H_4)", 7200, "Inn(H_4)", 0, Some(14400), 0),
    ("{1}", 14400, "H_4", 1, Some(28800), 28800),
];

const F4: &[RawRow] = &[
    ("F_4", 1, "{1}", 1, Some(1), 1),
    ("F_4^+", 2, "Z_2", 139, Some(1), 139),
    ("+F_4", 2, "Z_2", 139, Some(1), 139),
    ("(F_4)_+", 2, "Z_2", 139, Some(1), 139),
    ("+(F_4)_+", 4, "Z_2^2", 597, Some(6), 3582),
    ("(F_4)_1", 6, "Sym(3)", 352, Some(6), 2112),
    ("(F_4)_2", 6, "Sym(3)", 352, Some(6), 2112),
    ("(F_4)_1^+", 12, "Z_2 x Sym(3)", 560, Some(12), 6720),
    ("(F_4)_2^+", 12, "Z_2 x Sym(3)", 560, Some(12), 6720),
    ("N", 36, "Sym(3)^2", 64, Some(72), 4608),
    ("{±1}", 576, "Inn(F_4)", 0, Some(1152), 0),
    ("{1}", 1152, "F_4", 1, Some(4608), 4608),
];

const E6: &[RawRow] = &[
    ("E_6", 1, "{1}", 1, Some(1), 1),
    ("E_6^+", 2, "Z_2", 891, Some(1), 891),
    ("{1}", 51840, "E_6", 1, Some(51840), 51840),
];

const E7: &[RawRow] = &[
    ("E_7", 1, "{1}", 1, Some(1), 1),
    ("E_7^+", 2, "Z_2", 10207, Some(1), 10207),
    ("Z(E_7)", 1451520, "Inn(E_7)", 1, Some(1451520), 1451520),
    ("{1}", 2903040, "E_7", 1, Some(1451520), 1451520),
];

// Z for the {±1} row is settled by a centre argument, not by search.
const E8: &[RawRow] = &[
    ("E_8", 1, "{1}", 1, Some(1), 1),
    ("E_8^+", 2, "Z_2", 199951, Some(1), 199951),
    ("{±1}", 348364800, "Inn(E_8)", 0, None, 0),
    ("{1}", 696729600, "E_8", 1, Some(696729600), 696729600),
];

const A3: &[RawRow] = &[
    ("A_3", 1, "{1}", 1, Some(1), 1),
    ("A_3^+", 2, "Z_2", 9, Some(1), 9),
    ("V_4", 6, "Sym(3)", 4, Some(6), 24),
    ("{1}", 24, "A_3", 1, Some(24), 24),
];

const A5: &[RawRow] = &[
    ("A_5", 1, "{1}", 1, Some(1), 1),
    ("A_5^+", 2, "Z_2", 75, Some(1), 75),
    ("{1}", 720, "A_5", 1, Some(1440), 1440),
];

const C4: &[RawRow] = &[
    ("C_4", 1, "{1}", 1, Some(1), 1),
    ("C_4^+", 2, "Z_2", 75, Some(1), 75),
    ("(C_4)_1", 2, "Z_2", 75, Some(1), 75),
    ("+C_4", 2, "Z_2", 75, Some(1), 75),
    ("(C_4)_1^+", 4, "Z_2^2", 277, Some(6), 1662),
    ("N x| V_4", 6, "Sym(3)", 64, Some(6), 384),
    ("N^+ x| V_4", 12, "Z_2 x Sym(3)", 96, Some(12), 1152),
    ("N", 24, "Sym(4)", 32, Some(24), 768),
    ("N^+", 48, "Z_2 x Sym(4)", 32, Some(48), 1536),
    ("{±1}", 192, "C_4/{±1}", 0, Some(384), 0),
    ("{1}", 384, "C_4", 1, Some(768), 768),
];

// The last two indices are |C_6|/2 and |C_6|; the published block
// repeats the C_4 values there.
const C6: &[RawRow] = &[
    ("C_6", 1, "{1}", 1, Some(1), 1),
    ("C_6^+", 2, "Z_2", 1383, Some(1), 1383),
    ("(C_6)_1", 2, "Z_2", 1383, Some(1), 1383),
    ("+C_6", 2, "Z_2", 1383, Some(1), 1383),
    ("(C_6)_1^+", 4, "Z_2^2", 32631, Some(6), 195786),
    ("N", 720, "Sym(6)", 64, Some(1440), 92160),
    ("N^+", 1440, "Z_2 x Sym(6)", 32, Some(2880), 92160),
    ("{±1}", 23040, "C_6/{±1}", 0, Some(23040), 0),
    ("{1}", 46080, "C_6", 1, Some(92160), 92160),
];

const D4: &[RawRow] = &[
    ("D_4", 1, "{1}", 1, Some(1), 1),
    ("D_4^+", 2, "Z_2", 43, Some(1), 43),
    ("N x| V_4", 6, "Sym(3)", 32, Some(6), 192),
    ("N", 24, "Sym(4)", 24, Some(24), 576),
    ("(D_4)_13", 24, "Sym(4)", 24, Some(24), 576),
    ("(D_4)_14", 24, "Sym(4)", 24, Some(24), 576),
    ("{±1}", 96, "D_4/{±1}", 0, Some(576), 0),
    ("{1}", 192, "D_4", 1, Some(1152), 1152),
];

const D6: &[RawRow] = &[
    ("D_6", 1, "{1}", 1, Some(1), 1),
    ("D_6^+", 2, "Z_2", 751, Some(1), 751),
    ("N", 720, "Sym(6)", 64, Some(1440), 92160),
    ("{±1}", 11520, "D_6/{±1}", 0, Some(23040), 0),
    ("{1}", 23040, "D_6", 1, Some(46080), 46080),
];

fn raw_rows(id: GroupId) -> Option<&'static [RawRow]> {
    Some(match (id.family(), id.param()) {
        (Family::H3, _) => H3,
        (Family::H4, _) => H4,
        (Family::F4, _) => F4,
        (Family::E6, _) => E6,
        (Family::E7, _) => E7,
        (Family::E8, _) => E8,
        (Family::A, Some(3)) => A3,
        (Family::A, Some(5)) => A5,
        (Family::C, Some(4)) => C4,
        (Family::C, Some(6)) => C6,
        (Family::D, Some(4)) => D4,
        (Family::D, Some(6)) => D6,
        _ => return None,
    })
}

/// Whether `id` is served from the constant tables.
pub fn has_constants(id: GroupId) -> bool {
    raw_rows(id).is_some()
}

/// The stored endomorphism table of `id`, rows in index order.
pub fn exceptional_constants(id: GroupId) -> Result<Vec<EndoTableRow>, CountingError> {
    let rows = raw_rows(id).ok_or(CountingError::NotExceptional(id))?;
    Ok(rows
        .iter()
        .map(|&(k, idx, q, z, aut, e)| EndoTableRow {
            kernel_label: k.to_string(),
            kernel_index: BigUint::from(idx),
            quotient_label: q.to_string(),
            z: BigUint::from(z),
            aut: aut.map(BigUint::from),
            e: BigUint::from(e),
        })
        .collect())
}

/// Provenance tag for the stored table of `id`.
pub fn constant_table_source(id: GroupId) -> String {
    format!("exceptional-constant table, {id}")
}

/// Provenance tag for row `row` (1-based) of a stored table.
pub fn constant_source(id: GroupId, row: usize) -> String {
    format!("{} row {row}", constant_table_source(id))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ids() -> Vec<GroupId> {
        let mut v: Vec<GroupId> = [Family::H3, Family::H4, Family::F4, Family::E6, Family::E7, Family::E8]
            .into_iter()
            .map(|f| GroupId::exceptional(f).unwrap())
            .collect();
        v.extend([
            GroupId::a(3).unwrap(),
            GroupId::a(5).unwrap(),
            GroupId::c(4).unwrap(),
            GroupId::c(6).unwrap(),
            GroupId::d(4).unwrap(),
            GroupId::d(6).unwrap(),
        ]);
        v
    }

    #[test]
    fn rows_are_internally_consistent() {
        for id in all_ids() {
            let rows = exceptional_constants(id).unwrap();
            let order = id.order();
            assert_eq!(rows.first().unwrap().kernel_index, BigUint::from(1u32));
            assert_eq!(rows.last().unwrap().kernel_index, order, "{id}");
            for w in rows.windows(2) {
                assert!(w[0].kernel_index <= w[1].kernel_index, "{id}");
            }
            for r in &rows {
                assert_eq!(&order % &r.kernel_index, BigUint::default(), "{id} {}", r.kernel_label);
                match &r.aut {
                    Some(a) => assert_eq!(r.e, &r.z * a, "{id} {}", r.kernel_label),
                    None => assert_eq!(r.e, BigUint::default()),
                }
            }
        }
    }

    #[test]
    fn totals_match_published_counts() {
        let expected: [(&str, u64); 12] = [
            ("H3", 272),
            ("H4", 29372),
            ("F4", 30880),
            ("E6", 52732),
            ("E7", 2913248),
            ("E8", 696929552),
            ("A:3", 58),
            ("A:5", 1516),
            ("C:4", 6496),
            ("C:6", 476416),
            ("D:4", 3116),
            ("D:6", 138992),
        ];
        for (s, total) in expected {
            let id: GroupId = s.parse().unwrap();
            let sum: BigUint = exceptional_constants(id).unwrap().iter().map(|r| &r.e).sum();
            assert_eq!(sum, BigUint::from(total), "{id}");
        }
    }

    #[test]
    fn e7_centre_row() {
        let rows = exceptional_constants(GroupId::exceptional(Family::E7).unwrap()).unwrap();
        let r = rows.iter().find(|r| r.kernel_label == "Z(E_7)").unwrap();
        assert_eq!(r.z, BigUint::from(1u32));
        assert_eq!(r.aut, Some(BigUint::from(1451520u32)));
    }

    #[test]
    fn generic_ids_are_rejected() {
        let id = GroupId::c(5).unwrap();
        assert_eq!(exceptional_constants(id), Err(CountingError::NotExceptional(id)));
        assert!(!has_constants(id));
        assert_eq!(constant_source(GroupId::c(4).unwrap(), 5), "exceptional-constant table, C_4 row 5");
    }
}
