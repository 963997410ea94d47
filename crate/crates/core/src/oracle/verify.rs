use std::fmt::Display;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use super::{enumerate_homs, kernel_classify, subgroup_census, Budget, CensusPattern, OracleError, SourceGroup, Target};
use crate::counting::{self, has_constants};
use crate::groups::{CoxeterPresentation, Family, GroupId};
use crate::tables::endomorphism_table;

/// Groups verified by `verify --suite small`.
pub const SMALL_SUITE: &[&str] = &[
    "I2:2", "I2:3", "I2:4", "I2:5", "I2:6", "I2:7", "I2:8", "I2:9", "I2:10", "I2:11", "I2:12", "A:1", "A:2", "A:3",
    "A:4", "C:2", "C:3", "C:4", "D:4", "D:5",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Allow `H_3` and `F_4`, whose searches are slow.
    pub stretch: bool,
    /// Record wall time; off for byte-reproducible reports.
    pub timestamps: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: Budget::from_env(), stretch: false, timestamps: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub formula: String,
    pub oracle: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, formula: impl Display, oracle: impl Display) -> Self {
        let (formula, oracle) = (formula.to_string(), oracle.to_string());
        Check { name: name.into(), pass: formula == oracle, formula, oracle, source: None }
    }

    fn sourced(mut self, source: Option<String>) -> Self {
        self.source = source;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub group: GroupId,
    pub checks: Vec<Check>,
    pub elapsed_ms: Option<u64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub reports: Vec<VerifyReport>,
    pub elapsed_ms: Option<u64>,
}

fn odd_primes_upto(n: u32) -> impl Iterator<Item = u32> {
    (3..=n).filter(|&p| counting::is_odd_prime(p))
}

/// `"index:count"` pairs, sorted numerically.
fn multiset(mut pairs: Vec<(BigUint, BigUint)>) -> String {
    pairs.sort();
    pairs.iter().map(|(i, e)| format!("{i}:{e}")).collect::<Vec<_>>().join(" ")
}

/// Compares every applicable closed form for `id` with the oracle.
pub fn verify(id: GroupId, opts: &VerifyOptions) -> Result<VerifyReport, OracleError> {
    if matches!(id.family(), Family::H3 | Family::F4) && !opts.stretch {
        return Err(OracleError::StretchTarget(id));
    }
    let start = Instant::now();
    let budget = &opts.budget;
    let target = Target::new(id, budget)?;
    let source = SourceGroup::for_group(id, budget)?;
    let homs = enumerate_homs(&source.presentation, &target, budget)?;
    let stored = has_constants(id).then(|| counting::constant_table_source(id));

    let mut checks = vec![
        Check::new("endo_count", counting::endo_count(id), homs.len()).sourced(stored.clone()),
        Check::new("involution_count", counting::involution_count(id), target.involution_count()),
    ];

    let table = endomorphism_table(id);
    let rows = table.rows.iter().filter(|r| r.e > BigUint::default());
    let formula_rows = multiset(rows.map(|r| (r.kernel_index.clone(), r.e.clone())).collect());
    let classes = kernel_classify(&homs, &source, &target);
    let oracle_rows = multiset(classes.iter().map(|c| (c.kernel_index.clone(), c.count.clone())).collect());
    checks.push(Check::new("table_rows", formula_rows, oracle_rows).sourced(stored));

    let n = id.param().unwrap_or(0);
    match id.family() {
        Family::C => {
            checks.push(Check::new(
                "klein_subgroups",
                counting::klein_subgroup_count(n).expect("n >= 2"),
                subgroup_census(&target, CensusPattern::Klein4, budget)?,
            ));
            if n >= 3 {
                checks.push(Check::new(
                    "symmetric_subgroups",
                    counting::symmetric_subgroup_count(id).expect("n >= 3"),
                    subgroup_census(&target, CensusPattern::Sym(n), budget)?,
                ));
                checks.push(Check::new(
                    "c2_x_symmetric_subgroups",
                    counting::c2_x_symmetric_subgroup_count(n).expect("n >= 2"),
                    subgroup_census(&target, CensusPattern::C2xSym(n), budget)?,
                ));
            }
            dihedral_source_checks(id, n, &target, budget, &mut checks)?;
        }
        Family::D => checks.push(Check::new(
            "symmetric_subgroups",
            counting::symmetric_subgroup_count(id).expect("D_n"),
            subgroup_census(&target, CensusPattern::Sym(n), budget)?,
        )),
        Family::A => dihedral_source_checks(id, n + 1, &target, budget, &mut checks)?,
        Family::I2 => {
            for l in 2..=6 {
                let pres = CoxeterPresentation::for_group(GroupId::i2(l)?);
                let found = enumerate_homs(&pres, &target, budget)?.len();
                checks.push(Check::new(format!("hom_count_dihedral(l={l})"), counting::hom_count_dihedral(l, n), found));
            }
        }
        _ => {}
    }

    let elapsed_ms = opts.timestamps.then(|| start.elapsed().as_millis() as u64);
    Ok(VerifyReport { group: id, checks, elapsed_ms })
}

/// `Hom(I_2(p), W)` and dihedral subgroup counts for odd primes `p <= n`.
fn dihedral_source_checks(
    id: GroupId,
    n: u32,
    target: &Target,
    budget: &Budget,
    checks: &mut Vec<Check>,
) -> Result<(), OracleError> {
    for p in odd_primes_upto(n) {
        let pres = CoxeterPresentation::for_group(GroupId::i2(p)?);
        let found = enumerate_homs(&pres, target, budget)?.len();
        let formula = counting::hom_count_i2p(p, id).expect("odd prime, C or A target");
        checks.push(Check::new(format!("hom_count_i2p(p={p})"), formula, found));
        let formula = counting::dihedral_subgroup_count(p, id).expect("odd prime, C or A target");
        let census = subgroup_census(target, CensusPattern::Dihedral(p), budget)?;
        checks.push(Check::new(format!("dihedral_subgroups(p={p})"), formula, census));
    }
    Ok(())
}

/// Runs [`verify`] over a list of groups, in order.
pub fn verify_suite(name: &str, ids: &[GroupId], opts: &VerifyOptions) -> Result<SuiteReport, OracleError> {
    let start = Instant::now();
    let reports = ids.iter().map(|&id| verify(id, opts)).collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport {
        suite: name.to_string(),
        passed: reports.iter().all(VerifyReport::passed),
        reports,
        elapsed_ms: opts.timestamps.then(|| start.elapsed().as_millis() as u64),
    })
}
