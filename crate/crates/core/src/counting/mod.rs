//! Closed-form counts: endomorphisms, involutions, subgroup counts and
//! homomorphisms from dihedral groups.
//!
//! Every count is an exact [`CountInt`](crate::CountInt). Sums with
//! fractional terms are accumulated as [`Ratio`](crate::Ratio) and
//! checked to be integral at the end.

mod exceptional;

pub use exceptional::{constant_source, constant_table_source, exceptional_constants, has_constants};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::groups::{factorial, pow2, Family, GroupId};
use crate::scalar::{expect_count, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountingError {
    #[error("{0} has no stored endomorphism table")]
    NotExceptional(GroupId),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("{what} is not defined for {id}")]
    Unsupported { what: &'static str, id: GroupId },
    #[error("{what} needs n >= {min}, got {n}")]
    OutOfRange { what: &'static str, n: u32, min: u32 },
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn fact(n: u32) -> BigUint {
    factorial(n as u64)
}

fn rat(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den` as an exact rational.
fn q(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_odd_prime(p: u32) -> bool {
    p > 2 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Euler's totient.
pub fn totient(mut m: u32) -> u32 {
    let mut result = m;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn stored_total(id: GroupId) -> BigUint {
    exceptional_constants(id)
        .expect("id has stored constants")
        .iter()
        .map(|r| &r.e)
        .sum()
}

fn stored_row(id: GroupId, index: u64) -> Option<crate::tables::EndoTableRow> {
    exceptional_constants(id)
        .ok()?
        .into_iter()
        .find(|r| r.kernel_index == big(index))
}

/// `|End(W)|`.
pub fn endo_count(id: GroupId) -> BigUint {
    if has_constants(id) {
        return stored_total(id);
    }
    let n = id.param().unwrap_or(0);
    match id.family() {
        Family::I2 => {
            let m = big(n as u64);
            if n % 2 == 1 {
                &m * &m + 1u32
            } else {
                let s = m + 2u32;
                &s * &s
            }
        }
        // A_1 has a single nontrivial normal subgroup, which is also the
        // index-2 one; the generic sum would count it twice.
        Family::A if n == 1 => big(2),
        Family::A => {
            let m = n + 1;
            let mut acc = rat(fact(m));
            for k in 0..=m / 2 {
                acc += q(fact(m), pow2(k) * fact(k) * fact(m - 2 * k));
            }
            expect_count(&acc, "H(A_n)")
        }
        // C_2 is I_2(4), whose extra normal subgroups the generic table misses.
        Family::C if n == 2 => big(36),
        Family::C => {
            let b: BigRational = seq_b(n);
            let w = pow2(n) * fact(n);
            expect_count(&(rat(w) * (BigRational::from_integer(4.into()) + b)), "H(C_n)")
        }
        Family::D => {
            let h = n / 2;
            let e = if n.is_multiple_of(2) { n + 1 } else { n };
            let mut acc = rat(pow2(e) * fact(n)) + q(fact(n), fact(h));
            for k in 0..h {
                acc += q(pow2(n - 1) * fact(n), pow2(2 * k) * fact(k) * fact(n - 2 * k));
            }
            expect_count(&acc, "H(D_n)")
        }
        _ => unreachable!("exceptional ids have stored constants"),
    }
}

/// Number of involutions `V(W)` (elements of order exactly 2).
pub fn involution_count(id: GroupId) -> BigUint {
    if id.family().is_exceptional() {
        // Every exceptional group has an index-2 row with Z = V.
        return stored_row(id, 2).expect("index-2 row").z;
    }
    let p = id.param().unwrap_or(0);
    let (n, tau, w) = match id.family() {
        Family::I2 => return big(p as u64 + (p as u64 + 1) % 2),
        Family::A => (p + 1, 1, fact(p + 1)),
        Family::C => (p, 2, pow2(p) * fact(p)),
        Family::D => (p, 2, pow2(p - 1) * fact(p)),
        _ => unreachable!(),
    };
    let h = n / 2;
    let head = match id.family() {
        Family::C => q(pow2(n % 2) * fact(n), fact(h)),
        Family::D => q(fact(n), fact(h)),
        _ => q(fact(n), pow2(h) * fact(h)),
    };
    let mut acc = head - BigRational::one();
    for k in 0..h {
        acc += q(w.clone(), pow2(tau * k) * fact(k) * fact(n - 2 * k));
    }
    expect_count(&acc, "V(W)")
}

/// Ordered pairs of commuting elements of order at most 2 in `C_n`.
pub fn commuting_pairs_leq2(n: u32) -> BigUint {
    let mut acc = BigRational::zero();
    let base = rat(pow2(2 * n) * fact(n));
    for k in 0..=n / 4 {
        for l in 0..=(n / 2 - 2 * k) {
            let num = &base * rat(big(3).pow(l));
            acc += num / rat(pow2(7 * k + 3 * l) * fact(k) * fact(l) * fact(n - 4 * k - 2 * l));
        }
    }
    expect_count(&acc, "commuting pairs")
}

/// Subgroups of `C_n` isomorphic to the Klein four-group.
pub fn klein_subgroup_count(n: u32) -> Result<BigUint, CountingError> {
    if n < 2 {
        return Err(CountingError::OutOfRange { what: "klein_subgroup_count", n, min: 2 });
    }
    let v = involution_count(GroupId::c(n).expect("n >= 2"));
    let numer = big(2) + commuting_pairs_leq2(n) - big(3) * (v + 1u32);
    let (quot, rem) = numer.div_rem(&big(6));
    assert!(rem.is_zero(), "Klein numerator not divisible by 6 at n = {n}");
    Ok(quot)
}

/// Subgroups of `C_n` / `D_n` isomorphic to `Sym(n)` complementing `N`.
pub fn symmetric_subgroup_count(id: GroupId) -> Result<BigUint, CountingError> {
    let n = id.param().unwrap_or(0);
    match id.family() {
        Family::C | Family::D if n == 4 => Ok(stored_row(id, 24).expect("N row").z),
        Family::C if n >= 3 => Ok(pow2(n)),
        Family::D => Ok(pow2(if n % 2 == 1 { n - 1 } else { n })),
        Family::C => Err(CountingError::OutOfRange { what: "symmetric_subgroup_count", n, min: 3 }),
        _ => Err(CountingError::Unsupported { what: "symmetric_subgroup_count", id }),
    }
}

/// Subgroups of `C_n` isomorphic to `Z_2 x Sym(n)` complementing `N^+`.
pub fn c2_x_symmetric_subgroup_count(n: u32) -> Result<BigUint, CountingError> {
    match n {
        0 | 1 => Err(CountingError::OutOfRange { what: "c2_x_symmetric_subgroup_count", n, min: 2 }),
        4 => Ok(stored_row(GroupId::c(4).expect("valid"), 48).expect("C_4 N^+ row").z),
        _ => Ok(pow2(n - 1)),
    }
}

/// Index-2 subgroups isomorphic to `W/{±1}`.
pub fn index2_mod_centre_count(id: GroupId) -> Result<BigUint, CountingError> {
    let n = id.param().unwrap_or(0);
    match id.family() {
        Family::C if n < 3 => Err(CountingError::OutOfRange { what: "index2_mod_centre_count", n, min: 3 }),
        Family::C => Ok(big(if n % 2 == 1 { 2 } else { 0 })),
        Family::D if n.is_multiple_of(2) => Ok(big(0)),
        _ => Err(CountingError::Unsupported { what: "index2_mod_centre_count", id }),
    }
}

/// `|Aut(W)|`.
pub fn aut_order(id: GroupId) -> BigUint {
    if has_constants(id) {
        let rows = exceptional_constants(id).expect("stored");
        return rows.last().and_then(|r| r.aut.clone()).expect("kernel {1} row has |Aut|");
    }
    let n = id.param().unwrap_or(0);
    match id.family() {
        Family::I2 if n == 2 => big(6),
        Family::I2 => big(n as u64 * totient(n) as u64),
        Family::A if n == 1 => big(1),
        Family::A => fact(n + 1),
        Family::C if n == 2 => big(8),
        Family::C => pow2(if n.is_multiple_of(2) { n + 1 } else { n }) * fact(n),
        Family::D => pow2(if n.is_multiple_of(2) { n } else { n - 1 }) * fact(n),
        _ => unreachable!("exceptional ids have stored constants"),
    }
}

/// `|Hom(I_2(l), I_2(m))|`.
pub fn hom_count_dihedral(l: u32, m: u32) -> BigUint {
    let g = big(l.gcd(&m) as u64);
    let mb = big(m as u64);
    let mg = &mb * &g;
    match (l.is_multiple_of(2), m.is_multiple_of(2)) {
        (true, true) => big(4) + big(4) * &mb + mg,
        (true, false) => big(1) + big(2) * &mb + mg,
        (false, true) => big(2) + mg,
        (false, false) => big(1) + mg,
    }
}

/// `(n, tau, |W|)` for a target of the dihedral-source formulas.
fn symmetric_target(id: GroupId) -> Result<(u32, u32, BigUint), CountingError> {
    let p = id.param().unwrap_or(0);
    match id.family() {
        Family::C => Ok((p, 2, pow2(p) * fact(p))),
        Family::A => Ok((p + 1, 1, fact(p + 1))),
        _ => Err(CountingError::Unsupported { what: "dihedral-source counts", id }),
    }
}

/// Strata `k_min..=n/p` of the triple sum over pairs
/// (element of order p, involution).
fn dihedral_sum(p: u32, n: u32, tau: u32, w: &BigUint, k_min: u32) -> BigRational {
    let mut acc = BigRational::zero();
    let pb = big(p as u64);
    for k in k_min..=n / p {
        for l in 0..=k / 2 {
            for m in 0..=(n - k * p) / 2 {
                let den = fact(k - 2 * l)
                    * fact(l)
                    * pb.pow(l)
                    * pow2(tau * (l + m))
                    * fact(n - k * p - 2 * m)
                    * fact(m);
                acc += q(w.clone(), den);
            }
        }
    }
    acc
}

/// `|Hom(I_2(p), W)|` for `W = C_n` or `A_{n-1}` and `p` an odd prime.
pub fn hom_count_i2p(p: u32, target: GroupId) -> Result<BigUint, CountingError> {
    if !is_odd_prime(p) {
        return Err(CountingError::NotOddPrime(p));
    }
    let (n, tau, w) = symmetric_target(target)?;
    Ok(expect_count(&dihedral_sum(p, n, tau, &w, 0), "Hom(I_2(p), W)"))
}

/// Subgroups of `W = C_n` or `A_{n-1}` isomorphic to `I_2(p)`.
pub fn dihedral_subgroup_count(p: u32, target: GroupId) -> Result<BigUint, CountingError> {
    if !is_odd_prime(p) {
        return Err(CountingError::NotOddPrime(p));
    }
    let (n, tau, w) = symmetric_target(target)?;
    if p > n {
        return Ok(BigUint::zero());
    }
    let s = dihedral_sum(p, n, tau, &w, 1) / rat(big(p as u64 * (p as u64 - 1)));
    Ok(expect_count(&s, "dihedral subgroups"))
}

/// `a_n = sum_k 1 / (4^k k! (n-2k)!)`.
pub fn seq_a<S: Scalar>(n: u32) -> S {
    let mut acc = S::zero();
    for k in 0..=n / 2 {
        acc = acc + S::frac(1, 4).powu(k) * S::inv_factorial(k as u64) * S::inv_factorial((n - 2 * k) as u64);
    }
    acc
}

/// `b_n = sum_{k,l} (3/8)^l 2^n / (2^{7k} k! l! (n-4k-2l)!)`.
pub fn seq_b<S: Scalar>(n: u32) -> S {
    let mut acc = S::zero();
    let two_n = S::from_u64(2).powu(n);
    for k in 0..=n / 4 {
        for l in 0..=(n / 2 - 2 * k) {
            acc = acc
                + S::frac(3, 8).powu(l) * two_n.clone() * S::frac(1, 128).powu(k)
                    * S::inv_factorial(k as u64)
                    * S::inv_factorial(l as u64)
                    * S::inv_factorial((n - 4 * k - 2 * l) as u64);
        }
    }
    acc
}
