//! The image order of a uniformly random endomorphism, as an exact
//! distribution, and the probabilities derived from it.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::counting::{self, seq_a, seq_b};
use crate::groups::{factorial, pow2, Family, GroupId};
use crate::scalar::{ratio_of, ratio_to_f64};
use crate::tables::endomorphism_table;

/// The closed forms for reflections in kernels and normal images are
/// only claimed for `n` at least this large.
pub const STATED_MIN_N: u32 = 7;

/// Default number of decimals when rendering square roots.
pub const DEFAULT_DIGITS: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("{what} is not defined for {id}")]
    Unsupported { what: &'static str, id: GroupId },
    #[error("{what} is not defined for family {family:?}")]
    UnsupportedFamily { what: &'static str, family: Family },
}

/// `P[X = k]` for every image order `k` that occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageOrderDistribution {
    pub group: GroupId,
    /// `(image order, number of endomorphisms)`, image order increasing.
    pub support: Vec<(BigUint, BigUint)>,
    pub total: BigUint,
}

impl ImageOrderDistribution {
    pub fn masses(&self) -> Vec<(BigUint, BigRational)> {
        self.support.iter().map(|(k, c)| (k.clone(), ratio_of(c, &self.total))).collect()
    }

    pub fn mass(&self, image_order: &BigUint) -> BigRational {
        self.support
            .iter()
            .find(|(k, _)| k == image_order)
            .map_or_else(BigRational::zero, |(_, c)| ratio_of(c, &self.total))
    }

    /// `E[X^power]`.
    fn moment(&self, power: u32) -> BigRational {
        let s: BigUint = self.support.iter().map(|(k, c)| k.pow(power) * c).sum();
        ratio_of(&s, &self.total)
    }
}

pub fn image_order_distribution(id: GroupId) -> ImageOrderDistribution {
    let table = endomorphism_table(id);
    let mut support: Vec<(BigUint, BigUint)> = Vec::new();
    for r in table.rows.iter().filter(|r| !r.e.is_zero()) {
        let k = r.kernel_index.clone();
        match support.iter_mut().find(|(o, _)| *o == k) {
            Some((_, c)) => *c += &r.e,
            None => support.push((k, r.e.clone())),
        }
    }
    support.sort();
    ImageOrderDistribution { group: id, support, total: table.total }
}

pub fn expected_image_order(id: GroupId) -> BigRational {
    image_order_distribution(id).moment(1)
}

pub fn variance_image_order(id: GroupId) -> BigRational {
    let d = image_order_distribution(id);
    let e = d.moment(1);
    d.moment(2) - &e * &e
}

/// Standard deviation as a decimal string with `digits` decimals.
pub fn std_image_order(id: GroupId, digits: u32) -> String {
    sqrt_decimal(&variance_image_order(id), digits)
}

/// `sqrt(r)` for `r >= 0`, rounded half-to-even at `digits` decimals.
pub fn sqrt_decimal(r: &BigRational, digits: u32) -> String {
    assert!(!r.is_negative(), "square root of a negative number");
    let p = r.numer().magnitude();
    let q = r.denom().magnitude();
    let scale = BigUint::from(10u32).pow(2 * digits);
    let s = (p * &scale / q).sqrt();
    // sqrt(p/q) * 10^d against s + 1/2, squared and cleared of fractions.
    let lhs = BigUint::from(4u32) * p * &scale;
    let two_s1 = BigUint::from(2u32) * &s + 1u32;
    let rhs = &two_s1 * &two_s1 * q;
    let round_up = lhs > rhs || (lhs == rhs && s.is_odd());
    let s = if round_up { s + 1u32 } else { s };
    render_scaled(&BigInt::from(s), digits)
}

/// `r` rounded half-to-even at `digits` decimals.
pub fn to_decimal(r: &BigRational, digits: u32) -> String {
    let scaled = r * BigRational::from_integer(BigInt::from(10u32).pow(digits));
    let (q, rem) = scaled.numer().div_mod_floor(scaled.denom());
    let twice = BigInt::from(2) * rem;
    let den = scaled.denom();
    let round_up = twice > *den || (twice == *den && q.is_odd());
    render_scaled(&(if round_up { q + 1 } else { q }), digits)
}

fn render_scaled(v: &BigInt, digits: u32) -> String {
    let neg = v.is_negative();
    let mut s = v.magnitude().to_string();
    let d = digits as usize;
    if s.len() <= d {
        s = "0".repeat(d + 1 - s.len()) + &s;
    }
    let (int, frac) = s.split_at(s.len() - d);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `|Aut(W)| / |End(W)|`; an endomorphism with full image is bijective.
pub fn prob_automorphism(id: GroupId) -> BigRational {
    ratio_of(&counting::aut_order(id), &counting::endo_count(id))
}

fn c_order(n: u32) -> BigUint {
    pow2(n) * factorial(n as u64)
}

fn c_id(n: u32) -> GroupId {
    GroupId::c(n).expect("n >= 2")
}

/// Probability that the centre lies in the kernel.
pub fn prob_centre_in_kernel(id: GroupId) -> Result<BigRational, StatsError> {
    let n = id.param().unwrap_or(0);
    match id.family() {
        // For even rank every nontrivial kernel contains -1.
        Family::C | Family::D if n.is_multiple_of(2) => Ok(BigRational::one() - prob_automorphism(id)),
        Family::C => {
            // C_n, +C_n, N and {±1} contain -1.
            let num = BigUint::one() + counting::involution_count(id) + BigUint::from(2u32) * c_order(n);
            Ok(ratio_of(&num, &counting::endo_count(id)))
        }
        Family::A if n == 1 => Ok(BigRational::new(1.into(), 2.into())),
        Family::D | Family::A => Ok(BigRational::one()),
        _ => Err(StatsError::Unsupported { what: "prob_centre_in_kernel", id }),
    }
}

/// A value whose closed form is only claimed for `n >= STATED_MIN_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeNoted {
    pub value: BigRational,
    pub in_stated_range: bool,
}

impl RangeNoted {
    fn new(n: u32, value: BigRational) -> Self {
        RangeNoted { value, in_stated_range: n >= STATED_MIN_N }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectionClass {
    /// Conjugates of `r_i`.
    CoordinateFlip,
    /// Conjugates of `r_{+1,i,j}`.
    Transposition,
}

/// Probability that a reflection of the given class lies in the kernel
/// of a random endomorphism of `C_n`.
pub fn prob_reflection_in_kernel(n: u32, class: ReflectionClass) -> RangeNoted {
    let id = c_id(n);
    let mut num = BigUint::one() + counting::involution_count(id);
    if class == ReflectionClass::CoordinateFlip {
        num += c_order(n);
    }
    RangeNoted::new(n, ratio_of(&num, &counting::endo_count(id)))
}

/// Probability that the image of a random endomorphism of `C_n` is normal.
pub fn prob_normal_image(n: u32) -> RangeNoted {
    let num = pow2(n + 1) * factorial(n as u64) + 4u32;
    RangeNoted::new(n, ratio_of(&num, &counting::endo_count(c_id(n))))
}

/// `P[X < n!]` for `C_n`. For `n >= 7` this is `2^n n! b_n / H(C_n)`.
pub fn prob_small_image(n: u32) -> BigRational {
    let d = image_order_distribution(c_id(n));
    let nf = factorial(n as u64);
    d.support.iter().filter(|(k, _)| *k < nf).map(|(k, _)| d.mass(k)).sum()
}

fn big_rat(v: BigUint) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Leading term of `E[X]`.
pub fn expected_asymptote(id: GroupId) -> Result<BigRational, StatsError> {
    let n = id.param().unwrap_or(0);
    let f = factorial(n as u64);
    match id.family() {
        Family::C if n.is_multiple_of(2) => Ok(big_rat(pow2(n - 1) * f)),
        Family::C => Ok(big_rat(BigUint::from(3u32) * f) / big_rat(BigUint::from(8u32)) * big_rat(pow2(n))),
        Family::D => Ok(big_rat(pow2(n - 2) * f)),
        Family::A => Ok(big_rat(factorial(n as u64 + 1))),
        family => Err(StatsError::UnsupportedFamily { what: "expected_asymptote", family }),
    }
}

/// Square of the leading term of the standard deviation. For `A_n` the
/// deviation is `o((n+1)!)`; this returns `(n+1)!^2` as the scale it is
/// small against.
pub fn variance_scale(id: GroupId) -> Result<BigRational, StatsError> {
    let n = id.param().unwrap_or(0);
    let e = match id.family() {
        Family::C if n % 2 == 1 => {
            let t = big_rat(pow2(n) * factorial(n as u64)) / big_rat(BigUint::from(8u32));
            return Ok(big_rat(BigUint::from(11u32)) * &t * &t);
        }
        Family::C | Family::D | Family::A => expected_asymptote(id)?,
        family => return Err(StatsError::UnsupportedFamily { what: "variance_scale", family }),
    };
    Ok(&e * &e)
}

/// `E[X] / leading term`.
pub fn expected_ratio(id: GroupId) -> Result<BigRational, StatsError> {
    Ok(expected_image_order(id) / expected_asymptote(id)?)
}

/// `sigma / leading term` (or `sigma / (n+1)!` for `A_n`), as a float.
pub fn std_ratio(id: GroupId) -> Result<f64, StatsError> {
    Ok(ratio_to_f64(&(variance_image_order(id) / variance_scale(id)?)).sqrt())
}

/// One line of a convergence table.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticRow {
    pub n: u32,
    pub quantity: &'static str,
    /// Exact value where one exists.
    pub exact: Option<BigRational>,
    pub approx: f64,
    pub limit: f64,
}

fn exact_row(n: u32, quantity: &'static str, v: BigRational, limit: f64) -> AsymptoticRow {
    AsymptoticRow { n, quantity, approx: ratio_to_f64(&v), exact: Some(v), limit }
}

/// Convergence table for a family over `ns`.
pub fn asymptotic_report(family: Family, ns: impl IntoIterator<Item = u32>) -> Result<Vec<AsymptoticRow>, StatsError> {
    let mut out = Vec::new();
    for n in ns {
        let id = match family {
            Family::C => GroupId::c(n),
            Family::D => GroupId::d(n),
            Family::A => GroupId::a(n),
            family => return Err(StatsError::UnsupportedFamily { what: "asymptotic_report", family }),
        };
        let Ok(id) = id else { continue };
        let half = 0.5;
        let even = n % 2 == 0;
        match family {
            Family::C => {
                let h = big_rat(counting::endo_count(id)) / big_rat(pow2(n + 2) * factorial(n as u64));
                out.push(exact_row(n, "H/(2^(n+2) n!)", h, 1.0));
                out.push(exact_row(n, "P[X < n!]", prob_small_image(n), 0.0));
                out.push(exact_row(n, "a_n", seq_a(n), 0.0));
                out.push(exact_row(n, "b_n", seq_b(n), 0.0));
                out.push(exact_row(n, "P[automorphism]", prob_automorphism(id), if even { 0.5 } else { 0.25 }));
                out.push(exact_row(n, "P[centre in kernel]", prob_centre_in_kernel(id)?, half));
                out.push(exact_row(n, "P[image normal]", prob_normal_image(n).value, half));
                let flip = prob_reflection_in_kernel(n, ReflectionClass::CoordinateFlip).value;
                out.push(exact_row(n, "P[flip in kernel]", flip, 0.25));
                let tr = prob_reflection_in_kernel(n, ReflectionClass::Transposition).value;
                out.push(exact_row(n, "P[transposition in kernel]", tr, 0.0));
            }
            Family::D => {
                out.push(exact_row(n, "P[automorphism]", prob_automorphism(id), half));
                let centre_limit = if even { half } else { 1.0 };
                out.push(exact_row(n, "P[centre in kernel]", prob_centre_in_kernel(id)?, centre_limit));
            }
            _ => {
                out.push(exact_row(n, "P[automorphism]", prob_automorphism(id), 1.0));
                out.push(exact_row(n, "P[centre in kernel]", prob_centre_in_kernel(id)?, 1.0));
            }
        }
        out.push(exact_row(n, "E[X]/asymptote", expected_ratio(id)?, 1.0));
        let std_limit = if family == Family::A { 0.0 } else { 1.0 };
        out.push(AsymptoticRow { n, quantity: "sigma/asymptote", exact: None, approx: std_ratio(id)?, limit: std_limit });
    }
    Ok(out)
}
