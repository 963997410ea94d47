//! Scalar types the closed-form sums can be evaluated over.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

/// A field-like scalar: exact rationals or IEEE floats.
///
/// Everything the sums need is division by products of factorials and
/// powers, so the trait only adds conversions on top of [`Num`].
pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    fn from_u64(v: u64) -> Self;
    fn from_count(v: &BigUint) -> Self;
    fn approx_f64(&self) -> f64;

    /// `num / den` as a scalar.
    fn frac(num: u64, den: u64) -> Self {
        Self::from_u64(num) / Self::from_u64(den)
    }

    fn powu(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    /// `1 / k!`, built as a product of reciprocals so floats underflow
    /// gracefully instead of producing `inf / inf`.
    fn inv_factorial(k: u64) -> Self {
        let mut acc = Self::one();
        for i in 2..=k {
            acc = acc / Self::from_u64(i);
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_u64(v: u64) -> Self {
        v as f64
    }
    fn from_count(v: &BigUint) -> Self {
        v.to_f64().unwrap_or(f64::INFINITY)
    }
    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_u64(v: u64) -> Self {
        v as f32
    }
    fn from_count(v: &BigUint) -> Self {
        v.to_f32().unwrap_or(f32::INFINITY)
    }
    fn approx_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigRational {
    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_count(v: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(v.clone()))
    }
    fn approx_f64(&self) -> f64 {
        ratio_to_f64(self)
    }
}

/// Converts a big rational to the nearest-ish `f64`, staying finite for
/// numerators and denominators far beyond `f64::MAX`.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let neg = r.numer() < &BigInt::zero();
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    // Scale both sides down to ~64 significant bits before dividing.
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let ns = (nb - 64).max(0);
    let ds = (db - 64).max(0);
    let n = (num >> ns as usize).to_f64().unwrap_or(0.0);
    let d = (den >> ds as usize).to_f64().unwrap_or(1.0);
    let v = n / d * 2f64.powi((ns - ds) as i32);
    if neg {
        -v
    } else {
        v
    }
}

/// Rational from two counts.
pub fn ratio_of(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Integer part of a rational known to be a nonnegative integer.
///
/// Panics if `r` is not integral; every caller uses it on a sum that is
/// an integer by construction, so a failure means a transcription bug.
pub fn expect_count(r: &BigRational, what: &str) -> BigUint {
    assert!(r.is_integer(), "{what}: expected an integer, got {r}");
    r.to_integer()
        .to_biguint()
        .unwrap_or_else(|| panic!("{what}: expected a nonnegative integer, got {r}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_to_f64_handles_huge_operands() {
        let big = BigUint::from(10u32).pow(400);
        let r = ratio_of(&(&big * 3u32), &(&big * 4u32));
        assert!((ratio_to_f64(&r) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn inv_factorial_agrees_across_scalars() {
        let exact: BigRational = Scalar::inv_factorial(10);
        let approx: f64 = Scalar::inv_factorial(10);
        assert!((exact.approx_f64() - approx).abs() < 1e-18);
        assert_eq!(exact, BigRational::new(1.into(), 3628800.into()));
    }
}
