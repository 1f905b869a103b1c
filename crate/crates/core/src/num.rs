//! Scalar abstraction and deterministic sampling.
//!
//! Everything in this crate is computed exactly: lattice data over an
//! integer scalar `I`, spectral and structure-constant data over the
//! fraction field `Rat<I>`. The default instantiation is `i64` (see the
//! aliases at the crate root); any big-integer type satisfying [`Scalar`]
//! works as a drop-in replacement.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar. Implemented by `i64`, `i128`, `num_bigint::BigInt`, …
///
/// Floating-point types are deliberately excluded: radical bases, sign
/// cocycles and structure constants are only meaningful exactly.
pub trait Scalar:
    Integer + Signed + FromPrimitive + ToPrimitive + Clone + Hash + Debug + Display
{
}

impl<T> Scalar for T where
    T: Integer + Signed + FromPrimitive + ToPrimitive + Clone + Hash + Debug + Display
{
}

/// Exact rational over the integer scalar `I`.
pub type Rat<I> = Ratio<I>;

/// Shorthand for converting small literals into a generic scalar.
#[inline]
pub fn int<I: Scalar>(v: i64) -> I {
    I::from_i64(v).expect("small literal must fit the scalar type")
}

/// Rational from an integer literal.
#[inline]
pub fn rat<I: Scalar>(v: i64) -> Rat<I> {
    Ratio::from_integer(int(v))
}

/// SplitMix64: tiny deterministic generator for the seeded suites.
///
/// The verification reports must be byte-identical across platforms and
/// library versions, so we do not depend on an external RNG crate here.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform draw from the inclusive range `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Derive an independent stream; used for retry paths.
    pub fn fork(&mut self, salt: u64) -> SplitMix64 {
        SplitMix64::new(self.next_u64() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn range_stays_in_bounds() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let v = rng.range(-3, 3);
            assert!((-3..=3).contains(&v));
        }
    }
}
