//! Arbitrary-precision nonnegative counts and the small set of exact
//! integer helpers the closed forms are built from.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// An exact nonnegative integer: a subspace count or a graph degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// Returns `self - 1`, saturating at zero.
    pub fn pred(&self) -> Count {
        if self.0.is_zero() {
            Count::zero()
        } else {
            Count(&self.0 - 1u32)
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        (&self.0).try_into().ok()
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<Count> for BigUint {
    fn from(c: Count) -> Self {
        c.0
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for &'a Count {
    type Output = Count;
    fn add(self, rhs: &Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl std::iter::Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        Count(iter.map(|c| c.0).sum())
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Count)
    }
}

/// `base^exp` as a big integer.
pub(crate) fn pow(base: u64, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `s^a * t + 1`.
pub(crate) fn st_plus_one(s: u64, a: u32, t: u64) -> BigUint {
    pow(s, a) * t + 1u32
}

/// `s^a - 1`; zero when `a = 0`.
pub(crate) fn s_minus_one(s: u64, a: u32) -> BigUint {
    pow(s, a) - 1u32
}

/// Quotient of an exact division. A nonzero remainder means a formula was
/// transcribed wrongly, so it panics with the offending operands.
pub(crate) fn exact_div(num: &BigUint, den: &BigUint, what: &str) -> BigUint {
    assert!(!den.is_zero(), "{what}: zero denominator");
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: {num} is not divisible by {den}");
    q
}

/// Gaussian binomial `[m choose k]_s` via the product
/// `prod_{v=1}^{k} (s^{m-k+v} - 1) / (s^v - 1)`.
pub(crate) fn gaussian_binomial(s: u64, m: u32, k: u32) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for v in 1..=k {
        num *= s_minus_one(s, m - k + v);
        den *= s_minus_one(s, v);
    }
    exact_div(&num, &den, "gaussian binomial")
}
