//! Parameters `(n, s, t)` of a finite polar space of rank `n` and order
//! `(s, ..., s, t)`.
//!
//! `t` is always one of `1, s^{1/2}, s, s^{3/2}, s^2`. We store the doubled
//! logarithm `e = 2 log_s t` so that every later formula stays integral.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::count::pow;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolarParams {
    n: u32,
    s: u64,
    t: u64,
    e: u8,
}

impl PolarParams {
    /// Rank of the polar space.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `e = 2 log_s t`, in `0..=4`.
    pub fn e(&self) -> u8 {
        self.e
    }

    pub fn half_log(&self) -> HalfLog {
        HalfLog { numerator: self.e }
    }

    /// Checks `0 <= i <= n - 1`.
    pub fn check_rank(&self, i: u32) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i as i64,
                max: self.n as i64 - 1,
            })
        }
    }

    /// Parameters with the same `(s, t)` and a different rank.
    pub fn with_rank(&self, n: u32) -> Result<PolarParams> {
        if n < 3 {
            return Err(Error::RankTooSmall(n as i64));
        }
        Ok(PolarParams { n, ..*self })
    }
}

impl fmt::Display for PolarParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, s={}, t={}, e={})",
            self.n, self.s, self.t, self.e
        )
    }
}

/// `log_s t` as the exact rational `numerator / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfLog {
    numerator: u8,
}

impl HalfLog {
    pub fn new(numerator: u8) -> Option<HalfLog> {
        (numerator <= 4).then_some(HalfLog { numerator })
    }

    pub fn numerator(&self) -> u8 {
        self.numerator
    }

    pub const fn denominator(&self) -> u8 {
        2
    }

    /// Twice the value, i.e. `e`.
    pub fn doubled(&self) -> i64 {
        self.numerator as i64
    }

    pub fn is_integral(&self) -> bool {
        self.numerator.is_multiple_of(2)
    }
}

impl PartialOrd for HalfLog {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfLog {
    fn cmp(&self, other: &Self) -> Ordering {
        self.numerator.cmp(&other.numerator)
    }
}

impl fmt::Display for HalfLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.numerator / 2)
        } else {
            write!(f, "{}/2", self.numerator)
        }
    }
}

/// Validates raw `(n, s, t)` and recovers `e` from `t^2 = s^e`.
///
/// Works for any `i64` input; large magnitudes go through big integers.
pub fn validate_params(n: i64, s: i64, t: i64) -> Result<PolarParams> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    let n32 = u32::try_from(n).map_err(|_| Error::RankTooLarge(n))?;
    if s < 2 {
        return Err(Error::BadLineOrder(s));
    }
    if t < 1 {
        return Err(Error::BadTopOrder { s, t });
    }
    let t_sq = BigUint::from(t as u64) * (t as u64);
    let e = (0u32..=4)
        .find(|&e| pow(s as u64, e) == t_sq)
        .ok_or(Error::BadTopOrder { s, t })?;
    // t^2 = s^e with e odd already forces s to be a perfect square.
    Ok(PolarParams {
        n: n32,
        s: s as u64,
        t: t as u64,
        e: e as u8,
    })
}

pub fn half_log(p: &PolarParams) -> HalfLog {
    p.half_log()
}

/// `true` when `s` is a perfect square (needed for odd `e`).
pub fn is_square(s: u64) -> bool {
    let r = s.isqrt();
    r * r == s
}

/// The `t` paired with `s` for a given `e`, if `s` is admissible for it.
pub fn top_order(s: u64, e: u8) -> Option<u64> {
    if s < 2 || e > 4 {
        return None;
    }
    let root = if e % 2 == 1 {
        if !is_square(s) {
            return None;
        }
        s.isqrt()
    } else {
        s
    };
    let exp = if e % 2 == 1 { e as u32 } else { e as u32 / 2 };
    root.checked_pow(exp)
}

/// Convenience constructor from `(n, s, e)`.
pub fn params_from_e(n: u32, s: u64, e: u8) -> Result<PolarParams> {
    let t = top_order(s, e).ok_or(Error::NoValidS(e))?;
    validate_params(n as i64, s as i64, t as i64)
}

/// `true` when `s` is a prime power.
pub fn is_prime_power(s: u64) -> bool {
    if s < 2 {
        return false;
    }
    let mut p = 2u64;
    let mut m = s;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}
