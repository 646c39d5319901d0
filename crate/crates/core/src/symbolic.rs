//! Counts and degrees as integer polynomials in `q`, where `s = q^2` and
//! `t = q^e`. With `e = 2 log_s t` in `0..=4` every quantity becomes an
//! honest polynomial, so identities can be checked coefficient by
//! coefficient and inequalities can be certified for all large `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::degrees::{k_min, upper_half, GraphKind};
use crate::{Error, Result};

/// Integer polynomial in `q`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(BigInt::one(), 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPolynomial::monomial(c.into(), 0)
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        QPolynomial { coeffs }
    }

    /// `q^a + c`
    fn binomial(a: u32, c: i64) -> Self {
        QPolynomial::monomial(BigInt::one(), a) + QPolynomial::constant(c)
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        pairs.into_iter().fold(QPolynomial::zero(), |acc, (k, c)| {
            acc + QPolynomial::monomial(c, k)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn coefficient(&self, k: u32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for k in (0..=deg).rev() {
            acc *= q;
            if let Some(c) = self.coeffs.get(&k) {
                acc += c;
            }
        }
        acc
    }

    fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.degree().map_or(0, |d| d as usize + 1)];
        for (k, c) in &self.coeffs {
            v[*k as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: Vec<BigInt>) -> Self {
        let coeffs = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c));
        QPolynomial {
            coeffs: coeffs.collect(),
        }
    }

    /// Exact quotient `self / divisor`; any remainder is an error.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let Some(db) = divisor.degree() else {
            return Err(Error::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        };
        let lead = divisor.leading_coefficient().expect("nonzero").clone();
        let b = divisor.to_dense();
        let mut a = self.to_dense();
        let db = db as usize;
        if a.len() <= db {
            return if self.is_zero() {
                Ok(QPolynomial::zero())
            } else {
                Err(Error::InexactDivision(format!("({self}) / ({divisor})")))
            };
        }
        let mut quot = vec![BigInt::zero(); a.len() - db];
        for top in (db..a.len()).rev() {
            if a[top].is_zero() {
                continue;
            }
            let (c, r) = a[top].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            let shift = top - db;
            for (k, bk) in b.iter().enumerate() {
                if !bk.is_zero() {
                    a[shift + k] -= &c * bk;
                }
            }
            quot[shift] = c;
        }
        if a.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        Ok(QPolynomial::from_dense(quot))
    }

    pub fn pow(&self, k: u32) -> QPolynomial {
        (0..k).fold(QPolynomial::one(), |acc, _| &acc * self)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let entry = coeffs.entry(*k).or_default();
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        QPolynomial { coeffs }
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let (Some(da), Some(db)) = (self.degree(), rhs.degree()) else {
            return QPolynomial::zero();
        };
        let mut out = vec![BigInt::zero(); (da + db) as usize + 1];
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                out[(ka + kb) as usize] += ca * cb;
            }
        }
        QPolynomial::from_dense(out)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> QPolynomial {
        iter.fold(QPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> QPolynomial {
        iter.fold(QPolynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Canonical form: descending exponents, `c*q^k` terms joined by ` + ` or
/// ` - `; the zero polynomial prints as `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.sign()) {
                (0, Sign::Minus) => f.write_str("-")?,
                (0, _) => {}
                (_, Sign::Minus) => f.write_str(" - ")?,
                (_, _) => f.write_str(" + ")?,
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

pub fn poly_equal(a: &QPolynomial, b: &QPolynomial) -> bool {
    a == b
}

/// The substitution `s = q^2`, `t = q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QSubst {
    e: u8,
}

impl QSubst {
    pub fn new(e: u8) -> Result<QSubst> {
        if e > 4 {
            return Err(Error::BadHalfLog(e));
        }
        Ok(QSubst { e })
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    /// `s^a`
    pub fn s_pow(&self, a: u32) -> QPolynomial {
        QPolynomial::monomial(BigInt::one(), 2 * a)
    }

    pub fn t(&self) -> QPolynomial {
        QPolynomial::monomial(BigInt::one(), self.e as u32)
    }

    /// `s` itself, as a polynomial in `q`.
    pub fn s(&self) -> QPolynomial {
        self.s_pow(1)
    }

    /// `s^a t + 1`
    pub fn st_plus_one(&self, a: u32) -> QPolynomial {
        QPolynomial::binomial(2 * a + self.e as u32, 1)
    }

    /// `s^a - 1`
    pub fn s_minus_one(&self, a: u32) -> QPolynomial {
        QPolynomial::binomial(2 * a, -1)
    }

    /// `prod_{u=lo}^{hi} (s^u t + 1)`, empty when `lo > hi`.
    fn prod_st_plus_one(&self, lo: i64, hi: i64) -> QPolynomial {
        (lo..=hi).map(|u| self.st_plus_one(u as u32)).product()
    }

    fn hyperplanes(&self, i: u32) -> Result<QPolynomial> {
        self.s_minus_one(i + 1).div_exact(&self.s_minus_one(1))
    }

    /// `q^2 = s`, i.e. the integer `q` to evaluate at for a square `s`.
    pub fn q_for(s: u64) -> Option<BigInt> {
        let r = s.isqrt();
        (r * r == s).then(|| BigInt::from(r))
    }
}

fn check(n: u32, e: u8, i: u32) -> Result<QSubst> {
    if n < 3 {
        return Err(Error::RankTooSmall(n as i64));
    }
    if i >= n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            max: n as i64 - 1,
        });
    }
    QSubst::new(e)
}

/// `|Delta_i|` as a polynomial in `q`.
pub fn poly_count(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    let x = check(n, e, i)?;
    let num: QPolynomial = (0..=i)
        .map(|u| &x.st_plus_one(n - u - 1) * &x.s_minus_one(n - u))
        .product();
    let den: QPolynomial = (0..=i).map(|u| x.s_minus_one(u + 1)).product();
    num.div_exact(&den)
}

/// `kappa_{i,k} = F_{i,k} G_{i,k}` as a polynomial.
pub fn poly_kappa_component(n: u32, e: u8, i: u32, k: i32) -> Result<QPolynomial> {
    let x = check(n, e, i)?;
    let lo = k_min(n, i);
    let hi = i as i32 - 1;
    if k < lo || k > hi {
        return Err(Error::BadIntersectionDim { i, k, lo, hi });
    }
    let (n, i, k) = (n as i64, i as i64, k as i64);
    let f = x.prod_st_plus_one(n - 2 * i + k - 1, n - i - 2);
    let quotient = |shift: i64, len: i64| -> Result<QPolynomial> {
        let num: QPolynomial = (1..=len)
            .map(|v| x.s_minus_one((shift + v) as u32))
            .product();
        let den: QPolynomial = (1..=len).map(|v| x.s_minus_one(v as u32)).product();
        num.div_exact(&den)
    };
    let g = x.s_pow(((i - k) * (i - k)) as u32)
        * quotient(i - k, k + 1)?
        * quotient(n - 2 * i + k - 1, i - k)?;
    Ok(f * g)
}

pub fn poly_kappa(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    check(n, e, i)?;
    (k_min(n, i)..i as i32)
        .map(|k| poly_kappa_component(n, e, i, k))
        .sum()
}

pub fn poly_lambda(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    let x = check(n, e, i)?;
    Ok(x.s_pow(2 * n - 2 * i - 2) * x.t() * x.hyperplanes(i)?)
}

pub fn poly_xi(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    let x = check(n, e, i)?;
    if !upper_half(n, i) || i == n - 1 {
        return Ok(QPolynomial::zero());
    }
    let r = n - i - 1;
    let num: QPolynomial = (n - i..=i + 1).map(|u| x.s_minus_one(u)).product();
    let den: QPolynomial = (1..=2 * i + 2 - n).map(|u| x.s_minus_one(u)).product();
    Ok(x.s_pow(r * r) * x.prod_st_plus_one(0, n as i64 - i as i64 - 2) * num.div_exact(&den)?)
}

pub fn poly_mu(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    let x = check(n, e, i)?;
    let residue_points =
        (&x.st_plus_one(n - i - 1) * &x.s_minus_one(n - i)).div_exact(&x.s_minus_one(1))?;
    Ok(x.hyperplanes(i)? * (residue_points - QPolynomial::one()))
}

pub fn poly_nu(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    let x = check(n, e, i)?;
    let c = ((&x.s_pow(n - i - 1) * &x.t() + x.s()) * x.s_minus_one(n - i - 1))
        .div_exact(&x.s_minus_one(1))?;
    Ok(x.hyperplanes(i)? * c)
}

pub fn poly_chi(n: u32, e: u8, i: u32) -> Result<QPolynomial> {
    Ok(poly_kappa(n, e, i)? + poly_lambda(n, e, i)?)
}

pub fn poly_degree(n: u32, e: u8, i: u32, g: GraphKind) -> Result<QPolynomial> {
    match g {
        GraphKind::Collinearity => poly_kappa(n, e, i),
        GraphKind::HyperplaneMeet => poly_mu(n, e, i),
        GraphKind::Union => poly_chi(n, e, i),
        GraphKind::Intersection => poly_nu(n, e, i),
        GraphKind::PerpMax => poly_xi(n, e, i),
    }
}

/// Upper end of the range of small `q` that [`eventual_sign`] tests directly.
pub const SMALL_Q_LIMIT: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignVerdict {
    /// Positive at every integer `q >= q0`.
    PositiveFor(BigUint),
    /// Negative at every integer `q >= q0`.
    NegativeFor(BigUint),
    IdenticallyZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCertificate {
    pub verdict: SignVerdict,
    /// Largest `q` evaluated directly (from `q = 2`); 1 if none were needed.
    pub checked_up_to: u64,
    /// Sign at every directly evaluated `q` agrees with the verdict.
    pub holds_for_small_q: bool,
}

impl SignCertificate {
    /// Sign certified for every integer `q >= 2`.
    pub fn certified_from_two(&self) -> bool {
        let q0 = match &self.verdict {
            SignVerdict::IdenticallyZero => return true,
            SignVerdict::PositiveFor(q0) | SignVerdict::NegativeFor(q0) => q0,
        };
        self.holds_for_small_q && *q0 <= BigUint::from(self.checked_up_to + 1)
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.verdict, SignVerdict::PositiveFor(_))
    }
}

/// `a(x + c)` by repeated synthetic division.
fn taylor_shift(a: &QPolynomial, c: &BigInt) -> Vec<BigInt> {
    let deg = a.degree().unwrap_or(0) as usize;
    let mut v: Vec<BigInt> = (0..=deg).map(|k| a.coefficient(k as u32)).collect();
    for lo in 0..deg {
        for k in (lo..deg).rev() {
            let carry = &v[k + 1] * c;
            v[k] += carry;
        }
    }
    v
}

/// Sign of `a` for all large integer `q`. The threshold `q0` is the first
/// `2 <= q0 <= SMALL_Q_LIMIT` at which every coefficient of `a(q0 + x)` has
/// the sign of the leading one, falling back to the Cauchy root bound
/// `1 + ceil(max |a_k| / |a_lead|)`. Values at `2 <= q < q0` are evaluated
/// directly up to [`SMALL_Q_LIMIT`].
pub fn eventual_sign(a: &QPolynomial) -> SignCertificate {
    let Some(lead) = a.leading_coefficient() else {
        return SignCertificate {
            verdict: SignVerdict::IdenticallyZero,
            checked_up_to: 1,
            holds_for_small_q: true,
        };
    };
    let positive = lead.is_positive();
    let agrees = |v: &BigInt| v.is_zero() || v.is_positive() == positive;
    let shifted = (2..=SMALL_Q_LIMIT)
        .find(|&c| taylor_shift(a, &BigInt::from(c)).iter().all(agrees))
        .map(BigUint::from);
    let q0 = shifted.unwrap_or_else(|| {
        let deg = a.degree().expect("nonzero");
        let max_lower = a
            .terms()
            .filter(|(k, _)| *k != deg)
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default();
        (max_lower.div_ceil(&lead.abs()) + 1u32)
            .to_biguint()
            .expect("nonnegative")
    });
    let upper = match u64::try_from(&q0) {
        Ok(q0) => q0.saturating_sub(1).min(SMALL_Q_LIMIT),
        Err(_) => SMALL_Q_LIMIT,
    };
    let holds = (2..=upper).all(|q| {
        let v = a.eval(&BigInt::from(q));
        if positive {
            v.is_positive()
        } else {
            v.is_negative()
        }
    });
    SignCertificate {
        verdict: if positive {
            SignVerdict::PositiveFor(q0)
        } else {
            SignVerdict::NegativeFor(q0)
        },
        checked_up_to: upper.max(1),
        holds_for_small_q: holds,
    }
}
