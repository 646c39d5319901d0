//! Degrees of the regular graphs on `Delta_i`.
//!
//! | kind             | relation on `Delta_i`             | degree |
//! |------------------|-----------------------------------|--------|
//! | `Collinearity`   | `X ⊥ Y`                           | kappa  |
//! | `HyperplaneMeet` | `dim(X ∩ Y) = i - 1`              | mu     |
//! | `Union`          | `⊥` or hyperplane meet            | chi    |
//! | `Intersection`   | `⊥` and hyperplane meet           | nu     |
//! | `PerpMax`        | `X ⊥ Y` and `<X, Y>` a generator  | xi     |
//!
//! `lambda` counts hyperplane-meet neighbours that are not collinear, so
//! `chi = kappa + lambda` and `mu = nu + lambda`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::count::{exact_div, gaussian_binomial, pow, s_minus_one, st_plus_one};
use crate::{census, Count, Error, PolarParams, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Collinearity,
    HyperplaneMeet,
    Union,
    Intersection,
    PerpMax,
}

impl GraphKind {
    pub const ALL: [GraphKind; 5] = [
        GraphKind::Collinearity,
        GraphKind::HyperplaneMeet,
        GraphKind::Union,
        GraphKind::Intersection,
        GraphKind::PerpMax,
    ];

    /// Name of the degree this graph kind carries.
    pub fn degree_name(self) -> &'static str {
        match self {
            GraphKind::Collinearity => "kappa",
            GraphKind::HyperplaneMeet => "mu",
            GraphKind::Union => "chi",
            GraphKind::Intersection => "nu",
            GraphKind::PerpMax => "xi",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Collinearity => "Collinearity",
            GraphKind::HyperplaneMeet => "HyperplaneMeet",
            GraphKind::Union => "Union",
            GraphKind::Intersection => "Intersection",
            GraphKind::PerpMax => "PerpMax",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = String;

    /// Accepts either the kind name or the degree name (`kappa`, `mu`, ...).
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        GraphKind::ALL
            .into_iter()
            .find(|g| g.degree_name() == lower || g.name().to_ascii_lowercase() == lower)
            .ok_or_else(|| format!("unknown graph kind `{s}`"))
    }
}

/// `kappa_i` split by the intersection dimension `k` of the two subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaDecomposition {
    pub i: u32,
    /// `(k, kappa_{i,k})` for `k = k_min(i), ..., i - 1`.
    pub terms: Vec<(i32, Count)>,
    pub total: Count,
}

/// Smallest possible `dim(I ∩ I')` for collinear `I, I'` in `Delta_i`:
/// `max(2i - n + 1, -1)`.
pub fn k_min(n: u32, i: u32) -> i32 {
    (2 * i as i32 - n as i32 + 1).max(-1)
}

/// `true` when `(n-2)/2 <= i`, the range where `k_min(i) = 2i - n + 1`.
pub fn upper_half(n: u32, i: u32) -> bool {
    2 * i + 2 >= n
}

fn prod_st_plus_one(s: u64, t: u64, lo: i64, hi: i64) -> BigUint {
    (lo..=hi).map(|u| st_plus_one(s, u as u32, t)).product()
}

/// `prod_{v=1}^{len} (s^{shift+v} - 1) / (s^v - 1)`
fn shifted_quotient(s: u64, shift: i64, len: i64, what: &str) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for v in 1..=len {
        num *= s_minus_one(s, (shift + v) as u32);
        den *= s_minus_one(s, v as u32);
    }
    exact_div(&num, &den, what)
}

fn check_k(p: &PolarParams, i: u32, k: i32) -> Result<()> {
    p.check_rank(i)?;
    let lo = k_min(p.n(), i);
    let hi = i as i32 - 1;
    if k < lo || k > hi {
        return Err(Error::BadIntersectionDim { i, k, lo, hi });
    }
    Ok(())
}

/// `kappa_{i,k}`: the number of `I' ⊥ I` in `Delta_i` with `dim(I ∩ I') = k`,
/// evaluated as `F_{i,k} G_{i,k}`.
pub fn kappa_component(p: &PolarParams, i: u32, k: i32) -> Result<Count> {
    check_k(p, i, k)?;
    let (n, s, t) = (p.n() as i64, p.s(), p.t());
    let (i, k) = (i as i64, k as i64);
    let f = prod_st_plus_one(s, t, n - 2 * i + k - 1, n - i - 2);
    let g = pow(s, ((i - k) * (i - k)) as u32)
        * shifted_quotient(s, i - k, k + 1, "G_{i,k} first quotient")
        * shifted_quotient(s, n - 2 * i + k - 1, i - k, "G_{i,k} second quotient");
    let value = f * g;
    debug_assert_eq!(value, kappa_component_abcd(p, i as u32, k as i32));
    Ok(value.into())
}

/// The same count as `A_{i,k} B_i C_{i,k} / D_{i,k}`: choose the
/// intersection inside `I`, a generator through `I`, the partner inside the
/// generator, and divide out the generators through `<I, I'>`.
fn kappa_component_abcd(p: &PolarParams, i: u32, k: i32) -> BigUint {
    let (n, s, t) = (p.n() as i64, p.s(), p.t());
    let (i, k) = (i as i64, k as i64);
    let a = gaussian_binomial(s, (i + 1) as u32, (k + 1) as u32);
    let b = prod_st_plus_one(s, t, 0, n - i - 2);
    let c = pow(s, ((i - k) * (i - k)) as u32)
        * gaussian_binomial(s, (n - i - 1) as u32, (i - k) as u32);
    let d = prod_st_plus_one(s, t, 0, n - 2 * i + k - 2);
    exact_div(&(a * b * c), &d, "A B C / D")
}

/// `kappa_i`, the degree of `(Delta_i, ⊥)`, with its per-`k` terms.
pub fn degree_kappa(p: &PolarParams, i: u32) -> Result<KappaDecomposition> {
    p.check_rank(i)?;
    let terms: Vec<(i32, Count)> = (k_min(p.n(), i)..i as i32)
        .map(|k| Ok((k, kappa_component(p, i, k)?)))
        .collect::<Result<_>>()?;
    let total = terms.iter().map(|(_, c)| c.clone()).sum();
    Ok(KappaDecomposition { i, terms, total })
}

/// `lambda_i = s^{2n-2i-2} t (s^{i+1} - 1) / (s - 1)`: hyperplane-meet
/// neighbours of `I` that are not collinear with it.
pub fn degree_lambda(p: &PolarParams, i: u32) -> Result<Count> {
    p.check_rank(i)?;
    let (n, s, t) = (p.n(), p.s(), p.t());
    let hyperplanes = exact_div(&s_minus_one(s, i + 1), &BigUint::from(s - 1), "A_i");
    Ok((pow(s, 2 * n - 2 * i - 2) * t * hyperplanes).into())
}

/// `chi_i = kappa_i + lambda_i`, the degree of `(Delta_i, ⊥ ∪ ≈)`.
pub fn degree_chi(p: &PolarParams, i: u32) -> Result<Count> {
    Ok(degree_kappa(p, i)?.total + degree_lambda(p, i)?)
}

/// `xi_i`, the degree of `(Delta_i, ⊥_max)`; zero for `i < (n-2)/2` and for
/// `i = n - 1`.
pub fn degree_xi(p: &PolarParams, i: u32) -> Result<Count> {
    p.check_rank(i)?;
    let n = p.n();
    if !upper_half(n, i) || i == n - 1 {
        return Ok(Count::zero());
    }
    let (s, t) = (p.s(), p.t());
    let generators = prod_st_plus_one(s, t, 0, n as i64 - i as i64 - 2);
    let num: BigUint = (n - i..=i + 1).map(|u| s_minus_one(s, u)).product();
    let den: BigUint = (1..=2 * i + 2 - n).map(|u| s_minus_one(s, u)).product();
    let r = n - i - 1;
    Ok((pow(s, r * r) * generators * exact_div(&num, &den, "xi_i")).into())
}

/// Number of hyperplanes of a projective `i`-space: `(s^{i+1} - 1)/(s - 1)`.
fn hyperplanes(s: u64, i: u32) -> BigUint {
    exact_div(&s_minus_one(s, i + 1), &BigUint::from(s - 1), "A_i")
}

/// `mu_i = A_i (B_i - 1)`, the degree of `(Delta_i, ≈)`.
pub fn degree_mu(p: &PolarParams, i: u32) -> Result<Count> {
    p.check_rank(i)?;
    let (n, s, t) = (p.n(), p.s(), p.t());
    let a = hyperplanes(s, i);
    let residue_points = exact_div(
        &(st_plus_one(s, n - i - 1, t) * s_minus_one(s, n - i)),
        &BigUint::from(s - 1),
        "B_i",
    );
    let value = a * (residue_points - 1u32);
    debug_assert_eq!(value, mu_expanded(p, i));
    Ok(value.into())
}

/// `s (s^{2n-2i-2} t - s^{n-i-2} t + s^{n-i-1} - 1) (s^{i+1} - 1) / (s - 1)^2`
/// with the leading `s` distributed so no exponent goes negative at `i = n-1`.
fn mu_expanded(p: &PolarParams, i: u32) -> BigUint {
    let (n, s, t) = (p.n(), p.s(), p.t());
    let b = |x: BigUint| BigInt::from(x);
    let bracket = b(pow(s, 2 * n - 2 * i - 1) * t) - b(pow(s, n - i - 1) * t) + b(pow(s, n - i))
        - BigInt::from(s);
    let num = bracket * b(s_minus_one(s, i + 1));
    let num = num.to_biguint().expect("mu numerator is nonnegative");
    exact_div(&num, &(BigUint::from(s - 1) * (s - 1)), "mu expanded")
}

/// `nu_i = A_i C_i`, the degree of `(Delta_i, ⊥ ∩ ≈)`, with
/// `C_i = (s^{n-i-2} t + 1) s (s^{n-i-1} - 1) / (s - 1)`.
pub fn degree_nu(p: &PolarParams, i: u32) -> Result<Count> {
    p.check_rank(i)?;
    let (n, s, t) = (p.n(), p.s(), p.t());
    // s (s^{n-i-2} t + 1) = s^{n-i-1} t + s
    let c = exact_div(
        &((pow(s, n - i - 1) * t + s) * s_minus_one(s, n - i - 1)),
        &BigUint::from(s - 1),
        "C_i",
    );
    Ok((hyperplanes(s, i) * c).into())
}

pub fn degree(p: &PolarParams, i: u32, g: GraphKind) -> Result<Count> {
    match g {
        GraphKind::Collinearity => Ok(degree_kappa(p, i)?.total),
        GraphKind::HyperplaneMeet => degree_mu(p, i),
        GraphKind::Union => degree_chi(p, i),
        GraphKind::Intersection => degree_nu(p, i),
        GraphKind::PerpMax => degree_xi(p, i),
    }
}

/// `|Delta_i|` and every degree at one rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDegrees {
    pub i: u32,
    pub count: Count,
    pub kappa: Count,
    pub lambda: Count,
    pub chi: Count,
    pub xi: Count,
    pub mu: Count,
    pub nu: Count,
}

impl RankDegrees {
    pub fn get(&self, g: GraphKind) -> &Count {
        match g {
            GraphKind::Collinearity => &self.kappa,
            GraphKind::HyperplaneMeet => &self.mu,
            GraphKind::Union => &self.chi,
            GraphKind::Intersection => &self.nu,
            GraphKind::PerpMax => &self.xi,
        }
    }
}

pub fn rank_degrees(p: &PolarParams, i: u32) -> Result<RankDegrees> {
    let kappa = degree_kappa(p, i)?.total;
    let lambda = degree_lambda(p, i)?;
    Ok(RankDegrees {
        i,
        count: census::count_rank(p, i)?,
        chi: &kappa + &lambda,
        kappa,
        lambda,
        xi: degree_xi(p, i)?,
        mu: degree_mu(p, i)?,
        nu: degree_nu(p, i)?,
    })
}

pub fn all_rank_degrees(p: &PolarParams) -> Vec<RankDegrees> {
    (0..p.n())
        .map(|i| rank_degrees(p, i).expect("rank in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate_params;

    fn p(n: i64, s: i64, t: i64) -> PolarParams {
        validate_params(n, s, t).unwrap()
    }

    fn poly(s: u64, f: impl Fn(u64) -> u64) -> Count {
        Count::from(f(s))
    }

    #[test]
    fn k_min_values() {
        assert_eq!(k_min(5, 2), 0);
        assert_eq!(k_min(5, 1), -1);
        assert_eq!(k_min(5, 3), 2);
        assert_eq!(k_min(5, 0), -1);
    }

    #[test]
    fn kappa_components() {
        for s in [2u64, 3, 5] {
            let q = p(5, s as i64, s as i64);
            let expected = poly(s, |s| s.pow(4) * (s + 1) * (s * s + 1) * (s * s + s + 1));
            assert_eq!(kappa_component(&q, 2, 0).unwrap(), expected);
        }
        // points collinear with a point of Sp(6,2)
        assert_eq!(kappa_component(&p(3, 2, 2), 0, -1).unwrap(), 30);
        let q = p(4, 3, 9);
        assert!(degree_kappa(&q, 3).unwrap().terms.is_empty());
        assert!(matches!(
            kappa_component(&q, 3, 2),
            Err(Error::BadIntersectionDim {
                i: 3,
                k: 2,
                lo: 3,
                hi: 2
            })
        ));
        assert!(kappa_component(&q, 1, -2).is_err());
    }

    #[test]
    fn rank_five_note_polynomials() {
        for s in [2u64, 3, 4, 7] {
            let q = p(5, s as i64, s as i64);
            let kappa2 = poly(s, |s| {
                s * (s + 1) * (s * s + 1) * (s.pow(3) + 1) * (s * s + s + 1)
            });
            let kappa3 = poly(s, |s| s * (s + 1).pow(2) * (s * s + 1));
            assert_eq!(degree_kappa(&q, 2).unwrap().total, kappa2);
            assert_eq!(degree_kappa(&q, 3).unwrap().total, kappa3);
            assert_eq!(degree_kappa(&q, 4).unwrap().total, 0);
            assert_eq!(
                degree_xi(&q, 2).unwrap(),
                poly(s, |s| s.pow(4) * (s + 1) * (s * s + 1) * (s * s + s + 1))
            );
            assert_eq!(degree_xi(&q, 3).unwrap(), kappa3);
            assert_eq!(
                degree_lambda(&q, 3).unwrap(),
                poly(s, |s| s.pow(3) * (s + 1) * (s * s + 1))
            );
            assert_eq!(
                degree_lambda(&q, 2).unwrap(),
                poly(s, |s| s.pow(5) * (s * s + s + 1))
            );
            assert_eq!(
                degree_chi(&q, 3).unwrap(),
                poly(s, |s| s * (s + 1).pow(2) * (s * s + 1)
                    + s.pow(3) * (s * s + 1) * (s + 1))
            );
        }
        let q = p(5, 2, 2);
        assert_eq!(degree_kappa(&q, 2).unwrap().total, 1890);
        assert_eq!(degree_kappa(&q, 3).unwrap().total, 90);
        assert_eq!(degree_xi(&q, 2).unwrap(), 1680);
    }

    #[test]
    fn chi_two_uses_lambda_not_the_printed_addend() {
        // kappa_2 + s^5 (s^2 + s + 1) and not kappa_2 + s^5 (s^3 + s + 1)
        let q = p(5, 2, 2);
        assert_eq!(degree_chi(&q, 2).unwrap(), 1890 + 224);
        assert_ne!(degree_chi(&q, 2).unwrap(), 1890 + 352);
    }

    #[test]
    fn sp6_2_degrees() {
        let q = p(3, 2, 2);
        assert_eq!(degree_lambda(&q, 0).unwrap(), 32);
        assert_eq!(degree_chi(&q, 0).unwrap(), 62);
        assert_eq!(degree_mu(&q, 2).unwrap(), 14);
        assert_eq!(degree_mu(&q, 0).unwrap(), 62);
        assert_eq!(degree_nu(&q, 0).unwrap(), 30);
        assert_eq!(degree(&q, 2, GraphKind::HyperplaneMeet).unwrap(), 14);
        assert_eq!(degree(&q, 2, GraphKind::Collinearity).unwrap(), 0);
    }

    #[test]
    fn boundary_values() {
        for (n, s, t) in [(3, 2, 1), (4, 3, 3), (6, 4, 8), (7, 9, 3), (5, 2, 4)] {
            let q = p(n, s, t);
            let top = q.n() - 1;
            let d0 = census::count_rank(&q, 0).unwrap();
            assert_eq!(degree_kappa(&q, top).unwrap().total, 0);
            assert_eq!(degree_xi(&q, top).unwrap(), 0);
            assert_eq!(degree_nu(&q, top).unwrap(), 0);
            assert_eq!(degree_chi(&q, 0).unwrap(), d0.pred());
            assert_eq!(degree_mu(&q, 0).unwrap(), d0.pred());
            assert_eq!(
                degree_nu(&q, 0).unwrap(),
                degree_kappa(&q, 0).unwrap().total
            );
        }
        let q = p(8, 3, 3);
        assert_eq!(degree_xi(&q, 2).unwrap(), 0);
        assert_ne!(degree_xi(&q, 3).unwrap(), 0);
    }

    #[test]
    fn dispatch_matches() {
        let q = p(5, 2, 2);
        assert_eq!(degree(&q, 2, GraphKind::PerpMax).unwrap(), 1680);
        assert_eq!(degree(&q, 4, GraphKind::Collinearity).unwrap(), 0);
        let rd = rank_degrees(&q, 1).unwrap();
        for g in GraphKind::ALL {
            assert_eq!(rd.get(g), &degree(&q, 1, g).unwrap());
        }
    }

    #[test]
    fn graph_kind_names() {
        assert_eq!(
            "kappa".parse::<GraphKind>().unwrap(),
            GraphKind::Collinearity
        );
        assert_eq!("PerpMax".parse::<GraphKind>().unwrap(), GraphKind::PerpMax);
        assert!("sigma".parse::<GraphKind>().is_err());
    }
}
