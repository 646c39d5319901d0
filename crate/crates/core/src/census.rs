//! `|Delta_i|`, the number of singular subspaces of projective dimension `i`,
//! together with the rank-to-rank ratio, `i_max` and the shape of
//! `i -> |Delta_i|`.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::count::{exact_div, s_minus_one, st_plus_one};
use crate::{Count, PolarParams, Result};

/// Direction of one step `i -> i + 1` of the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    pub fn symbol(self) -> &'static str {
        match self {
            Step::Up => "Up",
            Step::Down => "Down",
            Step::Flat => "Flat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub counts: Vec<Count>,
    /// Ranks where the count is maximal, ascending.
    pub argmax: Vec<u32>,
    /// `pattern[i]` compares `counts[i + 1]` with `counts[i]`.
    pub pattern: Vec<Step>,
}

impl Profile {
    /// No `Up` step after a `Down` step.
    pub fn is_unimodal(&self) -> bool {
        let first_down = self.pattern.iter().position(|&s| s == Step::Down);
        match first_down {
            Some(d) => self.pattern[d..].iter().all(|&s| s == Step::Down),
            None => true,
        }
    }
}

/// `|Delta_i| = prod_{u=0}^{i} (s^{n-u-1} t + 1)(s^{n-u} - 1) / (s^{u+1} - 1)`.
pub fn count_rank(p: &PolarParams, i: u32) -> Result<Count> {
    p.check_rank(i)?;
    let (n, s, t) = (p.n(), p.s(), p.t());
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for u in 0..=i {
        num *= st_plus_one(s, n - u - 1, t) * s_minus_one(s, n - u);
        den *= s_minus_one(s, u + 1);
    }
    Ok(exact_div(&num, &den, "count_rank").into())
}

/// All counts `|Delta_0|, ..., |Delta_{n-1}|`.
pub fn counts(p: &PolarParams) -> Vec<Count> {
    (0..p.n())
        .map(|i| count_rank(p, i).expect("rank in range"))
        .collect()
}

/// `|Delta_{i+1}| / |Delta_i|` as a reduced rational, for `0 <= i <= n - 2`.
pub fn count_ratio(p: &PolarParams, i: u32) -> Result<BigRational> {
    if i + 1 >= p.n() {
        return Err(crate::Error::IndexOutOfRange {
            index: i as i64,
            max: p.n() as i64 - 2,
        });
    }
    let (n, s, t) = (p.n(), p.s(), p.t());
    let j = i + 1;
    let num = st_plus_one(s, n - j - 1, t) * s_minus_one(s, n - j);
    let den = s_minus_one(s, j + 1);
    Ok(BigRational::new(num.into(), den.into()))
}

/// The rank at which the census peaks:
/// `floor((2n - 2 + log_s t) / 3)` if `t <= s`, and
/// `ceil((2n - 2 + log_s t) / 3) - 1` if `s < t`.
pub fn i_max(p: &PolarParams) -> u32 {
    // (2n - 2 + e/2) / 3 = (4n - 4 + e) / 6
    let num = 4 * p.n() as u64 - 4 + p.e() as u64;
    if p.e() <= 2 {
        (num / 6) as u32
    } else {
        (num.div_ceil(6) - 1) as u32
    }
}

/// `true` in the case with two adjacent maxima: `s = t` and `2n = 1 mod 3`.
pub fn has_flat_step(p: &PolarParams) -> bool {
    p.e() == 2 && (2 * p.n() as u64) % 3 == 1
}

pub fn profile(p: &PolarParams) -> Profile {
    let counts = counts(p);
    let pattern = counts
        .windows(2)
        .map(|w| match w[1].cmp(&w[0]) {
            std::cmp::Ordering::Greater => Step::Up,
            std::cmp::Ordering::Less => Step::Down,
            std::cmp::Ordering::Equal => Step::Flat,
        })
        .collect();
    let max = counts.iter().max().expect("n >= 3").clone();
    let argmax = (0..p.n()).filter(|&i| counts[i as usize] == max).collect();
    Profile {
        counts,
        argmax,
        pattern,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::params_from_e;
    use crate::validate_params;
    use num_bigint::BigInt;

    fn p(n: i64, s: i64, t: i64) -> PolarParams {
        validate_params(n, s, t).unwrap()
    }

    #[test]
    fn sp6_2_counts() {
        // Sp(6,2): 63 points, 315 lines, 135 planes (enumerated by the oracle crate)
        let q = p(3, 2, 2);
        assert_eq!(count_rank(&q, 0).unwrap(), 63);
        assert_eq!(count_rank(&q, 1).unwrap(), 315);
        assert_eq!(count_rank(&q, 2).unwrap(), 135);
        assert!(count_rank(&q, 3).is_err());
    }

    #[test]
    fn rank_five_plateau() {
        let q = p(5, 2, 2);
        assert_eq!(count_rank(&q, 2).unwrap(), 782_595);
        assert_eq!(count_rank(&q, 3).unwrap(), 782_595);
        assert!(count_ratio(&q, 2).unwrap().is_one());
    }

    #[test]
    fn ratios() {
        let q = p(3, 2, 2);
        assert_eq!(
            count_ratio(&q, 0).unwrap(),
            BigRational::from_integer(BigInt::from(5))
        );
        assert_eq!(
            count_ratio(&q, 1).unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(7))
        );
        assert!(count_ratio(&q, 2).is_err());
        for s in [3, 4, 9] {
            assert!(count_ratio(&p(5, s, s), 2).unwrap().is_one());
        }
    }

    #[test]
    fn i_max_branches() {
        assert_eq!(i_max(&params_from_e(5, 2, 2).unwrap()), 3);
        assert_eq!(i_max(&params_from_e(4, 2, 4).unwrap()), 2);
        assert_eq!(i_max(&params_from_e(6, 2, 0).unwrap()), 3);
        assert_eq!(i_max(&params_from_e(4, 4, 3).unwrap()), 2);
    }

    #[test]
    fn profiles() {
        let pr = profile(&p(5, 2, 2));
        assert_eq!(pr.argmax, vec![2, 3]);
        assert_eq!(pr.pattern, vec![Step::Up, Step::Up, Step::Flat, Step::Down]);
        let pr = profile(&p(3, 2, 2));
        assert_eq!(pr.argmax, vec![1]);
        assert_eq!(pr.pattern, vec![Step::Up, Step::Down]);
        // counts 495, 19635, 75735, 25245
        let q = p(4, 2, 4);
        let pr = profile(&q);
        assert_eq!(pr.argmax, vec![2]);
        assert_eq!(pr.argmax, vec![i_max(&q)]);
        assert_eq!(pr.counts[3], 25_245);
    }
}
