//! Exact checks of the comparison results for `|Delta_i|` and the degrees,
//! reproduction of the two sign tables for `|Delta_i|` against
//! `|Delta_{n-2}|`, and exhaustive searches for equal counts.
//!
//! Every inequality involving `log_s t` is evaluated on doubled integers:
//! `2 (2n + log_s t) = 4n + e`.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::census::{self, has_flat_step, i_max, Step};
use crate::degrees::{self, k_min, upper_half, GraphKind, RankDegrees};
use crate::params::{params_from_e, top_order};
use crate::{Count, Error, PolarParams, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparisonVerdict {
    Greater,
    Equal,
    Less,
}

impl ComparisonVerdict {
    pub fn symbol(self) -> char {
        match self {
            ComparisonVerdict::Greater => '>',
            ComparisonVerdict::Equal => '=',
            ComparisonVerdict::Less => '<',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '>' => Some(ComparisonVerdict::Greater),
            '=' => Some(ComparisonVerdict::Equal),
            '<' => Some(ComparisonVerdict::Less),
            _ => None,
        }
    }
}

impl From<Ordering> for ComparisonVerdict {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Greater => ComparisonVerdict::Greater,
            Ordering::Equal => ComparisonVerdict::Equal,
            Ordering::Less => ComparisonVerdict::Less,
        }
    }
}

impl fmt::Display for ComparisonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

fn check_pair(p: &PolarParams, i: u32, j: u32) -> Result<()> {
    if i >= j {
        return Err(Error::BadPair { i, j });
    }
    p.check_rank(j)
}

/// Compares `|Delta_i|` with `|Delta_j|` for `i < j`.
pub fn compare_counts(p: &PolarParams, i: u32, j: u32) -> Result<ComparisonVerdict> {
    check_pair(p, i, j)?;
    Ok(census::count_rank(p, i)?
        .cmp(&census::count_rank(p, j)?)
        .into())
}

/// Necessary conditions on `(i, j)` for the counts to compare a given way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCondition {
    /// `2n + log_s t < 3(i + j + 3)/2`; forced by `|Delta_i| >= |Delta_j|`.
    SumUpper,
    /// `2n + log_s t > 3(i + j + 1)/2`; forced by `|Delta_i| <= |Delta_j|`.
    SumLower,
    /// `2n - 4 + log_s t >= 2i + j`; forced by `|Delta_i| <= |Delta_j|`.
    FirstIndex,
    /// `2n - 3 + log_s t <= i + 2j`; forced by `|Delta_i| >= |Delta_j|`.
    SecondIndex,
    /// `2n + log_s t - 2 >= 3(i + j)/2`; forced by equality.
    MeanWindowUpper,
    /// `3(i + j)/2 >= 2n + log_s t - 4`; forced by equality.
    MeanWindowLower,
    /// `2i + j + 4 <= 2n + log_s t <= i + 2j + 3`; forced by equality.
    WeightedChain,
}

impl BoundCondition {
    pub const ALL: [BoundCondition; 7] = [
        BoundCondition::SumUpper,
        BoundCondition::SumLower,
        BoundCondition::FirstIndex,
        BoundCondition::SecondIndex,
        BoundCondition::MeanWindowUpper,
        BoundCondition::MeanWindowLower,
        BoundCondition::WeightedChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundCondition::SumUpper => "sum_upper",
            BoundCondition::SumLower => "sum_lower",
            BoundCondition::FirstIndex => "first_index",
            BoundCondition::SecondIndex => "second_index",
            BoundCondition::MeanWindowUpper => "mean_window_upper",
            BoundCondition::MeanWindowLower => "mean_window_lower",
            BoundCondition::WeightedChain => "weighted_chain",
        }
    }

    /// Evaluates the condition exactly, with `x2 = 4n + e = 2(2n + log_s t)`.
    pub fn holds(self, p: &PolarParams, i: u32, j: u32) -> bool {
        let x2 = 4 * p.n() as i64 + p.e() as i64;
        let (i, j) = (i as i64, j as i64);
        match self {
            BoundCondition::SumUpper => x2 < 3 * (i + j + 3),
            BoundCondition::SumLower => x2 > 3 * (i + j + 1),
            BoundCondition::FirstIndex => x2 - 8 >= 2 * (2 * i + j),
            BoundCondition::SecondIndex => x2 - 6 <= 2 * (i + 2 * j),
            BoundCondition::MeanWindowUpper => x2 - 4 >= 3 * (i + j),
            BoundCondition::MeanWindowLower => 3 * (i + j) >= x2 - 8,
            BoundCondition::WeightedChain => 2 * (2 * i + j + 4) <= x2 && x2 <= 2 * (i + 2 * j + 3),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub i: u32,
    pub j: u32,
    pub conditions: Vec<(BoundCondition, bool)>,
}

impl BoundReport {
    pub fn holds(&self, c: BoundCondition) -> bool {
        self.conditions.iter().any(|&(k, h)| k == c && h)
    }

    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|&(_, h)| h)
    }
}

pub fn necessary_conditions(p: &PolarParams, i: u32, j: u32) -> Result<BoundReport> {
    check_pair(p, i, j)?;
    let conditions = BoundCondition::ALL
        .into_iter()
        .map(|c| (c, c.holds(p, i, j)))
        .collect();
    Ok(BoundReport { i, j, conditions })
}

/// `false` only when `|Delta_i| = |Delta_j|` is ruled out by the four
/// one-sided bounds.
pub fn equality_possible(p: &PolarParams, i: u32, j: u32) -> bool {
    [
        BoundCondition::SumUpper,
        BoundCondition::SumLower,
        BoundCondition::FirstIndex,
        BoundCondition::SecondIndex,
    ]
    .into_iter()
    .all(|c| c.holds(p, i, j))
}

/// Which of the two `|Delta_i|` vs `|Delta_{n-2}|` tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableParity {
    /// `(n, i) = (2m, m - 1)`
    Even,
    /// `(n, i) = (2m + 1, m)`
    Odd,
}

impl TableParity {
    pub fn shape(self, m: u32) -> (u32, u32) {
        match self {
            TableParity::Even => (2 * m, m - 1),
            TableParity::Odd => (2 * m + 1, m),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableParity::Even => "even",
            TableParity::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCell {
    pub e: u8,
    pub per_s: Vec<(u64, ComparisonVerdict)>,
}

impl SignCell {
    /// The common verdict, or `None` when it depends on `s`.
    pub fn verdict(&self) -> Option<ComparisonVerdict> {
        let first = self.per_s.first()?.1;
        self.per_s.iter().all(|&(_, v)| v == first).then_some(first)
    }

    pub fn s_dependent(&self) -> bool {
        self.verdict().is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignRow {
    pub m: u32,
    pub n: u32,
    pub i: u32,
    /// Indexed by `e = 0..=4`.
    pub cells: Vec<SignCell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    pub parity: TableParity,
    pub rows: Vec<SignRow>,
}

impl SignTable {
    pub fn cell(&self, m: u32, e: u8) -> Option<&SignCell> {
        self.rows.iter().find(|r| r.m == m)?.cells.get(e as usize)
    }

    /// Cells whose verdict changes with `s`, as `(m, e)`.
    pub fn s_dependent_cells(&self) -> Vec<(u32, u8)> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.cells
                    .iter()
                    .filter(|c| c.s_dependent())
                    .map(move |c| (r.m, c.e))
            })
            .collect()
    }

    /// One line per row: `m` followed by the five verdict symbols
    /// (`?` for an s-dependent cell).
    pub fn render(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r
                    .cells
                    .iter()
                    .map(|c| c.verdict().map_or('?', |v| v.symbol()).to_string())
                    .collect();
                format!("{} {}", r.m, cells.join(" "))
            })
            .collect()
    }
}

pub const TABLE_ROWS: std::ops::RangeInclusive<u32> = 2..=5;

/// Both tables comparing `|Delta_i|` with `|Delta_{n-2}|`, rows `m = 2..=5`,
/// columns `e = 0..=4`, evaluated at every admissible `s` in `s_values`.
pub fn special_case_tables(s_values: &[u64]) -> Result<(SignTable, SignTable)> {
    for e in 0..=4u8 {
        if !s_values.iter().any(|&s| top_order(s, e).is_some()) {
            return Err(Error::NoValidS(e));
        }
    }
    let table = |parity: TableParity| -> Result<SignTable> {
        let rows = TABLE_ROWS
            .map(|m| {
                let (n, i) = parity.shape(m);
                let cells = (0..=4u8)
                    .map(|e| {
                        let per_s = s_values
                            .iter()
                            .filter(|&&s| top_order(s, e).is_some())
                            .map(|&s| {
                                let p = params_from_e(n, s, e)?;
                                Ok((s, compare_counts(&p, i, n - 2)?))
                            })
                            .collect::<Result<_>>()?;
                        Ok(SignCell { e, per_s })
                    })
                    .collect::<Result<_>>()?;
                Ok(SignRow { m, n, i, cells })
            })
            .collect::<Result<_>>()?;
        Ok(SignTable { parity, rows })
    };
    Ok((table(TableParity::Even)?, table(TableParity::Odd)?))
}

/// A rectangular parameter grid; inadmissible `(s, e)` combinations are
/// skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub n_min: u32,
    pub n_max: u32,
    pub e_set: Vec<u8>,
    pub s_set: Vec<u64>,
}

impl Default for Grid {
    /// `3 <= n <= 12`, every `e`, `s` in `{2, 3, 4, 9}`.
    fn default() -> Self {
        Grid {
            n_min: 3,
            n_max: 12,
            e_set: vec![0, 1, 2, 3, 4],
            s_set: vec![2, 3, 4, 9],
        }
    }
}

impl Grid {
    pub fn up_to(n_max: u32) -> Self {
        Grid {
            n_max,
            ..Grid::default()
        }
    }

    pub fn with_s(mut self, s_set: Vec<u64>) -> Self {
        self.s_set = s_set;
        self
    }

    /// Admissible points in `(n, e, s)` lexicographic order.
    pub fn points(&self) -> Vec<PolarParams> {
        let mut out = Vec::new();
        for n in self.n_min.max(3)..=self.n_max {
            for &e in &self.e_set {
                for &s in &self.s_set {
                    if let Ok(p) = params_from_e(n, s, e) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceHit {
    pub params: PolarParams,
    pub i: u32,
    pub j: u32,
    pub value: Count,
    /// Filled in by [`annotate_hits`]: whether `theta_i = theta_j`.
    pub degree_equal: Vec<(GraphKind, bool)>,
}

fn hits_at(p: &PolarParams, use_pruning: bool) -> Vec<CoincidenceHit> {
    let counts = census::counts(p);
    let mut hits = Vec::new();
    for j in 1..p.n() {
        for i in 0..j {
            if use_pruning && !equality_possible(p, i, j) {
                continue;
            }
            if counts[i as usize] == counts[j as usize] {
                hits.push(CoincidenceHit {
                    params: *p,
                    i,
                    j,
                    value: counts[i as usize].clone(),
                    degree_equal: Vec::new(),
                });
            }
        }
    }
    hits.sort_by_key(|h| (h.i, h.j));
    hits
}

/// Every `i < j` with `|Delta_i| = |Delta_j|` on the grid, in
/// `(n, e, s, i, j)` order. Pruning skips pairs excluded by the one-sided
/// bounds and must not change the result.
pub fn search_coincidences(grid: &Grid, use_pruning: bool) -> Vec<CoincidenceHit> {
    grid.points()
        .par_iter()
        .map(|p| hits_at(p, use_pruning))
        .collect::<Vec<_>>()
        .concat()
}

pub fn annotate_hits(hits: &mut [CoincidenceHit], kinds: &[GraphKind]) {
    hits.par_iter_mut().for_each(|h| {
        h.degree_equal = kinds
            .iter()
            .map(|&g| {
                let di = degrees::degree(&h.params, h.i, g).expect("rank in range");
                let dj = degrees::degree(&h.params, h.j, g).expect("rank in range");
                (g, di == dj)
            })
            .collect();
    });
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub hit: CoincidenceHit,
    pub kind: GraphKind,
}

/// Pairs with `|Delta_i| = |Delta_j|` and `theta_i = theta_j` for some
/// requested degree `theta`.
pub fn search_conjecture(grid: &Grid, kinds: &[GraphKind]) -> Vec<ConjectureViolation> {
    if kinds.is_empty() {
        return Vec::new();
    }
    let mut hits = search_coincidences(grid, true);
    annotate_hits(&mut hits, kinds);
    hits.into_iter()
        .flat_map(|h| {
            let kinds: Vec<GraphKind> = h
                .degree_equal
                .iter()
                .filter(|(_, eq)| *eq)
                .map(|(g, _)| *g)
                .collect();
            kinds.into_iter().map(move |kind| ConjectureViolation {
                hit: h.clone(),
                kind,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionCheck {
    pub name: &'static str,
    pub claim: &'static str,
    /// Number of instances the claim was evaluated on; 0 means vacuous.
    pub instances: usize,
    pub counterexamples: Vec<String>,
}

impl PropositionCheck {
    fn new(name: &'static str, claim: &'static str) -> Self {
        PropositionCheck {
            name,
            claim,
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.counterexamples.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    pub params: PolarParams,
    pub checks: Vec<PropositionCheck>,
}

impl PropositionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&PropositionCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Instantiates every comparison claim on its full `(i, j)` range at `p`
/// and checks it with exact integers.
pub fn verify_propositions(p: &PolarParams) -> PropositionReport {
    let n = p.n();
    let e = p.e() as i64;
    let rd: Vec<RankDegrees> = degrees::all_rank_degrees(p);
    let at = |i: u32| &rd[i as usize];
    let delta = |i: u32| &rd[i as usize].count;
    let upper_start = n.saturating_sub(1) / 2; // ceil((n-2)/2)
    let mut checks = Vec::new();

    let mut c = PropositionCheck::new(
        "census_unimodal",
        "|Delta_i| rises up to i_max and falls after it; a single flat step i_max-1 -> i_max iff s = t and 2n = 1 mod 3",
    );
    let prof = census::profile(p);
    let peak = i_max(p);
    let flat = has_flat_step(p);
    let expected_argmax = if flat {
        vec![peak - 1, peak]
    } else {
        vec![peak]
    };
    c.expect(prof.argmax == expected_argmax, || {
        format!(
            "{p}: argmax {:?}, expected {:?}",
            prof.argmax, expected_argmax
        )
    });
    let rise = if flat { peak - 1 } else { peak } as usize;
    let expected_pattern: Vec<Step> = (0..n as usize - 1)
        .map(|k| {
            if k < rise {
                Step::Up
            } else if flat && k == rise {
                Step::Flat
            } else {
                Step::Down
            }
        })
        .collect();
    c.expect(prof.pattern == expected_pattern, || {
        format!(
            "{p}: pattern {:?}, expected {:?}",
            prof.pattern, expected_pattern
        )
    });
    c.expect(prof.is_unimodal(), || format!("{p}: not unimodal"));
    checks.push(c);

    let mut c = PropositionCheck::new(
        "count_bounds",
        "|Delta_i| >= |Delta_j| forces sum_upper and second_index; |Delta_i| <= |Delta_j| forces sum_lower and first_index",
    );
    for j in 1..n {
        for i in 0..j {
            let ord = delta(i).cmp(delta(j));
            if ord != Ordering::Less {
                for b in [BoundCondition::SumUpper, BoundCondition::SecondIndex] {
                    c.expect(b.holds(p, i, j), || {
                        format!("{p}: i={i} j={j} violates {}", b.name())
                    });
                }
            }
            if ord != Ordering::Greater {
                for b in [BoundCondition::SumLower, BoundCondition::FirstIndex] {
                    c.expect(b.holds(p, i, j), || {
                        format!("{p}: i={i} j={j} violates {}", b.name())
                    });
                }
            }
            if ord == Ordering::Equal {
                for b in [
                    BoundCondition::MeanWindowUpper,
                    BoundCondition::MeanWindowLower,
                    BoundCondition::WeightedChain,
                ] {
                    c.expect(b.holds(p, i, j), || {
                        format!("{p}: i={i} j={j} violates {}", b.name())
                    });
                }
            }
        }
    }
    checks.push(c);

    let mut c = PropositionCheck::new(
        "next_to_top_equality",
        "for (n-2)/2 <= i < n-2: |Delta_i| = |Delta_{n-2}| iff n = 5, i = 2, t = s",
    );
    for i in upper_start..n.saturating_sub(2) {
        let equal = delta(i) == delta(n - 2);
        let special = n == 5 && i == 2 && e == 2;
        c.expect(equal == special, || format!("{p}: i={i} equal={equal}"));
    }
    checks.push(c);

    let upper_pairs: Vec<(u32, u32)> = (upper_start..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    for (name, claim, pick) in [
        (
            "kappa_decreasing_upper",
            "kappa_i > kappa_j for (n-2)/2 <= i < j <= n-1",
            (|r: &RankDegrees| r.kappa.clone()) as fn(&RankDegrees) -> Count,
        ),
        (
            "chi_decreasing_upper",
            "chi_i > chi_j for (n-2)/2 <= i < j <= n-1",
            |r| r.chi.clone(),
        ),
        (
            "xi_decreasing_upper",
            "xi_i > xi_j for (n-2)/2 <= i < j <= n-1",
            |r| r.xi.clone(),
        ),
    ] {
        let mut c = PropositionCheck::new(name, claim);
        for &(i, j) in &upper_pairs {
            let (a, b) = (pick(at(i)), pick(at(j)));
            c.expect(a > b, || format!("{p}: i={i} ({a}) j={j} ({b})"));
        }
        checks.push(c);
    }

    let mut c = PropositionCheck::new(
        "kappa_step_lower",
        "n >= 5 and i < (n-5+log_s t)/3 give kappa_i < kappa_{i+1}",
    );
    if n >= 5 {
        let bound = 2 * n as i64 - 10 + e; // 6 * (n-5+log_s t)/3
        for i in 0..n - 1 {
            if 6 * (i as i64) < bound {
                let (a, b) = (&at(i).kappa, &at(i + 1).kappa);
                c.expect(a < b, || format!("{p}: i={i} ({a}) vs {} ({b})", i + 1));
            }
        }
    }
    checks.push(c);

    let mut c = PropositionCheck::new(
        "kappa_increasing_lower",
        "n >= 5 - log_s t and i < j <= ceil((n-5+log_s t)/3) give kappa_i < kappa_j",
    );
    if 2 * n as i64 >= 10 - e {
        let top = ((2 * n as i64 - 10 + e + 5) / 6).min(n as i64 - 1) as u32;
        for j in 1..=top {
            for i in 0..j {
                let (a, b) = (&at(i).kappa, &at(j).kappa);
                c.expect(a < b, || format!("{p}: i={i} ({a}) j={j} ({b})"));
            }
        }
    }
    checks.push(c);

    let mut c = PropositionCheck::new(
        "kappa_small_rank",
        "n = 4: kappa_0 < kappa_1 > kappa_2 > kappa_3; n = 3: kappa_0 > kappa_1 > kappa_2",
    );
    let k = |i: u32| &at(i).kappa;
    match n {
        4 => c.expect(k(0) < k(1) && k(1) > k(2) && k(2) > k(3), || {
            format!("{p}: kappa = {} {} {} {}", k(0), k(1), k(2), k(3))
        }),
        3 => c.expect(k(0) > k(1) && k(1) > k(2), || {
            format!("{p}: kappa = {} {} {}", k(0), k(1), k(2))
        }),
        _ => {}
    }
    checks.push(c);

    let mut c = PropositionCheck::new(
        "mu_nu_lambda_decreasing",
        "mu_i > mu_{i+1}, nu_i > nu_{i+1} and lambda_i > lambda_{i+1} for i < n-1",
    );
    for i in 0..n - 1 {
        let (a, b) = (at(i), at(i + 1));
        c.expect(a.mu > b.mu, || format!("{p}: mu at i={i}"));
        c.expect(a.nu > b.nu, || format!("{p}: nu at i={i}"));
        c.expect(a.lambda > b.lambda, || format!("{p}: lambda at i={i}"));
    }
    checks.push(c);

    let mut c = PropositionCheck::new(
        "upper_degrees_distinct",
        "for (n-2)/2 <= i < j <= n-1 the graphs (Delta_i, R), (Delta_j, R) differ in degree for R = ⊥, ⊥∪≈, ⊥_max",
    );
    for &(i, j) in &upper_pairs {
        c.expect(at(i).kappa != at(j).kappa, || {
            format!("{p}: kappa i={i} j={j}")
        });
        c.expect(at(i).chi != at(j).chi, || format!("{p}: chi i={i} j={j}"));
        c.expect(at(i).xi != at(j).xi, || format!("{p}: xi i={i} j={j}"));
    }
    checks.push(c);

    let mut c = PropositionCheck::new(
        "degree_identities",
        "chi = kappa + lambda, mu = nu + lambda, xi_i = kappa_{i,k_min(i)}, nu_0 = kappa_0, chi_0 = mu_0 = |Delta_0| - 1, top-rank zeros",
    );
    for r in &rd {
        let i = r.i;
        c.expect(r.chi == &r.kappa + &r.lambda, || {
            format!("{p}: chi at i={i}")
        });
        c.expect(r.mu == &r.nu + &r.lambda, || format!("{p}: mu at i={i}"));
        if upper_half(n, i) && i < n - 1 {
            let top = degrees::kappa_component(p, i, k_min(n, i)).expect("k in range");
            c.expect(r.xi == top, || format!("{p}: xi at i={i}"));
        } else {
            c.expect(r.xi.is_zero(), || format!("{p}: xi nonzero at i={i}"));
        }
        let sum: Count = degrees::degree_kappa(p, i)
            .expect("rank")
            .terms
            .into_iter()
            .map(|t| t.1)
            .sum();
        c.expect(sum == r.kappa, || {
            format!("{p}: kappa decomposition at i={i}")
        });
    }
    let (first, last) = (at(0), at(n - 1));
    c.expect(first.nu == first.kappa, || format!("{p}: nu_0 != kappa_0"));
    c.expect(first.chi == first.count.pred(), || format!("{p}: chi_0"));
    c.expect(first.mu == first.count.pred(), || format!("{p}: mu_0"));
    c.expect(
        last.kappa.is_zero() && last.xi.is_zero() && last.nu.is_zero(),
        || format!("{p}: top rank degrees"),
    );
    checks.push(c);

    let mut c = PropositionCheck::new(
        "edge_containment",
        "xi <= kappa <= chi, nu <= mu, nu <= kappa",
    );
    for r in &rd {
        let i = r.i;
        c.expect(r.xi <= r.kappa && r.kappa <= r.chi, || {
            format!("{p}: xi/kappa/chi at i={i}")
        });
        c.expect(r.nu <= r.mu && r.nu <= r.kappa, || {
            format!("{p}: nu bounds at i={i}")
        });
    }
    checks.push(c);

    PropositionReport { params: *p, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate_params;

    fn p(n: i64, s: i64, t: i64) -> PolarParams {
        validate_params(n, s, t).unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            compare_counts(&p(5, 2, 2), 2, 3).unwrap(),
            ComparisonVerdict::Equal
        );
        assert_eq!(
            compare_counts(&p(4, 2, 1), 1, 2).unwrap(),
            ComparisonVerdict::Less
        );
        // 57697747837665075 vs 2923503994766730375
        assert_eq!(
            compare_counts(&p(9, 2, 4), 3, 7).unwrap(),
            ComparisonVerdict::Less
        );
        assert_eq!(
            compare_counts(&p(5, 2, 2), 3, 3),
            Err(Error::BadPair { i: 3, j: 3 })
        );
        assert!(compare_counts(&p(5, 2, 2), 1, 5).is_err());
    }

    #[test]
    fn bounds_at_the_plateau() {
        let r = necessary_conditions(&p(5, 2, 2), 2, 3).unwrap();
        assert!(r.all_hold());
        // 22 < 24 and 22 > 18 on doubled values
        assert!(r.holds(BoundCondition::SumUpper));
        assert!(r.holds(BoundCondition::SumLower));
        assert!(r.holds(BoundCondition::WeightedChain));
        // 2i + j + 4 = 11 = 2n + log_s t = i + 2j + 3: tight on both sides
        let q = p(5, 2, 2);
        assert!(!BoundCondition::WeightedChain.holds(&q.with_rank(6).unwrap(), 2, 3));
        assert!(necessary_conditions(&q, 3, 2).is_err());
    }

    #[test]
    fn tables() {
        let (even, odd) = special_case_tables(&[2, 3, 4, 9, 16]).unwrap();
        assert_eq!(
            even.cell(3, 0).unwrap().verdict(),
            Some(ComparisonVerdict::Greater)
        );
        assert_eq!(
            odd.cell(2, 2).unwrap().verdict(),
            Some(ComparisonVerdict::Equal)
        );
        assert_eq!(
            odd.cell(4, 4).unwrap().verdict(),
            Some(ComparisonVerdict::Greater)
        );
        assert!(even.s_dependent_cells().is_empty());
        assert_eq!(special_case_tables(&[2, 3]), Err(Error::NoValidS(1)));
        // odd columns only see square s
        assert_eq!(odd.cell(2, 1).unwrap().per_s.len(), 3);
    }

    #[test]
    fn small_searches() {
        let g = |n: u32, e: u8, s: u64| Grid {
            n_min: n,
            n_max: n,
            e_set: vec![e],
            s_set: vec![s],
        };
        let hits = search_coincidences(&g(5, 2, 2), true);
        assert_eq!(hits.len(), 1);
        assert_eq!((hits[0].i, hits[0].j), (2, 3));
        assert_eq!(hits[0].value, 782_595);
        assert!(search_coincidences(&g(6, 0, 2), false).is_empty());
        assert!(search_conjecture(&g(5, 2, 2), &GraphKind::ALL).is_empty());
        assert!(search_conjecture(&g(5, 2, 2), &[]).is_empty());
    }

    #[test]
    fn conjecture_annotations_at_rank_five() {
        let mut hits = search_coincidences(
            &Grid {
                n_min: 5,
                n_max: 5,
                e_set: vec![2],
                s_set: vec![2],
            },
            false,
        );
        annotate_hits(
            &mut hits,
            &[
                GraphKind::Collinearity,
                GraphKind::Union,
                GraphKind::PerpMax,
            ],
        );
        assert!(hits[0].degree_equal.iter().all(|(_, eq)| !eq));
    }

    #[test]
    fn propositions_small_cases() {
        let r = verify_propositions(&p(5, 2, 2));
        assert!(r.passed(), "{:#?}", r);
        let r = verify_propositions(&p(3, 2, 2));
        assert!(r.passed());
        assert_eq!(r.check("kappa_small_rank").unwrap().instances, 1);
        for (s, t) in [(2, 1), (4, 2), (3, 3), (4, 8), (2, 4)] {
            let r = verify_propositions(&p(4, s, t));
            assert!(r.passed(), "{:#?}", r);
            assert_eq!(r.check("kappa_small_rank").unwrap().instances, 1);
        }
    }

    #[test]
    fn grid_points_skip_inadmissible() {
        let g = Grid {
            n_min: 3,
            n_max: 3,
            e_set: vec![1, 2],
            s_set: vec![2, 4],
        };
        let pts: Vec<(u64, u8)> = g.points().iter().map(|p| (p.s(), p.e())).collect();
        assert_eq!(pts, vec![(4, 1), (2, 2), (4, 2)]);
        assert!(Grid::up_to(2).points().is_empty());
    }
}
