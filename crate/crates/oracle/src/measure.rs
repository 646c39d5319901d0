use rand::seq::index::sample as sample_indices;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use polar_core::degrees::{degree, degree_lambda};
use polar_core::{count_rank, Count, GraphKind, PolarParams};

use crate::enumerate::enumerate_layers;
use crate::form::FormSpace;
use crate::subspace::SubspaceRep;
use crate::OracleError;

/// Seed for choosing base subspaces in [`measure_degrees`].
pub const SAMPLE_SEED: u64 = 0x706f_6c61_7231;

pub const DEFAULT_SAMPLE: usize = 3;

/// How two distinct subspaces of equal dimension relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClass {
    pub collinear: bool,
    /// Meet in a hyperplane of each.
    pub hyperplane_meet: bool,
    /// Collinear and spanning a generator.
    pub perp_max: bool,
}

impl PairClass {
    pub fn is(&self, g: GraphKind) -> bool {
        match g {
            GraphKind::Collinearity => self.collinear,
            GraphKind::HyperplaneMeet => self.hyperplane_meet,
            GraphKind::Union => self.collinear || self.hyperplane_meet,
            GraphKind::Intersection => self.collinear && self.hyperplane_meet,
            GraphKind::PerpMax => self.perp_max,
        }
    }
}

fn check_dims(a: &SubspaceRep, b: &SubspaceRep) -> Result<(), OracleError> {
    if a.rows().len() != b.rows().len() {
        return Err(OracleError::DimensionMismatch(
            a.rows().len() as u32,
            b.rows().len() as u32,
        ));
    }
    Ok(())
}

fn classify_unchecked(space: &FormSpace, a: &SubspaceRep, b: &SubspaceRep) -> PairClass {
    let k = a.rows().len() as u32;
    let join = a.join_rank(space, b);
    let collinear = a.orthogonal_to(space, b);
    PairClass {
        collinear,
        hyperplane_meet: join == k + 1,
        perp_max: collinear && join == space.rank(),
    }
}

pub fn classify(
    space: &FormSpace,
    a: &SubspaceRep,
    b: &SubspaceRep,
) -> Result<PairClass, OracleError> {
    check_dims(a, b)?;
    Ok(classify_unchecked(space, a, b))
}

/// Whether `{a, b}` is an edge of the graph of kind `g`; never for `a = b`.
pub fn relation(
    space: &FormSpace,
    a: &SubspaceRep,
    b: &SubspaceRep,
    g: GraphKind,
) -> Result<bool, OracleError> {
    check_dims(a, b)?;
    Ok(a != b && classify_unchecked(space, a, b).is(g))
}

/// Neighbour counts of one base subspace.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NeighbourCounts {
    pub kappa: u64,
    pub chi: u64,
    pub xi: u64,
    pub mu: u64,
    pub nu: u64,
    /// Meeting in a hyperplane without being collinear.
    pub lambda: u64,
}

impl NeighbourCounts {
    pub fn get(&self, g: GraphKind) -> u64 {
        match g {
            GraphKind::Collinearity => self.kappa,
            GraphKind::HyperplaneMeet => self.mu,
            GraphKind::Union => self.chi,
            GraphKind::Intersection => self.nu,
            GraphKind::PerpMax => self.xi,
        }
    }

    fn add(self, o: Self) -> Self {
        NeighbourCounts {
            kappa: self.kappa + o.kappa,
            chi: self.chi + o.chi,
            xi: self.xi + o.xi,
            mu: self.mu + o.mu,
            nu: self.nu + o.nu,
            lambda: self.lambda + o.lambda,
        }
    }

    fn of(c: PairClass) -> Self {
        let b = |x: bool| x as u64;
        NeighbourCounts {
            kappa: b(c.collinear),
            chi: b(c.collinear || c.hyperplane_meet),
            xi: b(c.perp_max),
            mu: b(c.hyperplane_meet),
            nu: b(c.collinear && c.hyperplane_meet),
            lambda: b(c.hyperplane_meet && !c.collinear),
        }
    }
}

/// Counts neighbours of `base` by scanning `layer`.
pub fn neighbours(space: &FormSpace, layer: &[SubspaceRep], base: &SubspaceRep) -> NeighbourCounts {
    layer
        .par_iter()
        .filter(|j| *j != base)
        .map(|j| NeighbourCounts::of(classify_unchecked(space, base, j)))
        .reduce(NeighbourCounts::default, NeighbourCounts::add)
}

/// Indices of `sample` bases drawn with [`SAMPLE_SEED`]; clamped to
/// `1..=layer.len()`.
pub fn sample_bases(len: usize, sample: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut idx = sample_indices(&mut rng, len, sample.clamp(1, len)).into_vec();
    idx.sort_unstable();
    idx
}

/// Degrees of all five graphs (and `lambda`) on one enumerated layer,
/// measured at sampled bases that must all agree.
pub fn measure_degrees(
    space: &FormSpace,
    layer: &[SubspaceRep],
    sample: usize,
) -> Result<NeighbourCounts, OracleError> {
    if layer.is_empty() {
        return Ok(NeighbourCounts::default());
    }
    let found: Vec<NeighbourCounts> = sample_bases(layer.len(), sample)
        .into_iter()
        .map(|k| neighbours(space, layer, &layer[k]))
        .collect();
    if found.iter().any(|c| *c != found[0]) {
        let mut seen: Vec<u64> = found.iter().map(|c| c.chi).collect();
        seen.extend(found.iter().map(|c| c.mu));
        return Err(OracleError::NotRegular(seen));
    }
    Ok(found[0])
}

/// Enumerates `Delta_i` and measures the degree of kind `g`.
pub fn measured_degree(
    space: &FormSpace,
    i: u32,
    g: GraphKind,
    sample: usize,
) -> Result<Count, OracleError> {
    let layer = enumerate_layers(space, i)?.pop().unwrap();
    Ok(Count::from(measure_degrees(space, &layer, sample)?.get(g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Count,
    Degree(GraphKind),
    /// `mu - nu`: hyperplane meets that are not collinear.
    Lambda,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::Count => "count",
            Quantity::Degree(g) => g.degree_name(),
            Quantity::Lambda => "lambda",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub i: u32,
    pub quantity: Quantity,
    pub formula: Count,
    pub measured: Count,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.formula == self.measured
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub params: PolarParams,
    pub comparisons: Vec<Comparison>,
}

impl CrossCheckReport {
    pub fn mismatches(&self) -> Vec<&Comparison> {
        self.comparisons.iter().filter(|c| !c.matches()).collect()
    }

    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(Comparison::matches)
    }
}

/// Enumerated sizes and measured degrees for every rank, with the formula
/// values alongside.
pub fn cross_check(space: &FormSpace, sample: usize) -> Result<CrossCheckReport, OracleError> {
    let p = space.params();
    let layers = enumerate_layers(space, p.n() - 1)?;
    let mut comparisons = Vec::new();
    for (i, layer) in layers.iter().enumerate() {
        let i = i as u32;
        comparisons.push(Comparison {
            i,
            quantity: Quantity::Count,
            formula: count_rank(&p, i)?,
            measured: Count::from(layer.len() as u64),
        });
        let m = measure_degrees(space, layer, sample)?;
        for g in GraphKind::ALL {
            comparisons.push(Comparison {
                i,
                quantity: Quantity::Degree(g),
                formula: degree(&p, i, g)?,
                measured: Count::from(m.get(g)),
            });
        }
        comparisons.push(Comparison {
            i,
            quantity: Quantity::Lambda,
            formula: degree_lambda(&p, i)?,
            measured: Count::from(m.lambda),
        });
    }
    Ok(CrossCheckReport {
        params: p,
        comparisons,
    })
}
