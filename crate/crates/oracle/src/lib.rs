//! Brute-force ground truth for the counting formulas: explicit classical
//! polar spaces over small fields, exhaustive enumeration of their totally
//! singular subspaces, and direct measurement of the graph degrees.

mod enumerate;
mod error;
pub mod export;
pub mod field;
pub mod form;
mod measure;
pub mod subspace;
pub mod vector;

pub use enumerate::{enumerate, enumerate_layers, singular_points};
pub use error::OracleError;
pub use field::FiniteField;
pub use form::{build_space, build_space_with_cap, cap_from_env, FormKind, FormSpace, DEFAULT_CAP};
pub use measure::{
    classify, cross_check, measure_degrees, measured_degree, neighbours, relation, sample_bases,
    Comparison, CrossCheckReport, NeighbourCounts, PairClass, Quantity, DEFAULT_SAMPLE,
    SAMPLE_SEED,
};
pub use subspace::SubspaceRep;
