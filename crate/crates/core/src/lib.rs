//! Exact counting and verification engine for finite polar spaces of rank
//! `n >= 3` and order `(s, ..., s, t)`.
//!
//! Everything here is exact integer (or integer-polynomial) arithmetic:
//!
//! * [`params`]: the `(n, s, t)` parameter model,
//! * [`census`]: the number of singular subspaces of each rank,
//! * [`degrees`]: degrees of the collinearity, hyperplane-meet and related
//!   graphs on a fixed rank,
//! * [`symbolic`]: the same quantities as polynomials in `q` with `s = q^2`,
//!   `t = q^e`,
//! * [`analysis`]: comparison checks, sign tables and coincidence searches.

pub mod analysis;
pub mod census;
pub mod count;
pub mod degrees;
mod error;
pub mod params;
pub mod symbolic;

pub use census::{count_rank, count_ratio, i_max, profile, Profile, Step};
pub use count::Count;
pub use degrees::{
    degree, degree_chi, degree_kappa, degree_lambda, degree_mu, degree_nu, degree_xi, k_min,
    kappa_component, GraphKind, KappaDecomposition,
};
pub use error::Error;
pub use params::{half_log, validate_params, HalfLog, PolarParams};

pub type Result<T, E = Error> = std::result::Result<T, E>;
