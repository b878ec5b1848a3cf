//! Optimal-dimensionality spherical harmonic transforms.
//!
//! A signal band-limited at `L` is sampled on `L` iso-latitude rings, ring
//! `k` holding `2k+1` equiangular longitudes, for `L²` samples in total.
//! The ring co-latitudes are chosen from an equiangular candidate grid by a
//! greedy elimination that keeps every per-order Legendre system
//! well-conditioned. The forward transform solves those systems from the
//! highest order down, and an optional multi-pass refinement re-transforms
//! the synthesis residual until it stops shrinking.

pub mod bench;
pub mod error;
pub mod io;
pub mod legendre;
pub mod multipass;
pub mod oracle;
pub mod sampling;
pub mod sht;

pub use error::{Result, ShtError};
pub use legendre::{scaled_legendre, scaled_legendre_column, spherical_harmonic};
pub use multipass::{multipass_sht, residual, MultipassResult};
pub use oracle::dense_lsq_sht;
pub use sampling::{
    candidate_grid, condition_report, design_ascending, design_elimination, CandidateGrid,
    ConditionReport, PlacementMethod, SamplingScheme,
};
pub use sht::{build_pm, forward_sht, inverse_sht, ring_dft, HarmonicCoeffs, SpatialSignal};

pub use num_complex::Complex64;
