//! Dense least-squares transform, used as an independent reference for the
//! order-by-order solver. Cost is `O(L^6)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Result, ShtError};
use crate::legendre::spherical_harmonic;
use crate::sampling::SamplingScheme;
use crate::sht::{HarmonicCoeffs, SpatialSignal};

pub const DEFAULT_ORACLE_CAP: usize = 32;

/// The `L² × L²` synthesis matrix: rows are sample points in ring-major
/// order, columns are `(l, m)` in flat-index order.
pub fn synthesis_matrix(scheme: &SamplingScheme) -> DMatrix<Complex64> {
    let bandlimit = scheme.bandlimit();
    let n = bandlimit * bandlimit;
    let points: Vec<(f64, f64)> = scheme.points().collect();
    DMatrix::from_fn(n, n, |row, col| {
        let (theta, phi) = points[row];
        let (l, m) = HarmonicCoeffs::degree_order(col);
        spherical_harmonic(l, m, theta, phi).expect("|m| <= l by construction")
    })
}

pub fn dense_lsq_sht(scheme: &SamplingScheme, signal: &SpatialSignal) -> Result<HarmonicCoeffs> {
    dense_lsq_sht_capped(scheme, signal, DEFAULT_ORACLE_CAP)
}

pub fn dense_lsq_sht_capped(
    scheme: &SamplingScheme,
    signal: &SpatialSignal,
    cap: usize,
) -> Result<HarmonicCoeffs> {
    let bandlimit = scheme.bandlimit();
    if bandlimit > cap {
        return Err(ShtError::OracleCapExceeded { bandlimit, cap });
    }
    if signal.bandlimit() != bandlimit {
        return Err(ShtError::DimensionMismatch(format!(
            "signal has band-limit {} but scheme has {bandlimit}",
            signal.bandlimit()
        )));
    }
    let a = synthesis_matrix(scheme);
    let y = DVector::from_iterator(a.nrows(), signal.iter().copied());
    let svd = a.svd(true, true);
    let x = svd
        .solve(&y, 1e-14)
        .map_err(|e| ShtError::DimensionMismatch(e.to_string()))?;
    HarmonicCoeffs::from_values(bandlimit, x.iter().copied().collect())
}
