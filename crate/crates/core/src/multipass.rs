//! Multi-pass SHT: repeatedly transform the synthesis residual and add the
//! correction, stopping as soon as the max-abs residual fails to decrease.

use crate::error::{Result, ShtError};
use crate::sampling::SamplingScheme;
use crate::sht::{forward_sht, inverse_sht, HarmonicCoeffs, SpatialSignal};

pub const DEFAULT_MAX_PASSES: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct MultipassResult {
    /// The iterate with the smallest residual.
    pub coeffs: HarmonicCoeffs,
    /// Number of accepted passes.
    pub passes: usize,
    /// Max-abs residual after each accepted pass; strictly decreasing.
    pub residual_history: Vec<f64>,
    /// Residual of the pass that triggered the stop, if one did.
    pub rejected_residual: Option<f64>,
}

/// What an observer sees after each pass, accepted or not.
#[derive(Debug)]
pub struct PassReport<'a> {
    pub pass: usize,
    pub coeffs: &'a HarmonicCoeffs,
    pub residual_max: f64,
    pub accepted: bool,
}

/// `signal - synthesis(coeffs)` at every sample of `scheme`.
pub fn residual(
    scheme: &SamplingScheme,
    signal: &SpatialSignal,
    coeffs: &HarmonicCoeffs,
) -> Result<SpatialSignal> {
    if signal.bandlimit() != scheme.bandlimit() {
        return Err(ShtError::DimensionMismatch(format!(
            "signal has band-limit {} but scheme has {}",
            signal.bandlimit(),
            scheme.bandlimit()
        )));
    }
    signal.sub(&inverse_sht(scheme, coeffs)?)
}

pub fn multipass_sht(
    scheme: &SamplingScheme,
    signal: &SpatialSignal,
    max_passes: usize,
) -> Result<MultipassResult> {
    multipass_sht_observed(scheme, signal, max_passes, |_| {})
}

pub fn multipass_sht_observed(
    scheme: &SamplingScheme,
    signal: &SpatialSignal,
    max_passes: usize,
    mut observer: impl FnMut(&PassReport<'_>),
) -> Result<MultipassResult> {
    if max_passes < 1 {
        return Err(ShtError::InvalidArgument(
            "max_passes must be at least 1".into(),
        ));
    }

    let mut coeffs = forward_sht(scheme, signal)?;
    let mut res = residual(scheme, signal, &coeffs)?;
    let mut best = res.max_abs();
    let mut history = vec![best];
    observer(&PassReport {
        pass: 1,
        coeffs: &coeffs,
        residual_max: best,
        accepted: true,
    });

    let mut rejected_residual = None;
    for pass in 2..=max_passes {
        let mut candidate = coeffs.clone();
        candidate.add_assign(&forward_sht(scheme, &res)?);
        let next = residual(scheme, signal, &candidate)?;
        let next_max = next.max_abs();
        // a tie is no progress
        let accepted = next_max < best;
        observer(&PassReport {
            pass,
            coeffs: &candidate,
            residual_max: next_max,
            accepted,
        });
        if !accepted {
            rejected_residual = Some(next_max);
            break;
        }
        coeffs = candidate;
        res = next;
        best = next_max;
        history.push(best);
    }

    debug_assert!(history.windows(2).all(|w| w[1] < w[0]));
    Ok(MultipassResult {
        coeffs,
        passes: history.len(),
        residual_history: history,
        rejected_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::design_elimination;

    #[test]
    fn zero_max_passes_is_rejected() {
        let s = design_elimination(3).unwrap();
        assert!(matches!(
            multipass_sht(&s, &SpatialSignal::zeros(3), 0),
            Err(ShtError::InvalidArgument(_))
        ));
    }

    #[test]
    fn residual_of_zero_coefficients_is_the_signal() {
        let s = design_elimination(5).unwrap();
        let sig = inverse_sht(&s, &HarmonicCoeffs::indicator(5, 3, -2)).unwrap();
        let r = residual(&s, &sig, &HarmonicCoeffs::zeros(5)).unwrap();
        assert_eq!(r, sig);
    }

    #[test]
    fn exact_signal_stops_after_one_pass() {
        let s = design_elimination(4).unwrap();
        let out = multipass_sht(&s, &SpatialSignal::zeros(4), 20).unwrap();
        assert_eq!(out.passes, 1);
        assert_eq!(out.residual_history, vec![0.0]);
        assert_eq!(out.rejected_residual, Some(0.0));
        assert_eq!(
            out.coeffs,
            forward_sht(&s, &SpatialSignal::zeros(4)).unwrap()
        );
    }

    #[test]
    fn single_pass_cap() {
        let s = design_elimination(6).unwrap();
        let sig = inverse_sht(&s, &HarmonicCoeffs::indicator(6, 5, 4)).unwrap();
        let out = multipass_sht(&s, &sig, 1).unwrap();
        assert_eq!(out.passes, 1);
        assert_eq!(out.rejected_residual, None);
        assert_eq!(out.coeffs, forward_sht(&s, &sig).unwrap());
    }
}
