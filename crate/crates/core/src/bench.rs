//! Randomized conditioning and accuracy experiments with CSV output.
//!
//! Random coefficients come from ChaCha8 (`rand_chacha` 0.3). A trial's
//! stream is seeded with [`trial_seed`]`(seed, L, trial)`; the placement
//! method is deliberately not part of the seed so every method sees the
//! same signals.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Result, ShtError};
use crate::io::{fmt_f64, write_text};
use crate::multipass::{multipass_sht_observed, DEFAULT_MAX_PASSES};
use crate::sampling::{
    condition_profile, design, ConditionReport, PlacementMethod, SamplingScheme,
};
use crate::sht::{forward_sht, inverse_sht, HarmonicCoeffs};

pub const DEFAULT_TRIALS: usize = 10;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the coefficient stream for one `(L, trial)` cell.
pub fn trial_seed(seed: u64, bandlimit: usize, trial: usize) -> u64 {
    splitmix64(seed ^ splitmix64(((bandlimit as u64) << 32) | trial as u64))
}

/// Coefficients with real and imaginary parts i.i.d. uniform on `[0, 1)`,
/// drawn in flat-index order, real part first.
pub fn random_bandlimited(bandlimit: usize, seed: u64) -> HarmonicCoeffs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..bandlimit * bandlimit)
        .map(|_| {
            let re: f64 = rng.gen();
            let im: f64 = rng.gen();
            Complex64::new(re, im)
        })
        .collect();
    HarmonicCoeffs::from_values(bandlimit, values).expect("length is L²")
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialConfig {
    pub bandlimits: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub methods: Vec<PlacementMethod>,
    pub multipass: bool,
    pub max_passes: usize,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            bandlimits: vec![8, 16, 32],
            trials: DEFAULT_TRIALS,
            seed: 0,
            methods: vec![PlacementMethod::Elimination],
            multipass: false,
            max_passes: DEFAULT_MAX_PASSES,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(ShtError::InvalidArgument(
                "trials must be at least 1".into(),
            ));
        }
        if let Some(&l) = self.bandlimits.iter().find(|&&l| l < 2) {
            return Err(ShtError::InvalidArgument(format!(
                "band-limit {l} is below 2"
            )));
        }
        if self.bandlimits.is_empty() || self.methods.is_empty() {
            return Err(ShtError::InvalidArgument(
                "need at least one band-limit and one method".into(),
            ));
        }
        if self.max_passes < 1 {
            return Err(ShtError::InvalidArgument(
                "max_passes must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub bandlimit: usize,
    pub method: PlacementMethod,
    pub trial: usize,
    /// Single-pass coefficient error; `+∞` if the scheme is singular.
    pub e_max: f64,
    /// Coefficient error after each accepted pass.
    pub e_max_k: Vec<f64>,
    /// Max-abs residual after each accepted pass.
    pub residual_k: Vec<f64>,
    /// Accepted passes; 0 when the transform is undefined.
    pub passes: usize,
    pub wall_time: f64,
}

impl BenchRecord {
    pub fn e_max_final(&self) -> f64 {
        self.e_max_k.last().copied().unwrap_or(self.e_max)
    }
}

/// Runs `trials` random signals through one scheme.
pub fn accuracy_cell(
    scheme: &SamplingScheme,
    trials: usize,
    seed: u64,
    multipass: bool,
    max_passes: usize,
) -> Result<Vec<BenchRecord>> {
    let bandlimit = scheme.bandlimit();
    let method = scheme.method();
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let start = Instant::now();
            let truth = random_bandlimited(bandlimit, trial_seed(seed, bandlimit, trial));
            let tag = |source: ShtError| ShtError::Trial {
                bandlimit,
                method: method.to_string(),
                trial,
                source: Box::new(source),
            };
            let signal = inverse_sht(scheme, &truth).map_err(tag)?;

            let single = match forward_sht(scheme, &signal) {
                Ok(c) => c,
                Err(ShtError::SingularSystem { .. }) => {
                    return Ok(BenchRecord {
                        bandlimit,
                        method,
                        trial,
                        e_max: f64::INFINITY,
                        e_max_k: Vec::new(),
                        residual_k: Vec::new(),
                        passes: 0,
                        wall_time: start.elapsed().as_secs_f64(),
                    })
                }
                Err(e) => return Err(tag(e)),
            };
            let e_max = single.max_abs_diff(&truth);

            let cap = if multipass { max_passes } else { 1 };
            let mut e_max_k = Vec::new();
            let mut residual_k = Vec::new();
            let result = multipass_sht_observed(scheme, &signal, cap, |report| {
                if report.accepted {
                    e_max_k.push(report.coeffs.max_abs_diff(&truth));
                    residual_k.push(report.residual_max);
                }
            })
            .map_err(tag)?;

            Ok(BenchRecord {
                bandlimit,
                method,
                trial,
                e_max,
                e_max_k,
                residual_k,
                passes: result.passes,
                wall_time: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

fn design_all(bandlimits: &[usize], methods: &[PlacementMethod]) -> Result<Vec<SamplingScheme>> {
    let mut schemes = Vec::with_capacity(bandlimits.len() * methods.len());
    for &l in bandlimits {
        for &method in methods {
            schemes.push(design(l, method)?);
        }
    }
    Ok(schemes)
}

pub fn accuracy_experiment(config: &TrialConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let schemes = design_all(&config.bandlimits, &config.methods)?;
    accuracy_on(config, &schemes)
}

/// Accuracy records for already-designed schemes, in scheme order.
pub fn accuracy_on(config: &TrialConfig, schemes: &[SamplingScheme]) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for scheme in schemes {
        records.extend(accuracy_cell(
            scheme,
            config.trials,
            config.seed,
            config.multipass,
            config.max_passes,
        )?);
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub bandlimit: usize,
    pub method: PlacementMethod,
    pub trials: usize,
    pub mean_e_max: f64,
    pub mean_e_max_final: f64,
    pub mean_passes: f64,
}

/// Arithmetic means per `(L, method)`, in first-seen order.
pub fn summarize(records: &[BenchRecord]) -> Vec<CellSummary> {
    let mut cells: Vec<(usize, PlacementMethod, Vec<&BenchRecord>)> = Vec::new();
    for r in records {
        match cells
            .iter_mut()
            .find(|(l, m, _)| *l == r.bandlimit && *m == r.method)
        {
            Some(cell) => cell.2.push(r),
            None => cells.push((r.bandlimit, r.method, vec![r])),
        }
    }
    cells
        .into_iter()
        .map(|(bandlimit, method, rs)| {
            let n = rs.len() as f64;
            CellSummary {
                bandlimit,
                method,
                trials: rs.len(),
                mean_e_max: rs.iter().map(|r| r.e_max).sum::<f64>() / n,
                mean_e_max_final: rs.iter().map(|r| r.e_max_final()).sum::<f64>() / n,
                mean_passes: rs.iter().map(|r| r.passes as f64).sum::<f64>() / n,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionRow {
    pub method: PlacementMethod,
    pub report: ConditionReport,
}

/// κ_m curves per `(L, method)`; singular orders appear as `+∞`.
pub fn conditioning_experiment(
    bandlimits: &[usize],
    methods: &[PlacementMethod],
) -> Result<Vec<ConditionRow>> {
    Ok(conditioning_on(&design_all(bandlimits, methods)?))
}

pub fn conditioning_on(schemes: &[SamplingScheme]) -> Vec<ConditionRow> {
    schemes
        .iter()
        .map(|s| ConditionRow {
            method: s.method(),
            report: condition_profile(s),
        })
        .collect()
}

pub fn cond_csv(rows: &[ConditionRow]) -> String {
    let mut out = String::from("L,method,m,kappa\n");
    for row in rows {
        for (m, kappa) in row.report.kappa.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{m},{}",
                row.report.bandlimit,
                row.method,
                fmt_f64(*kappa)
            );
        }
    }
    out
}

pub fn cond_max_csv(rows: &[ConditionRow]) -> String {
    let mut out = String::from("L,method,kappa_max\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            row.report.bandlimit,
            row.method,
            fmt_f64(row.report.kappa_max)
        );
    }
    out
}

pub fn accuracy_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("L,method,trial,E_max,passes,E_max_final\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.bandlimit,
            r.method,
            r.trial,
            fmt_f64(r.e_max),
            r.passes,
            fmt_f64(r.e_max_final())
        );
    }
    out
}

pub fn multipass_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("L,method,trial,pass,E_max_k,residual_max\n");
    for r in records {
        for (k, (e, res)) in r.e_max_k.iter().zip(&r.residual_k).enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.bandlimit,
                r.method,
                r.trial,
                k + 1,
                fmt_f64(*e),
                fmt_f64(*res)
            );
        }
    }
    out
}

/// Everything one benchmark run produces.
#[derive(Debug, Clone)]
pub struct BenchOutputs {
    pub conditioning: Vec<ConditionRow>,
    pub records: Vec<BenchRecord>,
}

pub fn run_bench(config: &TrialConfig) -> Result<BenchOutputs> {
    config.validate()?;
    let schemes = design_all(&config.bandlimits, &config.methods)?;
    Ok(BenchOutputs {
        conditioning: conditioning_on(&schemes),
        records: accuracy_on(config, &schemes)?,
    })
}

impl BenchOutputs {
    /// Writes `cond.csv`, `cond_max.csv`, `accuracy.csv` and `multipass.csv`.
    pub fn write(&self, outdir: &Path) -> Result<()> {
        fs::create_dir_all(outdir).map_err(|e| ShtError::Io {
            path: outdir.to_path_buf(),
            source: e,
        })?;
        write_text(&outdir.join("cond.csv"), &cond_csv(&self.conditioning))?;
        write_text(
            &outdir.join("cond_max.csv"),
            &cond_max_csv(&self.conditioning),
        )?;
        write_text(&outdir.join("accuracy.csv"), &accuracy_csv(&self.records))?;
        write_text(&outdir.join("multipass.csv"), &multipass_csv(&self.records))?;
        Ok(())
    }
}
