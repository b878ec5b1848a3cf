//! Ring placement: the candidate co-latitude grid, the greedy elimination
//! design, the ascending baseline and per-order conditioning reports.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ShtError};
use crate::sht::order_matrix;

/// Candidates whose κ agree to this relative tolerance are treated as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Smallest singular values at or below this are treated as exact zeros.
pub const SINGULAR_FLOOR: f64 = 1e-300;

/// Absolute tolerance used when checking that a ring vector is a
/// permutation of the candidate grid.
pub const GRID_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlacementMethod {
    Elimination,
    Ascending,
}

impl PlacementMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            PlacementMethod::Elimination => "elimination",
            PlacementMethod::Ascending => "ascending",
        }
    }
}

impl fmt::Display for PlacementMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PlacementMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "elimination" => Ok(PlacementMethod::Elimination),
            "ascending" => Ok(PlacementMethod::Ascending),
            other => Err(format!(
                "unknown placement method `{other}` (expected elimination or ascending)"
            )),
        }
    }
}

/// The `L` equiangular co-latitudes `π(2t+1)/(2L-1)`, `t = 0 … L-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateGrid {
    pub bandlimit: usize,
    pub angles: Vec<f64>,
}

pub fn candidate_grid(bandlimit: usize) -> Result<CandidateGrid> {
    if bandlimit < 1 {
        return Err(ShtError::InvalidBandlimit(bandlimit));
    }
    let denom = (2 * bandlimit - 1) as f64;
    let mut angles: Vec<f64> = (0..bandlimit)
        .map(|t| PI * (2 * t + 1) as f64 / denom)
        .collect();
    // the last candidate is the south pole; pin it so pole branches fire
    angles[bandlimit - 1] = PI;
    Ok(CandidateGrid { bandlimit, angles })
}

/// An optimal-dimensionality sampling: ring `k` sits at `theta[k]` and
/// carries `2k+1` equiangular longitudes starting at `φ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingScheme {
    bandlimit: usize,
    theta: Vec<f64>,
    method: PlacementMethod,
}

impl SamplingScheme {
    /// Validates that `theta` is a permutation of the candidate grid.
    pub fn new(bandlimit: usize, theta: Vec<f64>, method: PlacementMethod) -> Result<Self> {
        let grid = candidate_grid(bandlimit)?;
        if theta.len() != bandlimit {
            return Err(ShtError::InvalidScheme(format!(
                "expected {bandlimit} ring co-latitudes, got {}",
                theta.len()
            )));
        }
        let mut used = vec![false; bandlimit];
        let mut snapped = Vec::with_capacity(bandlimit);
        for (k, &angle) in theta.iter().enumerate() {
            let hit = grid
                .angles
                .iter()
                .enumerate()
                .find(|(t, g)| !used[*t] && (angle - **g).abs() <= GRID_TOLERANCE);
            match hit {
                Some((t, g)) => {
                    used[t] = true;
                    snapped.push(*g);
                }
                None => {
                    return Err(ShtError::InvalidScheme(format!(
                        "theta[{k}] = {angle} is not an unused candidate co-latitude for L = {bandlimit}"
                    )))
                }
            }
        }
        Ok(SamplingScheme {
            bandlimit,
            theta: snapped,
            method,
        })
    }

    pub fn bandlimit(&self) -> usize {
        self.bandlimit
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn method(&self) -> PlacementMethod {
        self.method
    }

    pub fn ring_len(&self, k: usize) -> usize {
        2 * k + 1
    }

    pub fn sample_count(&self) -> usize {
        self.bandlimit * self.bandlimit
    }

    /// Longitude of sample `j` on ring `k`.
    pub fn longitude(&self, k: usize, j: usize) -> f64 {
        2.0 * PI * j as f64 / (2 * k + 1) as f64
    }

    /// Every sample point `(θ, φ)` in ring-major, longitude-minor order.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.theta
            .iter()
            .enumerate()
            .flat_map(move |(k, &theta)| (0..2 * k + 1).map(move |j| (theta, self.longitude(k, j))))
    }
}

/// Condition number `σ_max/σ_min`; `+∞` when the matrix is singular.
pub fn condition_number(matrix: &DMatrix<f64>) -> f64 {
    if matrix.nrows() == 0 {
        return 1.0;
    }
    // an identically zero row makes σ_min exactly zero
    if matrix.row_iter().any(|row| row.iter().all(|v| *v == 0.0)) {
        return f64::INFINITY;
    }
    let sv = matrix.clone().singular_values();
    let max = sv.max();
    let min = sv.min();
    if min <= SINGULAR_FLOOR {
        f64::INFINITY
    } else {
        max / min
    }
}

/// One greedy step of the elimination design.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationStep {
    /// Order whose matrix was conditioned by this step (`s + 1`).
    pub order: usize,
    /// Working set before removal, ascending.
    pub candidates: Vec<f64>,
    /// κ of `P_order` built from `candidates` with entry `j` removed.
    pub kappas: Vec<f64>,
    /// Index into `candidates` of the removed angle.
    pub removed: usize,
}

/// Index of the minimum κ; ties (within [`TIE_TOLERANCE`] relative) go to
/// the earliest, i.e. smallest co-latitude, candidate.
pub fn select_removal(kappas: &[f64]) -> usize {
    let mut best = 0;
    for (j, &kappa) in kappas.iter().enumerate().skip(1) {
        let incumbent = kappas[best];
        let better = if incumbent.is_infinite() {
            kappa < incumbent
        } else {
            kappa < incumbent * (1.0 - TIE_TOLERANCE)
        };
        if better {
            best = j;
        }
    }
    best
}

fn without(angles: &[f64], skip: usize) -> Vec<f64> {
    angles
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, a)| *a)
        .collect()
}

/// Greedy elimination design, also returning every step's candidate κ
/// values.
pub fn design_elimination_traced(
    bandlimit: usize,
) -> Result<(SamplingScheme, Vec<EliminationStep>)> {
    let grid = candidate_grid(bandlimit)?;
    let mut working = grid.angles;
    let mut theta = Vec::with_capacity(bandlimit);
    let mut steps = Vec::with_capacity(bandlimit.saturating_sub(1));

    for step in 0..bandlimit - 1 {
        let order = step + 1;
        let kappas: Vec<f64> = (0..working.len())
            .into_par_iter()
            .map(|j| {
                let residual = without(&working, j);
                condition_number(&order_matrix(&residual, order as i64, bandlimit))
            })
            .collect();
        let removed = select_removal(&kappas);
        theta.push(working[removed]);
        steps.push(EliminationStep {
            order,
            candidates: working.clone(),
            kappas,
            removed,
        });
        working.remove(removed);
    }
    theta.push(working[0]);

    let scheme = SamplingScheme {
        bandlimit,
        theta,
        method: PlacementMethod::Elimination,
    };
    Ok((scheme, steps))
}

pub fn design_elimination(bandlimit: usize) -> Result<SamplingScheme> {
    design_elimination_traced(bandlimit).map(|(scheme, _)| scheme)
}

pub fn design_ascending(bandlimit: usize) -> Result<SamplingScheme> {
    let grid = candidate_grid(bandlimit)?;
    Ok(SamplingScheme {
        bandlimit,
        theta: grid.angles,
        method: PlacementMethod::Ascending,
    })
}

pub fn design(bandlimit: usize, method: PlacementMethod) -> Result<SamplingScheme> {
    match method {
        PlacementMethod::Elimination => design_elimination(bandlimit),
        PlacementMethod::Ascending => design_ascending(bandlimit),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub bandlimit: usize,
    pub kappa: Vec<f64>,
    pub kappa_max: f64,
}

impl ConditionReport {
    /// Orders whose system is singular.
    pub fn singular_orders(&self) -> Vec<usize> {
        self.kappa
            .iter()
            .enumerate()
            .filter(|(_, k)| k.is_infinite())
            .map(|(m, _)| m)
            .collect()
    }
}

/// κ_m for every order, with `+∞` for singular systems.
pub fn condition_profile(scheme: &SamplingScheme) -> ConditionReport {
    let bandlimit = scheme.bandlimit;
    let kappa: Vec<f64> = (0..bandlimit)
        .into_par_iter()
        .map(|m| condition_number(&order_matrix(&scheme.theta[m..], m as i64, bandlimit)))
        .collect();
    let kappa_max = kappa.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    ConditionReport {
        bandlimit,
        kappa,
        kappa_max,
    }
}

/// κ_m for every order; fails on the first singular order.
pub fn condition_report(scheme: &SamplingScheme) -> Result<ConditionReport> {
    let report = condition_profile(scheme);
    if let Some(&m) = report.singular_orders().first() {
        return Err(ShtError::SingularSystem { m: m as i64 });
    }
    Ok(report)
}
