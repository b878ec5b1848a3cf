//! Forward and inverse spherical harmonic transforms on an
//! optimal-dimensionality sampling.
//!
//! The forward transform works order by order from `|m| = L-1` down to 0.
//! Ring `k` only resolves longitudinal orders modulo `2k+1`, so its DFT bin
//! for `m` also carries every `m' ≡ m (mod 2k+1)`. Those aliases all have
//! `|m'| > k ≥ |m|`, which means they were solved at an earlier stage; once
//! an order is solved its contribution is subtracted from the rings it
//! aliases onto, and by the time ring `k` enters a system its bins are clean.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::error::{Result, ShtError};
use crate::legendre::scaled_legendre_column;
use crate::sampling::SamplingScheme;

/// Rings with at least this many samples go through the FFT.
pub const FFT_THRESHOLD: usize = 64;

/// Spherical harmonic coefficients `f_{l,m}`, flat index `l² + l + m`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoeffs {
    bandlimit: usize,
    values: Vec<Complex64>,
}

impl HarmonicCoeffs {
    pub fn zeros(bandlimit: usize) -> Self {
        HarmonicCoeffs {
            bandlimit,
            values: vec![Complex64::new(0.0, 0.0); bandlimit * bandlimit],
        }
    }

    pub fn from_values(bandlimit: usize, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != bandlimit * bandlimit {
            return Err(ShtError::DimensionMismatch(format!(
                "{} coefficients for band-limit {bandlimit} (expected {})",
                values.len(),
                bandlimit * bandlimit
            )));
        }
        Ok(HarmonicCoeffs { bandlimit, values })
    }

    /// Indicator of a single `(l, m)`.
    pub fn indicator(bandlimit: usize, l: usize, m: i64) -> Self {
        let mut c = Self::zeros(bandlimit);
        c[(l, m)] = Complex64::new(1.0, 0.0);
        c
    }

    pub fn index(l: usize, m: i64) -> usize {
        debug_assert!(m.unsigned_abs() as usize <= l);
        ((l * l + l) as i64 + m) as usize
    }

    /// `(l, m)` of a flat index.
    pub fn degree_order(index: usize) -> (usize, i64) {
        let l = (index as f64).sqrt() as usize;
        let l = if (l + 1) * (l + 1) <= index { l + 1 } else { l };
        (l, index as i64 - (l * l + l) as i64)
    }

    pub fn bandlimit(&self) -> usize {
        self.bandlimit
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, Complex64)> + '_ {
        self.values.iter().enumerate().map(|(i, v)| {
            let (l, m) = Self::degree_order(i);
            (l, m, *v)
        })
    }

    /// `max |self - other|` over all coefficients.
    pub fn max_abs_diff(&self, other: &HarmonicCoeffs) -> f64 {
        assert_eq!(self.bandlimit, other.bandlimit);
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn add_assign(&mut self, other: &HarmonicCoeffs) {
        assert_eq!(self.bandlimit, other.bandlimit);
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
    }
}

impl std::ops::Index<(usize, i64)> for HarmonicCoeffs {
    type Output = Complex64;

    fn index(&self, (l, m): (usize, i64)) -> &Complex64 {
        &self.values[Self::index(l, m)]
    }
}

impl std::ops::IndexMut<(usize, i64)> for HarmonicCoeffs {
    fn index_mut(&mut self, (l, m): (usize, i64)) -> &mut Complex64 {
        &mut self.values[Self::index(l, m)]
    }
}

/// Complex samples on the rings of a scheme; ring `k` holds `2k+1` values.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialSignal {
    bandlimit: usize,
    rings: Vec<Vec<Complex64>>,
}

impl SpatialSignal {
    pub fn zeros(bandlimit: usize) -> Self {
        SpatialSignal {
            bandlimit,
            rings: (0..bandlimit)
                .map(|k| vec![Complex64::new(0.0, 0.0); 2 * k + 1])
                .collect(),
        }
    }

    pub fn from_rings(rings: Vec<Vec<Complex64>>) -> Result<Self> {
        for (k, ring) in rings.iter().enumerate() {
            if ring.len() != 2 * k + 1 {
                return Err(ShtError::DimensionMismatch(format!(
                    "ring {k} holds {} samples (expected {})",
                    ring.len(),
                    2 * k + 1
                )));
            }
        }
        Ok(SpatialSignal {
            bandlimit: rings.len(),
            rings,
        })
    }

    /// Samples in ring-major order; `values.len()` must be a perfect square.
    pub fn from_flat(values: &[Complex64]) -> Result<Self> {
        let bandlimit = (values.len() as f64).sqrt().round() as usize;
        if bandlimit * bandlimit != values.len() {
            return Err(ShtError::DimensionMismatch(format!(
                "{} samples is not a perfect square",
                values.len()
            )));
        }
        let mut rings = Vec::with_capacity(bandlimit);
        let mut start = 0;
        for k in 0..bandlimit {
            rings.push(values[start..start + 2 * k + 1].to_vec());
            start += 2 * k + 1;
        }
        Ok(SpatialSignal { bandlimit, rings })
    }

    /// Evaluates `f` at every sample point of `scheme`.
    pub fn sample(scheme: &SamplingScheme, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let rings = scheme
            .theta()
            .iter()
            .enumerate()
            .map(|(k, &theta)| {
                (0..2 * k + 1)
                    .map(|j| f(theta, scheme.longitude(k, j)))
                    .collect()
            })
            .collect();
        SpatialSignal {
            bandlimit: scheme.bandlimit(),
            rings,
        }
    }

    pub fn bandlimit(&self) -> usize {
        self.bandlimit
    }

    pub fn rings(&self) -> &[Vec<Complex64>] {
        &self.rings
    }

    pub fn ring(&self, k: usize) -> &[Complex64] {
        &self.rings[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.rings.iter().flatten()
    }

    pub fn max_abs(&self) -> f64 {
        self.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self) -> bool {
        self.iter().all(|v| v.im == 0.0)
    }

    /// `self - other`, samplewise.
    pub fn sub(&self, other: &SpatialSignal) -> Result<SpatialSignal> {
        if self.bandlimit != other.bandlimit {
            return Err(ShtError::DimensionMismatch(format!(
                "signals with band-limits {} and {}",
                self.bandlimit, other.bandlimit
            )));
        }
        let rings = self
            .rings
            .iter()
            .zip(&other.rings)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(SpatialSignal {
            bandlimit: self.bandlimit,
            rings,
        })
    }

    /// `a·self + b·other`, samplewise.
    pub fn combine(&self, a: Complex64, other: &SpatialSignal, b: Complex64) -> SpatialSignal {
        assert_eq!(self.bandlimit, other.bandlimit);
        let rings = self
            .rings
            .iter()
            .zip(&other.rings)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| a * u + b * v).collect())
            .collect();
        SpatialSignal {
            bandlimit: self.bandlimit,
            rings,
        }
    }
}

/// The per-order linear system `P_m f_m = g_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderSystem {
    pub m: i64,
    pub pm: DMatrix<f64>,
    pub gm: Vec<Complex64>,
}

/// `D_m(θ_k)` for `|m| ≤ k`, stored at index `m + k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RingSpectrum {
    pub k: usize,
    pub values: Vec<Complex64>,
}

impl RingSpectrum {
    pub fn get(&self, m: i64) -> Complex64 {
        self.values[(m + self.k as i64) as usize]
    }
}

/// Matrix with entry `(i, j) = P̃_{|m|+j}^m(angles[i])` (0-based).
pub(crate) fn order_matrix(angles: &[f64], m: i64, bandlimit: usize) -> DMatrix<f64> {
    let n = bandlimit - m.unsigned_abs() as usize;
    debug_assert_eq!(angles.len(), n);
    let mut out = DMatrix::zeros(n, n);
    for (i, &theta) in angles.iter().enumerate() {
        let column = scaled_legendre_column(m, theta, bandlimit).expect("order checked by caller");
        for (j, v) in column.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    out
}

fn check_order(scheme: &SamplingScheme, m: i64) -> Result<()> {
    if m.unsigned_abs() as usize >= scheme.bandlimit() {
        return Err(ShtError::InvalidOrder {
            m,
            bandlimit: scheme.bandlimit(),
        });
    }
    Ok(())
}

/// `P_m` built from rings `|m| … L-1` of `scheme`.
pub fn build_pm(scheme: &SamplingScheme, m: i64) -> Result<DMatrix<f64>> {
    check_order(scheme, m)?;
    let am = m.unsigned_abs() as usize;
    Ok(order_matrix(&scheme.theta()[am..], m, scheme.bandlimit()))
}

fn check_signal(scheme: &SamplingScheme, signal: &SpatialSignal) -> Result<()> {
    if signal.bandlimit() != scheme.bandlimit() {
        return Err(ShtError::DimensionMismatch(format!(
            "signal has band-limit {} but scheme has {}",
            signal.bandlimit(),
            scheme.bandlimit()
        )));
    }
    Ok(())
}

fn residue(m: i64, n: usize) -> usize {
    m.rem_euclid(n as i64) as usize
}

/// `e^{-2πi r/n}` for `r = 0 … n-1`.
fn twiddles(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|r| {
            let (s, c) = (2.0 * PI * r as f64 / n as f64).sin_cos();
            Complex64::new(c, -s)
        })
        .collect()
}

enum RingDft {
    Direct(Vec<Complex64>),
    Fast(Arc<dyn Fft<f64>>),
}

impl RingDft {
    fn new(n: usize, inverse: bool, planner: &mut FftPlanner<f64>) -> Self {
        if n < FFT_THRESHOLD {
            let mut t = twiddles(n);
            if inverse {
                t.iter_mut().for_each(|w| *w = w.conj());
            }
            RingDft::Direct(t)
        } else if inverse {
            RingDft::Fast(planner.plan_fft_inverse(n))
        } else {
            RingDft::Fast(planner.plan_fft_forward(n))
        }
    }

    /// Unnormalized DFT with the sign baked into the plan.
    fn apply(&self, data: &mut [Complex64]) {
        match self {
            RingDft::Direct(tw) => {
                let n = data.len();
                let out: Vec<Complex64> = (0..n)
                    .map(|q| {
                        data.iter()
                            .enumerate()
                            .map(|(j, v)| v * tw[(q * j) % n])
                            .sum()
                    })
                    .collect();
                data.copy_from_slice(&out);
            }
            RingDft::Fast(fft) => fft.process(data),
        }
    }
}

/// `(2π/n) Σ_j f_j e^{-2πi q j/n}` for every residue `q`.
fn ring_residue_spectrum(samples: &[Complex64], planner: &mut FftPlanner<f64>) -> Vec<Complex64> {
    let n = samples.len();
    let mut data = samples.to_vec();
    RingDft::new(n, false, planner).apply(&mut data);
    let scale = 2.0 * PI / n as f64;
    data.iter_mut().for_each(|v| *v *= scale);
    data
}

/// Quadrature of `∫ f(θ_k, φ) e^{-imφ} dφ` on ring `k` for `|m| ≤ k`.
pub fn ring_dft(signal: &SpatialSignal, k: usize) -> RingSpectrum {
    let mut planner = FftPlanner::new();
    let by_residue = ring_residue_spectrum(signal.ring(k), &mut planner);
    let n = 2 * k + 1;
    let values = (-(k as i64)..=k as i64)
        .map(|m| by_residue[residue(m, n)])
        .collect();
    RingSpectrum { k, values }
}

/// Per-ring bookkeeping for the alias subtraction.
struct RingBins {
    bins: Vec<Complex64>,
    /// Smallest |m'| whose contribution has been removed; `L` initially.
    cleaned_from: usize,
}

/// Forward SHT, calling `inspect` with every assembled order system.
pub fn forward_sht_inspect(
    scheme: &SamplingScheme,
    signal: &SpatialSignal,
    mut inspect: impl FnMut(&OrderSystem),
) -> Result<HarmonicCoeffs> {
    check_signal(scheme, signal)?;
    let bandlimit = scheme.bandlimit();
    let theta = scheme.theta();

    let mut rings: Vec<RingBins> = {
        let mut planner = FftPlanner::new();
        signal
            .rings()
            .iter()
            .map(|samples| RingBins {
                bins: ring_residue_spectrum(samples, &mut planner),
                cleaned_from: bandlimit,
            })
            .collect()
    };

    let mut coeffs = HarmonicCoeffs::zeros(bandlimit);

    for am in (0..bandlimit).rev() {
        let size = bandlimit - am;
        let pm = order_matrix(&theta[am..], am as i64, bandlimit);
        let orders: Vec<i64> = if am == 0 {
            vec![0]
        } else {
            vec![am as i64, -(am as i64)]
        };

        let mut rhs = DMatrix::<f64>::zeros(size, 2 * orders.len());
        let mut systems = Vec::with_capacity(orders.len());
        for (c, &m) in orders.iter().enumerate() {
            let gm: Vec<Complex64> = (am..bandlimit)
                .map(|k| {
                    let ring = &rings[k];
                    // every order aliasing onto ring k must already be gone
                    debug_assert!(ring.cleaned_from == k + 1 || k + 1 >= bandlimit);
                    ring.bins[residue(m, 2 * k + 1)]
                })
                .collect();
            for (i, g) in gm.iter().enumerate() {
                rhs[(i, 2 * c)] = g.re;
                rhs[(i, 2 * c + 1)] = g.im;
            }
            systems.push(gm);
        }

        for (&m, gm) in orders.iter().zip(&systems) {
            let sign = if m < 0 && am % 2 == 1 { -1.0 } else { 1.0 };
            inspect(&OrderSystem {
                m,
                pm: if sign < 0.0 { -&pm } else { pm.clone() },
                gm: gm.clone(),
            });
        }

        let solution = pm
            .lu()
            .solve(&rhs)
            .ok_or(ShtError::SingularSystem { m: am as i64 })?;
        if solution.iter().any(|v| !v.is_finite()) {
            return Err(ShtError::SingularSystem { m: am as i64 });
        }

        for (c, &m) in orders.iter().enumerate() {
            // P_{-m} = (-1)^m P_m, and g_m = 2π P_m f_m
            let sign = if m < 0 && am % 2 == 1 { -1.0 } else { 1.0 };
            let scale = sign / (2.0 * PI);
            for i in 0..size {
                let v = Complex64::new(solution[(i, 2 * c)], solution[(i, 2 * c + 1)]) * scale;
                coeffs[(am + i, m)] = v;
            }
        }

        // remove the freshly solved orders from the rings they alias onto
        for (k, ring) in rings.iter_mut().enumerate().take(am) {
            debug_assert!(am > k);
            let column =
                scaled_legendre_column(am as i64, theta[k], bandlimit).expect("am < bandlimit");
            for &m in &orders {
                let sign = if m < 0 && am % 2 == 1 { -1.0 } else { 1.0 };
                let a: Complex64 = column
                    .iter()
                    .enumerate()
                    .map(|(i, p)| coeffs[(am + i, m)] * *p)
                    .sum::<Complex64>()
                    * sign;
                ring.bins[residue(m, 2 * k + 1)] -= a * (2.0 * PI);
            }
            ring.cleaned_from = am;
        }
    }

    Ok(coeffs)
}

/// Forward SHT: samples on `scheme` to the `L²` coefficients.
pub fn forward_sht(scheme: &SamplingScheme, signal: &SpatialSignal) -> Result<HarmonicCoeffs> {
    forward_sht_inspect(scheme, signal, |_| {})
}

/// Inverse SHT: synthesizes the band-limited expansion at every sample.
pub fn inverse_sht(scheme: &SamplingScheme, coeffs: &HarmonicCoeffs) -> Result<SpatialSignal> {
    if coeffs.bandlimit() != scheme.bandlimit() {
        return Err(ShtError::DimensionMismatch(format!(
            "coefficients have band-limit {} but scheme has {}",
            coeffs.bandlimit(),
            scheme.bandlimit()
        )));
    }
    let bandlimit = scheme.bandlimit();
    let rings = scheme
        .theta()
        .par_iter()
        .enumerate()
        .map(|(k, &theta)| {
            let n = 2 * k + 1;
            let mut bins = vec![Complex64::new(0.0, 0.0); n];
            for am in 0..bandlimit {
                let column =
                    scaled_legendre_column(am as i64, theta, bandlimit).expect("am < bandlimit");
                let orders: &[i64] = if am == 0 {
                    &[0]
                } else {
                    &[am as i64, -(am as i64)]
                };
                for &m in orders {
                    let sign = if m < 0 && am % 2 == 1 { -1.0 } else { 1.0 };
                    let a: Complex64 = column
                        .iter()
                        .enumerate()
                        .map(|(i, p)| coeffs[(am + i, m)] * *p)
                        .sum::<Complex64>()
                        * sign;
                    bins[residue(m, n)] += a;
                }
            }
            let mut planner = FftPlanner::new();
            RingDft::new(n, true, &mut planner).apply(&mut bins);
            bins
        })
        .collect();
    Ok(SpatialSignal { bandlimit, rings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{design_ascending, design_elimination};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn flat_index_roundtrip() {
        for i in 0..400 {
            let (l, m) = HarmonicCoeffs::degree_order(i);
            assert!(m.unsigned_abs() as usize <= l);
            assert_eq!(HarmonicCoeffs::index(l, m), i);
        }
        assert_eq!(HarmonicCoeffs::index(0, 0), 0);
        assert_eq!(HarmonicCoeffs::index(1, -1), 1);
        assert_eq!(HarmonicCoeffs::index(2, 2), 8);
    }

    #[test]
    fn pm_shapes() {
        let s = design_elimination(5).unwrap();
        let p = build_pm(&s, 4).unwrap();
        assert_eq!(p.shape(), (1, 1));
        assert_eq!(
            p[(0, 0)],
            crate::legendre::scaled_legendre(4, 4, s.theta()[4]).unwrap()
        );
        assert!(build_pm(&s, 5).is_err());
        assert!(build_pm(&s, -5).is_err());

        let s = design_ascending(2).unwrap();
        let p = build_pm(&s, 0).unwrap();
        let t = s.theta();
        let y = |l, th| crate::legendre::scaled_legendre(l, 0, th).unwrap();
        assert_eq!(p[(0, 0)], y(0, t[0]));
        assert_eq!(p[(0, 1)], y(1, t[0]));
        assert_eq!(p[(1, 0)], y(0, t[1]));
        assert_eq!(p[(1, 1)], y(1, t[1]));
    }

    #[test]
    fn negative_order_matrix_is_signed_copy() {
        let s = design_elimination(9).unwrap();
        for m in 1..9i64 {
            let p = build_pm(&s, m).unwrap();
            let q = build_pm(&s, -m).unwrap();
            let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
            assert_eq!(q, p * sign);
        }
    }

    #[test]
    fn ring_dft_single_exponential() {
        let signal = SpatialSignal::from_rings(
            (0..4)
                .map(|k| {
                    (0..2 * k + 1)
                        .map(|j| {
                            let phi = 2.0 * PI * j as f64 / (2 * k + 1) as f64;
                            c((2.0 * phi).cos(), (2.0 * phi).sin())
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let d = ring_dft(&signal, 3);
        assert_eq!(d.values.len(), 7);
        for m in -3..=3 {
            let expect = if m == 2 { 2.0 * PI } else { 0.0 };
            assert!((d.get(m) - c(expect, 0.0)).norm() < 1e-14, "m = {m}");
        }
    }

    #[test]
    fn ring_dft_aliases_onto_residue() {
        let ring1: Vec<Complex64> = (0..3)
            .map(|j| {
                let phi = 2.0 * PI * j as f64 / 3.0;
                c((3.0 * phi).cos(), (3.0 * phi).sin())
            })
            .collect();
        let signal = SpatialSignal::from_rings(vec![vec![c(0.0, 0.0)], ring1]).unwrap();
        let d = ring_dft(&signal, 1);
        assert!((d.get(0) - c(2.0 * PI, 0.0)).norm() < 1e-14);
        assert!(d.get(1).norm() < 1e-14);
        assert!(d.get(-1).norm() < 1e-14);
    }

    #[test]
    fn ring_dft_constant() {
        let v = c(0.3, -1.2);
        for k in [0usize, 5, 40] {
            let mut rings: Vec<Vec<Complex64>> =
                (0..=k).map(|i| vec![c(0.0, 0.0); 2 * i + 1]).collect();
            rings[k] = vec![v; 2 * k + 1];
            let d = ring_dft(&SpatialSignal::from_rings(rings).unwrap(), k);
            for m in -(k as i64)..=k as i64 {
                let expect = if m == 0 { v * 2.0 * PI } else { c(0.0, 0.0) };
                assert!((d.get(m) - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn fast_and_direct_dft_agree() {
        let mut planner = FftPlanner::new();
        for n in [65usize, 97, 129, 255] {
            let data: Vec<Complex64> = (0..n)
                .map(|j| c((j as f64 * 0.37).sin(), (j as f64 * 1.3).cos()))
                .collect();
            let mut fast = data.clone();
            RingDft::new(n, false, &mut planner).apply(&mut fast);
            let mut direct = data.clone();
            RingDft::Direct(twiddles(n)).apply(&mut direct);
            for (a, b) in fast.iter().zip(&direct) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn single_ring_constant() {
        let s = design_elimination(1).unwrap();
        let v = c(2.5, -0.5);
        let signal = SpatialSignal::from_rings(vec![vec![v]]).unwrap();
        let f = forward_sht(&s, &signal).unwrap();
        assert!((f[(0, 0)] - v * (4.0 * PI).sqrt()).norm() < 1e-14);
    }

    #[test]
    fn monopole_synthesis() {
        let s = design_elimination(6).unwrap();
        let sig = inverse_sht(&s, &HarmonicCoeffs::indicator(6, 0, 0)).unwrap();
        for v in sig.iter() {
            assert!((v - c(1.0 / (4.0 * PI).sqrt(), 0.0)).norm() < 1e-15);
        }
        let zero = inverse_sht(&s, &HarmonicCoeffs::zeros(6)).unwrap();
        assert!(zero.iter().all(|v| *v == c(0.0, 0.0)));
    }

    #[test]
    fn dimension_checks() {
        let s = design_elimination(4).unwrap();
        assert!(matches!(
            inverse_sht(&s, &HarmonicCoeffs::zeros(3)),
            Err(ShtError::DimensionMismatch(_))
        ));
        assert!(matches!(
            forward_sht(&s, &SpatialSignal::zeros(5)),
            Err(ShtError::DimensionMismatch(_))
        ));
        assert!(SpatialSignal::from_rings(vec![vec![c(0.0, 0.0)], vec![c(0.0, 0.0)]]).is_err());
        assert!(SpatialSignal::from_flat(&[c(0.0, 0.0); 5]).is_err());
        assert!(HarmonicCoeffs::from_values(3, vec![c(0.0, 0.0); 8]).is_err());
    }

    #[test]
    fn ascending_scheme_is_rejected_as_singular() {
        let s = design_ascending(4).unwrap();
        let sig = inverse_sht(&s, &HarmonicCoeffs::indicator(4, 2, 1)).unwrap();
        assert!(matches!(
            forward_sht(&s, &sig),
            Err(ShtError::SingularSystem { .. })
        ));
    }
}
