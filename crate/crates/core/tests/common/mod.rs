//! Reference implementations shared by the integration tests. Nothing here
//! calls into the recurrence or solver paths it is used to check.

#![allow(dead_code)]

use std::f64::consts::PI;

use astro_float::{BigFloat, Consts, RoundingMode};
use nalgebra::DMatrix;
use osht::{scaled_legendre, Complex64, HarmonicCoeffs, SamplingScheme, SpatialSignal};

const PREC: usize = 2560;
const RM: RoundingMode = RoundingMode::ToEven;

fn int(n: u64) -> BigFloat {
    BigFloat::from_word(n, PREC)
}

fn to_f64(x: &BigFloat, cc: &mut Consts) -> f64 {
    let s = x
        .format(astro_float::Radix::Dec, RM, cc)
        .expect("formatting a finite value");
    s.parse().unwrap_or_else(|_| panic!("unparseable `{s}`"))
}

/// Arbitrary-precision `P̃_l^m(θ)` from the explicit polynomial form
/// `(-1)^m N_lm sin^m θ · 2^-l Σ_k (-1)^k (2l-2k)! / (k! (l-k)! (l-2k-m)!) x^(l-2k-m)`.
pub struct LegendreOracle {
    cc: Consts,
    factorials: Vec<BigFloat>,
}

impl LegendreOracle {
    pub fn new(max_degree: usize) -> Self {
        let mut factorials = vec![int(1)];
        for n in 1..=(2 * max_degree + 2) as u64 {
            let next = factorials.last().unwrap().mul(&int(n), PREC, RM);
            factorials.push(next);
        }
        LegendreOracle {
            cc: Consts::new().expect("constants cache"),
            factorials,
        }
    }

    pub fn eval(&mut self, l: usize, m: usize, theta: f64) -> f64 {
        let v = self.eval_big(l, m, &BigFloat::from_f64(theta, PREC));
        to_f64(&v, &mut self.cc)
    }

    /// `(P̃_l^m(θ), A)` where `A = sqrt(P̃² + (∂_θ P̃ / (l + 1/2))²)` is the
    /// local oscillation amplitude; the derivative is a central difference
    /// with step `2^-300` at full precision.
    pub fn eval_with_amplitude(&mut self, l: usize, m: usize, theta: f64) -> (f64, f64) {
        let t = BigFloat::from_f64(theta, PREC);
        let h = int(2).powi(300, PREC, RM).reciprocal(PREC, RM);
        let v = self.eval_big(l, m, &t);
        let up = self.eval_big(l, m, &t.add(&h, PREC, RM));
        let down = self.eval_big(l, m, &t.sub(&h, PREC, RM));
        let slope = up
            .sub(&down, PREC, RM)
            .div(&h.mul(&int(2), PREC, RM), PREC, RM);
        let value = to_f64(&v, &mut self.cc);
        let slope = to_f64(&slope, &mut self.cc);
        let scaled = slope / (l as f64 + 0.5);
        (value, (value * value + scaled * scaled).sqrt())
    }

    fn eval_big(&mut self, l: usize, m: usize, t: &BigFloat) -> BigFloat {
        assert!(m <= l);
        let cc = &mut self.cc;
        let fact = &self.factorials;
        let x = t.cos(PREC, RM, cc);
        let s = t.sin(PREC, RM, cc);

        let mut sum = BigFloat::from_word(0, PREC);
        let mut k = 0usize;
        while 2 * k + m <= l {
            let num = &fact[2 * l - 2 * k];
            let den = fact[k]
                .mul(&fact[l - k], PREC, RM)
                .mul(&fact[l - 2 * k - m], PREC, RM);
            let mut term = num
                .div(&den, PREC, RM)
                .mul(&x.powi(l - 2 * k - m, PREC, RM), PREC, RM);
            if k % 2 == 1 {
                term.inv_sign();
            }
            sum = sum.add(&term, PREC, RM);
            k += 1;
        }
        let two_l = int(2).powi(l, PREC, RM);
        sum = sum
            .div(&two_l, PREC, RM)
            .mul(&s.powi(m, PREC, RM), PREC, RM);

        let pi = cc.pi(PREC, RM);
        let norm = int(2 * l as u64 + 1)
            .mul(&fact[l - m], PREC, RM)
            .div(
                &int(4).mul(&pi, PREC, RM).mul(&fact[l + m], PREC, RM),
                PREC,
                RM,
            )
            .sqrt(PREC, RM);
        let mut value = sum.mul(&norm, PREC, RM);
        if m % 2 == 1 {
            value.inv_sign();
        }
        value
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, exact through degree
/// `2n - 1`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Direct evaluation of `Σ f_lm Y_l^m` at every sample point.
pub fn synthesize_direct(scheme: &SamplingScheme, coeffs: &HarmonicCoeffs) -> SpatialSignal {
    let values: Vec<Complex64> = scheme
        .points()
        .map(|(theta, phi)| {
            coeffs
                .iter()
                .map(|(l, m, f)| f * osht::spherical_harmonic(l, m, theta, phi).unwrap())
                .sum()
        })
        .collect();
    SpatialSignal::from_flat(&values).unwrap()
}

/// Random coefficients whose synthesis is real-valued.
pub fn real_signal_coeffs(bandlimit: usize, seed: u64) -> HarmonicCoeffs {
    let mut c = osht::bench::random_bandlimited(bandlimit, seed);
    for l in 0..bandlimit {
        c[(l, 0)] = Complex64::new(c[(l, 0)].re, 0.0);
        for m in 1..=l as i64 {
            let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
            c[(l, -m)] = c[(l, m)].conj() * sign;
        }
    }
    c
}

/// κ of `P_order` on `angles`, built entry by entry and decomposed with a
/// full SVD.
pub fn kappa_reference(angles: &[f64], order: usize, bandlimit: usize) -> f64 {
    let n = bandlimit - order;
    let m = DMatrix::from_fn(n, n, |i, j| {
        scaled_legendre(order + j, order as i64, angles[i]).unwrap()
    });
    if m.row_iter().any(|r| r.iter().all(|v| *v == 0.0)) {
        return f64::INFINITY;
    }
    let sv = m.svd(false, false).singular_values;
    let (max, min) = (sv.max(), sv.min());
    if min <= 1e-300 {
        f64::INFINITY
    } else {
        max / min
    }
}
