//! Scaled associated Legendre functions and complex spherical harmonics.
//!
//! `P̃_l^m(θ) = Y_l^m(θ, 0)` with the orthonormal normalization
//! `sqrt((2l+1)/(4π) · (l-m)!/(l+m)!)` and the Condon–Shortley phase
//! `(-1)^m` folded into `P_l^m`, so that for example
//! `P̃_1^1(θ) = -sqrt(3/(8π)) sin θ`.
//!
//! Evaluation runs the fixed-order, ascending-degree three-term recurrence.
//! The sectoral seed `P̃_m^m` is accumulated as a product carrying a separate
//! binary exponent, so neither the factorial ratio nor `sin^m θ` can
//! underflow before the recurrence has a chance to grow the values back into
//! range.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, ShtError};

/// Stored values are kept below this magnitude; beyond it both recurrence
/// terms are rescaled by `2^-RESCALE_BITS`.
const RESCALE_BITS: i32 = 480;
const RESCALE_HIGH: f64 = 1.0e144; // ~2^478
const RESCALE_LOW: f64 = 1.0e-144;

fn exp2(e: i32) -> f64 {
    f64::powi(2.0, e)
}

/// `value · 2^exponent` without intermediate underflow.
fn unscale(value: f64, exponent: i32) -> f64 {
    if exponent == 0 || value == 0.0 {
        return value;
    }
    let half = exponent / 2;
    value * exp2(half) * exp2(exponent - half)
}

fn is_pole(theta: f64) -> bool {
    theta == 0.0 || theta == PI
}

/// Sectoral value `|P̃_m^m(θ)|` as `(mantissa, binary exponent)`, unsigned.
fn sectoral_seed(m: usize, sin_theta: f64) -> (f64, i32) {
    let mut value = ((2 * m + 1) as f64 / (4.0 * PI)).sqrt();
    let mut exponent = 0i32;
    for k in 1..=m {
        let k = k as f64;
        value *= ((2.0 * k - 1.0) / (2.0 * k)).sqrt() * sin_theta;
        if value < RESCALE_LOW {
            value *= exp2(RESCALE_BITS);
            exponent -= RESCALE_BITS;
        }
    }
    (value, exponent)
}

fn column_unchecked(am: usize, m_is_negative: bool, theta: f64, bandlimit: usize) -> Vec<f64> {
    let len = bandlimit - am;
    let mut out = vec![0.0; len];
    if am != 0 && is_pole(theta) {
        return out;
    }

    let x = theta.cos();
    let s = theta.sin();
    let (seed, mut exponent) = sectoral_seed(am, s);
    // Condon–Shortley phase; P̃_l^{-m} = (-1)^m P̃_l^m cancels it again.
    let sign = if am % 2 == 1 && !m_is_negative {
        -1.0
    } else {
        1.0
    };

    let mut cur = sign * seed;
    out[0] = unscale(cur, exponent);
    if len == 1 {
        return out;
    }

    let mf = am as f64;
    let next = x * (2.0 * mf + 3.0).sqrt() * cur;
    let mut prev = std::mem::replace(&mut cur, next);
    out[1] = unscale(cur, exponent);

    for (i, slot) in out.iter_mut().enumerate().skip(2) {
        let l = (am + i) as f64;
        let a = ((4.0 * l * l - 1.0) / (l * l - mf * mf)).sqrt();
        let lm1 = l - 1.0;
        let b = ((lm1 * lm1 - mf * mf) / (4.0 * lm1 * lm1 - 1.0)).sqrt();
        let next = a * (x * cur - b * prev);
        prev = std::mem::replace(&mut cur, next);
        if exponent < 0 && cur.abs() > RESCALE_HIGH {
            cur *= exp2(-RESCALE_BITS);
            prev *= exp2(-RESCALE_BITS);
            exponent += RESCALE_BITS;
        }
        *slot = unscale(cur, exponent);
    }
    out
}

/// `P̃_{|m|+i}^m(θ)` for `i = 0 … L-1-|m|`, from a single recurrence sweep.
pub fn scaled_legendre_column(m: i64, theta: f64, bandlimit: usize) -> Result<Vec<f64>> {
    let am = m.unsigned_abs() as usize;
    if am >= bandlimit {
        return Err(ShtError::InvalidOrder { m, bandlimit });
    }
    Ok(column_unchecked(am, m < 0, theta, bandlimit))
}

/// `P̃_l^m(θ) = Y_l^m(θ, 0)`.
pub fn scaled_legendre(l: usize, m: i64, theta: f64) -> Result<f64> {
    let am = m.unsigned_abs() as usize;
    if am > l {
        return Err(ShtError::InvalidDegreeOrder { l, m });
    }
    let column = column_unchecked(am, m < 0, theta, l + 1);
    Ok(column[l - am])
}

/// `Y_l^m(θ, φ) = P̃_l^m(θ) e^{imφ}`.
pub fn spherical_harmonic(l: usize, m: i64, theta: f64, phi: f64) -> Result<Complex64> {
    let p = scaled_legendre(l, m, theta)?;
    let arg = m as f64 * phi;
    Ok(Complex64::new(p * arg.cos(), p * arg.sin()))
}
