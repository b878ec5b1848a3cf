//! Scheme JSON, coefficient CSV and signal CSV files.
//!
//! Floats are written with 17 significant digits so that every value
//! round-trips bit-exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Result, ShtError};
use crate::sampling::{PlacementMethod, SamplingScheme};
use crate::sht::{HarmonicCoeffs, SpatialSignal};

/// `x` with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeFile {
    bandlimit: usize,
    method: PlacementMethod,
    theta: Vec<f64>,
}

pub fn scheme_to_json(scheme: &SamplingScheme) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"bandlimit\": {},", scheme.bandlimit());
    let _ = writeln!(out, "  \"method\": \"{}\",", scheme.method());
    out.push_str("  \"theta\": [\n");
    let n = scheme.theta().len();
    for (k, theta) in scheme.theta().iter().enumerate() {
        let sep = if k + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    {}{sep}", fmt_f64(*theta));
    }
    out.push_str("  ]\n}\n");
    out
}

/// Parses a scheme file; `origin` only labels diagnostics.
pub fn scheme_from_json(text: &str, origin: &Path) -> Result<SamplingScheme> {
    let file: SchemeFile = serde_json::from_str(text)
        .map_err(|e| ShtError::format(origin, e.line() as u64, e.to_string()))?;
    SamplingScheme::new(file.bandlimit, file.theta, file.method).map_err(|e| match e {
        ShtError::InvalidScheme(msg) | ShtError::DimensionMismatch(msg) => {
            ShtError::format(origin, 0, msg)
        }
        other => ShtError::format(origin, 0, other.to_string()),
    })
}

pub fn write_scheme(path: &Path, scheme: &SamplingScheme) -> Result<()> {
    write_text(path, &scheme_to_json(scheme))
}

pub fn read_scheme(path: &Path) -> Result<SamplingScheme> {
    scheme_from_json(&read_text(path)?, path)
}

pub fn coeffs_to_csv(coeffs: &HarmonicCoeffs) -> String {
    let mut out = String::from("l,m,re,im\n");
    for (l, m, v) in coeffs.iter() {
        let _ = writeln!(out, "{l},{m},{},{}", fmt_f64(v.re), fmt_f64(v.im));
    }
    out
}

pub fn signal_to_csv(signal: &SpatialSignal) -> String {
    let mut out = String::from("ring,j,re,im\n");
    for (k, ring) in signal.rings().iter().enumerate() {
        for (j, v) in ring.iter().enumerate() {
            let _ = writeln!(out, "{k},{j},{},{}", fmt_f64(v.re), fmt_f64(v.im));
        }
    }
    out
}

/// Reads `a,b,re,im` rows after checking the header; returns
/// `(line, a, b, value)`.
fn read_rows(
    text: &str,
    origin: &Path,
    header: [&str; 4],
) -> Result<Vec<(u64, i64, i64, Complex64)>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let found = reader
        .headers()
        .map_err(|e| ShtError::format(origin, 1, e.to_string()))?
        .clone();
    if found.iter().collect::<Vec<_>>() != header {
        return Err(ShtError::format(
            origin,
            1,
            format!(
                "expected header `{}`, found `{}`",
                header.join(","),
                found.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            ShtError::format(origin, line, e.to_string())
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 4 {
            return Err(ShtError::format(
                origin,
                line,
                format!("expected 4 fields, found {}", record.len()),
            ));
        }
        let int = |i: usize| {
            record[i].parse::<i64>().map_err(|_| {
                ShtError::format(
                    origin,
                    line,
                    format!("field `{}`: `{}` is not an integer", header[i], &record[i]),
                )
            })
        };
        let float = |i: usize| {
            record[i].parse::<f64>().map_err(|_| {
                ShtError::format(
                    origin,
                    line,
                    format!("field `{}`: `{}` is not a number", header[i], &record[i]),
                )
            })
        };
        let (a, b, re, im) = (int(0)?, int(1)?, float(2)?, float(3)?);
        if !re.is_finite() || !im.is_finite() {
            return Err(ShtError::format(origin, line, "non-finite value"));
        }
        rows.push((line, a, b, Complex64::new(re, im)));
    }
    Ok(rows)
}

fn perfect_square(n: usize, origin: &Path, what: &str) -> Result<usize> {
    let root = (n as f64).sqrt().round() as usize;
    if n == 0 || root * root != n {
        return Err(ShtError::format(
            origin,
            0,
            format!("{n} {what} rows is not L² for any band-limit L >= 1"),
        ));
    }
    Ok(root)
}

pub fn coeffs_from_csv(text: &str, origin: &Path) -> Result<HarmonicCoeffs> {
    let rows = read_rows(text, origin, ["l", "m", "re", "im"])?;
    let bandlimit = perfect_square(rows.len(), origin, "coefficient")?;
    let mut values = Vec::with_capacity(rows.len());
    for (index, (line, l, m, v)) in rows.into_iter().enumerate() {
        let (el, em) = HarmonicCoeffs::degree_order(index);
        if l != el as i64 || m != em {
            return Err(ShtError::format(
                origin,
                line,
                format!("expected (l, m) = ({el}, {em}), found ({l}, {m})"),
            ));
        }
        values.push(v);
    }
    HarmonicCoeffs::from_values(bandlimit, values)
}

pub fn signal_from_csv(text: &str, origin: &Path) -> Result<SpatialSignal> {
    let rows = read_rows(text, origin, ["ring", "j", "re", "im"])?;
    let bandlimit = perfect_square(rows.len(), origin, "sample")?;
    let mut iter = rows.into_iter();
    let mut rings = Vec::with_capacity(bandlimit);
    for k in 0..bandlimit {
        let mut ring = Vec::with_capacity(2 * k + 1);
        for j in 0..2 * k + 1 {
            let (line, rk, rj, v) = iter.next().expect("row count is L²");
            if rk != k as i64 || rj != j as i64 {
                return Err(ShtError::format(
                    origin,
                    line,
                    format!("expected (ring, j) = ({k}, {j}), found ({rk}, {rj})"),
                ));
            }
            ring.push(v);
        }
        rings.push(ring);
    }
    SpatialSignal::from_rings(rings)
}

pub fn write_coeffs(path: &Path, coeffs: &HarmonicCoeffs) -> Result<()> {
    write_text(path, &coeffs_to_csv(coeffs))
}

pub fn read_coeffs(path: &Path) -> Result<HarmonicCoeffs> {
    coeffs_from_csv(&read_text(path)?, path)
}

pub fn write_signal(path: &Path, signal: &SpatialSignal) -> Result<()> {
    write_text(path, &signal_to_csv(signal))
}

pub fn read_signal(path: &Path) -> Result<SpatialSignal> {
    signal_from_csv(&read_text(path)?, path)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| ShtError::io(path, e))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| ShtError::io(path, e))
}
