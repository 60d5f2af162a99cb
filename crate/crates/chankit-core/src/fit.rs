//! Least-squares path-loss model estimation.
//!
//! Two models over log-distance: the close-in reference model anchored at the
//! free-space loss of a reference distance (one free slope), and the
//! floating-intercept model (free intercept and slope). Shadowing sigma uses
//! divisor K, the MMSE convention, for both models so their sigmas compare
//! directly.

use crate::error::{Error, Result};
use crate::metrics::PathLossSample;
use crate::model::fspl;

/// Close-in reference-distance fit: `PL(d) = fspl(freq, d0) + 10 n log10(d/d0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CimFit {
    /// Path-loss exponent.
    pub n: f64,
    /// Shadowing standard deviation in dB.
    pub sigma_db: f64,
    /// Reference distance in metres.
    pub d0_m: f64,
    /// Free-space path loss at the reference distance, dB.
    pub fspl_d0_db: f64,
    /// Carrier frequency the anchor was computed at, Hz.
    pub freq_hz: f64,
    pub n_points: usize,
}

impl CimFit {
    /// Build a model from parameters rather than a fit; the anchor is
    /// recomputed so the `fspl_d0_db` invariant holds by construction.
    pub fn from_params(n: f64, sigma_db: f64, d0_m: f64, freq_hz: f64) -> Result<Self> {
        if !(sigma_db >= 0.0) {
            return Err(Error::Domain(format!("sigma_db must be >= 0, got {sigma_db}")));
        }
        Ok(Self { n, sigma_db, d0_m, fspl_d0_db: fspl(freq_hz, d0_m)?, freq_hz, n_points: 0 })
    }
}

/// Floating-intercept fit: `PL(d) = alpha + 10 beta log10(d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FimFit {
    /// Intercept in dB.
    pub alpha_db: f64,
    /// Slope (dimensionless, in tens of dB per decade).
    pub beta: f64,
    /// Shadowing standard deviation in dB.
    pub sigma_db: f64,
    pub n_points: usize,
}

fn check_samples(samples: &[PathLossSample]) -> Result<()> {
    if samples.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 samples, got {}",
            samples.len()
        )));
    }
    let d0 = samples[0].distance_m;
    if samples.iter().all(|s| s.distance_m == d0) {
        return Err(Error::InsufficientData("need at least two distinct distances".into()));
    }
    Ok(())
}

/// Fit the close-in model: single-parameter least squares of the excess loss
/// `PL_i - fspl(freq, d0)` against `10 log10(d_i / d0)` through the anchored
/// intercept.
pub fn fit_cim(samples: &[PathLossSample], d0_m: f64, freq_hz: f64) -> Result<CimFit> {
    check_samples(samples)?;
    if let Some(bad) = samples.iter().find(|s| s.distance_m < d0_m) {
        return Err(Error::Domain(format!(
            "sample {} at {} m lies inside reference distance {} m",
            bad.link_id, bad.distance_m, d0_m
        )));
    }
    let fspl_d0_db = fspl(freq_hz, d0_m)?;
    let mut sum_ab = 0.0;
    let mut sum_bb = 0.0;
    for s in samples {
        let b = 10.0 * (s.distance_m / d0_m).log10();
        let a = s.path_loss_db - fspl_d0_db;
        sum_ab += a * b;
        sum_bb += b * b;
    }
    if sum_bb == 0.0 {
        return Err(Error::InsufficientData("all samples at the reference distance".into()));
    }
    let n = sum_ab / sum_bb;
    let k = samples.len() as f64;
    let sse: f64 = samples
        .iter()
        .map(|s| {
            let b = 10.0 * (s.distance_m / d0_m).log10();
            let r = (s.path_loss_db - fspl_d0_db) - n * b;
            r * r
        })
        .sum();
    Ok(CimFit { n, sigma_db: (sse / k).sqrt(), d0_m, fspl_d0_db, freq_hz, n_points: samples.len() })
}

/// Fit the floating-intercept model by ordinary least squares of the path
/// loss against `10 log10(d)`.
pub fn fit_fim(samples: &[PathLossSample]) -> Result<FimFit> {
    check_samples(samples)?;
    let k = samples.len() as f64;
    let xs: Vec<f64> = samples.iter().map(|s| 10.0 * s.distance_m.log10()).collect();
    let mean_x = xs.iter().sum::<f64>() / k;
    let mean_y = samples.iter().map(|s| s.path_loss_db).sum::<f64>() / k;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (x, s) in xs.iter().zip(samples) {
        cov += (x - mean_x) * (s.path_loss_db - mean_y);
        var += (x - mean_x) * (x - mean_x);
    }
    if var == 0.0 {
        return Err(Error::InsufficientData("no spread in log-distance".into()));
    }
    let beta = cov / var;
    let alpha = mean_y - beta * mean_x;
    let sse: f64 = xs
        .iter()
        .zip(samples)
        .map(|(x, s)| {
            let r = s.path_loss_db - (alpha + beta * x);
            r * r
        })
        .sum();
    Ok(FimFit { alpha_db: alpha, beta, sigma_db: (sse / k).sqrt(), n_points: samples.len() })
}

/// Deterministic part of the close-in model. Requires `d >= d0`.
pub fn predict_cim(fit: &CimFit, d_m: f64) -> Result<f64> {
    if d_m < fit.d0_m {
        return Err(Error::Domain(format!("d = {d_m} m inside reference distance {} m", fit.d0_m)));
    }
    Ok(fit.fspl_d0_db + 10.0 * fit.n * (d_m / fit.d0_m).log10())
}

/// Deterministic part of the floating-intercept model. Requires `d > 0`.
pub fn predict_fim(fit: &FimFit, d_m: f64) -> Result<f64> {
    if !(d_m > 0.0) {
        return Err(Error::Domain(format!("d must be > 0, got {d_m}")));
    }
    Ok(fit.alpha_db + 10.0 * fit.beta * d_m.log10())
}
