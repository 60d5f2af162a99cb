//! `chankit fit`: path-loss model estimation from a sample table.

use std::path::Path;

use anyhow::{bail, Context, Result};
use chankit_core::{
    fit_cim, fit_fim, parse_pathloss_table, predict_cim, predict_fim, write_fit_report,
    FitModelKind, FitReportRow, PathLossSample, Scenario,
};

use crate::fsutil::{read_text, write_atomic};

/// Scenario pools for fitting: LOS alone, and NLOS with glass-obstructed
/// links folded in. Labels keep the pool name.
fn pools(samples: &[PathLossSample], only: Option<&str>) -> Result<Vec<(String, Vec<PathLossSample>)>> {
    if let Some(label) = only {
        let scenario = Scenario::parse(label).map_err(|e| anyhow::anyhow!("--scenario: {e}"))?;
        let pool: Vec<PathLossSample> =
            samples.iter().filter(|s| s.scenario == scenario).cloned().collect();
        if pool.is_empty() {
            bail!("no samples with scenario {label}");
        }
        return Ok(vec![(label.to_string(), pool)]);
    }
    let mut out = Vec::new();
    for (label, pool_of) in [("LOS", Scenario::Los), ("NLOS", Scenario::Nlos)] {
        let pool: Vec<PathLossSample> =
            samples.iter().filter(|s| s.scenario.fit_pool() == pool_of).cloned().collect();
        if pool.is_empty() {
            log::warn!("no {label} samples; pool skipped");
            continue;
        }
        out.push((label.to_string(), pool));
    }
    if out.is_empty() {
        bail!("no samples in any scenario pool");
    }
    Ok(out)
}

pub fn run(
    table: &Path,
    out: &Path,
    residuals: Option<&Path>,
    model: &str,
    scenario: Option<&str>,
    d0_m: f64,
    freq_hz: f64,
) -> Result<()> {
    let samples = parse_pathloss_table(&read_text(table)?)
        .with_context(|| format!("parsing {}", table.display()))?;
    let mut rows: Vec<FitReportRow> = Vec::new();
    let mut residual_lines = String::from("link_id,distance_m,scenario,model,predicted_db,residual_db\n");
    for (label, pool) in pools(&samples, scenario)? {
        if model == "cim" || model == "both" {
            let fit = fit_cim(&pool, d0_m, freq_hz)
                .with_context(|| format!("close-in fit over {label}"))?;
            log::info!("{label} cim: n = {:.3}, sigma = {:.2} dB over {} points", fit.n, fit.sigma_db, fit.n_points);
            for s in &pool {
                let pred = predict_cim(&fit, s.distance_m)?;
                residual_lines.push_str(&format!(
                    "{},{},{},cim,{:.4},{:.4}\n",
                    s.link_id, s.distance_m, s.scenario, pred, s.path_loss_db - pred
                ));
            }
            rows.push(FitReportRow {
                model: FitModelKind::Cim,
                scenario: label.clone(),
                param1: fit.n,
                param2: fit.d0_m,
                sigma_db: fit.sigma_db,
                n_points: fit.n_points,
            });
        }
        if model == "fim" || model == "both" {
            let fit = fit_fim(&pool).with_context(|| format!("floating-intercept fit over {label}"))?;
            log::info!(
                "{label} fim: alpha = {:.2} dB, beta = {:.3}, sigma = {:.2} dB over {} points",
                fit.alpha_db, fit.beta, fit.sigma_db, fit.n_points
            );
            for s in &pool {
                let pred = predict_fim(&fit, s.distance_m)?;
                residual_lines.push_str(&format!(
                    "{},{},{},fim,{:.4},{:.4}\n",
                    s.link_id, s.distance_m, s.scenario, pred, s.path_loss_db - pred
                ));
            }
            rows.push(FitReportRow {
                model: FitModelKind::Fim,
                scenario: label.clone(),
                param1: fit.alpha_db,
                param2: fit.beta,
                sigma_db: fit.sigma_db,
                n_points: fit.n_points,
            });
        }
    }
    write_atomic(out, &write_fit_report(&rows))?;
    if let Some(path) = residuals {
        write_atomic(path, &residual_lines)?;
    }
    Ok(())
}
