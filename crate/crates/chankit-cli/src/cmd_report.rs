//! `chankit report`: run extraction, path-loss metrics, fits, and delay
//! statistics over a campaign directory and emit a consolidated report.

use std::path::Path;

use anyhow::{bail, Result};
use chankit_core::{
    delay_stats, detect_all_beams, empirical_cdf, extract_padp_opts, fit_cim, fit_fim,
    omni_rx_power, omni_rx_power_raw, parse_sweep, path_loss_with_limit, predict_cim, predict_fim,
    write_cdf_csv, write_fit_report, write_mpcs, write_pathloss_table, write_stats_csv,
    FitModelKind, FitReportRow, PathLossSample, Scenario, StatsRow,
};

use crate::chart::{pathloss_chart, ScatterPanel, Series};
use crate::fsutil::{read_text, write_atomic};
use crate::index::CampaignIndex;
use crate::ExtractFlags;

const FIT_LINE_POINTS: usize = 50;

pub fn run(
    campaign: &Path,
    out_dir: &Path,
    flags: &ExtractFlags,
    model: &str,
    d0_m: f64,
    raw_sum: bool,
) -> Result<()> {
    let index = CampaignIndex::load(campaign)?;
    let params = flags.correction();
    let opts = flags.options();

    let mut pl_samples: Vec<PathLossSample> = Vec::new();
    let mut stats_rows: Vec<StatsRow> = Vec::new();
    let mut rms_pools: Vec<(String, Vec<f64>)> = vec![("LOS".into(), vec![]), ("NLOS".into(), vec![])];
    let mut freq_hz = 28e9;
    let mut processed = 0usize;

    for (path, entry) in index.sweep_paths(campaign) {
        let rec = match read_text(&path).and_then(|t| Ok(parse_sweep(&t)?)) {
            Ok(rec) => rec,
            Err(e) => {
                log::warn!("skipping {}: {e:#}", path.display());
                continue;
            }
        };
        processed += 1;
        freq_hz = rec.config.carrier_freq_hz;
        let padp = extract_padp_opts(&rec, &params, &opts);
        write_atomic(
            &out_dir.join("mpcs").join(format!("{}.mpc.csv", rec.meta.link_id)),
            &write_mpcs(&padp),
        )?;
        if padp.mpcs.is_empty() {
            log::warn!("{}: no MPCs extracted, link skipped", rec.meta.link_id);
            continue;
        }

        let p_rx = if raw_sum {
            let (beams, _) = detect_all_beams(&rec, opts.threshold_db);
            omni_rx_power_raw(&beams)?
        } else {
            omni_rx_power(&padp)?
        };
        let pl = path_loss_with_limit(
            rec.config.tx_power_dbm,
            p_rx,
            rec.pattern.peak_gain_dbi,
            rec.pattern.peak_gain_dbi,
            rec.config.max_measurable_pl_db,
        );
        if pl.suspicious {
            log::warn!("{}: suspicious path loss {:.1} dB", rec.meta.link_id, pl.db);
        }
        let sample = PathLossSample {
            link_id: rec.meta.link_id.clone(),
            distance_m: rec.meta.distance_m,
            scenario: rec.meta.scenario,
            path_loss_db: pl.db,
        };
        match sample.validate() {
            Ok(()) => pl_samples.push(sample),
            Err(e) => log::warn!("{}: dropped from path-loss table: {e}", rec.meta.link_id),
        }

        let stats = delay_stats(&padp)?;
        stats_rows.push(StatsRow {
            link_id: rec.meta.link_id.clone(),
            scenario: entry.scenario.as_str().to_string(),
            tau_avg_ns: stats.tau_avg_ns,
            tau_rms_ns: stats.tau_rms_ns,
        });
        let pool = if entry.scenario.fit_pool() == Scenario::Los { 0 } else { 1 };
        rms_pools[pool].1.push(stats.tau_rms_ns);
    }
    if processed == 0 {
        bail!("no sweep in {} could be processed", campaign.display());
    }

    write_atomic(&out_dir.join("pathloss.csv"), &write_pathloss_table(&pl_samples))?;
    write_atomic(&out_dir.join("stats.csv"), &write_stats_csv(&stats_rows))?;

    let mut cdf_pools = Vec::new();
    for (label, values) in &rms_pools {
        if !values.is_empty() {
            cdf_pools.push((label.clone(), empirical_cdf(values)?));
        }
    }
    write_atomic(&out_dir.join("rmsds_cdf.csv"), &write_cdf_csv(&cdf_pools))?;

    // Per-pool fits; a pool that cannot support a fit still appears in the
    // scatter output.
    let mut fit_rows: Vec<FitReportRow> = Vec::new();
    let mut fit_lines = String::from("model,scenario,distance_m,path_loss_db\n");
    let mut panels: Vec<ScatterPanel> = Vec::new();
    for (label, pool_of) in [("LOS", Scenario::Los), ("NLOS", Scenario::Nlos)] {
        let pool: Vec<PathLossSample> =
            pl_samples.iter().filter(|s| s.scenario.fit_pool() == pool_of).cloned().collect();
        if pool.is_empty() {
            continue;
        }
        let d_min = pool.iter().map(|s| s.distance_m).fold(f64::INFINITY, f64::min);
        let d_max = pool.iter().map(|s| s.distance_m).fold(0.0f64, f64::max);
        let line_distances: Vec<f64> = if d_min < d_max {
            (0..FIT_LINE_POINTS)
                .map(|i| {
                    let f = i as f64 / (FIT_LINE_POINTS - 1) as f64;
                    10f64.powf(d_min.log10() + f * (d_max.log10() - d_min.log10()))
                })
                .collect()
        } else {
            vec![d_min]
        };

        let mut lines: Vec<Series> = Vec::new();
        if model == "cim" || model == "both" {
            match fit_cim(&pool, d0_m, freq_hz) {
                Ok(fit) => {
                    let pts: Vec<(f64, f64)> = line_distances
                        .iter()
                        .map(|&d| (d, predict_cim(&fit, d).unwrap()))
                        .collect();
                    for &(d, pl) in &pts {
                        fit_lines.push_str(&format!("cim,{label},{d:.4},{pl:.4}\n"));
                    }
                    lines.push(Series { label: format!("CIM n={:.2}", fit.n), points: pts });
                    fit_rows.push(FitReportRow {
                        model: FitModelKind::Cim,
                        scenario: label.to_string(),
                        param1: fit.n,
                        param2: fit.d0_m,
                        sigma_db: fit.sigma_db,
                        n_points: fit.n_points,
                    });
                }
                Err(e) => log::warn!("{label}: close-in fit skipped: {e}"),
            }
        }
        if model == "fim" || model == "both" {
            match fit_fim(&pool) {
                Ok(fit) => {
                    let pts: Vec<(f64, f64)> = line_distances
                        .iter()
                        .map(|&d| (d, predict_fim(&fit, d).unwrap()))
                        .collect();
                    for &(d, pl) in &pts {
                        fit_lines.push_str(&format!("fim,{label},{d:.4},{pl:.4}\n"));
                    }
                    lines.push(Series { label: format!("FIM beta={:.2}", fit.beta), points: pts });
                    fit_rows.push(FitReportRow {
                        model: FitModelKind::Fim,
                        scenario: label.to_string(),
                        param1: fit.alpha_db,
                        param2: fit.beta,
                        sigma_db: fit.sigma_db,
                        n_points: fit.n_points,
                    });
                }
                Err(e) => log::warn!("{label}: floating-intercept fit skipped: {e}"),
            }
        }
        panels.push(ScatterPanel {
            subtitle: label.to_string(),
            points: pool.iter().map(|s| (s.distance_m, s.path_loss_db)).collect(),
            lines,
        });
    }

    write_atomic(&out_dir.join("fits.csv"), &write_fit_report(&fit_rows))?;
    write_atomic(&out_dir.join("fitlines.csv"), &fit_lines)?;
    write_atomic(&out_dir.join("pathloss.svg"), &pathloss_chart("Path loss", &panels))?;
    Ok(())
}
