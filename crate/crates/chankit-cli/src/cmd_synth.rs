//! `chankit synth`: render synthetic sweep files from a scenario spec table.
//!
//! Spec CSV columns:
//! `link_id,distance_m,scenario,n_mpcs,delay_spread_ns,power_decay_db_per_ns,pl_model,param1,param2,shadow_sigma_db,noise_floor_dbm,seed`
//! where `pl_model` is `cim` (param1 = exponent, param2 = reference distance)
//! or `fim` (param1 = intercept dB, param2 = slope).

use std::path::Path;

use anyhow::{bail, Context, Result};
use chankit_core::fit::{CimFit, FimFit};
use chankit_core::synth::{gen_mpcs, render_sweep, PlModel, ScenarioSpec};
use chankit_core::{
    write_mpcs, write_sweep, AngleGrid, AntennaPattern, CorrectionParams, Scenario, SounderConfig,
};

use crate::fsutil::{read_text, write_atomic};
use crate::index::{CampaignIndex, IndexEntry, INDEX_FILE_NAME};

pub const SPEC_CSV_HEADER: &str = "link_id,distance_m,scenario,n_mpcs,delay_spread_ns,power_decay_db_per_ns,pl_model,param1,param2,shadow_sigma_db,noise_floor_dbm,seed";

struct SpecRow {
    spec: ScenarioSpec,
    noise_floor_dbm: f64,
}

fn parse_spec(text: &str, freq_hz: f64) -> Result<Vec<SpecRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == SPEC_CSV_HEADER => {}
        other => bail!("bad spec header: {:?}", other.map(|(_, h)| h)),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        let lno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 12 {
            bail!("spec line {lno}: expected 12 columns, got {}", cols.len());
        }
        let f = |j: usize, what: &str| -> Result<f64> {
            cols[j]
                .trim()
                .parse::<f64>()
                .with_context(|| format!("spec line {lno}: bad {what} {:?}", cols[j]))
        };
        let scenario = Scenario::parse(cols[2].trim())
            .map_err(|e| anyhow::anyhow!("spec line {lno}: {e}"))?;
        let sigma = f(9, "shadow_sigma_db")?;
        let pl_model = match cols[6].trim() {
            "cim" => PlModel::Cim(
                CimFit::from_params(f(7, "param1")?, sigma, f(8, "param2")?, freq_hz)
                    .map_err(|e| anyhow::anyhow!("spec line {lno}: {e}"))?,
            ),
            "fim" => PlModel::Fim(FimFit {
                alpha_db: f(7, "param1")?,
                beta: f(8, "param2")?,
                sigma_db: sigma,
                n_points: 0,
            }),
            other => bail!("spec line {lno}: unknown pl_model {other:?}"),
        };
        rows.push(SpecRow {
            spec: ScenarioSpec {
                link_id: cols[0].trim().to_string(),
                distance_m: f(1, "distance_m")?,
                scenario,
                n_mpcs: cols[3]
                    .trim()
                    .parse()
                    .with_context(|| format!("spec line {lno}: bad n_mpcs {:?}", cols[3]))?,
                pl_model,
                delay_spread_target_ns: f(4, "delay_spread_ns")?,
                power_decay_db_per_ns: f(5, "power_decay_db_per_ns")?,
                seed: cols[11]
                    .trim()
                    .parse()
                    .with_context(|| format!("spec line {lno}: bad seed {:?}", cols[11]))?,
            },
            noise_floor_dbm: f(10, "noise_floor_dbm")?,
        });
    }
    if rows.is_empty() {
        bail!("spec contains no scenarios");
    }
    Ok(rows)
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    spec_path: &Path,
    out_dir: &Path,
    base_seed: u64,
    n_bins: usize,
    single_elevation: bool,
    pc_radius_m: f64,
    drift_rate: f64,
) -> Result<()> {
    let config = SounderConfig { sequence_length: n_bins, ..Default::default() };
    let pattern = AntennaPattern::default();
    let grid = if single_elevation {
        AngleGrid { elevations_deg: vec![0.0], ..Default::default() }
    } else {
        AngleGrid::default()
    };
    let params = CorrectionParams {
        phase_center_radius_m: pc_radius_m,
        drift_rate,
        reference_az_deg: 0.0,
    };

    let rows = parse_spec(&read_text(spec_path)?, config.carrier_freq_hz)?;
    let mut index = CampaignIndex::default();
    for mut row in rows {
        row.spec.seed ^= base_seed;
        let link_id = row.spec.link_id.clone();
        log::info!("rendering {link_id}");
        let truth = gen_mpcs(&row.spec, &config, &pattern, &grid)
            .with_context(|| format!("generating {link_id}"))?;
        let rec = render_sweep(
            &truth,
            &config,
            &pattern,
            &grid,
            &params,
            row.noise_floor_dbm,
            row.spec.seed ^ 0x52454E44,
        );
        let sweep_name = format!("{link_id}.sweep");
        write_atomic(&out_dir.join(&sweep_name), &write_sweep(&rec)?)?;
        write_atomic(&out_dir.join(format!("{link_id}.truth.csv")), &write_mpcs(&truth))?;
        index.entries.push(IndexEntry {
            sweep_file: sweep_name,
            link_id,
            distance_m: row.spec.distance_m,
            scenario: row.spec.scenario,
        });
    }
    index.validate(None)?;
    write_atomic(&out_dir.join(INDEX_FILE_NAME), &index.to_csv())?;
    Ok(())
}
