//! `chankit stats`: delay-spread statistics and CDFs from MPC files.

use std::path::{Path, PathBuf};

use anyhow::{bail, Result};
use chankit_core::{
    delay_stats, empirical_cdf, parse_mpcs, write_cdf_csv, write_stats_csv, LinkMeta, Padp,
    Scenario, StatsRow,
};

use crate::chart::{cdf_chart, Series};
use crate::fsutil::{link_stem, read_text, write_atomic};
use crate::index::CampaignIndex;

pub fn run(files: &[PathBuf], index_path: Option<&Path>, out_dir: &Path, svg: bool) -> Result<()> {
    let index = match index_path {
        Some(p) => Some(CampaignIndex::parse(&read_text(p)?)?),
        None => None,
    };

    let mut rows: Vec<StatsRow> = Vec::new();
    // (pool label, rms values); LOS before NLOS, or a single unlabeled pool.
    let mut pools: Vec<(String, Vec<f64>)> = Vec::new();
    let mut pool_push = |label: String, value: f64| {
        if let Some(entry) = pools.iter_mut().find(|(l, _)| *l == label) {
            entry.1.push(value);
        } else {
            pools.push((label, vec![value]));
        }
    };

    for file in files {
        let link_id = link_stem(file);
        let mpcs = parse_mpcs(&read_text(file)?)?;
        if mpcs.is_empty() {
            log::warn!("{}: empty MPC list, row skipped", file.display());
            continue;
        }
        let scenario = index.as_ref().and_then(|idx| idx.scenario_of(&link_id));
        let padp = Padp {
            mpcs,
            meta: LinkMeta::new(link_id.clone(), 1.0, scenario.unwrap_or(Scenario::Los)),
            noise_floor_dbm: -200.0,
        };
        let stats = delay_stats(&padp)?;
        rows.push(StatsRow {
            link_id,
            scenario: scenario.map(|s| s.as_str().to_string()).unwrap_or_default(),
            tau_avg_ns: stats.tau_avg_ns,
            tau_rms_ns: stats.tau_rms_ns,
        });
        let label = match scenario {
            Some(s) => s.fit_pool().as_str().to_string(),
            None => "ALL".to_string(),
        };
        pool_push(label, stats.tau_rms_ns);
    }
    if rows.is_empty() {
        bail!("no non-empty MPC files");
    }
    pools.sort_by(|a, b| a.0.cmp(&b.0));

    write_atomic(&out_dir.join("stats.csv"), &write_stats_csv(&rows))?;

    let mut cdf_pools = Vec::new();
    for (label, values) in &pools {
        cdf_pools.push((label.clone(), empirical_cdf(values)?));
    }
    write_atomic(&out_dir.join("rmsds_cdf.csv"), &write_cdf_csv(&cdf_pools))?;

    if svg {
        let series: Vec<Series> = cdf_pools
            .into_iter()
            .map(|(label, points)| Series { label, points })
            .collect();
        let chart = cdf_chart("RMS delay spread CDF", "RMS delay spread (ns)", &series);
        write_atomic(&out_dir.join("rmsds_cdf.svg"), &chart)?;
    }
    Ok(())
}
