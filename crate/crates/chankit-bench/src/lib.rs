//! Shared fixtures for the pipeline benchmarks.

use chankit_core::fit::CimFit;
use chankit_core::synth::{gen_mpcs, render_sweep, PlModel, ScenarioSpec};
use chankit_core::{
    AngleGrid, AntennaPattern, CorrectionParams, Padp, PathLossSample, Scenario, SounderConfig,
    SweepRecord,
};

pub fn bench_config() -> SounderConfig {
    SounderConfig { sequence_length: 1024, ..Default::default() }
}

pub fn bench_grid() -> AngleGrid {
    AngleGrid { elevations_deg: vec![0.0], ..Default::default() }
}

pub fn bench_truth(n_mpcs: usize, seed: u64) -> Padp {
    let spec = ScenarioSpec {
        link_id: format!("B{seed}"),
        distance_m: 21.0,
        scenario: Scenario::Los,
        n_mpcs,
        pl_model: PlModel::Cim(CimFit::from_params(2.11, 0.0, 1.0, 28e9).unwrap()),
        delay_spread_target_ns: 33.9,
        power_decay_db_per_ns: 0.05,
        seed,
    };
    gen_mpcs(&spec, &bench_config(), &AntennaPattern::default(), &bench_grid()).unwrap()
}

pub fn bench_sweep(seed: u64) -> SweepRecord {
    render_sweep(
        &bench_truth(6, seed),
        &bench_config(),
        &AntennaPattern::default(),
        &bench_grid(),
        &CorrectionParams::default(),
        -100.0,
        seed,
    )
}

pub fn bench_pathloss_samples(k: usize) -> Vec<PathLossSample> {
    let model = PlModel::Cim(CimFit::from_params(2.11, 0.0, 1.0, 28e9).unwrap());
    let distances: Vec<f64> = (0..k).map(|i| 10.0 + 40.0 * (i as f64) / (k as f64)).collect();
    chankit_core::gen_pathloss_samples(&model, &distances, 3.0, Scenario::Los, 5).unwrap()
}
