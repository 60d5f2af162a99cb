//! Channel-sounding post-processing and statistical modeling toolkit.
//!
//! Turns directional power-delay-profile sweeps into power angular-delay
//! profiles, omnidirectional path-loss samples, fitted path-loss models, and
//! delay-spread statistics. A forward simulator renders synthetic sweeps
//! from known ground truth so the whole pipeline is verifiable round-trip.
//!
//! Modules:
//! - [`model`]: domain types, physical constants, free-space path loss,
//!   horn pattern model, dB/linear conversions.
//! - [`ingest`]: text formats for sweeps, MPC lists, path-loss tables, and
//!   fit reports, with full validation.
//! - [`extract`]: noise floor, peak search, delay correction, and MPC
//!   consolidation.
//! - [`metrics`]: omnidirectional power, path loss, delay spread, CDFs.
//! - [`fit`]: close-in and floating-intercept path-loss model estimation.
//! - [`synth`]: seeded ground-truth generation and sweep rendering.

// Validation guards use `!(x > 0.0)` so NaN fails them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod extract;
pub mod fit;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod synth;

pub use error::{Error, Result};
pub use extract::{
    consolidate_mpcs, correct_delays, detect_all_beams, detect_peaks, estimate_noise_floor,
    extract_padp, extract_padp_opts, BeamPeaks, CorrectionParams, ExtractOptions, Gates, Mpc,
    Padp, Peak,
};
pub use fit::{fit_cim, fit_fim, predict_cim, predict_fim, CimFit, FimFit};
pub use ingest::{
    parse_fit_report, parse_mpcs, parse_pathloss_table, parse_sweep, write_cdf_csv,
    write_fit_report, write_mpcs, write_pathloss_table, write_stats_csv, write_sweep,
    DirectionalPdp, FitModelKind, FitReportRow, LinkMeta, Scenario, StatsRow, SweepRecord,
};
pub use metrics::{
    delay_stats, empirical_cdf, omni_rx_power, omni_rx_power_raw, path_loss, path_loss_with_limit,
    DelayStats, PathLoss, PathLossSample,
};
pub use model::{
    antenna_gain, db_from_linear, fspl, linear_from_db, wrap_deg, AngleGrid, AntennaPattern,
    Direction, SounderConfig, SPEED_OF_LIGHT,
};
pub use synth::{gen_mpcs, gen_pathloss_samples, render_sweep, PlModel, ScenarioSpec};
