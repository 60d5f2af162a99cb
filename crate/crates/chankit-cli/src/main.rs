//! `chankit` command-line front end.
//!
//! Subcommands drive the pipeline end to end: `synth` renders synthetic
//! campaigns from scenario specs, `extract` turns sweeps into MPC lists,
//! `fit` estimates path-loss models from a sample table, `stats` computes
//! delay-spread statistics and CDFs, and `report` runs extract-fit-stats
//! over a whole campaign directory.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on data or validation
//! errors. Set `CHANKIT_LOG` (error/warn/info/debug) for verbosity.

mod chart;
mod cmd_extract;
mod cmd_fit;
mod cmd_report;
mod cmd_stats;
mod cmd_synth;
mod fsutil;
mod index;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "chankit", version, about = "Channel-sounding post-processing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Extraction knobs shared by `extract` and `report`.
#[derive(Args, Clone)]
struct ExtractFlags {
    /// Peak detection threshold above the per-beam noise floor, dB.
    #[arg(long, default_value_t = 6.0)]
    threshold_db: f64,
    /// Delay gate for consolidating detections across beams, ns
    /// [default: twice the delay bin, 1.302 ns for the stock sounder].
    #[arg(long)]
    gate_tau_ns: Option<f64>,
    /// Angular gate for consolidation, degrees per side.
    #[arg(long, default_value_t = 20.0)]
    gate_angle_deg: f64,
    /// Reject detections this many dB below a same-delay stronger component.
    #[arg(long, default_value_t = 20.0)]
    sidelobe_db: f64,
    /// Antenna phase-center rotation radius used for delay correction, m.
    #[arg(long, default_value_t = 0.0)]
    pc_radius_m: f64,
    /// Clock drift in seconds of delay per second of sweep time.
    #[arg(long, default_value_t = 0.0)]
    drift_rate: f64,
    /// Azimuth at which the rotation offset vanishes, degrees.
    #[arg(long, default_value_t = 0.0)]
    reference_az_deg: f64,
}

impl ExtractFlags {
    fn correction(&self) -> chankit_core::CorrectionParams {
        chankit_core::CorrectionParams {
            phase_center_radius_m: self.pc_radius_m,
            drift_rate: self.drift_rate,
            reference_az_deg: self.reference_az_deg,
        }
    }

    fn options(&self) -> chankit_core::ExtractOptions {
        chankit_core::ExtractOptions {
            threshold_db: self.threshold_db,
            gate_tau_ns: self.gate_tau_ns,
            gate_angle_deg: self.gate_angle_deg,
            sidelobe_db: self.sidelobe_db,
            sidelobe_window_ns: None,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Render synthetic sweep files from a scenario spec table.
    Synth {
        /// Scenario spec CSV; see the README for the column layout.
        #[arg(long)]
        spec: PathBuf,
        /// Output directory for sweeps, truth MPC lists, and the index.
        #[arg(long)]
        out_dir: PathBuf,
        /// Seed folded into every per-scenario seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Delay bins per rendered PDP.
        #[arg(long, default_value_t = 2048)]
        n_bins: usize,
        /// Scan only the zero-elevation cut instead of the full grid.
        #[arg(long, default_value_t = false)]
        single_elevation: bool,
        /// Embed rotation offsets with this phase-center radius, m.
        #[arg(long, default_value_t = 0.0)]
        pc_radius_m: f64,
        /// Embed clock drift at this rate, s/s.
        #[arg(long, default_value_t = 0.0)]
        drift_rate: f64,
    },
    /// Extract MPC lists from sweep files.
    Extract {
        /// Sweep files to process.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Directory for the `<link>.mpc.csv` outputs.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[command(flatten)]
        flags: ExtractFlags,
    },
    /// Fit path-loss models to a sample table.
    Fit {
        /// Path-loss table CSV (link_id,distance_m,scenario,path_loss_db).
        #[arg(long)]
        table: PathBuf,
        /// Fit report output path.
        #[arg(long)]
        out: PathBuf,
        /// Optional per-sample residuals CSV.
        #[arg(long)]
        residuals: Option<PathBuf>,
        /// Model selection.
        #[arg(long, default_value = "both", value_parser = ["cim", "fim", "both"])]
        model: String,
        /// Restrict the fit to one scenario label.
        #[arg(long)]
        scenario: Option<String>,
        /// Close-in reference distance, m.
        #[arg(long, default_value_t = 1.0)]
        d0_m: f64,
        /// Carrier frequency anchoring the close-in model, Hz.
        #[arg(long, default_value_t = 28e9)]
        freq_hz: f64,
    },
    /// Delay-spread statistics and CDFs from MPC files.
    Stats {
        /// MPC CSV files.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Campaign index mapping link ids to scenarios; without it all
        /// files pool into one CDF.
        #[arg(long)]
        index: Option<PathBuf>,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Also write an SVG chart of the CDFs.
        #[arg(long, default_value_t = false)]
        svg: bool,
    },
    /// Full campaign report: extract, path loss, fits, stats, charts.
    Report {
        /// Campaign directory containing sweeps and `index.csv`.
        #[arg(long)]
        campaign: PathBuf,
        /// Output directory.
        #[arg(long)]
        out_dir: PathBuf,
        #[command(flatten)]
        flags: ExtractFlags,
        /// Model selection for the fits.
        #[arg(long, default_value = "both", value_parser = ["cim", "fim", "both"])]
        model: String,
        /// Close-in reference distance, m.
        #[arg(long, default_value_t = 1.0)]
        d0_m: f64,
        /// Sum raw per-beam detections instead of consolidated MPCs when
        /// computing omnidirectional power.
        #[arg(long, default_value_t = false)]
        raw_sum: bool,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CHANKIT_LOG", "warn"))
        .format_timestamp(None)
        .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let result = match cli.command {
        Command::Synth { spec, out_dir, seed, n_bins, single_elevation, pc_radius_m, drift_rate } => {
            cmd_synth::run(&spec, &out_dir, seed, n_bins, single_elevation, pc_radius_m, drift_rate)
        }
        Command::Extract { files, out_dir, flags } => cmd_extract::run(&files, &out_dir, &flags),
        Command::Fit { table, out, residuals, model, scenario, d0_m, freq_hz } => {
            cmd_fit::run(&table, &out, residuals.as_deref(), &model, scenario.as_deref(), d0_m, freq_hz)
        }
        Command::Stats { files, index, out_dir, svg } => {
            cmd_stats::run(&files, index.as_deref(), &out_dir, svg)
        }
        Command::Report { campaign, out_dir, flags, model, d0_m, raw_sum } => {
            cmd_report::run(&campaign, &out_dir, &flags, &model, d0_m, raw_sum)
        }
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
