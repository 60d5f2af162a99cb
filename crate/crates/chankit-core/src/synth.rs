//! Forward simulator: seeded ground-truth MPC generation, sweep rendering
//! with beam-pattern weighting, root-raised-cosine pulse shaping, noise floor
//! and rotation/drift offsets, and path-loss sample ensembles. Every
//! generator is a pure function of its inputs and seed, so downstream
//! modules can be checked round-trip against known truth.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Normal};

use crate::error::{Error, Result};
use crate::extract::{CorrectionParams, Mpc, Padp};
use crate::fit::{predict_cim, predict_fim, CimFit, FimFit};
use crate::ingest::{DirectionalPdp, LinkMeta, Scenario, SweepRecord};
use crate::metrics::PathLossSample;
use crate::model::{
    linear_from_db, wrap_deg, AngleGrid, AntennaPattern, Direction, SounderConfig, SPEED_OF_LIGHT,
};

/// Pulse-shaping roll-off used by the renderer. The sounder applies
/// root-raised-cosine filtering; 0.22 matches the configured bandwidth at
/// the chip rate implied by the delay bin.
pub const RRC_ROLLOFF: f64 = 0.22;

/// Kernel half-width in delay bins. At this width the truncated tail sits
/// below the ADC dynamic-range clip, so truncation leaves no artifact.
pub const RRC_HALF_WIDTH_BINS: usize = 24;

/// Per-bin noise ripple around the nominal floor, +/- dB, uniform. Bounded
/// ripple keeps every noise bin more than a detection threshold of 6 dB
/// below no peak, so noise-only sweeps extract to zero MPCs.
pub const NOISE_RIPPLE_DB: f64 = 3.0;

/// Seconds the gimbals dwell on each beam pair; capture timestamps advance
/// by this much per pair in scan order.
pub const DWELL_S: f64 = 0.1;

/// Lognormal sigma of the per-draw RMS delay-spread target. Each generated
/// profile hits its own draw exactly; the draws are mean-preserving, so an
/// ensemble averages to the configured target while its CDF keeps a
/// realistic spread.
pub const SPREAD_DRAW_SIGMA: f64 = 0.15;

/// Standard deviation of the per-MPC lognormal power variation, dB.
pub const MPC_POWER_JITTER_DB: f64 = 3.0;

/// Path-loss model driving a scenario, with its shadowing sigma.
#[derive(Debug, Clone, PartialEq)]
pub enum PlModel {
    Cim(CimFit),
    Fim(FimFit),
}

impl PlModel {
    pub fn predict(&self, d_m: f64) -> Result<f64> {
        match self {
            PlModel::Cim(fit) => predict_cim(fit, d_m),
            PlModel::Fim(fit) => predict_fim(fit, d_m),
        }
    }

    pub fn sigma_db(&self) -> f64 {
        match self {
            PlModel::Cim(fit) => fit.sigma_db,
            PlModel::Fim(fit) => fit.sigma_db,
        }
    }
}

/// Parameters for one synthetic measurement scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub link_id: String,
    pub distance_m: f64,
    pub scenario: Scenario,
    pub n_mpcs: usize,
    pub pl_model: PlModel,
    /// Expected RMS delay spread of generated profiles, ns. Must be 0 for
    /// single-component profiles and positive otherwise.
    pub delay_spread_target_ns: f64,
    /// Exponential power decay versus excess delay, dB per ns.
    pub power_decay_db_per_ns: f64,
    pub seed: u64,
}

impl ScenarioSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.distance_m > 0.0) {
            return Err(Error::InvalidSpec(format!("distance_m must be > 0, got {}", self.distance_m)));
        }
        if self.n_mpcs < 1 {
            return Err(Error::InvalidSpec("n_mpcs must be >= 1".into()));
        }
        if self.n_mpcs == 1 && self.delay_spread_target_ns != 0.0 {
            return Err(Error::InvalidSpec(
                "a single-MPC profile cannot carry a nonzero delay-spread target".into(),
            ));
        }
        if self.n_mpcs > 1 && !(self.delay_spread_target_ns > 0.0) {
            return Err(Error::InvalidSpec(
                "multi-MPC profiles need a positive delay-spread target".into(),
            ));
        }
        if !(self.power_decay_db_per_ns >= 0.0) {
            return Err(Error::InvalidSpec("power_decay_db_per_ns must be >= 0".into()));
        }
        if self.link_id.is_empty() {
            return Err(Error::InvalidSpec("link_id must be non-empty".into()));
        }
        Ok(())
    }
}

fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn normal_draw(rng: &mut ChaCha8Rng, sigma: f64) -> f64 {
    if sigma > 0.0 {
        Normal::new(0.0, sigma).unwrap().sample(rng)
    } else {
        0.0
    }
}

fn exp_draw(rng: &mut ChaCha8Rng, mean: f64) -> f64 {
    if mean > 0.0 {
        Exp::new(1.0 / mean).unwrap().sample(rng)
    } else {
        0.0
    }
}

fn weighted_std(x: &[f64], w: &[f64]) -> f64 {
    let total: f64 = w.iter().sum();
    let mean = x.iter().zip(w).map(|(xi, wi)| xi * wi).sum::<f64>() / total;
    let var = x
        .iter()
        .zip(w)
        .map(|(xi, wi)| wi * (xi - mean) * (xi - mean))
        .sum::<f64>()
        / total;
    var.max(0.0).sqrt()
}

/// Generate a ground-truth profile for one scenario.
///
/// The first MPC arrives at `distance / c`, delayed by an extra exponential
/// excess draw for obstructed scenarios. Remaining excess delays are i.i.d.
/// exponential; powers decay exponentially with excess delay with lognormal
/// per-MPC variation. The excess delays are then rescaled so the realized
/// power-weighted RMS delay spread equals a mean-preserving lognormal draw
/// around the target, making the ensemble expectation exactly the target.
/// Total linear power is set so the isotropic-gain link budget reproduces
/// the model-predicted path loss plus a shadowing draw. Angles are uniform
/// on the scan grid. Deterministic given the seed.
pub fn gen_mpcs(
    spec: &ScenarioSpec,
    config: &SounderConfig,
    pattern: &AntennaPattern,
    grid: &AngleGrid,
) -> Result<Padp> {
    spec.validate()?;
    config.validate()?;
    pattern.validate()?;
    grid.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n_mpcs;
    let target = spec.delay_spread_target_ns;

    let shadow_db = normal_draw(&mut rng, spec.pl_model.sigma_db());
    let spread_ns = if n > 1 {
        let s = SPREAD_DRAW_SIGMA;
        target * (normal_draw(&mut rng, s) - 0.5 * s * s).exp()
    } else {
        0.0
    };
    let first_excess_ns = match spec.scenario {
        Scenario::Los => 0.0,
        Scenario::Nlos | Scenario::NlosGlass => exp_draw(&mut rng, target),
    };

    // Excess delays beyond the first arrival, and their power jitters.
    // Powers decay against the nominal-scale delays; the delays are then
    // rescaled once so the realized weighted spread equals the drawn target
    // exactly. The decay stays exponential in delay, with the slope absorbed
    // into the draw factor.
    let mut excess: Vec<f64> = vec![0.0];
    let mut weights: Vec<f64> = vec![1.0];
    for _ in 1..n {
        let x = exp_draw(&mut rng, target.max(1.0));
        let jitter = normal_draw(&mut rng, MPC_POWER_JITTER_DB);
        excess.push(x);
        weights.push(linear_from_db(-spec.power_decay_db_per_ns * x + jitter));
    }
    if n > 1 {
        let s = weighted_std(&excess, &weights);
        if s <= 0.0 {
            return Err(Error::InvalidSpec("degenerate delay draw; change the seed".into()));
        }
        let ratio = spread_ns / s;
        for x in excess.iter_mut() {
            *x *= ratio;
        }
    }

    // Directions, uniform on the grid.
    let draw_dir = |rng: &mut ChaCha8Rng| -> Direction {
        let az = grid.azimuths_deg[rng.random_range(0..grid.azimuths_deg.len())];
        let el = grid.elevations_deg[rng.random_range(0..grid.elevations_deg.len())];
        Direction::new(az, el).unwrap()
    };
    let dirs: Vec<(Direction, Direction)> =
        (0..n).map(|_| (draw_dir(&mut rng), draw_dir(&mut rng))).collect();

    // Total power from the link budget with peak gains on both sides.
    let target_pl_db = spec.pl_model.predict(spec.distance_m)? + shadow_db;
    let p_rx_dbm = config.tx_power_dbm + 2.0 * pattern.peak_gain_dbi - target_pl_db;
    let p_rx_mw = linear_from_db(p_rx_dbm);
    let weight_sum: f64 = weights.iter().sum();

    let base_ns = spec.distance_m / SPEED_OF_LIGHT * 1e9 + first_excess_ns;
    let mut mpcs: Vec<Mpc> = (0..n)
        .map(|i| Mpc {
            tau_ns: base_ns + excess[i],
            power_dbm: 10.0 * (weights[i] * p_rx_mw / weight_sum).log10(),
            aod: dirs[i].0,
            aoa: dirs[i].1,
        })
        .collect();
    mpcs.sort_by(|a, b| a.tau_ns.partial_cmp(&b.tau_ns).unwrap());

    let padp = Padp {
        mpcs,
        meta: LinkMeta::new(spec.link_id.clone(), spec.distance_m, spec.scenario),
        noise_floor_dbm: -200.0,
    };
    padp.validate()?;
    Ok(padp)
}

/// Root-raised-cosine impulse response at `t` symbol periods, unit area
/// prototype (value `1 - b + 4b/pi` at t = 0).
pub fn rrc_amplitude(t: f64, rolloff: f64) -> f64 {
    let b = rolloff;
    if t == 0.0 {
        return 1.0 - b + 4.0 * b / std::f64::consts::PI;
    }
    let pi = std::f64::consts::PI;
    let fourbt = 4.0 * b * t.abs();
    if (fourbt - 1.0).abs() < 1e-7 {
        // Limit at |t| = 1/(4b).
        let x = pi / (4.0 * b);
        return b / 2f64.sqrt() * ((1.0 + 2.0 / pi) * x.sin() + (1.0 - 2.0 / pi) * x.cos());
    }
    let num = (pi * t * (1.0 - b)).sin() + 4.0 * b * t * (pi * t * (1.0 + b)).cos();
    let den = pi * t * (1.0 - fourbt * fourbt);
    num / den
}

/// Sampled pulse kernel for a component centered `center_bin` bins into the
/// PDP. Normalized so the strongest sample carries the full component power,
/// matching a correlation-calibrated sounder where the detected peak reads
/// the path gain regardless of sub-bin alignment.
fn pulse_kernel(center_bin: f64) -> (i64, Vec<f64>) {
    let lo = (center_bin - RRC_HALF_WIDTH_BINS as f64).ceil() as i64;
    let hi = (center_bin + RRC_HALF_WIDTH_BINS as f64).floor() as i64;
    let mut amps: Vec<f64> = (lo..=hi)
        .map(|m| rrc_amplitude(m as f64 - center_bin, RRC_ROLLOFF))
        .collect();
    let max_abs = amps.iter().fold(0.0f64, |acc, a| acc.max(a.abs()));
    if max_abs > 0.0 {
        for a in amps.iter_mut() {
            *a /= max_abs;
        }
    }
    (lo, amps)
}

/// Render a ground-truth profile into a full directional sweep.
///
/// Each beam pair receives every MPC at the component power plus both
/// pattern gains minus the two peak gains already absorbed in the truth
/// bookkeeping, shaped by the sampled pulse kernel and shifted by the
/// rotation/drift offset that [`CorrectionParams`] would later remove.
/// Per-bin noise with bounded ripple is added around `noise_floor_dbm`
/// (pass negative infinity for a noiseless render), and the whole sweep is
/// clipped at the dynamic range below its maximum.
pub fn render_sweep(
    truth: &Padp,
    config: &SounderConfig,
    pattern: &AntennaPattern,
    grid: &AngleGrid,
    params: &CorrectionParams,
    noise_floor_dbm: f64,
    seed: u64,
) -> SweepRecord {
    let n_bins = config.sequence_length;
    let bin_ns = config.delay_bin_ns;
    let dirs = grid.directions();
    let mut pdps: Vec<DirectionalPdp> = Vec::with_capacity(dirs.len() * dirs.len());
    let mut max_dbm = f64::NEG_INFINITY;
    let mut linear_beams: Vec<Vec<f64>> = Vec::with_capacity(dirs.len() * dirs.len());

    let mut pair_idx: u64 = 0;
    for tx_dir in &dirs {
        for rx_dir in &dirs {
            let capture_time_s = pair_idx as f64 * DWELL_S;
            let offset_ns = params.delay_offset_ns(tx_dir.az_deg(), rx_dir.az_deg(), capture_time_s);
            let mut bins = vec![0.0f64; n_bins];
            for mpc in &truth.mpcs {
                let g_tx = pattern.gain_dbi(
                    wrap_deg(mpc.aod.az_deg() - tx_dir.az_deg()),
                    mpc.aod.el_deg() - tx_dir.el_deg(),
                );
                let g_rx = pattern.gain_dbi(
                    wrap_deg(mpc.aoa.az_deg() - rx_dir.az_deg()),
                    mpc.aoa.el_deg() - rx_dir.el_deg(),
                );
                let amp_dbm = mpc.power_dbm + g_tx + g_rx - 2.0 * pattern.peak_gain_dbi;
                if amp_dbm < -220.0 {
                    continue;
                }
                let amp_mw = linear_from_db(amp_dbm);
                let center = (mpc.tau_ns + offset_ns) / bin_ns;
                let (lo, kernel) = pulse_kernel(center);
                for (k, a) in kernel.iter().enumerate() {
                    let m = lo + k as i64;
                    if m >= 0 && (m as usize) < n_bins {
                        bins[m as usize] += amp_mw * a * a;
                    }
                }
            }
            if noise_floor_dbm.is_finite() {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, pair_idx));
                for b in bins.iter_mut() {
                    let ripple = rng.random_range(-NOISE_RIPPLE_DB..NOISE_RIPPLE_DB);
                    *b += linear_from_db(noise_floor_dbm + ripple);
                }
            }
            for &b in &bins {
                if b > 0.0 {
                    let dbm = 10.0 * b.log10();
                    if dbm > max_dbm {
                        max_dbm = dbm;
                    }
                }
            }
            linear_beams.push(bins);
            pair_idx += 1;
        }
    }

    let guard_dbm = config.tx_power_dbm + 2.0 * pattern.peak_gain_dbi
        - config.max_measurable_pl_db
        - 20.0;
    let clip_dbm = if max_dbm.is_finite() {
        (max_dbm - config.dynamic_range_db).max(guard_dbm)
    } else {
        guard_dbm
    };

    let mut beam_iter = linear_beams.into_iter();
    let mut pair_idx = 0u64;
    for tx_dir in &dirs {
        for rx_dir in &dirs {
            let bins = beam_iter.next().unwrap();
            let samples_dbm: Vec<f64> = bins
                .into_iter()
                .map(|b| if b > 0.0 { (10.0 * b.log10()).max(clip_dbm) } else { clip_dbm })
                .collect();
            pdps.push(DirectionalPdp {
                tx_dir: *tx_dir,
                rx_dir: *rx_dir,
                capture_time_s: pair_idx as f64 * DWELL_S,
                samples_dbm,
            });
            pair_idx += 1;
        }
    }

    SweepRecord {
        config: config.clone(),
        pattern: pattern.clone(),
        grid: grid.clone(),
        meta: truth.meta.clone(),
        pdps,
    }
}

/// Draw path-loss samples around a model curve: prediction plus a zero-mean
/// Gaussian shadowing term of `sigma_db` (lognormal in linear units).
pub fn gen_pathloss_samples(
    model: &PlModel,
    distances_m: &[f64],
    sigma_db: f64,
    scenario: Scenario,
    seed: u64,
) -> Result<Vec<PathLossSample>> {
    if !(sigma_db >= 0.0) {
        return Err(Error::Domain(format!("sigma_db must be >= 0, got {sigma_db}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(distances_m.len());
    for (i, &d) in distances_m.iter().enumerate() {
        let pl = model.predict(d)? + normal_draw(&mut rng, sigma_db);
        out.push(PathLossSample {
            link_id: format!("pl{i:03}"),
            distance_m: d,
            scenario,
            path_loss_db: pl,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::{extract_padp, CorrectionParams};
    use crate::metrics::delay_stats;

    fn los_spec(n_mpcs: usize, seed: u64) -> ScenarioSpec {
        ScenarioSpec {
            link_id: "T1-R1".into(),
            distance_m: 30.0,
            scenario: Scenario::Los,
            n_mpcs,
            pl_model: PlModel::Cim(CimFit::from_params(2.0, 0.0, 1.0, 28e9).unwrap()),
            delay_spread_target_ns: if n_mpcs > 1 { 33.9 } else { 0.0 },
            power_decay_db_per_ns: 0.1,
            seed,
        }
    }

    #[test]
    fn single_los_mpc_sits_at_line_of_sight_delay() {
        let padp = gen_mpcs(
            &los_spec(1, 7),
            &SounderConfig::default(),
            &AntennaPattern::default(),
            &AngleGrid::default(),
        )
        .unwrap();
        assert_eq!(padp.mpcs.len(), 1);
        assert!((padp.mpcs[0].tau_ns - 100.07).abs() < 0.01, "tau = {}", padp.mpcs[0].tau_ns);
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = SounderConfig::default();
        let pat = AntennaPattern::default();
        let grid = AngleGrid::default();
        let a = gen_mpcs(&los_spec(6, 42), &cfg, &pat, &grid).unwrap();
        let b = gen_mpcs(&los_spec(6, 42), &cfg, &pat, &grid).unwrap();
        assert_eq!(a, b);
        let c = gen_mpcs(&los_spec(6, 43), &cfg, &pat, &grid).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn infeasible_specs_rejected() {
        let mut spec = los_spec(1, 1);
        spec.delay_spread_target_ns = 10.0;
        assert!(matches!(spec.validate(), Err(Error::InvalidSpec(_))));
        let mut spec = los_spec(4, 1);
        spec.delay_spread_target_ns = 0.0;
        assert!(matches!(spec.validate(), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn realized_spread_matches_ensemble_target_roughly() {
        let cfg = SounderConfig::default();
        let pat = AntennaPattern::default();
        let grid = AngleGrid::default();
        let mut mean = 0.0;
        let n_draws = 60;
        for s in 0..n_draws {
            let padp = gen_mpcs(&los_spec(8, 1000 + s), &cfg, &pat, &grid).unwrap();
            mean += delay_stats(&padp).unwrap().tau_rms_ns;
        }
        mean /= n_draws as f64;
        assert!((mean - 33.9).abs() < 0.15 * 33.9, "mean spread {mean}");
    }

    #[test]
    fn angles_land_on_grid() {
        let cfg = SounderConfig::default();
        let pat = AntennaPattern::default();
        let grid = AngleGrid::default();
        let padp = gen_mpcs(&los_spec(10, 5), &cfg, &pat, &grid).unwrap();
        for m in &padp.mpcs {
            assert!(grid.contains(&m.aod));
            assert!(grid.contains(&m.aoa));
        }
    }

    #[test]
    fn rrc_center_value() {
        let h0 = rrc_amplitude(0.0, RRC_ROLLOFF);
        assert!((h0 - (1.0 - 0.22 + 4.0 * 0.22 / std::f64::consts::PI)).abs() < 1e-12);
        // Even, decaying main lobe.
        assert_eq!(rrc_amplitude(0.4, RRC_ROLLOFF), rrc_amplitude(-0.4, RRC_ROLLOFF));
        assert!(rrc_amplitude(0.5, RRC_ROLLOFF) < h0);
        // Near-singular point evaluates finitely.
        let t = 1.0 / (4.0 * RRC_ROLLOFF);
        assert!(rrc_amplitude(t, RRC_ROLLOFF).is_finite());
        assert!(rrc_amplitude(t + 1e-9, RRC_ROLLOFF).is_finite());
    }

    fn boresight_truth(power_dbm: f64, tau_ns: f64) -> Padp {
        let dir = Direction::new(0.0, 0.0).unwrap();
        Padp {
            mpcs: vec![Mpc { tau_ns, power_dbm, aod: dir, aoa: dir }],
            meta: LinkMeta::new("L", 20.0, Scenario::Los),
            noise_floor_dbm: -200.0,
        }
    }

    fn single_beam_grid() -> AngleGrid {
        AngleGrid { azimuths_deg: vec![0.0], elevations_deg: vec![0.0] }
    }

    #[test]
    fn boresight_render_preserves_peak_power() {
        let cfg = SounderConfig { sequence_length: 256, ..Default::default() };
        let truth = boresight_truth(-70.0, 40.0 * cfg.delay_bin_ns);
        let rec = render_sweep(
            &truth,
            &cfg,
            &AntennaPattern::default(),
            &single_beam_grid(),
            &CorrectionParams::default(),
            f64::NEG_INFINITY,
            1,
        );
        assert_eq!(rec.pdps.len(), 1);
        let samples = &rec.pdps[0].samples_dbm;
        let (peak_bin, peak) = samples
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        assert_eq!(peak_bin, 40);
        assert!((peak - (-70.0)).abs() < 0.3, "peak = {peak}");
    }

    #[test]
    fn mid_bin_pulse_detected_at_nearer_bin_with_full_power() {
        let cfg = SounderConfig { sequence_length: 256, ..Default::default() };
        let tau = (40.0 + 0.42) * cfg.delay_bin_ns;
        let truth = boresight_truth(-70.0, tau);
        let rec = render_sweep(
            &truth,
            &cfg,
            &AntennaPattern::default(),
            &single_beam_grid(),
            &CorrectionParams::default(),
            -100.0,
            1,
        );
        let padp = extract_padp(&rec, &CorrectionParams::default(), 6.0);
        assert_eq!(padp.mpcs.len(), 1);
        assert!((padp.mpcs[0].tau_ns - 40.0 * cfg.delay_bin_ns).abs() < 1e-9);
        assert!((padp.mpcs[0].power_dbm - (-70.0)).abs() < 0.3);
    }

    #[test]
    fn noise_only_render_extracts_nothing() {
        let cfg = SounderConfig { sequence_length: 512, ..Default::default() };
        let truth = Padp {
            mpcs: vec![],
            meta: LinkMeta::new("L", 20.0, Scenario::Los),
            noise_floor_dbm: -200.0,
        };
        let grid = AngleGrid { azimuths_deg: vec![-20.0, 0.0, 20.0], elevations_deg: vec![0.0] };
        let rec = render_sweep(
            &truth,
            &cfg,
            &AntennaPattern::default(),
            &grid,
            &CorrectionParams::default(),
            -95.0,
            3,
        );
        let padp = extract_padp(&rec, &CorrectionParams::default(), 6.0);
        assert!(padp.mpcs.is_empty());
    }

    #[test]
    fn single_pulse_single_beam_extracts_one_mpc() {
        let cfg = SounderConfig { sequence_length: 256, ..Default::default() };
        let truth = boresight_truth(-70.0, 30.0 * cfg.delay_bin_ns);
        let rec = render_sweep(
            &truth,
            &cfg,
            &AntennaPattern::default(),
            &single_beam_grid(),
            &CorrectionParams::default(),
            -95.0,
            9,
        );
        let padp = extract_padp(&rec, &CorrectionParams::default(), 6.0);
        assert_eq!(padp.mpcs.len(), 1);
    }

    #[test]
    fn render_is_deterministic() {
        let cfg = SounderConfig { sequence_length: 128, ..Default::default() };
        let truth = boresight_truth(-70.0, 20.0 * cfg.delay_bin_ns);
        let grid = AngleGrid { azimuths_deg: vec![-20.0, 0.0, 20.0], elevations_deg: vec![0.0] };
        let args = (
            &truth,
            &cfg,
            AntennaPattern::default(),
            &grid,
            CorrectionParams::default(),
        );
        let a = render_sweep(args.0, args.1, &args.2, args.3, &args.4, -95.0, 11);
        let b = render_sweep(args.0, args.1, &args.2, args.3, &args.4, -95.0, 11);
        assert_eq!(a, b);
    }

    #[test]
    fn pathloss_samples_with_zero_sigma_lie_on_curve() {
        let model = PlModel::Cim(CimFit::from_params(2.11, 0.0, 1.0, 28e9).unwrap());
        let distances = [10.0, 20.0, 30.0, 40.0, 50.0];
        let samples = gen_pathloss_samples(&model, &distances, 0.0, Scenario::Los, 1).unwrap();
        for (s, &d) in samples.iter().zip(&distances) {
            let pred = model.predict(d).unwrap();
            assert!((s.path_loss_db - pred).abs() < 1e-12);
        }
    }

    #[test]
    fn pathloss_samples_deterministic_per_seed() {
        let model = PlModel::Fim(FimFit { alpha_db: 61.4, beta: 2.1, sigma_db: 0.0, n_points: 0 });
        let d = [10.0, 25.0, 50.0];
        let a = gen_pathloss_samples(&model, &d, 3.0, Scenario::Nlos, 5).unwrap();
        let b = gen_pathloss_samples(&model, &d, 3.0, Scenario::Nlos, 5).unwrap();
        let c = gen_pathloss_samples(&model, &d, 3.0, Scenario::Nlos, 6).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
