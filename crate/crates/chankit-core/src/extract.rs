//! Multipath component extraction: noise-floor estimation, per-beam peak
//! search, rotation/drift delay correction, and consolidation of per-beam
//! detections into a power angular-delay profile.

use crate::error::{Error, Result};
use crate::ingest::{DirectionalPdp, LinkMeta, SweepRecord};
use crate::model::{wrap_deg, AntennaPattern, Direction, SPEED_OF_LIGHT};

/// One extracted multipath component.
#[derive(Debug, Clone, PartialEq)]
pub struct Mpc {
    pub tau_ns: f64,
    pub power_dbm: f64,
    pub aod: Direction,
    pub aoa: Direction,
}

impl Mpc {
    pub fn validate(&self) -> Result<()> {
        if !(self.tau_ns >= 0.0) || !self.tau_ns.is_finite() {
            return Err(Error::Validation(format!("tau_ns must be >= 0, got {}", self.tau_ns)));
        }
        if !(self.power_dbm > -200.0) || !self.power_dbm.is_finite() {
            return Err(Error::Validation(format!("power_dbm must exceed -200, got {}", self.power_dbm)));
        }
        Ok(())
    }
}

/// Consolidated multipath profile for one link, sorted by delay.
#[derive(Debug, Clone, PartialEq)]
pub struct Padp {
    pub mpcs: Vec<Mpc>,
    pub meta: LinkMeta,
    pub noise_floor_dbm: f64,
}

impl Padp {
    pub fn validate(&self) -> Result<()> {
        self.meta.validate()?;
        for m in &self.mpcs {
            m.validate()?;
        }
        for w in self.mpcs.windows(2) {
            if w[0].tau_ns > w[1].tau_ns {
                return Err(Error::Validation("MPCs must be sorted by delay".into()));
            }
        }
        Ok(())
    }
}

/// Parametric model of the delay offsets a rotating-antenna sweep imprints on
/// each capture: a phase-center rotation projection plus linear clock drift.
/// Both default to zero, which is correct for already-corrected data.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionParams {
    /// Rotation radius of the antenna phase center, in metres.
    pub phase_center_radius_m: f64,
    /// Clock drift in seconds of delay per second of sweep time.
    pub drift_rate: f64,
    /// Azimuth (degrees) at which the rotation offset is zero.
    pub reference_az_deg: f64,
}

impl Default for CorrectionParams {
    fn default() -> Self {
        Self { phase_center_radius_m: 0.0, drift_rate: 0.0, reference_az_deg: 0.0 }
    }
}

impl CorrectionParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.phase_center_radius_m >= 0.0) {
            return Err(Error::Validation("phase_center_radius_m must be >= 0".into()));
        }
        Ok(())
    }

    /// Total delay offset in ns a capture at the given pointing and sweep
    /// time carries relative to the ideal static geometry.
    pub fn delay_offset_ns(&self, tx_az_deg: f64, rx_az_deg: f64, capture_time_s: f64) -> f64 {
        let rot = self.phase_center_radius_m / SPEED_OF_LIGHT
            * ((1.0 - wrap_deg(tx_az_deg - self.reference_az_deg).to_radians().cos())
                + (1.0 - wrap_deg(rx_az_deg - self.reference_az_deg).to_radians().cos()));
        (rot + self.drift_rate * capture_time_s) * 1e9
    }
}

/// One detected peak before consolidation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub tau_ns: f64,
    pub power_dbm: f64,
}

/// Peak list for a single beam pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamPeaks {
    pub tx_dir: Direction,
    pub rx_dir: Direction,
    pub capture_time_s: f64,
    pub peaks: Vec<Peak>,
}

/// Knobs of the extraction pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtractOptions {
    /// Detection threshold above the per-beam noise floor, dB.
    pub threshold_db: f64,
    /// Delay gate for merging detections across beams; `None` means twice
    /// the delay bin of the sweep being processed.
    pub gate_tau_ns: Option<f64>,
    /// Angular gate (degrees) for merging; compared per side against the
    /// larger of the azimuth and elevation separations.
    pub gate_angle_deg: f64,
    /// A detection this many dB below a stronger component at nearly the
    /// same delay is an artifact of that component (pattern-floor leakage
    /// across beams, or the pulse skirt within one) and is dropped.
    pub sidelobe_db: f64,
    /// Delay window for the sidelobe test; `None` means five delay bins,
    /// the extent of the pulse main lobe.
    pub sidelobe_window_ns: Option<f64>,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            threshold_db: 6.0,
            gate_tau_ns: None,
            gate_angle_deg: 20.0,
            sidelobe_db: 20.0,
            sidelobe_window_ns: None,
        }
    }
}

/// Median of the sample values in dBm. Even-length inputs return the mean of
/// the two middle values. Robust as long as peaks occupy under half the bins.
pub fn estimate_noise_floor(pdp: &DirectionalPdp) -> f64 {
    median(pdp.samples_dbm.clone())
}

fn median(mut values: Vec<f64>) -> f64 {
    assert!(!values.is_empty(), "median of empty slice");
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Local maxima strictly above both neighbours and above `floor + threshold`.
/// A plateau counts once, at its first bin. Delays are `bin * delay_bin_ns`.
pub fn detect_peaks(
    pdp: &DirectionalPdp,
    floor_dbm: f64,
    threshold_db: f64,
    delay_bin_ns: f64,
) -> Vec<Peak> {
    let s = &pdp.samples_dbm;
    let n = s.len();
    let cutoff = floor_dbm + threshold_db;
    let mut peaks = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && s[j + 1] == s[i] {
            j += 1;
        }
        let left_lower = i == 0 || s[i - 1] < s[i];
        let right_lower = j == n - 1 || s[j + 1] < s[i];
        if left_lower && right_lower && s[i] > cutoff {
            peaks.push(Peak { tau_ns: i as f64 * delay_bin_ns, power_dbm: s[i] });
        }
        i = j + 1;
    }
    peaks
}

/// Remove the rotation and drift offsets from detected delays. Corrected
/// delays that land below zero are clamped to zero.
pub fn correct_delays(
    peaks: &[Peak],
    tx_dir: &Direction,
    rx_dir: &Direction,
    capture_time_s: f64,
    params: &CorrectionParams,
) -> Vec<Peak> {
    let offset_ns = params.delay_offset_ns(tx_dir.az_deg(), rx_dir.az_deg(), capture_time_s);
    peaks
        .iter()
        .map(|p| Peak { tau_ns: (p.tau_ns - offset_ns).max(0.0), power_dbm: p.power_dbm })
        .collect()
}

/// Consolidation gates resolved to concrete values.
#[derive(Debug, Clone, PartialEq)]
pub struct Gates {
    pub tau_ns: f64,
    pub angle_deg: f64,
    pub sidelobe_db: f64,
    pub sidelobe_window_ns: f64,
}

/// Tolerance between a detection's power deficit and the pattern roll-off
/// that would explain it as beam leakage of a stronger same-delay component.
pub const LEAKAGE_MARGIN_DB: f64 = 6.0;

/// Merge per-beam detections into unique MPCs.
///
/// Detections whose delays differ by at most the delay gate and whose TX
/// and RX pointings each differ by at most the angle gate observe the same
/// physical path through overlapping beams; the strongest detection keeps
/// its delay, power, and angles and the rest are dropped (not power-summed,
/// which would double-count the path in the omnidirectional sum).
///
/// Two artifact prunes follow the merge. A component more than
/// `sidelobe_db` below a stronger one within the sidelobe window is an
/// artifact of it (pattern floor across beams, pulse skirt within one). A
/// same-delay component whose deficit matches the pattern roll-off between
/// its beams and a stronger component's beams, within
/// [`LEAKAGE_MARGIN_DB`], is that component seen off-beam; this covers beam
/// spacings wider than the angle gate, such as the wrap seam at the gimbal
/// pan limit.
pub fn consolidate_mpcs(
    beams: &[BeamPeaks],
    gates: &Gates,
    pattern: &AntennaPattern,
    meta: LinkMeta,
    noise_floor_dbm: f64,
) -> Padp {
    struct Candidate {
        tau_ns: f64,
        power_dbm: f64,
        aod: Direction,
        aoa: Direction,
    }
    let mut cands: Vec<Candidate> = Vec::new();
    for b in beams {
        for p in &b.peaks {
            cands.push(Candidate { tau_ns: p.tau_ns, power_dbm: p.power_dbm, aod: b.tx_dir, aoa: b.rx_dir });
        }
    }
    // Strongest first; full ordering for determinism under ties.
    cands.sort_by(|a, b| {
        b.power_dbm
            .partial_cmp(&a.power_dbm)
            .unwrap()
            .then(a.tau_ns.partial_cmp(&b.tau_ns).unwrap())
            .then(a.aod.az_deg().partial_cmp(&b.aod.az_deg()).unwrap())
            .then(a.aod.el_deg().partial_cmp(&b.aod.el_deg()).unwrap())
            .then(a.aoa.az_deg().partial_cmp(&b.aoa.az_deg()).unwrap())
            .then(a.aoa.el_deg().partial_cmp(&b.aoa.el_deg()).unwrap())
    });

    let mut absorbed = vec![false; cands.len()];
    let mut mpcs: Vec<Mpc> = Vec::new();
    for i in 0..cands.len() {
        if absorbed[i] {
            continue;
        }
        let seed = &cands[i];
        for j in (i + 1)..cands.len() {
            if absorbed[j] {
                continue;
            }
            let c = &cands[j];
            if (c.tau_ns - seed.tau_ns).abs() <= gates.tau_ns
                && c.aod.angular_gap_to(&seed.aod) <= gates.angle_deg
                && c.aoa.angular_gap_to(&seed.aoa) <= gates.angle_deg
            {
                absorbed[j] = true;
            }
        }
        mpcs.push(Mpc { tau_ns: seed.tau_ns, power_dbm: seed.power_dbm, aod: seed.aod, aoa: seed.aoa });
    }

    let beam_loss = |a: &Direction, b: &Direction| -> f64 {
        pattern.peak_gain_dbi
            - pattern.gain_dbi(wrap_deg(a.az_deg() - b.az_deg()), a.el_deg() - b.el_deg())
    };
    let kept: Vec<Mpc> = mpcs
        .iter()
        .filter(|m| {
            !mpcs.iter().any(|s| {
                let deficit = s.power_dbm - m.power_dbm;
                if deficit <= 0.0 {
                    return false;
                }
                let dt = (s.tau_ns - m.tau_ns).abs();
                if dt <= gates.sidelobe_window_ns && deficit >= gates.sidelobe_db {
                    return true;
                }
                if dt <= gates.tau_ns {
                    let expected = beam_loss(&m.aod, &s.aod) + beam_loss(&m.aoa, &s.aoa);
                    return expected >= LEAKAGE_MARGIN_DB && deficit >= expected - LEAKAGE_MARGIN_DB;
                }
                false
            })
        })
        .cloned()
        .collect();

    let mut mpcs = kept;
    mpcs.sort_by(|a, b| {
        a.tau_ns
            .partial_cmp(&b.tau_ns)
            .unwrap()
            .then(b.power_dbm.partial_cmp(&a.power_dbm).unwrap())
    });
    Padp { mpcs, meta, noise_floor_dbm }
}

/// Noise floor and uncorrected peak list for every beam in the sweep.
pub fn detect_all_beams(rec: &SweepRecord, threshold_db: f64) -> (Vec<BeamPeaks>, f64) {
    let mut floors = Vec::with_capacity(rec.pdps.len());
    let mut beams = Vec::with_capacity(rec.pdps.len());
    for pdp in &rec.pdps {
        let floor = estimate_noise_floor(pdp);
        floors.push(floor);
        let peaks = detect_peaks(pdp, floor, threshold_db, rec.config.delay_bin_ns);
        beams.push(BeamPeaks {
            tx_dir: pdp.tx_dir,
            rx_dir: pdp.rx_dir,
            capture_time_s: pdp.capture_time_s,
            peaks,
        });
    }
    let noise_floor = median(floors);
    (beams, noise_floor)
}

/// Full extraction with default gates: floor, peak search, delay correction,
/// consolidation. Deterministic; an empty profile is a valid outcome.
pub fn extract_padp(rec: &SweepRecord, params: &CorrectionParams, threshold_db: f64) -> Padp {
    extract_padp_opts(rec, params, &ExtractOptions { threshold_db, ..Default::default() })
}

pub fn extract_padp_opts(rec: &SweepRecord, params: &CorrectionParams, opts: &ExtractOptions) -> Padp {
    let (mut beams, noise_floor) = detect_all_beams(rec, opts.threshold_db);
    for b in &mut beams {
        b.peaks = correct_delays(&b.peaks, &b.tx_dir, &b.rx_dir, b.capture_time_s, params);
    }
    let gates = Gates {
        tau_ns: opts.gate_tau_ns.unwrap_or(2.0 * rec.config.delay_bin_ns),
        angle_deg: opts.gate_angle_deg,
        sidelobe_db: opts.sidelobe_db,
        sidelobe_window_ns: opts.sidelobe_window_ns.unwrap_or(5.0 * rec.config.delay_bin_ns),
    };
    consolidate_mpcs(&beams, &gates, &rec.pattern, rec.meta.clone(), noise_floor)
}
