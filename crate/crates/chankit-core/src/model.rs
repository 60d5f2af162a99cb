//! Domain types, physical constants, and the dB/linear conversion semantics
//! shared by every other module.
//!
//! Power arithmetic is done in linear milliwatts internally; dB values appear
//! only at module boundaries so log/exp round-off does not accumulate.

use crate::error::{Error, Result};

/// Speed of light in m/s, used for every delay/distance conversion.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Sounder hardware constants.
#[derive(Debug, Clone, PartialEq)]
pub struct SounderConfig {
    /// Carrier frequency in Hz.
    pub carrier_freq_hz: f64,
    /// Sounding bandwidth in Hz.
    pub bandwidth_hz: f64,
    /// DAC/ADC sample rate in samples/s.
    pub sample_rate: f64,
    /// Delay-domain resolution in ns (one PDP bin).
    pub delay_bin_ns: f64,
    /// Transmit power in dBm.
    pub tx_power_dbm: f64,
    /// ADC dynamic range in dB.
    pub dynamic_range_db: f64,
    /// Largest path loss the sounder can measure, in dB.
    pub max_measurable_pl_db: f64,
    /// Sounding sequence length (PDP bins per capture).
    pub sequence_length: usize,
}

impl Default for SounderConfig {
    fn default() -> Self {
        Self {
            carrier_freq_hz: 28e9,
            bandwidth_hz: 2e9,
            sample_rate: 3.072e9,
            delay_bin_ns: 0.651,
            tx_power_dbm: -10.0,
            dynamic_range_db: 60.0,
            max_measurable_pl_db: 185.0,
            sequence_length: 2048,
        }
    }
}

impl SounderConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("carrier_freq_hz", self.carrier_freq_hz),
            ("bandwidth_hz", self.bandwidth_hz),
            ("sample_rate", self.sample_rate),
            ("delay_bin_ns", self.delay_bin_ns),
            ("dynamic_range_db", self.dynamic_range_db),
            ("max_measurable_pl_db", self.max_measurable_pl_db),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Validation(format!("{name} must be strictly positive, got {v}")));
            }
        }
        if !self.tx_power_dbm.is_finite() {
            return Err(Error::Validation("tx_power_dbm must be finite".into()));
        }
        if self.sequence_length == 0 {
            return Err(Error::Validation("sequence_length must be positive".into()));
        }
        // Oversampling by 2: one delay bin spans two ADC samples.
        let expected_ns = 2.0e9 / self.sample_rate;
        if (self.delay_bin_ns - expected_ns).abs() > 0.01 * expected_ns {
            return Err(Error::Validation(format!(
                "delay_bin_ns {} inconsistent with sample_rate {} (expected ~{expected_ns} ns)",
                self.delay_bin_ns, self.sample_rate
            )));
        }
        Ok(())
    }
}

/// Gaussian main-lobe horn pattern with a flat sidelobe floor.
///
/// Only peak gain and half-power beamwidths are specified for the hardware,
/// so the lobe is the minimal quadratic-in-dB model consistent with both:
/// the gain is down 3 dB at half a beamwidth off boresight in either plane.
#[derive(Debug, Clone, PartialEq)]
pub struct AntennaPattern {
    pub peak_gain_dbi: f64,
    pub hpbw_az_deg: f64,
    pub hpbw_el_deg: f64,
    /// Gain far off boresight. Not a measured value; see `gain_dbi`.
    pub floor_gain_dbi: f64,
}

impl Default for AntennaPattern {
    fn default() -> Self {
        Self { peak_gain_dbi: 17.0, hpbw_az_deg: 24.0, hpbw_el_deg: 26.0, floor_gain_dbi: -10.0 }
    }
}

impl AntennaPattern {
    pub fn validate(&self) -> Result<()> {
        if !(self.peak_gain_dbi > self.floor_gain_dbi) {
            return Err(Error::Validation(format!(
                "peak_gain_dbi {} must exceed floor_gain_dbi {}",
                self.peak_gain_dbi, self.floor_gain_dbi
            )));
        }
        for (name, v) in [("hpbw_az_deg", self.hpbw_az_deg), ("hpbw_el_deg", self.hpbw_el_deg)] {
            if !(v > 0.0 && v < 360.0) {
                return Err(Error::Validation(format!("{name} must be in (0, 360), got {v}")));
            }
        }
        Ok(())
    }

    /// Gain in dBi at the given angular offsets from boresight.
    ///
    /// Offsets are wrapped to [-180, 180) before evaluation, so this is a
    /// total function: `max(floor, peak - 12*((daz/hpbw_az)^2 + (del/hpbw_el)^2))`.
    pub fn gain_dbi(&self, offset_az_deg: f64, offset_el_deg: f64) -> f64 {
        let daz = wrap_deg(offset_az_deg) / self.hpbw_az_deg;
        let del = wrap_deg(offset_el_deg) / self.hpbw_el_deg;
        let g = self.peak_gain_dbi - 12.0 * (daz * daz + del * del);
        g.max(self.floor_gain_dbi)
    }
}

/// Free function form of [`AntennaPattern::gain_dbi`].
pub fn antenna_gain(pattern: &AntennaPattern, offset_az_deg: f64, offset_el_deg: f64) -> f64 {
    pattern.gain_dbi(offset_az_deg, offset_el_deg)
}

/// Wrap an angle in degrees into [-180, 180).
pub fn wrap_deg(deg: f64) -> f64 {
    let mut a = deg % 360.0;
    if a < -180.0 {
        a += 360.0;
    } else if a >= 180.0 {
        a -= 360.0;
    }
    a
}

/// A pointing direction: azimuth in [-180, 180), elevation in [-90, 90].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    az_deg: f64,
    el_deg: f64,
}

impl Direction {
    /// Azimuth wraps modulo 360; elevation outside [-90, 90] is an error.
    pub fn new(az_deg: f64, el_deg: f64) -> Result<Self> {
        if !az_deg.is_finite() || !el_deg.is_finite() {
            return Err(Error::Validation("direction angles must be finite".into()));
        }
        if !(-90.0..=90.0).contains(&el_deg) {
            return Err(Error::Validation(format!("elevation {el_deg} outside [-90, 90]")));
        }
        Ok(Self { az_deg: wrap_deg(az_deg), el_deg })
    }

    pub fn az_deg(&self) -> f64 {
        self.az_deg
    }

    pub fn el_deg(&self) -> f64 {
        self.el_deg
    }

    /// Larger of the wrapped azimuth and elevation separations, in degrees.
    pub fn angular_gap_to(&self, other: &Direction) -> f64 {
        let daz = wrap_deg(self.az_deg - other.az_deg).abs();
        let del = (self.el_deg - other.el_deg).abs();
        daz.max(del)
    }
}

/// Scan grid of azimuths and elevations shared by TX and RX.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleGrid {
    pub azimuths_deg: Vec<f64>,
    pub elevations_deg: Vec<f64>,
}

impl Default for AngleGrid {
    /// 19 azimuths and 3 elevations. The interior azimuths sit on a 20-degree
    /// comb; the outermost pair is at the +/-167.98-degree gimbal pan limit.
    fn default() -> Self {
        let mut az = Vec::with_capacity(19);
        az.push(-167.98);
        for k in 0..17 {
            az.push(-160.0 + 20.0 * k as f64);
        }
        az.push(167.98);
        Self { azimuths_deg: az, elevations_deg: vec![-20.0, 0.0, 20.0] }
    }
}

impl AngleGrid {
    pub fn validate(&self) -> Result<()> {
        if self.azimuths_deg.is_empty() || self.elevations_deg.is_empty() {
            return Err(Error::Validation("angle grid must be non-empty".into()));
        }
        for w in self.azimuths_deg.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::Validation("grid azimuths must be strictly increasing".into()));
            }
        }
        for w in self.elevations_deg.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::Validation("grid elevations must be strictly increasing".into()));
            }
        }
        for &az in &self.azimuths_deg {
            if !(-180.0..180.0).contains(&az) {
                return Err(Error::Validation(format!("grid azimuth {az} outside [-180, 180)")));
            }
        }
        for &el in &self.elevations_deg {
            if !(-90.0..=90.0).contains(&el) {
                return Err(Error::Validation(format!("grid elevation {el} outside [-90, 90]")));
            }
        }
        Ok(())
    }

    /// All grid directions, elevation-major then azimuth. The order is the
    /// canonical scan order used when rendering and serializing sweeps.
    pub fn directions(&self) -> Vec<Direction> {
        let mut out = Vec::with_capacity(self.azimuths_deg.len() * self.elevations_deg.len());
        for &el in &self.elevations_deg {
            for &az in &self.azimuths_deg {
                out.push(Direction { az_deg: az, el_deg: el });
            }
        }
        out
    }

    pub fn contains(&self, dir: &Direction) -> bool {
        let on = |list: &[f64], v: f64| list.iter().any(|&g| (g - v).abs() <= 1e-9);
        on(&self.azimuths_deg, dir.az_deg) && on(&self.elevations_deg, dir.el_deg)
    }

    /// Grid direction closest to `dir` (wrapped azimuth distance, then elevation).
    pub fn nearest(&self, dir: &Direction) -> Direction {
        let az = *self
            .azimuths_deg
            .iter()
            .min_by(|a, b| {
                let da = wrap_deg(**a - dir.az_deg).abs();
                let db = wrap_deg(**b - dir.az_deg).abs();
                da.partial_cmp(&db).unwrap()
            })
            .unwrap();
        let el = *self
            .elevations_deg
            .iter()
            .min_by(|a, b| {
                let da = (**a - dir.el_deg).abs();
                let db = (**b - dir.el_deg).abs();
                da.partial_cmp(&db).unwrap()
            })
            .unwrap();
        Direction { az_deg: az, el_deg: el }
    }
}

/// Free-space path loss in dB: `20*log10(4*pi*d*f/c)`.
pub fn fspl(freq_hz: f64, dist_m: f64) -> Result<f64> {
    if !(freq_hz > 0.0) {
        return Err(Error::Domain(format!("fspl requires freq > 0, got {freq_hz}")));
    }
    if !(dist_m > 0.0) {
        return Err(Error::Domain(format!("fspl requires dist > 0, got {dist_m}")));
    }
    Ok(20.0 * (4.0 * std::f64::consts::PI * dist_m * freq_hz / SPEED_OF_LIGHT).log10())
}

/// Linear milliwatts to dBm. Errors on non-positive power.
pub fn db_from_linear(p_mw: f64) -> Result<f64> {
    if !(p_mw > 0.0) {
        return Err(Error::Domain(format!("power must be > 0 mW, got {p_mw}")));
    }
    Ok(10.0 * p_mw.log10())
}

/// dBm to linear milliwatts. Total on finite inputs.
pub fn linear_from_db(p_dbm: f64) -> f64 {
    10f64.powf(p_dbm / 10.0)
}
