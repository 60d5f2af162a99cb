//! Reading and writing of sweep files, MPC lists, path-loss tables, and fit
//! reports, plus validation of metadata against the domain types.
//!
//! All formats are UTF-8 text. Writers are canonical: writing, parsing, and
//! writing again produces identical bytes. Power values are stored in dBm
//! with 4 decimals (well below measurement noise); angles with 4 decimals
//! (at least 6 significant digits for on-grid values); header scalars with
//! the shortest decimal form that round-trips the exact f64.

use crate::error::{Error, Result};
use crate::extract::{Mpc, Padp};
use crate::metrics::PathLossSample;
use crate::model::{AngleGrid, AntennaPattern, Direction, SounderConfig};

/// Link obstruction class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    Los,
    Nlos,
    /// Link obstructed only by a glass door. Kept distinct in files and
    /// reports, but pooled with NLOS for model fitting.
    NlosGlass,
}

impl Scenario {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scenario::Los => "LOS",
            Scenario::Nlos => "NLOS",
            Scenario::NlosGlass => "NLOS_GLASS",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "LOS" => Ok(Scenario::Los),
            "NLOS" => Ok(Scenario::Nlos),
            "NLOS_GLASS" => Ok(Scenario::NlosGlass),
            other => Err(Error::Validation(format!("unknown scenario {other:?}"))),
        }
    }

    /// Pool used for path-loss fitting: glass-obstructed links count as NLOS.
    pub fn fit_pool(&self) -> Scenario {
        match self {
            Scenario::Los => Scenario::Los,
            Scenario::Nlos | Scenario::NlosGlass => Scenario::Nlos,
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Metadata for one measured link.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkMeta {
    pub link_id: String,
    pub tx_id: String,
    pub rx_id: String,
    pub distance_m: f64,
    pub scenario: Scenario,
    pub tx_height_m: f64,
    pub rx_height_m: f64,
    pub floor_tx: i32,
    pub floor_rx: i32,
}

impl LinkMeta {
    pub fn new(link_id: impl Into<String>, distance_m: f64, scenario: Scenario) -> Self {
        Self {
            link_id: link_id.into(),
            tx_id: String::new(),
            rx_id: String::new(),
            distance_m,
            scenario,
            tx_height_m: 1.8,
            rx_height_m: 1.5,
            floor_tx: 0,
            floor_rx: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.distance_m > 0.0) {
            return Err(Error::Validation(format!("distance_m must be > 0, got {}", self.distance_m)));
        }
        if !(self.tx_height_m > 0.0) || !(self.rx_height_m > 0.0) {
            return Err(Error::Validation("antenna heights must be > 0".into()));
        }
        if self.link_id.is_empty() {
            return Err(Error::Validation("link_id must be non-empty".into()));
        }
        // Ids appear in comma-separated tables and key = value headers.
        for (name, id) in [("link_id", &self.link_id), ("tx_id", &self.tx_id), ("rx_id", &self.rx_id)] {
            if id.contains([',', '\n', '\r']) || id.trim() != id {
                return Err(Error::Validation(format!("{name} {id:?} has separators or padding")));
            }
        }
        Ok(())
    }
}

/// One directional capture: a PDP for a single (TX beam, RX beam) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionalPdp {
    pub tx_dir: Direction,
    pub rx_dir: Direction,
    /// Seconds since the start of the sweep.
    pub capture_time_s: f64,
    /// Received power per delay bin, dBm.
    pub samples_dbm: Vec<f64>,
}

/// A full measurement point: config, pattern, scan grid, link metadata, and
/// one directional PDP per scanned beam pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub config: SounderConfig,
    pub pattern: AntennaPattern,
    pub grid: AngleGrid,
    pub meta: LinkMeta,
    pub pdps: Vec<DirectionalPdp>,
}

impl SweepRecord {
    /// Lowest sample value a valid PDP may contain: the weakest receivable
    /// power (TX power plus both peak gains minus the maximum measurable
    /// path loss) minus a 20 dB guard.
    pub fn min_sample_dbm(&self) -> f64 {
        self.config.tx_power_dbm + 2.0 * self.pattern.peak_gain_dbi
            - self.config.max_measurable_pl_db
            - 20.0
    }

    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        self.pattern.validate()?;
        self.grid.validate()?;
        self.meta.validate()?;
        if self.pdps.is_empty() {
            return Err(Error::Validation("sweep has no beam captures".into()));
        }
        let n_bins = self.pdps[0].samples_dbm.len();
        let min_sample = self.min_sample_dbm();
        let mut seen: Vec<(u64, u64, u64, u64)> = Vec::with_capacity(self.pdps.len());
        for (i, pdp) in self.pdps.iter().enumerate() {
            if pdp.samples_dbm.is_empty() {
                return Err(Error::Validation(format!("beam {i}: empty PDP")));
            }
            if pdp.samples_dbm.len() != n_bins {
                return Err(Error::Validation(format!(
                    "beam {i}: PDP length {} differs from {}",
                    pdp.samples_dbm.len(),
                    n_bins
                )));
            }
            if !(pdp.capture_time_s >= 0.0) {
                return Err(Error::Validation(format!("beam {i}: negative capture time")));
            }
            if !self.grid.contains(&pdp.tx_dir) || !self.grid.contains(&pdp.rx_dir) {
                return Err(Error::Validation(format!(
                    "beam {i}: direction ({}, {})/({}, {}) not on scan grid",
                    pdp.tx_dir.az_deg(),
                    pdp.tx_dir.el_deg(),
                    pdp.rx_dir.az_deg(),
                    pdp.rx_dir.el_deg()
                )));
            }
            let key = (
                pdp.tx_dir.az_deg().to_bits(),
                pdp.tx_dir.el_deg().to_bits(),
                pdp.rx_dir.az_deg().to_bits(),
                pdp.rx_dir.el_deg().to_bits(),
            );
            if seen.contains(&key) {
                return Err(Error::Validation(format!("beam {i}: duplicate beam pair")));
            }
            seen.push(key);
            for (b, &s) in pdp.samples_dbm.iter().enumerate() {
                if !s.is_finite() {
                    return Err(Error::Validation(format!("beam {i} bin {b}: non-finite sample")));
                }
                if s < min_sample - 1e-9 {
                    return Err(Error::Validation(format!(
                        "beam {i} bin {b}: sample {s} dBm below floor guard {min_sample} dBm"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Shortest decimal form that parses back to the identical f64.
fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

fn fmt_db(v: f64) -> String {
    format!("{v:.4}")
}

fn parse_f64(s: &str, line: usize, what: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("cannot parse {what} from {s:?}")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("{what} must be finite, got {s:?}")));
    }
    Ok(v)
}

// --------------------------------------------------------------------------
// Sweep file
// --------------------------------------------------------------------------

/// Serialize a sweep to the canonical text form. Validates first, so an
/// invalid record (empty captures, off-grid direction, ...) is an error.
pub fn write_sweep(rec: &SweepRecord) -> Result<String> {
    rec.validate()?;
    let cap = 64 * 24 + rec.pdps.len() * (48 + rec.pdps[0].samples_dbm.len() * 10);
    let mut out = String::with_capacity(cap);
    let mut kv = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(&v);
        out.push('\n');
    };
    kv("freq_hz", fmt_f64(rec.config.carrier_freq_hz));
    kv("bandwidth_hz", fmt_f64(rec.config.bandwidth_hz));
    kv("sample_rate", fmt_f64(rec.config.sample_rate));
    kv("delay_bin_ns", fmt_f64(rec.config.delay_bin_ns));
    kv("tx_power_dbm", fmt_f64(rec.config.tx_power_dbm));
    kv("peak_gain_dbi", fmt_f64(rec.pattern.peak_gain_dbi));
    kv("hpbw_az_deg", fmt_f64(rec.pattern.hpbw_az_deg));
    kv("hpbw_el_deg", fmt_f64(rec.pattern.hpbw_el_deg));
    let az_list = rec.grid.azimuths_deg.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(",");
    let el_list = rec.grid.elevations_deg.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(",");
    kv("grid_az", az_list);
    kv("grid_el", el_list);
    kv("link_id", rec.meta.link_id.clone());
    kv("distance_m", fmt_f64(rec.meta.distance_m));
    kv("scenario", rec.meta.scenario.as_str().to_string());
    kv("tx_height_m", fmt_f64(rec.meta.tx_height_m));
    kv("rx_height_m", fmt_f64(rec.meta.rx_height_m));
    // Keys beyond the required set, so a parsed record is lossless.
    kv("floor_gain_dbi", fmt_f64(rec.pattern.floor_gain_dbi));
    kv("dynamic_range_db", fmt_f64(rec.config.dynamic_range_db));
    kv("max_pl_db", fmt_f64(rec.config.max_measurable_pl_db));
    kv("sequence_length", rec.config.sequence_length.to_string());
    kv("tx_id", rec.meta.tx_id.clone());
    kv("rx_id", rec.meta.rx_id.clone());
    kv("floor_tx", rec.meta.floor_tx.to_string());
    kv("floor_rx", rec.meta.floor_rx.to_string());
    out.push('\n');
    for pdp in &rec.pdps {
        out.push_str("@beam ");
        out.push_str(&fmt_f64(pdp.tx_dir.az_deg()));
        out.push(' ');
        out.push_str(&fmt_f64(pdp.tx_dir.el_deg()));
        out.push(' ');
        out.push_str(&fmt_f64(pdp.rx_dir.az_deg()));
        out.push(' ');
        out.push_str(&fmt_f64(pdp.rx_dir.el_deg()));
        out.push(' ');
        out.push_str(&fmt_f64(pdp.capture_time_s));
        out.push('\n');
        for &s in &pdp.samples_dbm {
            out.push_str(&fmt_db(s));
            out.push('\n');
        }
    }
    Ok(out)
}

/// Parse a sweep file and validate every invariant.
pub fn parse_sweep(text: &str) -> Result<SweepRecord> {
    let mut header: Vec<(String, String, usize)> = Vec::new();
    let mut lines = text.lines().enumerate().peekable();

    // Header: `key = value` lines up to the first blank line.
    loop {
        let Some((idx, line)) = lines.next() else {
            return Err(Error::parse(0, "unexpected end of file in header"));
        };
        let lno = idx + 1;
        if line.trim().is_empty() {
            break;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::parse(lno, format!("expected `key = value`, got {line:?}")));
        };
        header.push((k.trim().to_string(), v.trim().to_string(), lno));
    }

    let get = |key: &str| -> Result<(&str, usize)> {
        header
            .iter()
            .find(|(k, _, _)| k == key)
            .map(|(_, v, l)| (v.as_str(), *l))
            .ok_or_else(|| Error::parse(1, format!("missing header field {key:?}")))
    };
    let get_f64 = |key: &str| -> Result<f64> {
        let (v, l) = get(key)?;
        parse_f64(v, l, key)
    };
    let get_or = |key: &str, default: f64| -> Result<f64> {
        match header.iter().find(|(k, _, _)| k == key) {
            Some((_, v, l)) => parse_f64(v, *l, key),
            None => Ok(default),
        }
    };
    let get_str_or = |key: &str, default: &str| -> String {
        header
            .iter()
            .find(|(k, _, _)| k == key)
            .map(|(_, v, _)| v.clone())
            .unwrap_or_else(|| default.to_string())
    };

    let defaults = SounderConfig::default();
    let pat_defaults = AntennaPattern::default();
    let config = SounderConfig {
        carrier_freq_hz: get_f64("freq_hz")?,
        bandwidth_hz: get_f64("bandwidth_hz")?,
        sample_rate: get_f64("sample_rate")?,
        delay_bin_ns: get_f64("delay_bin_ns")?,
        tx_power_dbm: get_f64("tx_power_dbm")?,
        dynamic_range_db: get_or("dynamic_range_db", defaults.dynamic_range_db)?,
        max_measurable_pl_db: get_or("max_pl_db", defaults.max_measurable_pl_db)?,
        sequence_length: match header.iter().find(|(k, _, _)| k == "sequence_length") {
            Some((_, v, l)) => v
                .parse()
                .map_err(|_| Error::parse(*l, format!("cannot parse sequence_length from {v:?}")))?,
            None => defaults.sequence_length,
        },
    };
    let pattern = AntennaPattern {
        peak_gain_dbi: get_f64("peak_gain_dbi")?,
        hpbw_az_deg: get_f64("hpbw_az_deg")?,
        hpbw_el_deg: get_f64("hpbw_el_deg")?,
        floor_gain_dbi: get_or("floor_gain_dbi", pat_defaults.floor_gain_dbi)?,
    };
    let parse_list = |key: &str| -> Result<Vec<f64>> {
        let (v, l) = get(key)?;
        v.split(',').map(|tok| parse_f64(tok, l, key)).collect()
    };
    let grid = AngleGrid { azimuths_deg: parse_list("grid_az")?, elevations_deg: parse_list("grid_el")? };
    let (scenario_str, scen_line) = get("scenario")?;
    let scenario = Scenario::parse(scenario_str)
        .map_err(|e| Error::parse(scen_line, e.to_string()))?;
    let meta = LinkMeta {
        link_id: get("link_id")?.0.to_string(),
        tx_id: get_str_or("tx_id", ""),
        rx_id: get_str_or("rx_id", ""),
        distance_m: get_f64("distance_m")?,
        scenario,
        tx_height_m: get_f64("tx_height_m")?,
        rx_height_m: get_f64("rx_height_m")?,
        floor_tx: get_str_or("floor_tx", "0")
            .parse()
            .map_err(|_| Error::parse(1, "cannot parse floor_tx"))?,
        floor_rx: get_str_or("floor_rx", "0")
            .parse()
            .map_err(|_| Error::parse(1, "cannot parse floor_rx"))?,
    };

    // Beam blocks.
    let mut pdps: Vec<DirectionalPdp> = Vec::new();
    while let Some((idx, line)) = lines.next() {
        let lno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let Some(rest) = line.strip_prefix("@beam ") else {
            return Err(Error::parse(lno, format!("expected `@beam ...`, got {line:?}")));
        };
        let fields: Vec<&str> = rest.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::parse(lno, format!("@beam expects 5 fields, got {}", fields.len())));
        }
        let tx_az = parse_f64(fields[0], lno, "tx_az")?;
        let tx_el = parse_f64(fields[1], lno, "tx_el")?;
        let rx_az = parse_f64(fields[2], lno, "rx_az")?;
        let rx_el = parse_f64(fields[3], lno, "rx_el")?;
        let capture_time_s = parse_f64(fields[4], lno, "t_capture_s")?;
        let tx_dir = Direction::new(tx_az, tx_el)?;
        let rx_dir = Direction::new(rx_az, rx_el)?;
        let mut samples_dbm = Vec::new();
        while let Some((sidx, sline)) = lines.peek() {
            if sline.starts_with("@beam") || sline.trim().is_empty() {
                break;
            }
            samples_dbm.push(parse_f64(sline, sidx + 1, "sample")?);
            lines.next();
        }
        pdps.push(DirectionalPdp { tx_dir, rx_dir, capture_time_s, samples_dbm });
    }

    let rec = SweepRecord { config, pattern, grid, meta, pdps };
    rec.validate()?;
    Ok(rec)
}

// --------------------------------------------------------------------------
// MPC list (CSV)
// --------------------------------------------------------------------------

pub const MPC_CSV_HEADER: &str = "tau_ns,power_dbm,aod_az,aod_el,aoa_az,aoa_el";

/// Write the consolidated MPC list of a profile as CSV.
pub fn write_mpcs(padp: &Padp) -> String {
    let mut out = String::with_capacity(32 + padp.mpcs.len() * 48);
    out.push_str(MPC_CSV_HEADER);
    out.push('\n');
    for m in &padp.mpcs {
        out.push_str(&format!(
            "{:.4},{:.4},{:.4},{:.4},{:.4},{:.4}\n",
            m.tau_ns,
            m.power_dbm,
            m.aod.az_deg(),
            m.aod.el_deg(),
            m.aoa.az_deg(),
            m.aoa.el_deg()
        ));
    }
    out
}

/// Parse an MPC CSV. The file carries no link metadata by design; callers
/// rebuild a [`Padp`] with metadata from the campaign index when needed.
pub fn parse_mpcs(text: &str) -> Result<Vec<Mpc>> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(Error::parse(1, "empty MPC file"));
    };
    if header.trim() != MPC_CSV_HEADER {
        return Err(Error::parse(1, format!("bad MPC header {header:?}")));
    }
    let mut mpcs = Vec::new();
    for (idx, line) in lines {
        let lno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 6 {
            return Err(Error::parse(lno, format!("expected 6 columns, got {}", cols.len())));
        }
        let mpc = Mpc {
            tau_ns: parse_f64(cols[0], lno, "tau_ns")?,
            power_dbm: parse_f64(cols[1], lno, "power_dbm")?,
            aod: Direction::new(parse_f64(cols[2], lno, "aod_az")?, parse_f64(cols[3], lno, "aod_el")?)?,
            aoa: Direction::new(parse_f64(cols[4], lno, "aoa_az")?, parse_f64(cols[5], lno, "aoa_el")?)?,
        };
        mpc.validate().map_err(|e| Error::parse(lno, e.to_string()))?;
        mpcs.push(mpc);
    }
    Ok(mpcs)
}

// --------------------------------------------------------------------------
// Path-loss table (CSV)
// --------------------------------------------------------------------------

pub const PATHLOSS_CSV_HEADER: &str = "link_id,distance_m,scenario,path_loss_db";

pub fn write_pathloss_table(samples: &[PathLossSample]) -> String {
    let mut out = String::with_capacity(48 + samples.len() * 32);
    out.push_str(PATHLOSS_CSV_HEADER);
    out.push('\n');
    for s in samples {
        out.push_str(&format!(
            "{},{},{},{}\n",
            s.link_id,
            fmt_f64(s.distance_m),
            s.scenario.as_str(),
            fmt_db(s.path_loss_db)
        ));
    }
    out
}

pub fn parse_pathloss_table(text: &str) -> Result<Vec<PathLossSample>> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(Error::parse(1, "empty path-loss table"));
    };
    if header.trim() != PATHLOSS_CSV_HEADER {
        return Err(Error::parse(1, format!("bad path-loss header {header:?}")));
    }
    let mut samples = Vec::new();
    for (idx, line) in lines {
        let lno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 4 {
            return Err(Error::parse(lno, format!("expected 4 columns, got {}", cols.len())));
        }
        let s = PathLossSample {
            link_id: cols[0].to_string(),
            distance_m: parse_f64(cols[1], lno, "distance_m")?,
            scenario: Scenario::parse(cols[2]).map_err(|e| Error::parse(lno, e.to_string()))?,
            path_loss_db: parse_f64(cols[3], lno, "path_loss_db")?,
        };
        s.validate().map_err(|e| Error::parse(lno, e.to_string()))?;
        samples.push(s);
    }
    Ok(samples)
}

// --------------------------------------------------------------------------
// Fit report (CSV)
// --------------------------------------------------------------------------

pub const FIT_REPORT_CSV_HEADER: &str = "model,scenario,param1,param2,sigma_db,n_points";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitModelKind {
    Cim,
    Fim,
}

impl FitModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FitModelKind::Cim => "cim",
            FitModelKind::Fim => "fim",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "cim" => Ok(FitModelKind::Cim),
            "fim" => Ok(FitModelKind::Fim),
            other => Err(Error::Validation(format!("unknown model {other:?}"))),
        }
    }
}

/// One fitted model. `(param1, param2)` is `(n, d0)` for the close-in model
/// and `(alpha, beta)` for the floating-intercept model.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReportRow {
    pub model: FitModelKind,
    pub scenario: String,
    pub param1: f64,
    pub param2: f64,
    pub sigma_db: f64,
    pub n_points: usize,
}

pub fn write_fit_report(rows: &[FitReportRow]) -> String {
    let mut out = String::with_capacity(48 + rows.len() * 64);
    out.push_str(FIT_REPORT_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.model.as_str(),
            r.scenario,
            fmt_f64(r.param1),
            fmt_f64(r.param2),
            fmt_f64(r.sigma_db),
            r.n_points
        ));
    }
    out
}

pub fn parse_fit_report(text: &str) -> Result<Vec<FitReportRow>> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(Error::parse(1, "empty fit report"));
    };
    if header.trim() != FIT_REPORT_CSV_HEADER {
        return Err(Error::parse(1, format!("bad fit report header {header:?}")));
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let lno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 6 {
            return Err(Error::parse(lno, format!("expected 6 columns, got {}", cols.len())));
        }
        rows.push(FitReportRow {
            model: FitModelKind::parse(cols[0]).map_err(|e| Error::parse(lno, e.to_string()))?,
            scenario: cols[1].to_string(),
            param1: parse_f64(cols[2], lno, "param1")?,
            param2: parse_f64(cols[3], lno, "param2")?,
            sigma_db: parse_f64(cols[4], lno, "sigma_db")?,
            n_points: cols[5]
                .trim()
                .parse()
                .map_err(|_| Error::parse(lno, format!("cannot parse n_points from {:?}", cols[5])))?,
        });
    }
    Ok(rows)
}

// --------------------------------------------------------------------------
// Delay statistics and CDF tables (write-only report formats)
// --------------------------------------------------------------------------

pub const STATS_CSV_HEADER: &str = "link_id,scenario,tau_avg_ns,tau_rms_ns";

#[derive(Debug, Clone, PartialEq)]
pub struct StatsRow {
    pub link_id: String,
    /// Scenario label; empty when no campaign index was available.
    pub scenario: String,
    pub tau_avg_ns: f64,
    pub tau_rms_ns: f64,
}

pub fn write_stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::with_capacity(40 + rows.len() * 40);
    out.push_str(STATS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.link_id, r.scenario, fmt_db(r.tau_avg_ns), fmt_db(r.tau_rms_ns)));
    }
    out
}

pub const CDF_CSV_HEADER: &str = "scenario,tau_rms_ns,probability";

/// Write per-pool empirical CDFs of the RMS delay spread.
pub fn write_cdf_csv(pools: &[(String, Vec<(f64, f64)>)]) -> String {
    let mut out = String::with_capacity(40 + pools.iter().map(|(_, v)| v.len() * 32).sum::<usize>());
    out.push_str(CDF_CSV_HEADER);
    out.push('\n');
    for (label, cdf) in pools {
        for &(value, prob) in cdf {
            out.push_str(&format!("{},{},{:.6}\n", label, fmt_db(value), prob));
        }
    }
    out
}
