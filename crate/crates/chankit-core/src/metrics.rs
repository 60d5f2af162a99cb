//! Omnidirectional received power, path loss, delay-spread statistics, and
//! empirical CDFs computed from a consolidated multipath profile.

use crate::error::{Error, Result};
use crate::extract::{BeamPeaks, Padp};
use crate::ingest::Scenario;
use crate::model::{db_from_linear, linear_from_db};

/// One (distance, path loss) observation feeding the model fitters.
#[derive(Debug, Clone, PartialEq)]
pub struct PathLossSample {
    pub link_id: String,
    pub distance_m: f64,
    pub scenario: Scenario,
    pub path_loss_db: f64,
}

impl PathLossSample {
    pub fn validate(&self) -> Result<()> {
        if !(self.distance_m > 0.0) {
            return Err(Error::Validation(format!("distance_m must be > 0, got {}", self.distance_m)));
        }
        if !(self.path_loss_db > 0.0 && self.path_loss_db < 250.0) {
            return Err(Error::Validation(format!(
                "path_loss_db must lie in (0, 250), got {}",
                self.path_loss_db
            )));
        }
        Ok(())
    }
}

/// Power-weighted mean delay and RMS delay spread.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelayStats {
    pub tau_avg_ns: f64,
    pub tau_rms_ns: f64,
}

/// A computed path loss plus a plausibility flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLoss {
    pub db: f64,
    /// Set when the value falls outside (0, 250) dB or exceeds the largest
    /// path loss the sounder can measure.
    pub suspicious: bool,
}

/// Default measurement ceiling used by [`path_loss`].
pub const DEFAULT_MAX_MEASURABLE_PL_DB: f64 = 185.0;

/// Omnidirectional received power: the linear-power sum over the consolidated
/// MPCs, in dBm. Errors on an empty profile.
pub fn omni_rx_power(padp: &Padp) -> Result<f64> {
    if padp.mpcs.is_empty() {
        return Err(Error::NoSignal);
    }
    let total_mw: f64 = padp.mpcs.iter().map(|m| linear_from_db(m.power_dbm)).sum();
    db_from_linear(total_mw)
}

/// Raw-sum variant: linear power summed over every per-beam detection with
/// no duplicate pruning. Overlapping beams observing the same path count
/// multiple times, so this overestimates whenever beams overlap.
pub fn omni_rx_power_raw(beams: &[BeamPeaks]) -> Result<f64> {
    let total_mw: f64 = beams
        .iter()
        .flat_map(|b| b.peaks.iter())
        .map(|p| linear_from_db(p.power_dbm))
        .sum();
    if total_mw <= 0.0 {
        return Err(Error::NoSignal);
    }
    db_from_linear(total_mw)
}

/// Path loss between isotropic antennas, from the received power and the
/// antenna gains absorbed in it.
pub fn path_loss(tx_power_dbm: f64, p_rx_dbm: f64, g_tx_dbi: f64, g_rx_dbi: f64) -> PathLoss {
    path_loss_with_limit(tx_power_dbm, p_rx_dbm, g_tx_dbi, g_rx_dbi, DEFAULT_MAX_MEASURABLE_PL_DB)
}

pub fn path_loss_with_limit(
    tx_power_dbm: f64,
    p_rx_dbm: f64,
    g_tx_dbi: f64,
    g_rx_dbi: f64,
    max_measurable_pl_db: f64,
) -> PathLoss {
    let db = tx_power_dbm - p_rx_dbm + g_tx_dbi + g_rx_dbi;
    let suspicious = !(db > 0.0 && db < 250.0) || db > max_measurable_pl_db;
    PathLoss { db, suspicious }
}

/// Power-weighted mean delay and second central moment of the MPC delays,
/// with weights in linear power.
pub fn delay_stats(padp: &Padp) -> Result<DelayStats> {
    if padp.mpcs.is_empty() {
        return Err(Error::NoSignal);
    }
    if padp.mpcs.len() == 1 {
        return Ok(DelayStats { tau_avg_ns: padp.mpcs[0].tau_ns, tau_rms_ns: 0.0 });
    }
    let total: f64 = padp.mpcs.iter().map(|m| linear_from_db(m.power_dbm)).sum();
    let tau_avg = padp
        .mpcs
        .iter()
        .map(|m| linear_from_db(m.power_dbm) * m.tau_ns)
        .sum::<f64>()
        / total;
    let var = padp
        .mpcs
        .iter()
        .map(|m| {
            let d = m.tau_ns - tau_avg;
            linear_from_db(m.power_dbm) * d * d
        })
        .sum::<f64>()
        / total;
    Ok(DelayStats { tau_avg_ns: tau_avg, tau_rms_ns: var.max(0.0).sqrt() })
}

/// Empirical CDF with the right-continuous step convention: probability
/// `i / N` at the i-th sorted value.
pub fn empirical_cdf(values: &[f64]) -> Result<Vec<(f64, f64)>> {
    if values.is_empty() {
        return Err(Error::InsufficientData("empirical_cdf needs at least one value".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    Ok(sorted
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, (i + 1) as f64 / n))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::Mpc;
    use crate::ingest::LinkMeta;
    use crate::model::Direction;

    fn padp(taus_powers: &[(f64, f64)]) -> Padp {
        let dir = Direction::new(0.0, 0.0).unwrap();
        Padp {
            mpcs: taus_powers
                .iter()
                .map(|&(tau_ns, power_dbm)| Mpc { tau_ns, power_dbm, aod: dir, aoa: dir })
                .collect(),
            meta: LinkMeta::new("L", 20.0, Scenario::Los),
            noise_floor_dbm: -95.0,
        }
    }

    #[test]
    fn omni_of_single_mpc_is_its_power() {
        let p = padp(&[(10.0, -70.0)]);
        assert!((omni_rx_power(&p).unwrap() + 70.0).abs() < 1e-12);
    }

    #[test]
    fn omni_of_two_equal_mpcs() {
        let p = padp(&[(10.0, -70.0), (20.0, -70.0)]);
        let v = omni_rx_power(&p).unwrap();
        assert!((v + 66.9897).abs() < 1e-4, "got {v}");
    }

    #[test]
    fn omni_of_unequal_mpcs() {
        let p = padp(&[(10.0, -70.0), (20.0, -90.0)]);
        let v = omni_rx_power(&p).unwrap();
        assert!((v + 69.9568).abs() < 1e-4, "got {v}");
    }

    #[test]
    fn omni_is_at_least_strongest_component() {
        let p = padp(&[(5.0, -72.0), (9.0, -66.0), (14.0, -80.0)]);
        assert!(omni_rx_power(&p).unwrap() >= -66.0);
    }

    #[test]
    fn omni_of_empty_profile_errors() {
        let p = padp(&[]);
        assert!(matches!(omni_rx_power(&p), Err(Error::NoSignal)));
    }

    #[test]
    fn path_loss_arithmetic() {
        let pl = path_loss(-10.0, -80.0, 17.0, 17.0);
        assert_eq!(pl.db, 104.0);
        assert!(!pl.suspicious);
    }

    #[test]
    fn path_loss_zero_is_degenerate() {
        let pl = path_loss(-10.0, -10.0, 0.0, 0.0);
        assert_eq!(pl.db, 0.0);
        assert!(pl.suspicious);
    }

    #[test]
    fn path_loss_beyond_measurement_ceiling_flagged() {
        let pl = path_loss(-10.0, -178.0, 17.0, 17.0);
        assert_eq!(pl.db, 202.0);
        assert!(pl.suspicious);
    }

    #[test]
    fn path_loss_shift_invariance() {
        let a = path_loss(-10.0, -80.0, 17.0, 17.0).db;
        let b = path_loss(-10.0 + 7.5, -80.0 + 7.5, 17.0, 17.0).db;
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn single_mpc_has_zero_spread() {
        let s = delay_stats(&padp(&[(37.2, -70.0)])).unwrap();
        assert_eq!(s.tau_rms_ns, 0.0);
        assert_eq!(s.tau_avg_ns, 37.2);
    }

    #[test]
    fn symmetric_pair_stats() {
        let s = delay_stats(&padp(&[(0.0, -70.0), (10.0, -70.0)])).unwrap();
        assert!((s.tau_avg_ns - 5.0).abs() < 1e-12);
        assert!((s.tau_rms_ns - 5.0).abs() < 1e-12);
    }

    #[test]
    fn weighted_triple_stats() {
        // powers (1, 2, 1) mW at (0, 5, 10) ns.
        let p = padp(&[(0.0, 0.0), (5.0, 10.0 * 2f64.log10()), (10.0, 0.0)]);
        let s = delay_stats(&p).unwrap();
        assert!((s.tau_avg_ns - 5.0).abs() < 1e-12, "got {}", s.tau_avg_ns);
        assert!((s.tau_rms_ns - 3.5355339059327378).abs() < 1e-9, "got {}", s.tau_rms_ns);
    }

    #[test]
    fn stats_invariant_under_power_scaling() {
        let base = padp(&[(3.0, -70.0), (9.0, -76.0), (22.0, -81.0)]);
        let scaled = padp(&[(3.0, -60.0), (9.0, -66.0), (22.0, -71.0)]);
        let a = delay_stats(&base).unwrap();
        let b = delay_stats(&scaled).unwrap();
        assert!((a.tau_avg_ns - b.tau_avg_ns).abs() < 1e-12 * a.tau_avg_ns.abs().max(1.0));
        assert!((a.tau_rms_ns - b.tau_rms_ns).abs() < 1e-12 * a.tau_rms_ns.abs().max(1.0));
    }

    #[test]
    fn stats_shift_equivariance() {
        let base = padp(&[(3.0, -70.0), (9.0, -76.0), (22.0, -81.0)]);
        let shifted = padp(&[(103.0, -70.0), (109.0, -76.0), (122.0, -81.0)]);
        let a = delay_stats(&base).unwrap();
        let b = delay_stats(&shifted).unwrap();
        assert!((b.tau_avg_ns - a.tau_avg_ns - 100.0).abs() < 1e-9);
        assert!((b.tau_rms_ns - a.tau_rms_ns).abs() < 1e-9);
    }

    #[test]
    fn cdf_of_singleton() {
        assert_eq!(empirical_cdf(&[1.0]).unwrap(), vec![(1.0, 1.0)]);
    }

    #[test]
    fn cdf_sorts_and_steps() {
        let cdf = empirical_cdf(&[3.0, 1.0, 2.0]).unwrap();
        assert_eq!(cdf[0].0, 1.0);
        assert!((cdf[0].1 - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(cdf[1].0, 2.0);
        assert!((cdf[1].1 - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(cdf[2], (3.0, 1.0));
    }

    #[test]
    fn cdf_nondecreasing_ends_at_one() {
        let vals: Vec<f64> = (0..57).map(|i| ((i * 37) % 19) as f64).collect();
        let cdf = empirical_cdf(&vals).unwrap();
        for w in cdf.windows(2) {
            assert!(w[0].0 <= w[1].0);
            assert!(w[0].1 <= w[1].1);
        }
        assert_eq!(cdf.last().unwrap().1, 1.0);
    }

    #[test]
    fn cdf_of_empty_errors() {
        assert!(empirical_cdf(&[]).is_err());
    }

    #[test]
    fn cdf_of_uniform_draws_tracks_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xCDF);
        let draws: Vec<f64> = (0..1000).map(|_| rng.random_range(0.0..1.0)).collect();
        let cdf = empirical_cdf(&draws).unwrap();
        // Kolmogorov-Smirnov distance between steps and the identity.
        let mut ks = 0.0f64;
        for (i, &(v, p)) in cdf.iter().enumerate() {
            ks = ks.max((p - v).abs());
            ks = ks.max((v - i as f64 / 1000.0).abs());
        }
        assert!(ks < 0.06, "KS distance {ks}");
    }
}
