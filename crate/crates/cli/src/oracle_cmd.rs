//! Analytic versus brute-force comparison on random symmetric states.

use std::f64::consts::PI;

use lsurkit_core::lsur::{chi_brute, chi_functional};
use lsurkit_core::oracle::{Oracle, DEFAULT_MAX_QUBITS};
use lsurkit_core::{bloch_from_symmetric, covariance, sample, AxisAngle, Error as CoreError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliResult;

/// Largest accepted deviation between the two routes.
pub const ORACLE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n_qubits: usize,
    pub trials: usize,
    pub seed: u64,
    /// Worst `|χ_functional - χ_brute|` over random axis-angles.
    pub max_chi_deviation: f64,
    /// Worst `|lhs_brute(a_L, π) - n(1 + n c_L)|`.
    pub max_lhs_deviation: f64,
    pub passed: bool,
}

impl OracleReport {
    pub fn max_deviation(&self) -> f64 {
        self.max_chi_deviation.max(self.max_lhs_deviation)
    }

    pub fn to_text(&self) -> String {
        format!(
            "oracle N={} trials={} seed={}\nmax chi deviation: {:.3e}\nmax lhs deviation: {:.3e}\n{}\n",
            self.n_qubits,
            self.trials,
            self.seed,
            self.max_chi_deviation,
            self.max_lhs_deviation,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

pub fn cmd_oracle(n_qubits: usize, trials: usize, seed: u64) -> CliResult<OracleReport> {
    let oracle = Oracle::default();
    if n_qubits > DEFAULT_MAX_QUBITS {
        return Err(CoreError::Resource(format!(
            "N = {n_qubits} exceeds the oracle cap of {DEFAULT_MAX_QUBITS} qubits"
        ))
        .into());
    }
    if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
        return Err(
            CoreError::Domain(format!("the oracle needs even N = 2n, got N = {n_qubits}")).into(),
        );
    }
    let n = (n_qubits / 2) as f64;
    // Sampling stays sequential so the draws depend only on the seed.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<_> = (0..trials)
        .map(|_| {
            let psi = sample::random_symmetric_state(n_qubits, &mut rng);
            (psi, sample::random_axis_angle(&mut rng))
        })
        .collect();
    let deviations: Vec<(f64, f64)> = samples
        .par_iter()
        .map(|(psi, aa)| -> CliResult<(f64, f64)> {
            let bp = bloch_from_symmetric(psi)?;
            let chi_dev = (chi_functional(&bp, aa) - chi_brute(psi, aa)?).abs();
            let cov = covariance(&bp);
            let best = AxisAngle::normalized(cov.a_l, PI)?;
            let tensor = oracle.embed_dicke(psi)?;
            let brute = oracle.lsur_lhs_brute(&tensor, &best)?;
            let lhs_dev = (brute - n * (1.0 + n * cov.c_l)).abs();
            Ok((chi_dev, lhs_dev))
        })
        .collect::<CliResult<_>>()?;
    let max_chi = deviations.iter().map(|d| d.0).fold(0.0, f64::max);
    let max_lhs = deviations.iter().map(|d| d.1).fold(0.0, f64::max);
    Ok(OracleReport {
        n_qubits,
        trials,
        seed,
        max_chi_deviation: max_chi,
        max_lhs_deviation: max_lhs,
        passed: max_chi <= ORACLE_TOL && max_lhs <= ORACLE_TOL,
    })
}
