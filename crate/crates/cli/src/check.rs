//! Single-state LSUR verdicts from JSON input.

use std::fmt::Write as _;
use std::path::Path;

use lsurkit_core::error::Error as CoreError;
use lsurkit_core::numlin::{RealSym3, Vec3};
use lsurkit_core::{
    bloch_from_symmetric, covariance, lsur_verdict, LsurVerdict, SymmetricState, SymmetricStateFile,
};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::format::fmt12;

/// Norm slack accepted before renormalizing hand-written amplitudes.
pub const INPUT_NORM_SLACK: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub n_qubits: usize,
    pub s: Vec3,
    pub t: [[f64; 3]; 3],
    pub c: [[f64; 3]; 3],
    pub c_l: f64,
    pub lhs: f64,
    pub bound: f64,
    pub violated: bool,
    pub ppt_negative: bool,
    pub ppt_min_eigenvalue: f64,
}

impl CheckReport {
    fn new(n_qubits: usize, s: Vec3, t: &RealSym3, c: &RealSym3, v: &LsurVerdict) -> Self {
        CheckReport {
            n_qubits,
            s,
            t: t.to_matrix(),
            c: c.to_matrix(),
            c_l: v.c_l,
            lhs: v.lhs,
            bound: v.bound,
            violated: v.violated,
            ppt_negative: v.ppt_negative,
            ppt_min_eigenvalue: v.ppt_min_eigenvalue,
        }
    }

    pub fn to_text(&self) -> String {
        let vec = |v: &[f64; 3]| v.map(fmt12).join(" ");
        let mut out = String::new();
        writeln!(out, "n_qubits: {}", self.n_qubits).unwrap();
        writeln!(out, "s: {}", vec(&self.s)).unwrap();
        for (name, m) in [("T", &self.t), ("C", &self.c)] {
            writeln!(out, "{name}:").unwrap();
            for row in m {
                writeln!(out, "  {}", vec(row)).unwrap();
            }
        }
        writeln!(out, "c_L: {}", fmt12(self.c_l)).unwrap();
        writeln!(out, "lhs: {}", fmt12(self.lhs)).unwrap();
        writeln!(out, "bound: {}", fmt12(self.bound)).unwrap();
        writeln!(out, "violated: {}", self.violated).unwrap();
        writeln!(out, "ppt_negative: {}", self.ppt_negative).unwrap();
        out
    }
}

pub fn parse_state(path: &Path, text: &str) -> CliResult<SymmetricState> {
    let file: SymmetricStateFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let amps = file.amplitudes();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > INPUT_NORM_SLACK {
        return Err(CoreError::Contract(format!("amplitude norm {norm} is not 1")).into());
    }
    Ok(SymmetricState::normalized(file.n_qubits, amps)?)
}

pub fn check_state(psi: &SymmetricState) -> CliResult<CheckReport> {
    let n_qubits = psi.n_qubits();
    if !n_qubits.is_multiple_of(2) {
        return Err(CoreError::Domain(format!(
            "the LSUR verdict needs an even number of qubits N = 2n, got N = {n_qubits}"
        ))
        .into());
    }
    let bp = bloch_from_symmetric(psi)?;
    let cov = covariance(&bp);
    let v = lsur_verdict(&bp, n_qubits / 2)?;
    Ok(CheckReport::new(n_qubits, bp.s, &bp.t, &cov.c, &v))
}

pub fn cmd_check(path: &Path) -> CliResult<CheckReport> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    check_state(&parse_state(path, &text)?)
}
