//! Parameter scans over the Werner, one-axis-twisted and W-class families.

use std::fs;

use lsurkit_core::lsur::{werner_lsur_scan, DEAD_BAND, PAULI_PAIR_BOUND};
use lsurkit_core::states::{ku_bloch_analytic, wclass_two_qubit};
use lsurkit_core::{bloch_from_two_qubit, lsur_verdict, BlochPair, LsurVerdict};
use rayon::prelude::*;

use crate::config::{Family, ScanConfig};
use crate::error::{CliError, CliResult};
use crate::format::fmt12;

pub const HEADER: [&str; 7] = ["family", "n", "param", "c_L", "lhs", "bound", "violated"];

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub family: Family,
    pub n: usize,
    pub param: f64,
    /// Absent for Werner rows, which use the two-qubit Pauli relation.
    pub c_l: Option<f64>,
    pub lhs: f64,
    pub bound: f64,
    pub violated: bool,
}

impl ScanRow {
    fn from_verdict(family: Family, param: f64, v: &LsurVerdict) -> Self {
        ScanRow {
            family,
            n: v.n,
            param,
            c_l: Some(v.c_l),
            lhs: v.lhs,
            bound: v.bound,
            violated: v.violated,
        }
    }

    pub fn record(&self) -> [String; 7] {
        [
            self.family.to_string(),
            self.n.to_string(),
            fmt12(self.param),
            self.c_l.map(fmt12).unwrap_or_default(),
            fmt12(self.lhs),
            fmt12(self.bound),
            self.violated.to_string(),
        ]
    }
}

fn family_pair(family: Family, n: usize, param: f64) -> CliResult<BlochPair> {
    let n_qubits = 2 * n;
    Ok(match family {
        Family::Ku => ku_bloch_analytic(n_qubits, param)?,
        Family::WClass => bloch_from_two_qubit(&wclass_two_qubit(n_qubits, param)?)?,
        Family::Werner => unreachable!("werner rows bypass the symmetric sector"),
    })
}

fn werner_row(x: f64) -> CliResult<ScanRow> {
    let (_, lhs) = werner_lsur_scan(&[x])?[0];
    Ok(ScanRow {
        family: Family::Werner,
        n: 1,
        param: x,
        c_l: None,
        lhs,
        bound: PAULI_PAIR_BOUND,
        violated: lhs < PAULI_PAIR_BOUND - DEAD_BAND,
    })
}

/// Rows in `(n, grid point)` order; evaluation runs in parallel.
pub fn run_scan(cfg: &ScanConfig) -> CliResult<Vec<ScanRow>> {
    log::debug!("scan {} seed {}", cfg.family, cfg.seed);
    let grid = cfg.grid.values();
    if cfg.family == Family::Werner {
        return grid.par_iter().map(|&x| werner_row(x)).collect();
    }
    let jobs: Vec<(usize, f64)> = cfg
        .n_list
        .iter()
        .flat_map(|&n| grid.iter().map(move |&p| (n, p)))
        .collect();
    jobs.par_iter()
        .map(|&(n, p)| {
            let bp = family_pair(cfg.family, n, p)?;
            let v = lsur_verdict(&bp, n)?;
            Ok(ScanRow::from_verdict(cfg.family, p, &v))
        })
        .collect()
}

pub fn render_csv(rows: &[ScanRow]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.into_inner()
        .map_err(|e| CliError::Config(format!("csv buffer: {e}")))
}

/// Runs the scan and writes the CSV to `cfg.out`.
pub fn cmd_scan(cfg: &ScanConfig) -> CliResult<Vec<ScanRow>> {
    let rows = run_scan(cfg)?;
    let bytes = render_csv(&rows)?;
    fs::write(&cfg.out, bytes).map_err(|e| CliError::io(&cfg.out, e))?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Grid;
    use std::path::PathBuf;

    fn cfg(family: Family, n_list: Vec<usize>, grid: Grid) -> ScanConfig {
        ScanConfig {
            family,
            n_list,
            grid,
            out: PathBuf::from("unused.csv"),
            seed: 0,
        }
    }

    #[test]
    fn werner_examples() {
        let rows = run_scan(&cfg(Family::Werner, vec![2], Grid::new(0.0, 1.0, 4))).unwrap();
        let lhs: Vec<f64> = rows.iter().map(|r| r.lhs).collect();
        assert!((lhs[0] - 6.0).abs() <= 1e-12);
        assert!((lhs[1] - 4.0).abs() <= 1e-12);
        assert!(lhs[3].abs() <= 1e-12);
        assert!(!rows[1].violated);
        assert!(rows[2].violated);
        assert_eq!(rows[0].record()[3], "");
    }

    #[test]
    fn ku_start_is_a_product_state() {
        let rows = run_scan(&cfg(Family::Ku, vec![2], Grid::new(0.0, 1.0, 2))).unwrap();
        assert!(rows[0].c_l.unwrap().abs() <= 1e-12);
        assert!((rows[0].lhs - 2.0).abs() <= 1e-12);
        assert!(!rows[0].violated);
        assert_eq!(rows[0].record()[3], "0");
    }

    #[test]
    fn wclass_at_a_zero() {
        let rows = run_scan(&cfg(Family::WClass, vec![2], Grid::new(0.0, 0.5, 2))).unwrap();
        assert!((rows[0].c_l.unwrap() + 0.25).abs() <= 1e-12);
        assert!((rows[0].lhs - 1.0).abs() <= 1e-12);
        assert!(rows[0].violated);
    }

    #[test]
    fn rows_follow_n_then_grid_order() {
        let rows = run_scan(&cfg(Family::Ku, vec![3, 1], Grid::new(0.0, 1.0, 5))).unwrap();
        let keys: Vec<(usize, f64)> = rows.iter().map(|r| (r.n, r.param)).collect();
        let expected: Vec<(usize, f64)> = [3, 1]
            .iter()
            .flat_map(|&n| {
                Grid::new(0.0, 1.0, 5)
                    .values()
                    .into_iter()
                    .map(move |p| (n, p))
            })
            .collect();
        assert_eq!(keys, expected);
        for r in &rows {
            let n = r.n as f64;
            assert!((r.lhs - n * (1.0 + n * r.c_l.unwrap())).abs() <= 1e-9);
        }
    }

    #[test]
    fn csv_header_and_shape() {
        let rows = run_scan(&cfg(Family::WClass, vec![1, 2], Grid::new(0.1, 0.9, 3))).unwrap();
        let text = String::from_utf8(render_csv(&rows).unwrap()).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("family,n,param,c_L,lhs,bound,violated"));
        assert_eq!(lines.count(), 6);
    }
}
