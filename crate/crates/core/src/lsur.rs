//! Local sum uncertainty relation (LSUR) for the two halves of an even
//! symmetric N-qubit state.
//!
//! With `n = N/2` qubits on each side, separable states obey
//! `Σ_α [Δ(J_Aα + J'_Bα)]² >= n`, where `J'_B` is `J_B` rotated by an
//! identical local SU(2) element `(â, θ)`. In terms of the two-qubit
//! marginal the left-hand side is `n + n² χ(â, θ)` with
//! `χ = ½ (1 - s₀² + Tr[R C])`, and the choice `â = a_L`, `θ = π` gives
//! `χ = c_L`, the least eigenvalue of `C`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numlin::{eig_hermitian, kron, partial_transpose, ComplexMatrix, Mat3, Vec3, I};
use crate::oracle;
use crate::spin::{operator_variance_sum, pauli};
use crate::states::{werner, SymmetricState, DENSITY_TOL};
use crate::tomo::{covariance, BlochPair};

/// Width of the band around a threshold reported as "boundary".
pub const DEAD_BAND: f64 = 1e-10;
/// Largest allowed drift between the closed form and the `(a_L, π)` route.
pub const SELF_CHECK_TOL: f64 = 1e-10;
/// Two-qubit Pauli-form LSUR bound `Σ [Δ(σ_α⊗I + I⊗σ_α)]² >= 4`.
pub const PAULI_PAIR_BOUND: f64 = 4.0;

const AXIS_NORM_TOL: f64 = 1e-12;

/// Rotation axis `â` (unit vector) and angle `θ ∈ [0, 2π]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AxisAngle {
    axis: Vec3,
    theta: f64,
}

impl AxisAngle {
    pub fn new(axis: Vec3, theta: f64) -> Result<Self> {
        let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > AXIS_NORM_TOL {
            return Err(Error::Contract(format!("rotation axis has norm {norm}")));
        }
        if !(0.0..=2.0 * PI).contains(&theta) {
            return Err(Error::Domain(format!(
                "rotation angle {theta} outside [0, 2π]"
            )));
        }
        Ok(AxisAngle { axis, theta })
    }

    /// Rescales `axis` to unit length first.
    pub fn normalized(axis: Vec3, theta: f64) -> Result<Self> {
        let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Contract("rotation axis is zero".into()));
        }
        Self::new(axis.map(|x| x / norm), theta)
    }

    pub fn identity() -> Self {
        AxisAngle {
            axis: [0.0, 0.0, 1.0],
            theta: 0.0,
        }
    }

    pub fn axis(&self) -> Vec3 {
        self.axis
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

fn levi_civita(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// `R_αβ = cos θ δ_αβ + (1 - cos θ) a_α a_β - sin θ ε_αβγ a_γ`.
///
/// This is the adjoint image of `U = exp(-i θ σ·â / 2)`:
/// `U† σ_α U = Σ_β R_αβ σ_β`.
pub fn rotation_matrix(aa: &AxisAngle) -> Mat3 {
    let (sin, cos) = aa.theta.sin_cos();
    let a = aa.axis;
    let mut r = [[0.0; 3]; 3];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let delta = if i == j { 1.0 } else { 0.0 };
            let eps: f64 = (0..3).map(|k| levi_civita(i, j, k) * a[k]).sum();
            *cell = cos * delta + (1.0 - cos) * a[i] * a[j] - sin * eps;
        }
    }
    r
}

/// `exp(-i θ σ·â / 2)`.
pub fn su2_unitary(aa: &AxisAngle) -> ComplexMatrix {
    let half = aa.theta / 2.0;
    let mut generator = ComplexMatrix::zeros(2, 2);
    for (k, &ak) in aa.axis.iter().enumerate() {
        generator = &generator + &pauli(k).scale_real(ak);
    }
    &ComplexMatrix::identity(2).scale_real(half.cos()) + &generator.scale(-I * half.sin())
}

/// `Tr[R C]` for symmetric `C` given as a full matrix.
fn trace_product(r: &Mat3, c: &Mat3) -> f64 {
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| r[i][j] * c[j][i])
        .sum()
}

/// `χ(â, θ) = ½ (1 - s₀² + Tr[R(â, θ) C])`; negative means the LSUR is violated.
pub fn chi_functional(bp: &BlochPair, aa: &AxisAngle) -> f64 {
    let cov = covariance(bp);
    let r = rotation_matrix(aa);
    0.5 * (1.0 - bp.s0_sq() + trace_product(&r, &cov.c.to_matrix()))
}

/// `χ(â, θ)` evaluated from the variance sum on the full `2^N` tensor space.
pub fn chi_brute(psi: &SymmetricState, aa: &AxisAngle) -> Result<f64> {
    let n_qubits = psi.n_qubits();
    if !n_qubits.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "the bipartite LSUR needs even N = 2n, got N = {n_qubits}"
        )));
    }
    let tensor = oracle::embed_dicke(psi)?;
    let lhs = oracle::lsur_lhs_brute(&tensor, aa)?;
    let n = (n_qubits / 2) as f64;
    Ok((lhs - n) / (n * n))
}

/// Outcome of the LSUR test on one symmetric state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LsurVerdict {
    /// Qubits per half, `n = N/2`; also the separable bound.
    pub n: usize,
    pub c_l: f64,
    /// `χ(a_L, π)`.
    pub chi_value: f64,
    /// `n (1 + n c_L)`.
    pub lhs: f64,
    pub bound: f64,
    pub violated: bool,
    /// `lhs` lies within the dead band around `bound`.
    pub boundary: bool,
    /// The reconstructed two-qubit marginal has a negative partial transpose.
    pub ppt_negative: bool,
    pub ppt_min_eigenvalue: f64,
}

/// Least eigenvalue of the partial transpose of a two-qubit operator.
pub fn ppt_min_eigenvalue(rho: &ComplexMatrix) -> Result<f64> {
    let pt = partial_transpose(rho, [2, 2], 1)?;
    Ok(eig_hermitian(&pt)?.values[0])
}

pub fn lsur_verdict(bp: &BlochPair, n: usize) -> Result<LsurVerdict> {
    if n == 0 {
        return Err(Error::Domain("n = N/2 must be at least 1".into()));
    }
    let rho = bp.to_density_matrix();
    let least = eig_hermitian(&rho)?.values[0];
    if least < -DENSITY_TOL {
        return Err(Error::Contract(format!(
            "pair parameters do not describe a physical marginal (eigenvalue {least:.3e})"
        )));
    }
    let cov = covariance(bp);
    let nf = n as f64;
    let lhs = nf * (1.0 + nf * cov.c_l);

    let optimal = AxisAngle::normalized(cov.a_l, PI)?;
    let chi_value = chi_functional(bp, &optimal);
    let rotated_lhs = nf + nf * nf * chi_value;
    if (rotated_lhs - lhs).abs() > SELF_CHECK_TOL {
        return Err(Error::Contract(format!(
            "closed form {lhs} and rotated-axis route {rotated_lhs} disagree"
        )));
    }

    let ppt_min = ppt_min_eigenvalue(&rho)?;
    Ok(LsurVerdict {
        n,
        c_l: cov.c_l,
        chi_value,
        lhs,
        bound: nf,
        violated: lhs < nf - DEAD_BAND,
        boundary: (lhs - nf).abs() <= DEAD_BAND,
        ppt_negative: ppt_min < -DEAD_BAND,
        ppt_min_eigenvalue: ppt_min,
    })
}

/// `Σ_α [Δ(σ_α⊗I + I⊗σ_α)]²` on the Werner state for each `x`.
pub fn werner_lsur_scan(x_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    let i2 = ComplexMatrix::identity(2);
    let ops: Vec<ComplexMatrix> = (0..3)
        .map(|a| Ok(&kron(&pauli(a), &i2)? + &kron(&i2, &pauli(a))?))
        .collect::<Result<_>>()?;
    x_grid
        .iter()
        .map(|&x| {
            let state = werner(x)?;
            Ok((x, operator_variance_sum(&ops, state.rho())?))
        })
        .collect()
}
