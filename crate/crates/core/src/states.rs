//! State families: singlet, Werner, W-class and one-axis-twisted states.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numlin::{eig_hermitian, expm_hermitian, ComplexMatrix, RealSym3, C64, ONE, ZERO};
use crate::spin::{make_spin_ops, SpinValue};
use crate::tomo::BlochPair;

/// Norm tolerance of a stored [`SymmetricState`].
pub const STATE_NORM_TOL: f64 = 1e-12;
/// Tolerance for density-matrix validity (trace and positivity).
pub const DENSITY_TOL: f64 = 1e-10;

/// Pure permutation-symmetric state of `N` qubits in the Dicke basis.
///
/// Amplitude `k` multiplies the Dicke level with `k` excitations, i.e.
/// `|j = N/2, m = j - k>`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricState {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl SymmetricState {
    pub fn new(n_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        Self::check_shape(n_qubits, &amplitudes)?;
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::Contract(format!("amplitude norm {norm} is not 1")));
        }
        Ok(SymmetricState {
            n_qubits,
            amplitudes,
        })
    }

    /// Rescales the amplitudes to unit norm.
    pub fn normalized(n_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        Self::check_shape(n_qubits, &amplitudes)?;
        let norm = norm(&amplitudes);
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Contract(format!(
                "cannot normalize amplitudes of norm {norm}"
            )));
        }
        Ok(SymmetricState {
            n_qubits,
            amplitudes: amplitudes.iter().map(|z| z / norm).collect(),
        })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(n_qubits: usize, amplitudes: Vec<C64>) -> Self {
        SymmetricState {
            n_qubits,
            amplitudes,
        }
    }

    /// The Dicke level with `excitations` qubits in `|1>`.
    pub fn dicke(n_qubits: usize, excitations: usize) -> Result<Self> {
        if excitations > n_qubits {
            return Err(Error::Domain(format!(
                "{excitations} excitations among {n_qubits} qubits"
            )));
        }
        let mut amps = vec![ZERO; n_qubits + 1];
        amps[excitations] = ONE;
        Self::new(n_qubits, amps)
    }

    fn check_shape(n_qubits: usize, amplitudes: &[C64]) -> Result<()> {
        if n_qubits == 0 {
            return Err(Error::Domain(
                "a symmetric state needs at least one qubit".into(),
            ));
        }
        if amplitudes.len() != n_qubits + 1 {
            return Err(Error::Shape(format!(
                "{} Dicke amplitudes for {n_qubits} qubits (expected {})",
                amplitudes.len(),
                n_qubits + 1
            )));
        }
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn spin(&self) -> SpinValue {
        SpinValue::from_qubits(self.n_qubits)
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// On-disk form: `{ "n_qubits": 4, "dicke_amplitudes": [[re, im], ...] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetricStateFile {
    pub n_qubits: usize,
    pub dicke_amplitudes: Vec<[f64; 2]>,
}

impl SymmetricStateFile {
    pub fn amplitudes(&self) -> Vec<C64> {
        self.dicke_amplitudes
            .iter()
            .map(|&[re, im]| C64::new(re, im))
            .collect()
    }
}

impl From<&SymmetricState> for SymmetricStateFile {
    fn from(psi: &SymmetricState) -> Self {
        SymmetricStateFile {
            n_qubits: psi.n_qubits,
            dicke_amplitudes: psi.amplitudes.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

/// Validated two-qubit density matrix in the basis |00>, |01>, |10>, |11>.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoQubitState {
    rho: ComplexMatrix,
}

impl TwoQubitState {
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        if rho.rows() != 4 || rho.cols() != 4 {
            return Err(Error::Shape(format!(
                "two-qubit state must be 4x4, got {}x{}",
                rho.rows(),
                rho.cols()
            )));
        }
        check_density_matrix(&rho)?;
        Ok(TwoQubitState { rho })
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn into_inner(self) -> ComplexMatrix {
        self.rho
    }

    /// `max |Π ρ Π - ρ|` for the qubit swap `Π`.
    pub fn swap_defect(&self) -> f64 {
        let swapped = ComplexMatrix::from_fn(4, 4, |i, j| self.rho[(SWAP[i], SWAP[j])]);
        swapped.max_abs_diff(&self.rho)
    }
}

/// Index permutation of the two-qubit swap.
const SWAP: [usize; 4] = [0, 2, 1, 3];

/// Checks Hermiticity, unit trace and positivity.
pub fn check_density_matrix(rho: &ComplexMatrix) -> Result<()> {
    let es = eig_hermitian(rho)?;
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
        return Err(Error::Contract(format!("trace {tr} is not 1")));
    }
    if es.values[0] < -DENSITY_TOL {
        return Err(Error::Contract(format!(
            "negative eigenvalue {:.3e}",
            es.values[0]
        )));
    }
    Ok(())
}

/// Spin singlet of two spin-j particles as a vector in `(2j+1)²` dimensions.
pub fn singlet(spin: SpinValue) -> Vec<C64> {
    let d = spin.dim();
    let amp = 1.0 / (d as f64).sqrt();
    let mut psi = vec![ZERO; d * d];
    // |j,m>_A |j,-m>_B sits at (k, d-1-k) with k = j - m; (-1)^(j-m) = (-1)^k.
    for k in 0..d {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        psi[k * d + (d - 1 - k)] = C64::new(sign * amp, 0.0);
    }
    psi
}

/// `(1-x)/4 · I + x |Ψ⁻><Ψ⁻|`.
pub fn werner(x: f64) -> Result<TwoQubitState> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "Werner parameter {x} outside [0, 1]"
        )));
    }
    let mixed = ComplexMatrix::identity(4).scale_real((1.0 - x) / 4.0);
    let singlet = ComplexMatrix::projector(&singlet(SpinValue::from_two_j(1))).scale_real(x);
    TwoQubitState::new(&mixed + &singlet)
}

fn check_wclass(n_qubits: usize, a: f64) -> Result<()> {
    if n_qubits < 2 {
        return Err(Error::Domain(format!(
            "W-class state needs N >= 2, got {n_qubits}"
        )));
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!(
            "W-class parameter a = {a} outside [0, 1]"
        )));
    }
    if a == 0.0 || a == 1.0 {
        log::warn!("W-class parameter a = {a} is an endpoint of the open family (0, 1)");
    }
    Ok(())
}

/// `a |0...0> + sqrt(1 - a²) |W>`.
pub fn wclass_state(n_qubits: usize, a: f64) -> Result<SymmetricState> {
    check_wclass(n_qubits, a)?;
    let mut amps = vec![ZERO; n_qubits + 1];
    amps[0] = C64::new(a, 0.0);
    amps[1] = C64::new((1.0 - a * a).sqrt(), 0.0);
    SymmetricState::normalized(n_qubits, amps)
}

/// Entries of the W-class two-qubit marginal
///
/// ```text
///            | A B B 0 |
///  1/(A+2D)  | B D D 0 |
///            | B D D 0 |
///            | 0 0 0 0 |
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WClassCoeffs {
    pub a: f64,
    pub b: f64,
    pub d: f64,
}

impl WClassCoeffs {
    pub fn new(n_qubits: usize, a: f64) -> Result<Self> {
        check_wclass(n_qubits, a)?;
        let n = n_qubits as f64;
        let excited = 1.0 - a * a;
        Ok(WClassCoeffs {
            a: a * a + (n - 2.0) * excited / n,
            b: a * excited.sqrt() / n.sqrt(),
            d: excited / n,
        })
    }

    pub fn normalizer(&self) -> f64 {
        self.a + 2.0 * self.d
    }
}

pub fn wclass_two_qubit(n_qubits: usize, a: f64) -> Result<TwoQubitState> {
    let c = WClassCoeffs::new(n_qubits, a)?;
    let z = c.normalizer();
    let (ca, cb, cd) = (c.a / z, c.b / z, c.d / z);
    let rho = ComplexMatrix::from_real(
        4,
        4,
        &[
            ca, cb, cb, 0.0, //
            cb, cd, cd, 0.0, //
            cb, cd, cd, 0.0, //
            0.0, 0.0, 0.0, 0.0,
        ],
    )?;
    TwoQubitState::new(rho)
}

/// Closed-form covariance matrix `C = T - s sᵀ` of the W-class marginal.
pub fn wclass_covariance(n_qubits: usize, a: f64) -> Result<RealSym3> {
    let c = WClassCoeffs::new(n_qubits, a)?;
    let z = c.normalizer();
    let (ca, cb, cd) = (c.a, c.b, c.d);
    Ok(RealSym3::from_fn(|i, j| {
        let v = match (i, j) {
            (0, 0) => 2.0 * cd - 4.0 * cb * cb,
            (0, 2) => 2.0 * cb * (1.0 - ca),
            (1, 1) => 2.0 * cd,
            (2, 2) => ca - 2.0 * cd - ca * ca,
            _ => 0.0,
        };
        v / z
    }))
}

fn check_ku(n_qubits: usize) -> Result<()> {
    if n_qubits < 2 || !n_qubits.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "one-axis twisting is defined here for even N >= 2, got N = {n_qubits}"
        )));
    }
    Ok(())
}

/// `exp(-i chi_t J1²) |j, -j>` with `j = N/2`.
pub fn ku_state(n_qubits: usize, chi_t: f64) -> Result<SymmetricState> {
    check_ku(n_qubits)?;
    let ops = make_spin_ops(SpinValue::from_qubits(n_qubits));
    let j1 = &ops.components[0];
    let u = expm_hermitian(&(j1 * j1), chi_t)?;
    let last = n_qubits;
    let amps: Vec<C64> = (0..=n_qubits).map(|k| u[(k, last)]).collect();
    SymmetricState::normalized(n_qubits, amps)
}

/// Closed-form pair parameters of the one-axis-twisted state.
pub fn ku_bloch_analytic(n_qubits: usize, chi_t: f64) -> Result<BlochPair> {
    check_ku(n_qubits)?;
    let n = n_qubits as i32;
    let (sin, cos) = chi_t.sin_cos();
    let s3 = -cos.powi(n - 1);
    let t12 = cos.powi(n - 2) * sin;
    let t22 = 0.5 * (1.0 - (2.0 * chi_t).cos().powi(n - 2));
    let t = RealSym3::from_fn(|i, j| match (i, j) {
        (0, 1) => t12,
        (1, 1) => t22,
        (2, 2) => 1.0 - t22,
        _ => 0.0,
    });
    BlochPair::new([0.0, 0.0, s3], t)
}
