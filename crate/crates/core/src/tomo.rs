//! Pair parameters `(s, T)` of a symmetric two-qubit marginal and the
//! covariance matrix `C = T - s sᵀ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numlin::{dot3, kron, ComplexMatrix, Mat3, RealSym3, Vec3};
use crate::spin::{collective_moments, pauli};
use crate::states::{SymmetricState, TwoQubitState};

/// Tolerance on `Tr T = 1`, `|s|² <= 1` and `t_ab = t_ba`.
pub const BLOCH_TOL: f64 = 1e-10;
/// Largest `|Π ρ Π - ρ|` accepted as swap symmetric.
pub const SWAP_TOL: f64 = 1e-10;

/// Orientation vector `s_α = ⟨σ_α ⊗ I⟩` and correlation matrix
/// `t_αβ = ⟨σ_α ⊗ σ_β⟩` of a symmetric two-qubit state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BlochPair {
    pub s: Vec3,
    pub t: RealSym3,
}

impl BlochPair {
    pub fn new(s: Vec3, t: RealSym3) -> Result<Self> {
        let tr = t.trace();
        if (tr - 1.0).abs() > BLOCH_TOL {
            return Err(Error::Contract(format!(
                "Tr T = {tr}; the state is not supported on the symmetric subspace"
            )));
        }
        let s0_sq = dot3(&s, &s);
        if s0_sq > 1.0 + BLOCH_TOL {
            return Err(Error::Contract(format!("|s|² = {s0_sq} exceeds 1")));
        }
        Ok(BlochPair { s, t })
    }

    /// `s₀² = sᵀ s`.
    pub fn s0_sq(&self) -> f64 {
        dot3(&self.s, &self.s)
    }

    /// Rebuilds `ρ = ¼ (I + Σ s_α (σ_α⊗I + I⊗σ_α) + Σ t_αβ σ_α⊗σ_β)`.
    pub fn to_density_matrix(&self) -> ComplexMatrix {
        let i2 = ComplexMatrix::identity(2);
        let mut rho = ComplexMatrix::identity(4);
        for a in 0..3 {
            let local = &kron(&pauli(a), &i2).expect("4x4") + &kron(&i2, &pauli(a)).expect("4x4");
            rho = &rho + &local.scale_real(self.s[a]);
            for b in 0..3 {
                let corr = kron(&pauli(a), &pauli(b)).expect("4x4");
                rho = &rho + &corr.scale_real(self.t.get(a, b));
            }
        }
        rho.scale_real(0.25)
    }
}

/// `C = T - s sᵀ` with its spectrum; `c_l` is the least eigenvalue and `a_l`
/// a unit eigenvector for it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CovarianceReport {
    pub c: RealSym3,
    pub eigenvalues: [f64; 3],
    pub c_l: f64,
    pub a_l: Vec3,
}

pub fn bloch_from_two_qubit(state: &TwoQubitState) -> Result<BlochPair> {
    let defect = state.swap_defect();
    if defect > SWAP_TOL {
        return Err(Error::Contract(format!(
            "two-qubit state is not swap symmetric (defect {defect:.3e})"
        )));
    }
    let rho = state.rho();
    let i2 = ComplexMatrix::identity(2);
    let expect = |op: &ComplexMatrix| -> f64 { (rho * op).trace().re };
    let s = [0, 1, 2].map(|a| expect(&kron(&pauli(a), &i2).expect("4x4")));
    let mut t: Mat3 = [[0.0; 3]; 3];
    for (a, row) in t.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            *cell = expect(&kron(&pauli(a), &pauli(b)).expect("4x4"));
        }
    }
    BlochPair::new(s, RealSym3::from_matrix(&t, BLOCH_TOL)?)
}

/// Pair parameters from the collective moments of an N-qubit symmetric state:
/// `s = 2⟨J⟩/N` and `t_αβ = (4 m2_αβ - N δ_αβ) / (N(N-1))`.
pub fn bloch_from_symmetric(psi: &SymmetricState) -> Result<BlochPair> {
    let n = psi.n_qubits();
    if n < 2 {
        return Err(Error::Domain(format!(
            "a two-qubit marginal needs N >= 2, got N = {n}"
        )));
    }
    let nf = n as f64;
    let (m1, m2) = collective_moments(psi)?;
    let s = m1.map(|m| 2.0 * m / nf);
    let t = RealSym3::from_fn(|a, b| {
        let delta = if a == b { nf } else { 0.0 };
        (4.0 * m2.get(a, b) - delta) / (nf * (nf - 1.0))
    });
    BlochPair::new(s, t)
}

pub fn covariance(bp: &BlochPair) -> CovarianceReport {
    let c = bp.t.sub(&RealSym3::outer(&bp.s));
    let (eigenvalues, vectors) = c.eigen();
    CovarianceReport {
        c,
        eigenvalues,
        c_l: eigenvalues[0],
        a_l: vectors[0],
    }
}

/// Two-qubit marginal as a validated state, via [`BlochPair::to_density_matrix`].
pub fn two_qubit_from_bloch(bp: &BlochPair) -> Result<TwoQubitState> {
    TwoQubitState::new(bp.to_density_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::{mat3_mul, mat3_transpose, mat3_vec, C64, ONE, ZERO};
    use crate::sample;
    use crate::states::{ku_bloch_analytic, ku_state, wclass_covariance, wclass_two_qubit};
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_maximally_mixed() {
        let mixed = TwoQubitState::new(ComplexMatrix::identity(4).scale_real(0.25)).unwrap();
        assert!(matches!(
            bloch_from_two_qubit(&mixed),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn rejects_non_swap_symmetric() {
        // |01><01| is not swap symmetric.
        let rho = ComplexMatrix::from_real_diag(&[0.0, 1.0, 0.0, 0.0]);
        let state = TwoQubitState::new(rho).unwrap();
        assert!(matches!(
            bloch_from_two_qubit(&state),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn product_pure_state() {
        let rho = ComplexMatrix::from_real_diag(&[1.0, 0.0, 0.0, 0.0]);
        let bp = bloch_from_two_qubit(&TwoQubitState::new(rho).unwrap()).unwrap();
        assert_eq!(bp.s, [0.0, 0.0, 1.0]);
        assert!(bp.t.max_abs_diff(&RealSym3::diag([0.0, 0.0, 1.0])) <= 1e-15);
        let cov = covariance(&bp);
        assert!(cov.c.max_abs_diff(&RealSym3::ZERO) <= 1e-15);
        assert_abs_diff_eq!(cov.c_l, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn triplet_mixture_against_hand_expansion() {
        // ρ = p|00><00| + q|Ψ+><Ψ+| + r|11><11|: s = (0,0,p-r),
        // T = diag(q, q, p + r - q) worked out from the Pauli action on each ket.
        let (p, q, r) = (0.5, 0.3, 0.2);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let psi_plus = [ZERO, C64::new(h, 0.0), C64::new(h, 0.0), ZERO];
        let rho = &ComplexMatrix::from_real_diag(&[p, 0.0, 0.0, r])
            + &ComplexMatrix::projector(&psi_plus).scale_real(q);
        let bp = bloch_from_two_qubit(&TwoQubitState::new(rho).unwrap()).unwrap();
        assert_abs_diff_eq!(bp.s[2], p - r, epsilon = 1e-15);
        assert_abs_diff_eq!(bp.s[0], 0.0, epsilon = 1e-15);
        let expected = RealSym3::diag([q, q, p + r - q]);
        assert!(bp.t.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn wclass_marginal_reproduces_closed_form_covariance() {
        let rho = wclass_two_qubit(4, 0.5).unwrap();
        let cov = covariance(&bloch_from_two_qubit(&rho).unwrap());
        let closed = wclass_covariance(4, 0.5).unwrap();
        assert!(cov.c.max_abs_diff(&closed) <= 1e-12);
    }

    #[test]
    fn from_symmetric_product_state() {
        for n in 2..9 {
            let mut amps = vec![ZERO; n + 1];
            amps[0] = ONE;
            let bp = bloch_from_symmetric(&SymmetricState::new(n, amps).unwrap()).unwrap();
            assert!(bp
                .s
                .iter()
                .zip([0.0, 0.0, 1.0])
                .all(|(a, b)| (a - b).abs() <= 1e-14));
            assert!(bp.t.max_abs_diff(&RealSym3::diag([0.0, 0.0, 1.0])) <= 1e-14);
        }
        let one = SymmetricState::new(1, vec![ONE, ZERO]).unwrap();
        assert!(matches!(bloch_from_symmetric(&one), Err(Error::Domain(_))));
    }

    #[test]
    fn from_symmetric_matches_ku_analytic() {
        let bp = bloch_from_symmetric(&ku_state(6, 0.3).unwrap()).unwrap();
        let analytic = ku_bloch_analytic(6, 0.3).unwrap();
        for a in 0..3 {
            assert_abs_diff_eq!(bp.s[a], analytic.s[a], epsilon = 1e-9);
        }
        assert!(bp.t.max_abs_diff(&analytic.t) <= 1e-9);
    }

    #[test]
    fn covariance_trace_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..1000 {
            let rho = sample::random_symmetric_two_qubit(&mut rng);
            let bp = bloch_from_two_qubit(&rho).unwrap();
            let cov = covariance(&bp);
            assert_abs_diff_eq!(cov.c.trace(), 1.0 - bp.s0_sq(), epsilon = 1e-10);
            let ca = cov.c.apply(&cov.a_l);
            for i in 0..3 {
                assert_abs_diff_eq!(ca[i], cov.c_l * cov.a_l[i], epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn density_matrix_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(78);
        for _ in 0..50 {
            let rho = sample::random_symmetric_two_qubit(&mut rng);
            let bp = bloch_from_two_qubit(&rho).unwrap();
            assert!(bp.to_density_matrix().max_abs_diff(rho.rho()) <= 1e-14);
        }
    }

    #[test]
    fn identical_local_unitaries_rotate_s_and_t() {
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        for _ in 0..100 {
            let rho = sample::random_symmetric_two_qubit(&mut rng);
            let aa = sample::random_axis_angle(&mut rng);
            let u = crate::lsur::su2_unitary(&aa);
            let r = crate::lsur::rotation_matrix(&aa);
            let uu = kron(&u, &u).unwrap();
            let rotated = TwoQubitState::new(&(&uu * rho.rho()) * &uu.adjoint()).unwrap();
            let bp = bloch_from_two_qubit(&rho).unwrap();
            let bp2 = bloch_from_two_qubit(&rotated).unwrap();
            // Tr[U ρ U† σ_α] = Tr[ρ U† σ_α U] = Σ_β R_αβ s_β.
            let s_expected = mat3_vec(&r, &bp.s);
            for a in 0..3 {
                assert_abs_diff_eq!(bp2.s[a], s_expected[a], epsilon = 1e-9);
            }
            let t_expected = mat3_mul(&mat3_mul(&r, &bp.t.to_matrix()), &mat3_transpose(&r));
            let t_expected = RealSym3::from_matrix(&t_expected, 1e-12).unwrap();
            assert!(bp2.t.max_abs_diff(&t_expected) <= 1e-9);

            let c1 = covariance(&bp).c_l;
            let c2 = covariance(&bp2).c_l;
            assert_abs_diff_eq!(c1, c2, epsilon = 1e-9);
        }
    }
}
