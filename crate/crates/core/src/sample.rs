//! Random state generators shared by tests, the acceptance suite and the CLI.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use rand::Rng;
use rand_distr::StandardNormal;

use crate::lsur::AxisAngle;
use crate::numlin::{ComplexMatrix, C64};
use crate::states::{SymmetricState, TwoQubitState};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn normalize(v: &mut [C64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
}

/// Hilbert-Schmidt random density matrix `G G† / Tr[G G†]`.
pub fn random_density_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| gaussian(rng));
    let ggh = &g * &g.adjoint();
    let tr = ggh.trace().re;
    ggh.scale_real(1.0 / tr)
}

/// Haar-random vector in the symmetric subspace of `n_qubits` qubits.
pub fn random_symmetric_state<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> SymmetricState {
    let mut amps: Vec<C64> = (0..=n_qubits).map(|_| gaussian(rng)).collect();
    normalize(&mut amps);
    SymmetricState::new(n_qubits, amps).expect("normalized symmetric state")
}

pub fn random_axis_angle<R: Rng + ?Sized>(rng: &mut R) -> AxisAngle {
    let axis = [0; 3].map(|_| rng.sample::<f64, _>(StandardNormal));
    let theta = rng.random_range(0.0..=TAU);
    AxisAngle::normalized(axis, theta).expect("non-degenerate Gaussian axis")
}

/// Random single-qubit pure state.
pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> [C64; 2] {
    let mut q = [gaussian(rng), gaussian(rng)];
    normalize(&mut q);
    q
}

/// Embeds a 3x3 triplet-space operator into the two-qubit space.
fn triplet_embed(m: &ComplexMatrix) -> ComplexMatrix {
    let h = FRAC_1_SQRT_2;
    // Columns are |00>, (|01> + |10>)/√2, |11> in the computational basis.
    let v = ComplexMatrix::from_fn(4, 3, |r, c| match (r, c) {
        (0, 0) | (3, 2) => C64::new(1.0, 0.0),
        (1, 1) | (2, 1) => C64::new(h, 0.0),
        _ => C64::new(0.0, 0.0),
    });
    &(&v * m) * &v.adjoint()
}

/// Random two-qubit state supported on the symmetric (triplet) subspace.
pub fn random_symmetric_two_qubit<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    let rho = triplet_embed(&random_density_matrix(3, rng));
    TwoQubitState::new(rho).expect("triplet state is a density matrix")
}

/// `|φ⟩^{⊗N}` written in the Dicke basis.
pub fn random_product_symmetric<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> SymmetricState {
    let [alpha, beta] = random_qubit(rng);
    SymmetricState::normalized(n_qubits, product_dicke_amplitudes(alpha, beta, n_qubits))
        .expect("product state")
}

pub fn product_dicke_amplitudes(alpha: C64, beta: C64, n_qubits: usize) -> Vec<C64> {
    let mut binom = 1.0f64;
    (0..=n_qubits)
        .map(|k| {
            if k > 0 {
                binom *= (n_qubits - k + 1) as f64 / k as f64;
            }
            alpha.powu((n_qubits - k) as u32) * beta.powu(k as u32) * binom.sqrt()
        })
        .collect()
}

/// Convex mixture of `terms` random states `|φ⟩⟨φ| ⊗ |φ⟩⟨φ|`.
pub fn random_separable_symmetric_two_qubit<R: Rng + ?Sized>(
    terms: usize,
    rng: &mut R,
) -> TwoQubitState {
    let weights: Vec<f64> = (0..terms.max(1))
        .map(|_| rng.random::<f64>() + 1e-3)
        .collect();
    let total: f64 = weights.iter().sum();
    let mut rho = ComplexMatrix::zeros(4, 4);
    for w in weights {
        let [a, b] = random_qubit(rng);
        let product = [a * a, a * b, b * a, b * b];
        rho = &rho + &ComplexMatrix::projector(&product).scale_real(w / total);
    }
    TwoQubitState::new(rho).expect("mixture of product states")
}
