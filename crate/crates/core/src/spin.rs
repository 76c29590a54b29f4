//! Spin-j angular momentum in the Dicke basis.
//!
//! Basis index `k` holds `|j, m = j - k>`, so index 0 is the fully polarized
//! `m = j` level (`|0...0>` for qubits) and the last index is `m = -j`.

use crate::error::{Error, Result};
use crate::numlin::{ComplexMatrix, RealSym3, Vec3, C64, I, ONE, ZERO};
use crate::states::SymmetricState;

/// Norm tolerance for states handed to moment calculations.
pub const NORM_TOL: f64 = 1e-10;

/// Spin quantum number stored as `2j` so half-integers stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinValue {
    two_j: u32,
}

impl SpinValue {
    pub fn from_two_j(two_j: u32) -> Self {
        SpinValue { two_j }
    }

    /// Maximal spin `j = N/2` of `n_qubits` qubits.
    pub fn from_qubits(n_qubits: usize) -> Self {
        SpinValue {
            two_j: n_qubits as u32,
        }
    }

    pub fn two_j(self) -> u32 {
        self.two_j
    }

    pub fn j(self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn dim(self) -> usize {
        self.two_j as usize + 1
    }

    /// `m` of basis index `k`, times two.
    pub fn two_m(self, k: usize) -> i64 {
        self.two_j as i64 - 2 * k as i64
    }
}

/// `J1, J2, J3` for one spin value.
#[derive(Clone, Debug)]
pub struct SpinOperators {
    pub spin: SpinValue,
    pub components: [ComplexMatrix; 3],
}

impl SpinOperators {
    pub fn j(&self) -> f64 {
        self.spin.j()
    }

    pub fn dim(&self) -> usize {
        self.spin.dim()
    }

    /// Spectral sum `J1² + J2² + J3²`.
    pub fn casimir(&self) -> ComplexMatrix {
        let [a, b, c] = &self.components;
        let sq = |m: &ComplexMatrix| m * m;
        &(&sq(a) + &sq(b)) + &sq(c)
    }

    /// `Σ_α (⟨J_α²⟩ - ⟨J_α⟩²)` in the density matrix `rho`.
    pub fn variance_sum(&self, rho: &ComplexMatrix) -> Result<f64> {
        variance_sum(self, rho)
    }
}

pub fn make_spin_ops(spin: SpinValue) -> SpinOperators {
    let d = spin.dim();
    let two_j = spin.two_j as i64;
    // <j, m+1| J+ |j, m> = sqrt(j(j+1) - m(m+1)), in units of 1/4 under the root.
    let mut raise = ComplexMatrix::zeros(d, d);
    for k in 1..d {
        let two_m = spin.two_m(k);
        let quarter = two_j * (two_j + 2) - two_m * (two_m + 2);
        raise[(k - 1, k)] = C64::new((quarter as f64).sqrt() / 2.0, 0.0);
    }
    let lower = raise.adjoint();
    let j1 = (&raise + &lower).scale_real(0.5);
    let j2 = (&raise - &lower).scale(-I * 0.5);
    let j3 = ComplexMatrix::from_real_diag(
        &(0..d)
            .map(|k| spin.two_m(k) as f64 / 2.0)
            .collect::<Vec<_>>(),
    );
    SpinOperators {
        spin,
        components: [j1, j2, j3],
    }
}

/// Pauli matrix `σ_{alpha+1}` (`alpha` is 0-based).
pub fn pauli(alpha: usize) -> ComplexMatrix {
    let data = match alpha {
        0 => vec![ZERO, ONE, ONE, ZERO],
        1 => vec![ZERO, -I, I, ZERO],
        2 => vec![ONE, ZERO, ZERO, -ONE],
        _ => panic!("Pauli index {alpha} out of range"),
    };
    ComplexMatrix::from_vec(2, 2, data).expect("2x2")
}

pub fn variance_sum(ops: &SpinOperators, rho: &ComplexMatrix) -> Result<f64> {
    operator_variance_sum(&ops.components, rho)
}

/// `Σ_k (Tr[ρ O_k²] - Tr[ρ O_k]²)` for any list of observables.
pub fn operator_variance_sum(ops: &[ComplexMatrix], rho: &ComplexMatrix) -> Result<f64> {
    let mut total = 0.0;
    for op in ops {
        if !rho.is_square() || op.rows() != rho.rows() || !op.is_square() {
            return Err(Error::Shape(format!(
                "operator {}x{} against state {}x{}",
                op.rows(),
                op.cols(),
                rho.rows(),
                rho.cols()
            )));
        }
        let rho_op = rho.matmul(op)?;
        let mean = rho_op.trace().re;
        let second = rho_op.matmul(op)?.trace().re;
        total += second - mean * mean;
    }
    Ok(total)
}

/// Same as [`operator_variance_sum`] for the pure state `psi`.
pub fn pure_variance_sum(ops: &[ComplexMatrix], psi: &[C64]) -> Result<f64> {
    let mut total = 0.0;
    for op in ops {
        let v = op.apply(psi)?;
        let mean: f64 = psi.iter().zip(&v).map(|(a, b)| (a.conj() * b).re).sum();
        let second: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        total += second - mean * mean;
    }
    Ok(total)
}

/// First and symmetrized second moments of the collective spin `J = N/2`.
///
/// Returns `m1_α = ⟨J_α⟩` and `m2_αβ = ⟨J_α J_β + J_β J_α⟩ / 2`.
pub fn collective_moments(psi: &SymmetricState) -> Result<(Vec3, RealSym3)> {
    let amps = psi.amplitudes();
    let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::Contract(format!("state norm {norm} is not 1")));
    }
    let ops = make_spin_ops(SpinValue::from_qubits(psi.n_qubits()));
    let applied: Vec<Vec<C64>> = ops
        .components
        .iter()
        .map(|op| op.apply(amps))
        .collect::<Result<_>>()?;
    let inner = |a: &[C64], b: &[C64]| -> C64 { a.iter().zip(b).map(|(x, y)| x.conj() * y).sum() };
    let m1 = [0, 1, 2].map(|a| inner(amps, &applied[a]).re);
    // <J_a J_b> = <J_a psi | J_b psi> for Hermitian J_a.
    let m2 = RealSym3::from_fn(|a, b| inner(&applied[a], &applied[b]).re);
    Ok((m1, m2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spin_half_is_half_pauli() {
        let ops = make_spin_ops(SpinValue::from_two_j(1));
        for a in 0..3 {
            assert!(ops.components[a].max_abs_diff(&pauli(a).scale_real(0.5)) <= 1e-15);
        }
    }

    #[test]
    fn spin_one_j3_and_casimir() {
        let ops = make_spin_ops(SpinValue::from_two_j(2));
        assert_eq!(
            ops.components[2],
            ComplexMatrix::from_real_diag(&[1.0, 0.0, -1.0])
        );
        let cas = ops.casimir();
        assert!(cas.max_abs_diff(&ComplexMatrix::identity(3).scale_real(2.0)) <= 1e-12);
    }

    #[test]
    fn commutators_and_casimir_up_to_two_j_20() {
        for two_j in 0..=20 {
            let spin = SpinValue::from_two_j(two_j);
            let ops = make_spin_ops(spin);
            let [j1, j2, j3] = &ops.components;
            for (a, b, c) in [(j1, j2, j3), (j2, j3, j1), (j3, j1, j2)] {
                let comm = a.commutator(b).unwrap();
                assert!(comm.max_abs_diff(&c.scale(I)) <= 1e-12, "2j={two_j}");
            }
            let j = spin.j();
            let target = ComplexMatrix::identity(spin.dim()).scale_real(j * (j + 1.0));
            assert!(ops.casimir().max_abs_diff(&target) <= 1e-12, "2j={two_j}");
        }
    }

    #[test]
    fn variance_sum_examples() {
        for two_j in 1..6 {
            let spin = SpinValue::from_two_j(two_j);
            let ops = make_spin_ops(spin);
            let mut lowest = vec![ZERO; spin.dim()];
            *lowest.last_mut().unwrap() = ONE;
            let v = variance_sum(&ops, &ComplexMatrix::projector(&lowest)).unwrap();
            assert_abs_diff_eq!(v, spin.j(), epsilon = 1e-12);
        }

        let half = make_spin_ops(SpinValue::from_two_j(1));
        let mixed = ComplexMatrix::identity(2).scale_real(0.5);
        assert_abs_diff_eq!(
            4.0 * variance_sum(&half, &mixed).unwrap(),
            3.0,
            epsilon = 1e-14
        );

        let paulis = [pauli(0), pauli(1), pauli(2)];
        let c = C64::new(0.6, 0.0);
        let s = C64::from_polar(0.8, 0.4);
        let pure = ComplexMatrix::projector(&[c, s]);
        assert_abs_diff_eq!(
            operator_variance_sum(&paulis, &pure).unwrap(),
            2.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn variance_sum_shape_error() {
        let ops = make_spin_ops(SpinValue::from_two_j(2));
        let rho = ComplexMatrix::identity(2);
        assert!(matches!(variance_sum(&ops, &rho), Err(Error::Shape(_))));
    }

    #[test]
    fn sum_uncertainty_bound_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for two_j in 1..=4u32 {
            let spin = SpinValue::from_two_j(two_j);
            let ops = make_spin_ops(spin);
            for _ in 0..1000 {
                let rho = sample::random_density_matrix(spin.dim(), &mut rng);
                let v = variance_sum(&ops, &rho).unwrap();
                assert!(v >= spin.j() - 1e-10, "2j={two_j} v={v}");
                if two_j == 1 {
                    let paulis = [pauli(0), pauli(1), pauli(2)];
                    let pv = operator_variance_sum(&paulis, &rho).unwrap();
                    assert_abs_diff_eq!(4.0 * v, pv, epsilon = 1e-12);
                    assert!(pv >= 2.0 - 1e-10);
                }
            }
        }
    }

    #[test]
    fn collective_moments_examples() {
        let n = 4;
        let mut amps = vec![ZERO; n + 1];
        amps[n] = ONE;
        let down = SymmetricState::new(n, amps).unwrap();
        let (m1, m2) = collective_moments(&down).unwrap();
        assert_eq!(m1, [0.0, 0.0, -2.0]);
        assert_abs_diff_eq!(m2.get(2, 2), 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(m2.get(0, 1), 0.0, epsilon = 1e-14);

        let mut amps = vec![ZERO; n + 1];
        amps[3] = ONE;
        let w = SymmetricState::new(n, amps).unwrap();
        let (m1, _) = collective_moments(&w).unwrap();
        assert_abs_diff_eq!(m1[2], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(m1[0], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn collective_casimir_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in 1..9 {
            let psi = sample::random_symmetric_state(n, &mut rng);
            let (_, m2) = collective_moments(&psi).unwrap();
            let j = n as f64 / 2.0;
            assert_abs_diff_eq!(m2.trace(), j * (j + 1.0), epsilon = 1e-10);
        }
    }

    #[test]
    fn collective_moments_rejects_unnormalized() {
        let psi = SymmetricState::unchecked(2, vec![ONE, ONE, ZERO]);
        assert!(matches!(collective_moments(&psi), Err(Error::Contract(_))));
    }
}
