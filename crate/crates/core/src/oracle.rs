//! Brute-force reference on the full `2^N`-dimensional tensor space.
//!
//! Nothing here uses the Dicke-space shortcuts: states are embedded qubit by
//! qubit and every partition operator is a sum of explicit Kronecker chains
//! `I ⊗ ... ⊗ σ_α ⊗ ... ⊗ I`.

use crate::error::{Error, Result};
use crate::lsur::{rotation_matrix, AxisAngle};
use crate::numlin::{kron_all, partial_trace, ComplexMatrix, C64};
use crate::spin::{pauli, pure_variance_sum};
use crate::states::SymmetricState;

/// Default qubit cap (dimension 1024).
pub const DEFAULT_MAX_QUBITS: usize = 10;

const TENSOR_NORM_TOL: f64 = 1e-12;

/// Pure state of `N` qubits; qubit 0 is the most significant bit of the index.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorState {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl TensorState {
    pub fn new(n_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if n_qubits == 0 || amplitudes.len() != 1usize << n_qubits {
            return Err(Error::Shape(format!(
                "{} amplitudes for {n_qubits} qubits",
                amplitudes.len()
            )));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > TENSOR_NORM_TOL {
            return Err(Error::Contract(format!(
                "tensor state norm {norm} is not 1"
            )));
        }
        Ok(TensorState {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Largest amplitude change under a swap of neighbouring qubits.
    pub fn adjacent_swap_defect(&self) -> f64 {
        let n = self.n_qubits;
        let mut worst = 0.0f64;
        for k in 0..n.saturating_sub(1) {
            let (hi, lo) = (n - 1 - k, n - 2 - k);
            for (idx, amp) in self.amplitudes.iter().enumerate() {
                let bit_hi = (idx >> hi) & 1;
                let bit_lo = (idx >> lo) & 1;
                let swapped = if bit_hi == bit_lo {
                    idx
                } else {
                    idx ^ ((1 << hi) | (1 << lo))
                };
                worst = worst.max((amp - self.amplitudes[swapped]).norm());
            }
        }
        worst
    }

    /// Reduced state of qubits 0 and 1.
    pub fn two_qubit_marginal(&self) -> Result<ComplexMatrix> {
        let rho = ComplexMatrix::projector(&self.amplitudes);
        partial_trace(&rho, &vec![2; self.n_qubits], &[0, 1])
    }
}

/// `J_Aα` on the first `n` qubits and `J'_Bα = Σ_β R_αβ J_Bβ` on the last `n`.
#[derive(Clone, Debug)]
pub struct PartitionOps {
    pub n_qubits: usize,
    pub a: [ComplexMatrix; 3],
    pub b: [ComplexMatrix; 3],
}

impl PartitionOps {
    /// `Σ_α [Δ(J_Aα + J'_Bα)]²` in the pure state `psi`.
    pub fn lhs(&self, psi: &TensorState) -> Result<f64> {
        if psi.n_qubits != self.n_qubits {
            return Err(Error::Shape(format!(
                "{}-qubit state against {}-qubit operators",
                psi.n_qubits, self.n_qubits
            )));
        }
        let sums: Vec<ComplexMatrix> = self.a.iter().zip(&self.b).map(|(a, b)| a + b).collect();
        pure_variance_sum(&sums, &psi.amplitudes)
    }
}

/// Brute-force evaluator with a configurable qubit cap.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub max_qubits: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

impl Oracle {
    pub fn with_max_qubits(max_qubits: usize) -> Self {
        Oracle { max_qubits }
    }

    fn check_cap(&self, n_qubits: usize) -> Result<()> {
        if n_qubits > self.max_qubits {
            return Err(Error::Resource(format!(
                "{n_qubits} qubits exceed the oracle cap of {}",
                self.max_qubits
            )));
        }
        Ok(())
    }

    /// Maps Dicke level `k` to the normalized sum of all bit strings with `k` ones.
    pub fn embed_dicke(&self, psi: &SymmetricState) -> Result<TensorState> {
        let n = psi.n_qubits();
        self.check_cap(n)?;
        let weights: Vec<f64> = (0..=n).map(|k| binomial(n, k).sqrt()).collect();
        let amplitudes = (0..1usize << n)
            .map(|idx| {
                let k = idx.count_ones() as usize;
                psi.amplitudes()[k] / weights[k]
            })
            .collect();
        Ok(TensorState {
            n_qubits: n,
            amplitudes,
        })
    }

    /// `σ_α` on qubit `k` of `n_qubits`, identity elsewhere.
    pub fn sigma_at(&self, n_qubits: usize, k: usize, alpha: usize) -> Result<ComplexMatrix> {
        self.check_cap(n_qubits)?;
        if k >= n_qubits {
            return Err(Error::Shape(format!("qubit {k} of {n_qubits}")));
        }
        let id = ComplexMatrix::identity(2);
        let sigma = pauli(alpha);
        kron_all((0..n_qubits).map(|pos| if pos == k { &sigma } else { &id }))
    }

    /// Half the summed Pauli operators over `qubits`.
    fn half_sum(
        &self,
        n_qubits: usize,
        qubits: std::ops::Range<usize>,
        alpha: usize,
    ) -> Result<ComplexMatrix> {
        let dim = 1usize << n_qubits;
        let mut total = ComplexMatrix::zeros(dim, dim);
        for k in qubits {
            total = &total + &self.sigma_at(n_qubits, k, alpha)?;
        }
        Ok(total.scale_real(0.5))
    }

    /// Collective spin `J_α = ½ Σ_k σ_kα` over all qubits.
    pub fn collective_ops(&self, n_qubits: usize) -> Result<[ComplexMatrix; 3]> {
        self.check_cap(n_qubits)?;
        Ok([
            self.half_sum(n_qubits, 0..n_qubits, 0)?,
            self.half_sum(n_qubits, 0..n_qubits, 1)?,
            self.half_sum(n_qubits, 0..n_qubits, 2)?,
        ])
    }

    pub fn partition_ops(&self, n_qubits: usize, aa: Option<&AxisAngle>) -> Result<PartitionOps> {
        if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "partition operators need even N = 2n, got N = {n_qubits}"
            )));
        }
        self.check_cap(n_qubits)?;
        let n = n_qubits / 2;
        let a = [
            self.half_sum(n_qubits, 0..n, 0)?,
            self.half_sum(n_qubits, 0..n, 1)?,
            self.half_sum(n_qubits, 0..n, 2)?,
        ];
        let b_plain = [
            self.half_sum(n_qubits, n..n_qubits, 0)?,
            self.half_sum(n_qubits, n..n_qubits, 1)?,
            self.half_sum(n_qubits, n..n_qubits, 2)?,
        ];
        let b = match aa {
            None => b_plain,
            Some(aa) => {
                let r = rotation_matrix(aa);
                let dim = 1usize << n_qubits;
                let rotate = |alpha: usize| {
                    (0..3).fold(ComplexMatrix::zeros(dim, dim), |acc, beta| {
                        &acc + &b_plain[beta].scale_real(r[alpha][beta])
                    })
                };
                [rotate(0), rotate(1), rotate(2)]
            }
        };
        Ok(PartitionOps { n_qubits, a, b })
    }

    pub fn lsur_lhs_brute(&self, psi: &TensorState, aa: &AxisAngle) -> Result<f64> {
        self.partition_ops(psi.n_qubits, Some(aa))?.lhs(psi)
    }
}

pub fn embed_dicke(psi: &SymmetricState) -> Result<TensorState> {
    Oracle::default().embed_dicke(psi)
}

pub fn partition_ops(n_qubits: usize, aa: Option<&AxisAngle>) -> Result<PartitionOps> {
    Oracle::default().partition_ops(n_qubits, aa)
}

pub fn lsur_lhs_brute(psi: &TensorState, aa: &AxisAngle) -> Result<f64> {
    Oracle::default().lsur_lhs_brute(psi, aa)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Explicit `|ψ⟩` for a product of identical qubits, built bit by bit.
pub fn product_tensor(qubit: [C64; 2], n_qubits: usize) -> Result<TensorState> {
    let amplitudes = (0..1usize << n_qubits)
        .map(|idx| {
            (0..n_qubits).fold(C64::new(1.0, 0.0), |acc, pos| {
                acc * qubit[(idx >> (n_qubits - 1 - pos)) & 1]
            })
        })
        .collect();
    TensorState::new(n_qubits, amplitudes)
}
