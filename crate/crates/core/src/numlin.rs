//! Dense complex linear algebra sized for Dicke spaces and small tensor products.
//!
//! Everything is row-major and double precision. The Hermitian eigensolver is a
//! cyclic Jacobi iteration, which is plenty for the 3x3 covariance matrices and
//! the (N+1)-dimensional Dicke operators that dominate the workload.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Largest row or column count `kron` will produce.
pub const KRON_AXIS_CAP: usize = 1 << 20;

/// Absolute tolerance on `max |M_ij - conj(M_ji)|` for Hermitian-only routines.
pub const HERMITIAN_TOL: f64 = 1e-12;

const JACOBI_MAX_SWEEPS: usize = 100;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("empty matrix {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_vec(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    pub fn from_diag(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diag(&d)
    }

    /// The rank-one projector `|v><v|`.
    pub fn projector(v: &[C64]) -> Self {
        let n = v.len();
        Self::from_fn(n, n, |i, j| v[i] * v[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, c: C64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(C64::new(c, 0.0))
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok(self
            .data
            .chunks(self.cols)
            .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// `<v|M|v>` for a (not necessarily normalized) vector.
    pub fn expectation(&self, v: &[C64]) -> Result<C64> {
        let mv = self.apply(v)?;
        Ok(v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum())
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols))
            .map(|i| self.data[i * self.cols + i])
            .sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "max_abs_diff on mismatched shapes"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |M_ij - conj(M_ji)|`; infinite for non-square matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn commutator(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        Ok(&self.matmul(other)? - &other.matmul(self)?)
    }

    fn zip_with(&self, other: &ComplexMatrix, f: impl Fn(C64, C64) -> C64) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "elementwise operation on mismatched shapes"
        );
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Panics on mismatched shapes; use [`ComplexMatrix::matmul`] for a checked product.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols) {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.6}{:+.6}i", z.re, z.im))
                .collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = a
        .rows
        .checked_mul(b.rows)
        .filter(|&r| r <= KRON_AXIS_CAP)
        .ok_or_else(|| Error::Size(format!("kron rows {}*{} exceed cap", a.rows, b.rows)))?;
    let cols = a
        .cols
        .checked_mul(b.cols)
        .filter(|&c| c <= KRON_AXIS_CAP)
        .ok_or_else(|| Error::Size(format!("kron cols {}*{} exceed cap", a.cols, b.cols)))?;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ai in 0..a.rows {
        for aj in 0..a.cols {
            let x = a[(ai, aj)];
            if x == ZERO {
                continue;
            }
            for bi in 0..b.rows {
                let row = ai * b.rows + bi;
                let dst = &mut out.data[row * cols + aj * b.cols..row * cols + (aj + 1) * b.cols];
                let src = &b.data[bi * b.cols..(bi + 1) * b.cols];
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = x * s;
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product of a chain of factors, left to right.
pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> Result<ComplexMatrix> {
    let mut iter = factors.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Shape("kron of an empty chain".into()))?;
    iter.try_fold(first.clone(), |acc, m| kron(&acc, m))
}

fn check_subsystems(rho: &ComplexMatrix, dims: &[usize]) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::Shape(format!(
            "density matrix must be square, got {}x{}",
            rho.rows, rho.cols
        )));
    }
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Shape(format!("invalid subsystem dims {dims:?}")));
    }
    let total = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| Error::Size(format!("subsystem dims {dims:?} overflow")))?;
    if total != rho.rows {
        return Err(Error::Shape(format!(
            "subsystem dims {dims:?} multiply to {total}, matrix is {}x{}",
            rho.rows, rho.cols
        )));
    }
    Ok(())
}

/// Traces out every subsystem not listed in `keep`.
///
/// Subsystem 0 is the most significant factor of the row-major index. The
/// kept subsystems appear in the output in increasing index order.
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    check_subsystems(rho, dims)?;
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() || kept.iter().any(|&k| k >= dims.len()) {
        return Err(Error::Shape(format!(
            "keep set {keep:?} invalid for {} subsystems",
            dims.len()
        )));
    }
    let dim_keep: usize = kept.iter().map(|&k| dims[k]).product();
    let dim_traced = rho.rows / dim_keep;

    // Split every full index into (kept index, traced index).
    let mut split = Vec::with_capacity(rho.rows);
    for full in 0..rho.rows {
        let mut rem = full;
        let mut digits = vec![0usize; dims.len()];
        for (slot, &d) in digits.iter_mut().zip(dims).rev() {
            *slot = rem % d;
            rem /= d;
        }
        let (mut ki, mut ti) = (0usize, 0usize);
        for (s, (&digit, &d)) in digits.iter().zip(dims).enumerate() {
            if kept.binary_search(&s).is_ok() {
                ki = ki * d + digit;
            } else {
                ti = ti * d + digit;
            }
        }
        split.push((ki, ti));
    }
    let mut groups: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(dim_keep); dim_traced];
    for (full, &(ki, ti)) in split.iter().enumerate() {
        groups[ti].push((full, ki));
    }

    let mut out = ComplexMatrix::zeros(dim_keep, dim_keep);
    for group in &groups {
        for &(fi, ki) in group {
            for &(fj, kj) in group {
                out[(ki, kj)] += rho[(fi, fj)];
            }
        }
    }
    Ok(out)
}

/// Transposes the chosen factor of a bipartite operator with factor dims `dims`.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dims: [usize; 2],
    subsystem: usize,
) -> Result<ComplexMatrix> {
    check_subsystems(rho, &dims)?;
    if subsystem > 1 {
        return Err(Error::Shape(format!(
            "subsystem {subsystem} of a bipartite system"
        )));
    }
    let [da, db] = dims;
    let mut out = ComplexMatrix::zeros(rho.rows, rho.cols);
    for i in 0..da {
        for a in 0..db {
            for j in 0..da {
                for b in 0..db {
                    let src = if subsystem == 1 {
                        rho[(i * db + b, j * db + a)]
                    } else {
                        rho[(j * db + a, i * db + b)]
                    };
                    out[(i * db + a, j * db + b)] = src;
                }
            }
        }
    }
    Ok(out)
}

/// Eigenvalues in ascending order with matching orthonormal eigenvectors
/// stored as the columns of `vectors`.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.rows)
            .map(|i| self.vectors[(i, k)])
            .collect()
    }

    /// `V diag(f(λ)) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let n = self.values.len();
        let fl: Vec<C64> = self.values.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * fl[k] * self.vectors[(j, k)].conj())
                .sum()
        })
    }
}

fn require_hermitian(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "{}x{} matrix is not square",
            m.rows, m.cols
        )));
    }
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian (defect {defect:.3e})"
        )));
    }
    Ok(())
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<EigenSystem> {
    require_hermitian(m)?;
    let n = m.rows;
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    let mut prev_off = f64::INFINITY;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        // Converged, or stalled at roundoff level.
        if off == 0.0 || off <= 1e-15 * scale || (off <= 1e-12 * scale && off >= 0.5 * prev_off) {
            break;
        }
        prev_off = off;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&x, &y| diag[x].total_cmp(&diag[y]));
    let values = order.iter().map(|&k| diag[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenSystem { values, vectors })
}

/// One Jacobi step annihilating `a[p][q]`: `a <- W† a W`, `v <- v W`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = (apq / g).conj();
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        0.0
    };
    if t == 0.0 {
        // |a_pq| is negligible next to the diagonal gap.
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let w_pp = C64::new(c, 0.0);
    let w_pq = C64::new(s, 0.0);
    let w_qp = phase * -s;
    let w_qq = phase * c;

    let n = a.rows;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * w_pp + akq * w_qp;
        a[(k, q)] = akp * w_pq + akq * w_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = w_pp.conj() * apk + w_qp.conj() * aqk;
        a[(q, k)] = w_pq.conj() * apk + w_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(app - t * g, 0.0);
    a[(q, q)] = C64::new(aqq + t * g, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * w_pp + vkq * w_qp;
        v[(k, q)] = vkp * w_pq + vkq * w_qq;
    }
}

/// `exp(-i h t)` for Hermitian `h`.
pub fn expm_hermitian(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let es = eig_hermitian(h)?;
    Ok(es.map_spectrum(|l| C64::from_polar(1.0, -l * t)))
}

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub fn dot3(a: &Vec3, b: &Vec3) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat3_vec(a: &Mat3, v: &Vec3) -> Vec3 {
    [dot3(&a[0], v), dot3(&a[1], v), dot3(&a[2], v)]
}

pub fn mat3_transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// 3x3 real symmetric matrix; only the upper triangle is stored.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct RealSym3 {
    upper: [f64; 6],
}

const fn upper_slot(i: usize, j: usize) -> usize {
    let (r, c) = if i <= j { (i, j) } else { (j, i) };
    match (r, c) {
        (0, 0) => 0,
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        _ => 5,
    }
}

impl RealSym3 {
    pub const ZERO: RealSym3 = RealSym3 { upper: [0.0; 6] };

    /// Reads `f(i, j)` for `i <= j` only.
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut upper = [0.0; 6];
        for i in 0..3 {
            for j in i..3 {
                upper[upper_slot(i, j)] = f(i, j);
            }
        }
        RealSym3 { upper }
    }

    pub fn diag(d: Vec3) -> Self {
        Self::from_fn(|i, j| if i == j { d[i] } else { 0.0 })
    }

    /// Accepts a full matrix whose asymmetry is at most `tol`; the result is
    /// the symmetric part.
    pub fn from_matrix(m: &Mat3, tol: f64) -> Result<Self> {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in (i + 1)..3 {
                worst = worst.max((m[i][j] - m[j][i]).abs());
            }
        }
        if worst > tol {
            return Err(Error::Contract(format!(
                "matrix asymmetry {worst:.3e} exceeds {tol:.1e}"
            )));
        }
        Ok(Self::from_fn(|i, j| 0.5 * (m[i][j] + m[j][i])))
    }

    pub fn outer(s: &Vec3) -> Self {
        Self::from_fn(|i, j| s[i] * s[j])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.upper[upper_slot(i, j)]
    }

    pub fn to_matrix(&self) -> Mat3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.get(i, j);
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        self.get(0, 0) + self.get(1, 1) + self.get(2, 2)
    }

    pub fn sub(&self, other: &RealSym3) -> RealSym3 {
        Self::from_fn(|i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        mat3_vec(&self.to_matrix(), v)
    }

    pub fn quadratic_form(&self, v: &Vec3) -> f64 {
        dot3(v, &self.apply(v))
    }

    pub fn max_abs_diff(&self, other: &RealSym3) -> f64 {
        self.upper
            .iter()
            .zip(&other.upper)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Ascending eigenvalues and the matching real unit eigenvectors.
    pub fn eigen(&self) -> ([f64; 3], [Vec3; 3]) {
        let m = ComplexMatrix::from_fn(3, 3, |i, j| C64::new(self.get(i, j), 0.0));
        let es = eig_hermitian(&m).expect("symmetric 3x3 is Hermitian");
        let mut vectors = [[0.0; 3]; 3];
        for (k, out) in vectors.iter_mut().enumerate() {
            let v = es.vector(k);
            // Rotate away the global phase before dropping the imaginary part.
            let pivot = v
                .iter()
                .copied()
                .max_by(|a, b| a.norm().total_cmp(&b.norm()))
                .unwrap_or(ONE);
            let phase = pivot.conj() / pivot.norm();
            let re: Vec<f64> = v.iter().map(|z| (z * phase).re).collect();
            let norm = re.iter().map(|x| x * x).sum::<f64>().sqrt();
            for (o, x) in out.iter_mut().zip(re) {
                *o = x / norm;
            }
        }
        ([es.values[0], es.values[1], es.values[2]], vectors)
    }
}
