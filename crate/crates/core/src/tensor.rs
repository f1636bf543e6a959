//! Dense complex linear algebra on qubit registers.
//!
//! Index convention used everywhere: in an `n`-qubit register, qubit `0` is the
//! most significant bit of a basis-state index, so qubit `k` sits at bit
//! position `n - 1 - k`. Tensor factors therefore appear in declaration order:
//! `kron(a, b)` puts the qubits of `a` before the qubits of `b`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

pub use num_complex::Complex64;

use crate::error::{Error, Result};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Largest deviation from Hermiticity accepted by [`hermitian_eigenvalues`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

const JACOBI_TOLERANCE: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;
const MIN_NORM: f64 = 1e-14;

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimension { expected: 1, found: 0 });
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidDimension { expected: rows * cols, found: data.len() });
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Projector `|v⟩⟨v|`.
    pub fn outer(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Number of qubits when the matrix is a `2^n × 2^n` operator.
    pub fn num_qubits(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::InvalidDimension { expected: self.rows, found: self.cols });
        }
        qubits_for_len(self.rows)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn checked_mul(&self, rhs: &ComplexMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidDimension { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::InvalidDimension { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Largest entrywise `|m_ij - conj(m_ji)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Largest entrywise modulus of `self - other`; infinite on shape mismatch.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on shape mismatch; use [`ComplexMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Pure state of a qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps amplitudes whose count is a power of two. No normalization.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        Ok(StateVector { num_qubits, amplitudes })
    }

    pub fn basis(num_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![ZERO; 1 << num_qubits];
        amplitudes[index] = ONE;
        StateVector { num_qubits, amplitudes }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn kron(&self, other: &StateVector) -> StateVector {
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|b| a * b));
        }
        StateVector { num_qubits: self.num_qubits + other.num_qubits, amplitudes }
    }

    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes)
    }

    /// Reduced density matrix on `keep`, computed straight from the amplitudes.
    pub fn reduced_density(&self, keep: &QubitSubset) -> Result<ComplexMatrix> {
        let n = self.num_qubits;
        keep.check(n)?;
        let traced = keep.complement(n);
        let keep_offsets = scatter_table(n, keep);
        let traced_offsets = scatter_table(n, &traced);
        let dim = keep_offsets.len();
        let mut out = ComplexMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let mut acc = ZERO;
                for &t in &traced_offsets {
                    acc += self.amplitudes[keep_offsets[i] | t] * self.amplitudes[keep_offsets[j] | t].conj();
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
        }
        Ok(out)
    }
}

/// Ordered set of qubit positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitSubset(Vec<usize>);

impl QubitSubset {
    /// Sorts the indices; duplicates are rejected.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidQubitSubset("duplicate qubit index"));
        }
        Ok(QubitSubset(indices))
    }

    pub fn empty() -> Self {
        QubitSubset(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        QubitSubset((0..n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.0.binary_search(&q).is_ok()
    }

    pub fn complement(&self, n: usize) -> QubitSubset {
        QubitSubset((0..n).filter(|q| !self.contains(*q)).collect())
    }

    pub fn union(&self, other: &QubitSubset) -> QubitSubset {
        let mut v: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        QubitSubset(v)
    }

    /// Fails if any index is outside an `n`-qubit register.
    pub fn check(&self, n: usize) -> Result<()> {
        if self.0.iter().any(|&q| q >= n) {
            return Err(Error::InvalidQubitSubset("qubit index out of range"));
        }
        Ok(())
    }

    /// Bit mask of these qubits in an `n`-qubit register.
    pub fn mask(&self, n: usize) -> usize {
        self.0.iter().fold(0, |m, &q| m | (1 << (n - 1 - q)))
    }
}

impl From<&[usize]> for QubitSubset {
    /// Panics on duplicates; intended for literal subsets.
    fn from(indices: &[usize]) -> Self {
        QubitSubset::new(indices.to_vec()).expect("duplicate qubit index")
    }
}

impl<const N: usize> From<[usize; N]> for QubitSubset {
    fn from(indices: [usize; N]) -> Self {
        QubitSubset::from(&indices[..])
    }
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::InvalidDimension { expected: len.next_power_of_two().max(1), found: len });
    }
    Ok(len.trailing_zeros() as usize)
}

/// Full-register index contribution of each compact index over `subset`.
/// The compact index uses the subset's own order, first qubit most significant.
fn scatter_table(n: usize, subset: &QubitSubset) -> Vec<usize> {
    let k = subset.len();
    (0..1usize << k)
        .map(|c| {
            subset.indices().iter().enumerate().fold(0, |acc, (pos, &q)| {
                if c >> (k - 1 - pos) & 1 == 1 {
                    acc | 1 << (n - 1 - q)
                } else {
                    acc
                }
            })
        })
        .collect()
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a[(i, j)];
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out[(i * b.rows + k, j * b.cols + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Traces out every qubit not in `keep`.
pub fn partial_trace(rho: &ComplexMatrix, keep: &QubitSubset) -> Result<ComplexMatrix> {
    let n = rho.num_qubits()?;
    keep.check(n)?;
    if keep.is_empty() {
        return Err(Error::InvalidQubitSubset("must keep at least one qubit"));
    }
    let keep_offsets = scatter_table(n, keep);
    let traced_offsets = scatter_table(n, &keep.complement(n));
    let dim = keep_offsets.len();
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
        traced_offsets.iter().map(|&t| rho[(keep_offsets[i] | t, keep_offsets[j] | t)]).sum()
    }))
}

/// Transposes the row/column multi-index of the qubits in `side_a` only.
pub fn partial_transpose(rho: &ComplexMatrix, side_a: &QubitSubset) -> Result<ComplexMatrix> {
    let n = rho.num_qubits()?;
    side_a.check(n)?;
    let mask = side_a.mask(n);
    let dim = rho.rows;
    Ok(ComplexMatrix::from_fn(dim, dim, |r, c| rho[((r & !mask) | (c & mask), (c & !mask) | (r & mask))]))
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The matrix `H = A + iB` is embedded as the real symmetric `[[A, -B], [B, A]]`,
/// whose spectrum is that of `H` with every eigenvalue doubled; cyclic Jacobi
/// diagonalises the embedding and each degenerate pair is averaged back.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::InvalidDimension { expected: m.rows, found: m.cols });
    }
    let deviation = m.hermiticity_deviation();
    if deviation > HERMITIAN_TOLERANCE || deviation.is_nan() {
        return Err(Error::NotHermitian { deviation });
    }
    let n = m.rows;
    let n2 = 2 * n;
    let mut a = vec![0.0_f64; n2 * n2];
    for i in 0..n {
        for j in 0..n {
            // symmetrised so the embedding is exactly symmetric
            let h = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            a[i * n2 + j] = h.re;
            a[(i + n) * n2 + (j + n)] = h.re;
            a[i * n2 + (j + n)] = -h.im;
            a[(i + n) * n2 + j] = h.im;
        }
    }
    jacobi_symmetric(&mut a, n2);
    let mut diag: Vec<f64> = (0..n2).map(|i| a[i * n2 + i]).collect();
    diag.sort_by(f64::total_cmp);
    Ok(diag.chunks_exact(2).map(|p| 0.5 * (p[0] + p[1])).collect())
}

/// In-place cyclic Jacobi on a dense row-major symmetric matrix. On return the
/// diagonal holds the eigenvalues.
fn jacobi_symmetric(a: &mut [f64], n: usize) {
    let scale = libm::sqrt(a.iter().map(|x| x * x).sum::<f64>()).max(1.0);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    off += a[p * n + q] * a[p * n + q];
                }
            }
        }
        if libm::sqrt(off) < JACOBI_TOLERANCE * scale {
            return;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
}

pub fn normalize(v: &StateVector) -> Result<StateVector> {
    let norm = v.norm();
    if !(norm > MIN_NORM) {
        return Err(Error::ZeroNorm);
    }
    Ok(StateVector { num_qubits: v.num_qubits, amplitudes: v.amplitudes.iter().map(|a| a / norm).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_row_major(2, 2, vec![ZERO, ONE, ONE, ZERO]).unwrap()
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
    }

    fn bell_phi_plus() -> StateVector {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        StateVector::new(vec![c(h, 0.0), ZERO, ZERO, c(h, 0.0)]).unwrap()
    }

    #[test]
    fn kron_identity_and_diagonal() {
        assert_eq!(kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
        let d = kron(&ComplexMatrix::from_real_diagonal(&[1.0, 2.0]), &ComplexMatrix::from_real_diagonal(&[3.0, 4.0]));
        assert_eq!(d, ComplexMatrix::from_real_diagonal(&[3.0, 4.0, 6.0, 8.0]));
    }

    #[test]
    fn kron_sigma_x_sigma_z_is_alpha_z() {
        // Dirac-representation alpha_z = [[0, sz], [sz, 0]]
        let expected = ComplexMatrix::from_fn(4, 4, |i, j| match (i, j) {
            (0, 2) | (2, 0) => ONE,
            (1, 3) | (3, 1) => -ONE,
            _ => ZERO,
        });
        assert_eq!(kron(&sigma_x(), &sigma_z()), expected);
    }

    #[test]
    fn kron_dimensions_for_rectangular_factors() {
        let a = ComplexMatrix::from_fn(2, 3, |i, j| c((i + j) as f64, 0.0));
        let b = ComplexMatrix::from_fn(3, 1, |i, _| c(i as f64, 1.0));
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (6, 3));
        assert_eq!(k[(5, 2)], a[(1, 2)] * b[(2, 0)]);
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let rho = bell_phi_plus().density();
        let r = partial_trace(&rho, &QubitSubset::from([0])).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn product_state_marginals() {
        let a = ComplexMatrix::from_row_major(2, 2, vec![c(0.7, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.3, 0.0)]).unwrap();
        let b = ComplexMatrix::from_real_diagonal(&[0.25, 0.75]);
        let rho = kron(&a, &b);
        assert!(partial_trace(&rho, &QubitSubset::from([0])).unwrap().max_abs_diff(&a) < 1e-15);
        assert!(partial_trace(&rho, &QubitSubset::from([1])).unwrap().max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn partial_trace_keeps_requested_order() {
        // |0⟩|1⟩|0⟩ : qubit 1 excited
        let psi = StateVector::basis(3, 0b010);
        let r = partial_trace(&psi.density(), &QubitSubset::from([1, 2])).unwrap();
        assert_eq!(r[(0b10, 0b10)], ONE);
        let r = psi.reduced_density(&QubitSubset::from([1, 2])).unwrap();
        assert_eq!(r[(0b10, 0b10)], ONE);
    }

    #[test]
    fn partial_trace_errors() {
        let rho = ComplexMatrix::identity(3);
        assert!(matches!(partial_trace(&rho, &QubitSubset::from([0])), Err(Error::InvalidDimension { .. })));
        let rho = ComplexMatrix::identity(4);
        assert!(partial_trace(&rho, &QubitSubset::from([2])).is_err());
        assert!(partial_trace(&rho, &QubitSubset::empty()).is_err());
    }

    #[test]
    fn partial_transpose_bell_spectrum() {
        let pt = partial_transpose(&bell_phi_plus().density(), &QubitSubset::from([0])).unwrap();
        let ev = hermitian_eigenvalues(&pt).unwrap();
        for (got, want) in ev.iter().zip([-0.5, 0.5, 0.5, 0.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn partial_transpose_fixes_diagonal_and_is_involution() {
        let d = ComplexMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(partial_transpose(&d, &QubitSubset::from([1])).unwrap(), d);
        let rho = ComplexMatrix::from_fn(4, 4, |i, j| c((i * 4 + j) as f64, (i as f64) - (j as f64)));
        let a = QubitSubset::from([0]);
        let twice = partial_transpose(&partial_transpose(&rho, &a).unwrap(), &a).unwrap();
        assert_eq!(twice, rho);
    }

    #[test]
    fn partial_transpose_matches_element_definition() {
        // <i j| rho^A |k l> = <k j| rho |i l> for a 1+1 qubit split
        let rho = ComplexMatrix::from_fn(4, 4, |r, c_| c(r as f64 + 0.5, c_ as f64));
        let pt = partial_transpose(&rho, &QubitSubset::from([0])).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(pt[(2 * i + j, 2 * k + l)], rho[(2 * k + j, 2 * i + l)]);
                    }
                }
            }
        }
    }

    #[test]
    fn eigenvalues_of_simple_matrices() {
        let ev = hermitian_eigenvalues(&ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(ev.len(), 3);
        for (got, want) in ev.iter().zip([1.0, 2.0, 3.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        let ev = hermitian_eigenvalues(&sigma_x()).unwrap();
        assert_abs_diff_eq!(ev[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-14);
        // sigma_y has complex entries
        let sy = ComplexMatrix::from_row_major(2, 2, vec![ZERO, -I, I, ZERO]).unwrap();
        let ev = hermitian_eigenvalues(&sy).unwrap();
        assert_abs_diff_eq!(ev[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let m = ComplexMatrix::from_row_major(2, 2, vec![ZERO, ONE, ZERO, ZERO]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian { .. })));
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(hermitian_eigenvalues(&rect), Err(Error::InvalidDimension { .. })));
    }

    #[test]
    fn normalize_cases() {
        let v = StateVector::new(vec![c(2.0, 0.0), ZERO, ZERO, ZERO]).unwrap();
        assert_eq!(normalize(&v).unwrap(), StateVector::basis(2, 0));
        let unit = bell_phi_plus();
        let again = normalize(&unit).unwrap();
        assert!(again.amplitudes().iter().zip(unit.amplitudes()).all(|(a, b)| (a - b).norm() < 1e-15));
        let v = StateVector::new(vec![ONE, ONE, ZERO, ZERO]).unwrap();
        let n = normalize(&v).unwrap();
        assert_abs_diff_eq!(n.amplitudes()[0].re, core::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(n.norm(), 1.0, epsilon = 1e-12);
        let zero = StateVector::new(vec![ZERO; 4]).unwrap();
        assert_eq!(normalize(&zero), Err(Error::ZeroNorm));
    }

    #[test]
    fn state_vector_length_must_be_power_of_two() {
        assert!(StateVector::new(vec![ONE; 3]).is_err());
        assert!(StateVector::new(vec![]).is_err());
        assert_eq!(StateVector::new(vec![ONE; 8]).unwrap().num_qubits(), 3);
    }

    #[test]
    fn qubit_subset_rules() {
        assert!(QubitSubset::new(vec![1, 1]).is_err());
        let s = QubitSubset::new(vec![3, 0]).unwrap();
        assert_eq!(s.indices(), &[0, 3]);
        assert_eq!(s.complement(4).indices(), &[1, 2]);
        assert_eq!(s.mask(4), 0b1001);
        assert!(s.check(3).is_err());
    }
}
