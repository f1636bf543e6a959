//! Entanglement quantifiers on qubit registers.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tensor::{hermitian_eigenvalues, partial_trace, partial_transpose, ComplexMatrix, QubitSubset, StateVector};

/// Partial-transpose eigenvalues smaller than this in magnitude are treated as 0.
pub const EIGENVALUE_CLAMP: f64 = 1e-12;

/// Prefactor of the two-particle linear entropy `E_L = 2 (1 - Tr ρ²)`.
pub const LINEAR_ENTROPY_PREFACTOR: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BipartitionKind {
    /// `{i; j k l}`: one qubit against all others.
    OneVsRest,
    /// `{i j; k l}`.
    PairVsPair,
    /// `{i; j k}` with the fourth qubit traced out.
    OneVsTwo,
    /// `{i; j}` with the other qubits traced out.
    OneVsOne,
}

/// Split of a register into two sides and a traced-out remainder.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    n_qubits: usize,
    side_a: QubitSubset,
    side_b: QubitSubset,
    traced: QubitSubset,
}

impl Bipartition {
    /// Qubits on neither side are traced out.
    pub fn new(n_qubits: usize, side_a: impl Into<QubitSubset>, side_b: impl Into<QubitSubset>) -> Result<Self> {
        let (side_a, side_b) = (side_a.into(), side_b.into());
        if side_a.is_empty() || side_b.is_empty() {
            return Err(Error::PartitionError("both sides must be nonempty"));
        }
        if side_a.check(n_qubits).is_err() || side_b.check(n_qubits).is_err() {
            return Err(Error::PartitionError("qubit index out of range"));
        }
        if side_a.indices().iter().any(|q| side_b.contains(*q)) {
            return Err(Error::PartitionError("sides overlap"));
        }
        let traced = side_a.union(&side_b).complement(n_qubits);
        Ok(Bipartition { n_qubits, side_a, side_b, traced })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn side_a(&self) -> &QubitSubset {
        &self.side_a
    }

    pub fn side_b(&self) -> &QubitSubset {
        &self.side_b
    }

    pub fn traced(&self) -> &QubitSubset {
        &self.traced
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            n_qubits: self.n_qubits,
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
            traced: self.traced.clone(),
        }
    }

    /// `"S1;P1P2S2"`-style label from per-qubit names.
    pub fn label(&self, names: &[&str]) -> String {
        let mut s = String::new();
        for &q in self.side_a.indices() {
            s.push_str(names[q]);
        }
        s.push(';');
        for &q in self.side_b.indices() {
            s.push_str(names[q]);
        }
        s
    }
}

/// Anything a reduced density matrix can be taken from.
pub trait DensitySource {
    fn register_size(&self) -> Result<usize>;
    fn reduced(&self, keep: &QubitSubset) -> Result<ComplexMatrix>;
}

impl DensitySource for StateVector {
    fn register_size(&self) -> Result<usize> {
        Ok(self.num_qubits())
    }

    fn reduced(&self, keep: &QubitSubset) -> Result<ComplexMatrix> {
        self.reduced_density(keep)
    }
}

impl DensitySource for ComplexMatrix {
    fn register_size(&self) -> Result<usize> {
        self.num_qubits()
    }

    fn reduced(&self, keep: &QubitSubset) -> Result<ComplexMatrix> {
        if keep.len() == self.num_qubits()? {
            Ok(self.clone())
        } else {
            partial_trace(self, keep)
        }
    }
}

/// Trace norm of the partial transpose over `part.side_a()` of the reduced,
/// unit-trace state on `side_a ∪ side_b`.
pub fn partial_transpose_trace_norm<S: DensitySource + ?Sized>(state: &S, part: &Bipartition) -> Result<f64> {
    if state.register_size()? != part.n_qubits {
        return Err(Error::PartitionError("partition does not match the register size"));
    }
    let kept = part.side_a.union(&part.side_b);
    let rho = state.reduced(&kept)?;
    let trace = rho.trace().re;
    if !(trace > 0.0) {
        return Err(Error::ZeroNorm);
    }
    // side A positions inside the reduced register
    let local_a = QubitSubset::new(
        part.side_a.indices().iter().map(|q| kept.indices().binary_search(q).expect("kept")).collect(),
    )?;
    let spectrum = hermitian_eigenvalues(&partial_transpose(&rho, &local_a)?)?;
    // Σ|μ| = Tr ρ + 2 Σ_{μ<0} |μ|; summing only the clamped negative part keeps
    // PPT states at exactly zero
    let negative: f64 = spectrum.iter().filter(|&&mu| mu <= -EIGENVALUE_CLAMP).map(|mu| -mu).sum();
    Ok(1.0 + 2.0 * negative / trace)
}

/// Negativity `(Σ|μ_i| - 1) / (d - 1)` over the partial-transpose spectrum,
/// with `d = min(2^|A|, 2^|B|)`, the largest attainable trace norm. Traced
/// qubits are removed first. The result is clamped to `[0, 1]`.
pub fn negativity<S: DensitySource + ?Sized>(state: &S, part: &Bipartition) -> Result<f64> {
    let norm = partial_transpose_trace_norm(state, part)?;
    let d = (1usize << part.side_a.len().min(part.side_b.len())) as f64;
    Ok(((norm - 1.0) / (d - 1.0)).clamp(0.0, 1.0))
}

/// `2 (1 - Tr ρ²)` of the reduced state on `keep`.
pub fn linear_entropy(state: &StateVector, keep: &QubitSubset) -> Result<f64> {
    linear_entropy_with_prefactor(state, keep, LINEAR_ENTROPY_PREFACTOR)
}

pub fn linear_entropy_with_prefactor(state: &StateVector, keep: &QubitSubset, prefactor: f64) -> Result<f64> {
    let rho = state.reduced_density(keep)?;
    let trace = rho.trace().re;
    if !(trace > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let purity: f64 = rho.as_slice().iter().map(|z| z.norm_sqr()).sum::<f64>() / (trace * trace);
    Ok(prefactor * (1.0 - purity))
}

pub fn enumerate_bipartitions(n_qubits: usize, kind: BipartitionKind) -> Result<Vec<Bipartition>> {
    if n_qubits < 2 {
        return Err(Error::PartitionError("need at least two qubits"));
    }
    let single = |q: usize| QubitSubset::from([q]);
    let mut out = Vec::new();
    match kind {
        BipartitionKind::OneVsRest => {
            for q in 0..n_qubits {
                out.push(Bipartition::new(n_qubits, single(q), single(q).complement(n_qubits))?);
            }
        }
        BipartitionKind::OneVsOne => {
            for i in 0..n_qubits {
                for j in i + 1..n_qubits {
                    out.push(Bipartition::new(n_qubits, single(i), single(j))?);
                }
            }
        }
        BipartitionKind::PairVsPair => {
            if n_qubits != 4 {
                return Err(Error::PartitionError("pair-vs-pair splits are defined for four qubits"));
            }
            for partner in 1..4 {
                let a = QubitSubset::from([0, partner]);
                let b = a.complement(4);
                out.push(Bipartition::new(4, a, b)?);
            }
        }
        BipartitionKind::OneVsTwo => {
            if n_qubits != 4 {
                return Err(Error::PartitionError("one-vs-two splits are defined for four qubits"));
            }
            for traced in 0..4 {
                let remaining = single(traced).complement(4);
                for &i in remaining.indices() {
                    let b = QubitSubset::new(remaining.indices().iter().copied().filter(|&q| q != i).collect())?;
                    out.push(Bipartition::new(4, single(i), b)?);
                }
            }
        }
    }
    Ok(out)
}

/// Averaged negativities of a four-qubit state, one per bipartition type.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MeanNegativities {
    /// `{i; j k l}`
    pub n1: f64,
    /// `{i; j}`
    pub n2: f64,
    /// `{i; j k}`
    pub n3: f64,
    /// `{i j; k l}`
    pub n4: f64,
}

impl MeanNegativities {
    pub fn as_array(&self) -> [f64; 4] {
        [self.n1, self.n2, self.n3, self.n4]
    }

    pub fn difference(&self, base: &MeanNegativities) -> [f64; 4] {
        [self.n1 - base.n1, self.n2 - base.n2, self.n3 - base.n3, self.n4 - base.n4]
    }
}

pub fn mean_negativity<S: DensitySource + ?Sized>(state: &S, kind: BipartitionKind) -> Result<f64> {
    let parts = enumerate_bipartitions(state.register_size()?, kind)?;
    let mut sum = 0.0;
    for part in &parts {
        sum += negativity(state, part)?;
    }
    Ok(sum / parts.len() as f64)
}

pub fn mean_negativities(state: &StateVector) -> Result<MeanNegativities> {
    if state.num_qubits() != 4 {
        return Err(Error::PartitionError("mean negativities are defined for four-qubit states"));
    }
    Ok(MeanNegativities {
        n1: mean_negativity(state, BipartitionKind::OneVsRest)?,
        n2: mean_negativity(state, BipartitionKind::OneVsOne)?,
        n3: mean_negativity(state, BipartitionKind::OneVsTwo)?,
        n4: mean_negativity(state, BipartitionKind::PairVsPair)?,
    })
}
