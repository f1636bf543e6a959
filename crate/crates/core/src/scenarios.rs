//! Two-particle Bell-like bispinor states and their boost frameworks.
//!
//! Register order is `(P1, S1, P2, S2)`: intrinsic parity and spin of particle
//! 1, then of particle 2.

use alloc::vec::Vec;

use libm::{cosh, fabs, sin, sqrt, tanh};

use crate::dirac::{
    bispinor_u, boost_bispinor_matrix, boost_four_momentum, BoostParams, FourMomentum, Spin, SpinBasis,
};
use crate::error::{Error, Result};
use crate::measures::{linear_entropy, mean_negativities, negativity, Bipartition, MeanNegativities};
use crate::tensor::{kron, normalize, Complex64, QubitSubset, StateVector};

pub const P1: usize = 0;
pub const S1: usize = 1;
pub const P2: usize = 2;
pub const S2: usize = 3;
pub const QUBIT_NAMES: [&str; 4] = ["P1", "S1", "P2", "S2"];

#[derive(Debug, Clone, PartialEq)]
pub struct TwoParticleState {
    psi: StateVector,
    p: FourMomentum,
    q: FourMomentum,
    theta: f64,
}

impl TwoParticleState {
    pub fn psi(&self) -> &StateVector {
        &self.psi
    }

    /// Momentum of particle 1.
    pub fn p(&self) -> &FourMomentum {
        &self.p
    }

    /// Momentum of particle 2.
    pub fn q(&self) -> &FourMomentum {
        &self.q
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// `cos θ u(p,+)⊗u(q,-) + sin θ u(p,-)⊗u(q,+)`, spins along z.
pub fn build_bell_state(p: &FourMomentum, q: &FourMomentum, theta: f64) -> Result<TwoParticleState> {
    let u = |k: &FourMomentum, s| bispinor_u(k, s, SpinBasis::ZAxis).map(|b| b.to_state());
    let first = u(p, Spin::Up)?.kron(&u(q, Spin::Down)?);
    let second = u(p, Spin::Down)?.kron(&u(q, Spin::Up)?);
    let (c, s) = (libm::cos(theta), sin(theta));
    let amps = first.amplitudes().iter().zip(second.amplitudes()).map(|(a, b)| a * c + b * s).collect();
    let psi = normalize(&StateVector::new(amps)?)?;
    Ok(TwoParticleState { psi, p: *p, q: *q, theta })
}

fn check_rapidity(xi0: f64) -> Result<()> {
    if !(xi0 >= 0.0) || !xi0.is_finite() {
        return Err(Error::InvalidParameter("initial rapidity must be finite and non-negative"));
    }
    Ok(())
}

/// Particle 1 at rest, particle 2 moving along `-z` with rapidity `xi0`.
pub fn parallel_framework(mass: f64, xi0: f64) -> Result<(FourMomentum, FourMomentum)> {
    check_rapidity(xi0)?;
    Ok((FourMomentum::at_rest(mass)?, FourMomentum::along_z(mass, -xi0)?))
}

/// Centre-of-momentum pair: `±m sinh(xi0)` along z.
pub fn com_framework(mass: f64, xi0: f64) -> Result<(FourMomentum, FourMomentum)> {
    check_rapidity(xi0)?;
    Ok((FourMomentum::along_z(mass, xi0)?, FourMomentum::along_z(mass, -xi0)?))
}

/// `(S ⊗ S) Ψ`, renormalised; momentum labels follow the same boost.
pub fn apply_boost(state: &TwoParticleState, b: &BoostParams) -> TwoParticleState {
    let s = boost_bispinor_matrix(b);
    let amps = kron(&s, &s).mul_vec(state.psi.amplitudes()).expect("16x16 times 16");
    let psi = normalize(&StateVector::new(amps).expect("16 amplitudes")).expect("boost is invertible");
    TwoParticleState {
        psi,
        p: boost_four_momentum(&state.p, b),
        q: boost_four_momentum(&state.q, b),
        theta: state.theta,
    }
}

/// Which boost scenario a sweep runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoostFamily {
    /// [`parallel_framework`] boosted along `+z`.
    Parallel,
    /// [`com_framework`] boosted along `+x`.
    Perpendicular,
}

impl BoostFamily {
    pub fn initial_momenta(self, mass: f64, xi0: f64) -> Result<(FourMomentum, FourMomentum)> {
        match self {
            BoostFamily::Parallel => parallel_framework(mass, xi0),
            BoostFamily::Perpendicular => com_framework(mass, xi0),
        }
    }

    pub fn boost(self, omega: f64) -> BoostParams {
        match self {
            BoostFamily::Parallel => BoostParams::along_z(omega),
            BoostFamily::Perpendicular => BoostParams::along_x(omega),
        }
    }

    pub fn initial_state(self, mass: f64, xi0: f64, theta: f64) -> Result<TwoParticleState> {
        let (p, q) = self.initial_momenta(mass, xi0)?;
        build_bell_state(&p, &q, theta)
    }
}

/// The seven bipartition negativities tracked in the boost frameworks.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NegativitySet {
    /// `{S1; P1 P2 S2}`
    pub s1_rest: f64,
    /// `{S2; P1 P2 S1}`
    pub s2_rest: f64,
    /// `{P1; S1 P2 S2}`
    pub p1_rest: f64,
    /// `{P2; P1 S1 S2}`
    pub p2_rest: f64,
    /// `{S1; S2}`
    pub s1s2: f64,
    /// `{P1 P2; S1 S2}`
    pub p1p2_s1s2: f64,
    /// `{P1; P2}`
    pub p1p2: f64,
}

/// Closed forms of the parallel framework return the same seven quantities.
pub type ClosedFormNegativities = NegativitySet;

impl NegativitySet {
    pub const NAMES: [&'static str; 7] = ["S1_rest", "S2_rest", "P1_rest", "P2_rest", "S1_S2", "P1P2_S1S2", "P1_P2"];

    pub fn as_array(&self) -> [f64; 7] {
        [self.s1_rest, self.s2_rest, self.p1_rest, self.p2_rest, self.s1s2, self.p1p2_s1s2, self.p1p2]
    }

    pub fn max_abs_diff(&self, other: &NegativitySet) -> f64 {
        self.as_array().iter().zip(other.as_array()).map(|(a, b)| fabs(a - b)).fold(0.0, f64::max)
    }

    /// Bipartitions in field order.
    pub fn partitions() -> [Bipartition; 7] {
        let part = |a: &[usize], b: &[usize]| {
            Bipartition::new(4, QubitSubset::from(a), QubitSubset::from(b)).expect("static partition")
        };
        [
            part(&[S1], &[P1, P2, S2]),
            part(&[S2], &[P1, S1, P2]),
            part(&[P1], &[S1, P2, S2]),
            part(&[P2], &[P1, S1, S2]),
            part(&[S1], &[S2]),
            part(&[P1, P2], &[S1, S2]),
            part(&[P1], &[P2]),
        ]
    }

    pub fn measure(psi: &StateVector) -> Result<NegativitySet> {
        let mut v = [0.0; 7];
        for (slot, part) in v.iter_mut().zip(Self::partitions().iter()) {
            *slot = negativity(psi, part)?;
        }
        Ok(NegativitySet {
            s1_rest: v[0],
            s2_rest: v[1],
            p1_rest: v[2],
            p2_rest: v[3],
            s1s2: v[4],
            p1p2_s1s2: v[5],
            p1p2: v[6],
        })
    }
}

/// `{P1 S1; P2 S2}`: all degrees of freedom of one particle against the other's.
pub fn particle_partition() -> Bipartition {
    Bipartition::new(4, [P1, S1], [P2, S2]).expect("static partition")
}

/// `E_L = 2 (1 - Tr ρ1²)` with `ρ1` the state of particle 1.
pub fn particle_linear_entropy(psi: &StateVector) -> Result<f64> {
    linear_entropy(psi, &QubitSubset::from([P1, S1]))
}

fn sech(x: f64) -> f64 {
    1.0 / cosh(x)
}

/// Analytic negativities of the parallel framework after a boost `omega`.
pub fn closed_form_parallel(theta: f64, xi0: f64, omega: f64) -> ClosedFormNegativities {
    let s2t = fabs(sin(2.0 * theta));
    let damping = sech(omega) * sech(omega - xi0);
    NegativitySet {
        s1_rest: s2t,
        s2_rest: s2t,
        p1_rest: fabs(tanh(omega) * s2t),
        p2_rest: fabs(tanh(omega - xi0) * s2t),
        s1s2: damping * s2t,
        p1p2_s1s2: sqrt(1.0 - damping * damping) * s2t / 3.0,
        p1p2: 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaRow {
    pub omega: f64,
    /// `N^(k)[Ψ'] - N^(k)[Ψ]` for `k = 1..4`.
    pub delta: [f64; 4],
}

pub fn mean_negativities_after_boost(initial: &TwoParticleState, b: &BoostParams) -> Result<MeanNegativities> {
    mean_negativities(apply_boost(initial, b).psi())
}

/// `ΔN^(k)` along a rapidity grid. Rows follow grid order.
pub fn delta_mean_negativities(
    theta: f64,
    xi0: f64,
    grid: &[f64],
    family: BoostFamily,
    mass: f64,
) -> Result<Vec<DeltaRow>> {
    let initial = family.initial_state(mass, xi0, theta)?;
    let base = mean_negativities(initial.psi())?;
    grid.iter()
        .map(|&omega| {
            let boosted = mean_negativities_after_boost(&initial, &family.boost(omega))?;
            Ok(DeltaRow { omega, delta: boosted.difference(&base) })
        })
        .collect()
}

/// `‖(S ⊗ S) Ψ‖²` before renormalisation, useful for diagnostics.
pub fn boost_norm_factor(state: &TwoParticleState, b: &BoostParams) -> f64 {
    let s = boost_bispinor_matrix(b);
    kron(&s, &s).mul_vec(state.psi.amplitudes()).expect("16x16 times 16").iter().map(Complex64::norm_sqr).sum()
}
