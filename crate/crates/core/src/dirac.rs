//! Kinematics and spinor algebra in the Dirac representation.
//!
//! A bispinor is stored as a two-qubit vector, intrinsic parity first and spin
//! second: `(P+,S0), (P+,S1), (P-,S0), (P-,S1)`. Parity `+` is the upper block
//! of the Dirac representation and spin `0` is the `σz = +1` state.
//!
//! Boost convention: [`BoostParams`] with rapidity `ω` and direction `n` is the
//! active boost that adds rapidity `ω` along `n` to every momentum, i.e. the
//! observing frame moves along `-n`. [`boost_four_momentum`] and
//! [`boost_bispinor_matrix`] both follow it, so boosting `u(p, s)` along `p`
//! yields `u(Λp, s)`.

use alloc::vec;

use libm::{cosh, sinh, sqrt};

use crate::error::{Error, Result};
use crate::tensor::{kron, Complex64, ComplexMatrix, StateVector, I, ONE, ZERO};

pub const DEFAULT_MASS: f64 = 1.0;

const PHASE_REFERENCE_FLOOR: f64 = 1e-12;
const ON_SHELL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }

    pub fn flipped(self) -> Spin {
        match self {
            Spin::Up => Spin::Down,
            Spin::Down => Spin::Up,
        }
    }
}

/// Polarisation basis for the two-component spinors `χ_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SpinBasis {
    /// `σz` eigenstates.
    #[default]
    ZAxis,
    /// Eigenstates of `p̂·σ`.
    Helicity,
}

/// On-shell four-momentum in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    mass: f64,
    e: f64,
    p: [f64; 3],
}

impl FourMomentum {
    pub fn new(mass: f64, p: [f64; 3]) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) || p.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("mass must be positive and momentum finite"));
        }
        let e = sqrt(mass * mass + dot(&p, &p));
        Ok(FourMomentum { mass, e, p })
    }

    pub fn at_rest(mass: f64) -> Result<Self> {
        Self::new(mass, [0.0; 3])
    }

    /// Momentum `m sinh ξ` along the z axis (negative `ξ` points along `-z`).
    pub fn along_z(mass: f64, rapidity: f64) -> Result<Self> {
        let mut k = Self::new(mass, [0.0, 0.0, mass * sinh(rapidity)])?;
        k.e = mass * cosh(rapidity);
        Ok(k)
    }

    /// Checks the mass shell from raw components.
    pub fn from_components(e: f64, px: f64, py: f64, pz: f64) -> Result<Self> {
        let p = [px, py, pz];
        let mass_squared = e * e - dot(&p, &p);
        if !(e > 0.0) || !(mass_squared > 0.0) {
            return Err(Error::OffShell { e, mass_squared });
        }
        Ok(FourMomentum { mass: sqrt(mass_squared), e, p })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn e(&self) -> f64 {
        self.e
    }

    pub fn px(&self) -> f64 {
        self.p[0]
    }

    pub fn py(&self) -> f64 {
        self.p[1]
    }

    pub fn pz(&self) -> f64 {
        self.p[2]
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.p
    }

    pub fn magnitude(&self) -> f64 {
        sqrt(dot(&self.p, &self.p))
    }

    /// `e² - |p|² - m²`, relative to `e²`.
    pub fn mass_shell_residual(&self) -> f64 {
        (self.e * self.e - dot(&self.p, &self.p) - self.mass * self.mass) / (self.e * self.e)
    }

    pub fn is_on_shell(&self) -> bool {
        self.e > 0.0 && libm::fabs(self.mass_shell_residual()) < ON_SHELL_TOLERANCE
    }
}

/// Pure boost: rapidity and unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    omega: f64,
    n: [f64; 3],
}

impl BoostParams {
    /// Normalises `direction`; it must be finite and nonzero.
    pub fn new(omega: f64, direction: [f64; 3]) -> Result<Self> {
        let len = sqrt(dot(&direction, &direction));
        if !omega.is_finite() {
            return Err(Error::InvalidParameter("rapidity must be finite"));
        }
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::InvalidDirection);
        }
        Ok(BoostParams { omega, n: direction.map(|c| c / len) })
    }

    pub fn along_x(omega: f64) -> Self {
        BoostParams { omega, n: [1.0, 0.0, 0.0] }
    }

    pub fn along_z(omega: f64) -> Self {
        BoostParams { omega, n: [0.0, 0.0, 1.0] }
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn direction(&self) -> [f64; 3] {
        self.n
    }

    pub fn with_omega(&self, omega: f64) -> Self {
        BoostParams { omega, n: self.n }
    }
}

/// Unit-norm four-component Dirac spinor with a fixed global phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bispinor([Complex64; 4]);

impl Bispinor {
    /// Normalises and fixes the global phase (first non-negligible component
    /// real and positive).
    pub fn from_components(mut amps: [Complex64; 4]) -> Result<Self> {
        let norm = sqrt(amps.iter().map(|a| a.norm_sqr()).sum::<f64>());
        if !(norm > 1e-14) {
            return Err(Error::ZeroNorm);
        }
        for a in amps.iter_mut() {
            *a /= norm;
        }
        fix_global_phase(&mut amps);
        Ok(Bispinor(amps))
    }

    pub fn components(&self) -> &[Complex64; 4] {
        &self.0
    }

    pub fn inner(&self, other: &Bispinor) -> Complex64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    /// Largest componentwise distance; both sides are phase-fixed so this is a
    /// phase-insensitive comparison.
    pub fn distance(&self, other: &Bispinor) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn to_state(&self) -> StateVector {
        StateVector::new(vec![self.0[0], self.0[1], self.0[2], self.0[3]]).expect("four amplitudes")
    }
}

fn fix_global_phase(amps: &mut [Complex64]) {
    let reference = amps
        .iter()
        .find(|a| a.norm() > PHASE_REFERENCE_FLOOR)
        .or_else(|| amps.iter().find(|a| a.norm() > 0.0))
        .copied();
    if let Some(r) = reference {
        let phase = r.conj() / r.norm();
        for a in amps.iter_mut() {
            *a *= phase;
        }
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_row_major(2, 2, vec![ZERO, ONE, ONE, ZERO]).expect("2x2")
}

pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_row_major(2, 2, vec![ZERO, -I, I, ZERO]).expect("2x2")
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
}

/// `α_i = σx ⊗ σ_i` for `axis` 0, 1, 2.
pub fn alpha(axis: usize) -> ComplexMatrix {
    let sigma = match axis {
        0 => sigma_x(),
        1 => sigma_y(),
        2 => sigma_z(),
        _ => panic!("axis must be 0, 1 or 2"),
    };
    kron(&sigma_x(), &sigma)
}

/// `β = σz ⊗ 1`.
pub fn beta() -> ComplexMatrix {
    kron(&sigma_z(), &ComplexMatrix::identity(2))
}

/// `n·α` for a real three-vector.
pub fn alpha_dot(n: [f64; 3]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    for (axis, &c) in n.iter().enumerate() {
        if c != 0.0 {
            m = &m + &alpha(axis).scale(Complex64::new(c, 0.0));
        }
    }
    m
}

/// Free Dirac Hamiltonian `p·α + m β` in momentum space.
pub fn dirac_hamiltonian(p: &FourMomentum) -> ComplexMatrix {
    &alpha_dot(p.momentum()) + &beta().scale(Complex64::new(p.mass(), 0.0))
}

/// `(p·σ) χ`.
fn sigma_dot(p: [f64; 3], chi: [Complex64; 2]) -> [Complex64; 2] {
    let [px, py, pz] = p;
    let minus = Complex64::new(px, -py);
    let plus = Complex64::new(px, py);
    [chi[0] * pz + chi[1] * minus, chi[0] * plus - chi[1] * pz]
}

/// Rapidity of a frame moving with speed `v` (units of c).
///
/// Computed as `asinh(v / sqrt(1 - v²))`, which is `atanh(v)`.
pub fn rapidity_from_velocity(v: f64) -> Result<f64> {
    if v.is_nan() || v < 0.0 {
        return Err(Error::InvalidParameter("speed must be non-negative"));
    }
    if v >= 1.0 {
        return Err(Error::SuperluminalInput(v));
    }
    Ok(libm::atanh(v))
}

/// Eigenvector of `p̂·σ` with eigenvalue `s`.
pub fn helicity_spinor(p: [f64; 3], s: Spin) -> Result<[Complex64; 2]> {
    let r = sqrt(dot(&p, &p));
    if !(r > 0.0) {
        return Err(Error::DegenerateHelicity);
    }
    let cos_theta = (p[2] / r).clamp(-1.0, 1.0);
    let c = sqrt(0.5 * (1.0 + cos_theta));
    let s_half = sqrt(0.5 * (1.0 - cos_theta));
    let phi = libm::atan2(p[1], p[0]);
    let e_phi = Complex64::new(libm::cos(phi), libm::sin(phi));
    let mut chi = match s {
        Spin::Up => [Complex64::new(c, 0.0), e_phi * s_half],
        Spin::Down => [-e_phi.conj() * s_half, Complex64::new(c, 0.0)],
    };
    fix_global_phase(&mut chi);
    Ok(chi)
}

fn z_spinor(s: Spin) -> [Complex64; 2] {
    match s {
        Spin::Up => [ONE, ZERO],
        Spin::Down => [ZERO, ONE],
    }
}

fn two_spinor(p: &FourMomentum, s: Spin, basis: SpinBasis) -> Result<[Complex64; 2]> {
    match basis {
        SpinBasis::ZAxis => Ok(z_spinor(s)),
        SpinBasis::Helicity => helicity_spinor(p.momentum(), s),
    }
}

/// Upper and lower block weights `f(p) = sqrt((E+m)/2E)` and `1/sqrt(2E(E+m))`.
fn block_weights(p: &FourMomentum) -> (f64, f64) {
    let (e, m) = (p.e(), p.mass());
    (sqrt((e + m) / (2.0 * e)), 1.0 / sqrt(2.0 * e * (e + m)))
}

/// Positive-energy solution: `H u = +E u`.
pub fn bispinor_u(p: &FourMomentum, s: Spin, basis: SpinBasis) -> Result<Bispinor> {
    let chi = two_spinor(p, s, basis)?;
    let (f, d) = block_weights(p);
    let lower = sigma_dot(p.momentum(), chi);
    Bispinor::from_components([chi[0] * f, chi[1] * f, lower[0] * d, lower[1] * d])
}

/// Negative-energy solution: `H v = -E v`, orthogonal to `u(p, ·)`.
pub fn bispinor_v(p: &FourMomentum, s: Spin, basis: SpinBasis) -> Result<Bispinor> {
    let chi = two_spinor(p, s, basis)?;
    let (f, d) = block_weights(p);
    let upper = sigma_dot(p.momentum(), chi);
    Bispinor::from_components([upper[0] * d, upper[1] * d, -chi[0] * f, -chi[1] * f])
}

pub fn boost_four_momentum(p: &FourMomentum, b: &BoostParams) -> FourMomentum {
    let (ch, sh) = (cosh(b.omega), sinh(b.omega));
    let n_dot_p = dot(&b.n, &p.p);
    let shift = (ch - 1.0) * n_dot_p + sh * p.e;
    FourMomentum {
        mass: p.mass,
        e: ch * p.e + sh * n_dot_p,
        p: [p.p[0] + b.n[0] * shift, p.p[1] + b.n[1] * shift, p.p[2] + b.n[2] * shift],
    }
}

/// Bispinor representation `exp(ω/2 n·α) = cosh(ω/2) I + sinh(ω/2) n·α`.
///
/// Hermitian and not unitary for `ω ≠ 0`. This is `cosh(ω/2) I - sinh(ω/2) m·α`
/// with `m = -n`, the observing frame's direction of motion.
pub fn boost_bispinor_matrix(b: &BoostParams) -> ComplexMatrix {
    let half = 0.5 * b.omega;
    &ComplexMatrix::identity(4).scale(Complex64::new(cosh(half), 0.0))
        + &alpha_dot(b.n).scale(Complex64::new(sinh(half), 0.0))
}

/// `S u`, renormalised by its actual norm.
pub fn boost_bispinor(u: &Bispinor, b: &BoostParams) -> Bispinor {
    let s = boost_bispinor_matrix(b);
    let out = s.mul_vec(u.components()).expect("4x4 times 4");
    // S is positive definite, so the image is never null
    Bispinor::from_components([out[0], out[1], out[2], out[3]]).expect("boost image is nonzero")
}
