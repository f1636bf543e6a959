//! Six-qubit states with a dichotomic momentum label per particle.
//!
//! Register order is `(P1, S1, p1, P2, S2, p2)`. A momentum qubit in `|1⟩`
//! carries `p`, in `|0⟩` carries `q`. Both reductions below return a density
//! matrix over `(S1, p1, S2, p2)`.

use core::f64::consts::FRAC_PI_2;

use libm::{atan, cos, cosh, sin, sinh};

use crate::dirac::{
    bispinor_u, boost_bispinor_matrix, boost_four_momentum, BoostParams, FourMomentum, Spin, SpinBasis,
};
use crate::error::{Error, Result};
use crate::measures::{negativity, Bipartition};
use crate::scenarios::com_framework;
use crate::tensor::{kron, normalize, Complex64, ComplexMatrix, QubitSubset, StateVector};

pub const P1: usize = 0;
pub const S1: usize = 1;
pub const M1: usize = 2;
pub const P2: usize = 3;
pub const S2: usize = 4;
pub const M2: usize = 5;
pub const QUBIT_NAMES: [&str; 6] = ["P1", "S1", "p1", "P2", "S2", "p2"];

/// Positions in the reduced `(S1, p1, S2, p2)` register.
pub mod reduced {
    pub const S1: usize = 0;
    pub const M1: usize = 1;
    pub const S2: usize = 2;
    pub const M2: usize = 3;
    pub const QUBIT_NAMES: [&str; 4] = ["S1", "p1", "S2", "p2"];
}

/// Wigner angles closer than this to `π/2` map to [`CAPPED_RAPIDITY`].
pub const ASYMPTOTIC_WINDOW: f64 = 1e-3;
pub const CAPPED_RAPIDITY: f64 = 10.0;
const BISECTION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SixQubitState {
    psi: StateVector,
    p: FourMomentum,
    q: FourMomentum,
    alpha: f64,
    theta: f64,
}

impl SixQubitState {
    pub fn psi(&self) -> &StateVector {
        &self.psi
    }

    /// Momentum carried by a `|1⟩` label.
    pub fn p(&self) -> &FourMomentum {
        &self.p
    }

    /// Momentum carried by a `|0⟩` label.
    pub fn q(&self) -> &FourMomentum {
        &self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

fn branch(a: &StateVector, m1: usize, b: &StateVector, m2: usize) -> StateVector {
    a.kron(&StateVector::basis(1, m1)).kron(&b.kron(&StateVector::basis(1, m2)))
}

/// Momentum superposition of two Bell-like spin states in the centre of momentum.
///
/// The first branch has particle 1 at `p` and particle 2 at `q`, the second the
/// swapped assignment. Each branch uses the bispinors of its actual momenta, so
/// the norm is computed rather than assumed.
pub fn build_superposed(mass: f64, xi0: f64, alpha: f64, theta: f64) -> Result<SixQubitState> {
    if xi0 == 0.0 {
        return Err(Error::DegenerateMomenta);
    }
    if !(xi0 > 0.0) || !xi0.is_finite() {
        return Err(Error::InvalidParameter("initial rapidity must be finite and positive"));
    }
    let (p, q) = com_framework(mass, xi0)?;
    let u = |k: &FourMomentum, s| bispinor_u(k, s, SpinBasis::ZAxis).map(|b| b.to_state());
    let (ct, st) = (cos(theta), sin(theta));
    let terms = [
        (cos(alpha) * ct, branch(&u(&p, Spin::Up)?, 1, &u(&q, Spin::Down)?, 0)),
        (cos(alpha) * st, branch(&u(&p, Spin::Down)?, 1, &u(&q, Spin::Up)?, 0)),
        (sin(alpha) * ct, branch(&u(&q, Spin::Up)?, 0, &u(&p, Spin::Down)?, 1)),
        (sin(alpha) * st, branch(&u(&q, Spin::Down)?, 0, &u(&p, Spin::Up)?, 1)),
    ];
    let mut amps = alloc::vec![Complex64::new(0.0, 0.0); 64];
    for (c, t) in &terms {
        for (acc, a) in amps.iter_mut().zip(t.amplitudes()) {
            *acc += a * c;
        }
    }
    let psi = normalize(&StateVector::new(amps)?)?;
    Ok(SixQubitState { psi, p, q, alpha, theta })
}

/// `(S ⊗ I) ⊗ (S ⊗ I)` on the register, renormalised.
pub fn boost_superposed(state: &SixQubitState, b: &BoostParams) -> SixQubitState {
    let per_particle = kron(&boost_bispinor_matrix(b), &ComplexMatrix::identity(2));
    let amps = kron(&per_particle, &per_particle).mul_vec(state.psi.amplitudes()).expect("64x64 times 64");
    let psi = normalize(&StateVector::new(amps).expect("64 amplitudes")).expect("boost is invertible");
    SixQubitState {
        psi,
        p: boost_four_momentum(&state.p, b),
        q: boost_four_momentum(&state.q, b),
        alpha: state.alpha,
        theta: state.theta,
    }
}

fn spin_momentum_register() -> QubitSubset {
    QubitSubset::from([S1, M1, S2, M2])
}

/// `Tr[Π₊ρ]` with `Π₊` selecting positive parity on both particles.
pub fn positive_parity_weight(state: &SixQubitState) -> f64 {
    let odd = (1 << (5 - P1)) | (1 << (5 - P2));
    state.psi.amplitudes().iter().enumerate().filter(|(i, _)| i & odd == 0).map(|(_, a)| a.norm_sqr()).sum()
}

/// `Π₊ρΠ₊ / Tr[Π₊ρ]` with the parity qubits then traced out.
pub fn project_positive_parity(state: &SixQubitState) -> Result<ComplexMatrix> {
    let odd = (1 << (5 - P1)) | (1 << (5 - P2));
    let weight = positive_parity_weight(state);
    if weight <= 1e-12 {
        return Err(Error::ProjectionAnnihilated { weight });
    }
    let amps = state
        .psi
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| if i & odd == 0 { *a } else { Complex64::new(0.0, 0.0) })
        .collect();
    normalize(&StateVector::new(amps)?)?.reduced_density(&spin_momentum_register())
}

/// `Tr_{P1,P2} ρ`.
pub fn trace_out_parity(state: &SixQubitState) -> ComplexMatrix {
    state.psi.reduced_density(&spin_momentum_register()).expect("static subset")
}

/// Negativities of a reduced `(S1, p1, S2, p2)` density matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpinMomentumNegativities {
    /// `{S1; p1 S2 p2}`
    pub s1_rest: f64,
    /// `{S1 S2; p1 p2}`
    pub spin_momentum: f64,
    /// `{S1; S2}` with the momenta traced
    pub spin_spin: f64,
}

impl SpinMomentumNegativities {
    pub fn measure(rho: &ComplexMatrix) -> Result<SpinMomentumNegativities> {
        use reduced::{M1, M2, S1, S2};
        Ok(SpinMomentumNegativities {
            s1_rest: negativity(rho, &Bipartition::new(4, [S1], [M1, S2, M2])?)?,
            spin_momentum: negativity(rho, &Bipartition::new(4, [S1, S2], [M1, M2])?)?,
            spin_spin: negativity(rho, &Bipartition::new(4, [S1], [S2])?)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerParams {
    pub xi0: f64,
    pub omega: f64,
    pub delta: f64,
    /// The requested angle was only reachable as a limit; rapidities are capped.
    pub asymptotic: bool,
}

/// `atan(sinh ξ0 sinh ω / (cosh ξ0 + cosh ω))`.
pub fn wigner_angle(xi0: f64, omega: f64) -> f64 {
    atan(sinh(xi0) * sinh(omega) / (cosh(xi0) + cosh(omega)))
}

/// Symmetric rapidities `ξ0 = ω` producing the Wigner angle `delta`.
pub fn rapidities_for_wigner_angle(delta: f64) -> Result<WignerParams> {
    if !(0.0..FRAC_PI_2).contains(&delta) {
        return Err(Error::UnreachableAngle(delta));
    }
    if delta > FRAC_PI_2 - ASYMPTOTIC_WINDOW {
        let w = CAPPED_RAPIDITY;
        return Ok(WignerParams { xi0: w, omega: w, delta: wigner_angle(w, w), asymptotic: true });
    }
    let (mut lo, mut hi) = (0.0_f64, CAPPED_RAPIDITY);
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if wigner_angle(mid, mid) < delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let w = 0.5 * (lo + hi);
    Ok(WignerParams { xi0: w, omega: w, delta, asymptotic: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::hermitian_eigenvalues;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::FRAC_PI_4;

    fn assert_density(rho: &ComplexMatrix) {
        assert!(rho.hermiticity_deviation() < 1e-12);
        assert_abs_diff_eq!(rho.trace().re, 1.0, epsilon = 1e-12);
        assert!(hermitian_eigenvalues(rho).unwrap().iter().all(|&l| l > -1e-10));
    }

    #[test]
    fn degenerate_and_invalid_momenta() {
        assert_eq!(build_superposed(1.0, 0.0, 0.1, 0.2), Err(Error::DegenerateMomenta));
        assert!(matches!(build_superposed(1.0, -1.0, 0.1, 0.2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn unboosted_state_is_spin_momentum_separable() {
        // {S1; p1 S2 p2} still sees the spin-spin Bell correlation.
        for (alpha, theta) in [(0.0, FRAC_PI_4), (FRAC_PI_4, FRAC_PI_4), (0.3, 1.1)] {
            let st = build_superposed(1.0, 0.5, alpha, theta).unwrap();
            let traced = trace_out_parity(&st);
            assert_density(&traced);
            let n = SpinMomentumNegativities::measure(&traced).unwrap();
            assert!(n.spin_momentum < 1e-10, "{n:?}");
            assert!(n.s1_rest > 0.5);
        }
    }

    #[test]
    fn unboosted_projection_is_pure() {
        let st = build_superposed(1.0, 0.5, FRAC_PI_4, FRAC_PI_4).unwrap();
        let rho = project_positive_parity(&st).unwrap();
        assert_density(&rho);
        let purity = rho.checked_mul(&rho).unwrap().trace().re;
        assert_abs_diff_eq!(purity, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(SpinMomentumNegativities::measure(&rho).unwrap().spin_spin, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn identity_boost() {
        let st = build_superposed(1.0, 1.0, 0.4, 0.9).unwrap();
        let b = boost_superposed(&st, &BoostParams::along_x(0.0));
        assert!(b.psi().amplitudes().iter().zip(st.psi().amplitudes()).all(|(a, c)| (a - c).norm() < 1e-15));
    }

    #[test]
    fn boosted_reductions_are_densities() {
        let st = build_superposed(1.0, 1.0, 0.4, 0.9).unwrap();
        let b = boost_superposed(&st, &BoostParams::along_x(2.0));
        assert_density(&trace_out_parity(&b));
        assert_density(&project_positive_parity(&b).unwrap());
        assert!(positive_parity_weight(&b) < 1.0);
    }

    #[test]
    fn wigner_angle_values() {
        assert_eq!(wigner_angle(0.5, 0.0), 0.0);
        let w = libm::acosh(1.0 + libm::sqrt(2.0));
        assert_abs_diff_eq!(w, 1.528_570_919_480_998, epsilon = 1e-12);
        assert_abs_diff_eq!(wigner_angle(w, w), FRAC_PI_4, epsilon = 1e-12);
        let gap = FRAC_PI_2 - wigner_angle(10.0, 10.0);
        assert!(gap > 0.0 && gap < 2e-4);
    }

    #[test]
    fn wigner_round_trip() {
        for k in 0..40 {
            let delta = k as f64 * 0.039;
            let params = rapidities_for_wigner_angle(delta).unwrap();
            assert!(!params.asymptotic);
            assert_abs_diff_eq!(wigner_angle(params.xi0, params.omega), delta, epsilon = 1e-10);
        }
        let quarter = rapidities_for_wigner_angle(FRAC_PI_4).unwrap();
        assert_abs_diff_eq!(quarter.omega, libm::acosh(1.0 + libm::sqrt(2.0)), epsilon = 1e-10);
        assert_eq!(rapidities_for_wigner_angle(0.0).unwrap().omega.round(), 0.0);
    }

    #[test]
    fn asymptotic_and_unreachable_angles() {
        let capped = rapidities_for_wigner_angle(FRAC_PI_2 - 1e-4).unwrap();
        assert!(capped.asymptotic);
        assert_eq!((capped.xi0, capped.omega), (CAPPED_RAPIDITY, CAPPED_RAPIDITY));
        assert_eq!(rapidities_for_wigner_angle(FRAC_PI_2), Err(Error::UnreachableAngle(FRAC_PI_2)));
        assert!(rapidities_for_wigner_angle(-0.1).is_err());
    }
}
