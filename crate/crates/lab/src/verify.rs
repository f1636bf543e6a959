//! Verification suites, one check per acceptance criterion.
//!
//! Each check reports the largest deviation it saw next to its tolerance. The
//! `fast` level uses coarse grids and skips the six-qubit sweeps; `full` runs
//! every check on its reference grid.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::fmt;

use bispinor_core::dirac::{
    alpha, beta, bispinor_u, bispinor_v, boost_bispinor_matrix, boost_four_momentum, BoostParams, FourMomentum, Spin,
    SpinBasis,
};
use bispinor_core::measures::{mean_negativities, negativity, Bipartition};
use bispinor_core::scenarios::{
    apply_boost, closed_form_parallel, particle_linear_entropy, particle_partition, BoostFamily, NegativitySet, P1, P2,
    S1, S2,
};
use bispinor_core::superposition::{
    boost_superposed, build_superposed, project_positive_parity, rapidities_for_wigner_angle, trace_out_parity,
    wigner_angle, SpinMomentumNegativities,
};
use bispinor_core::{Complex64, ComplexMatrix, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_b05e;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub level: Level,
    /// Added to reference values; a nonzero value must make the suite fail.
    pub perturbation: f64,
}

impl VerifyOptions {
    pub fn fast() -> Self {
        VerifyOptions { level: Level::Fast, perturbation: 0.0 }
    }

    pub fn full() -> Self {
        VerifyOptions { level: Level::Full, perturbation: 0.0 }
    }

    fn full_level(&self) -> bool {
        self.level == Level::Full
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: max deviation {:.3e} (tolerance {:.1e})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.max_deviation,
            self.tolerance
        )?;
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        Ok(())
    }
}

fn errored(id: u8, name: &'static str, tolerance: f64, e: bispinor_core::Error) -> Check {
    Check { id, name, passed: false, max_deviation: f64::INFINITY, tolerance, detail: format!("error: {e}") }
}

fn within(id: u8, name: &'static str, tolerance: f64, result: Result<(f64, String)>) -> Check {
    match result {
        Ok((dev, detail)) => Check { id, name, passed: dev < tolerance, max_deviation: dev, tolerance, detail },
        Err(e) => errored(id, name, tolerance, e),
    }
}

fn range(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
    (0..n).map(|k| start + k as f64 * step).collect()
}

fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| start + (stop - start) * k as f64 / (n - 1) as f64).collect()
}

fn spread(values: &[f64]) -> f64 {
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    hi - lo
}

const THETAS: [f64; 4] = [0.0, FRAC_PI_8, FRAC_PI_4, 3.0 * FRAC_PI_8];
const XI0S: [f64; 4] = [0.0, 0.5, 1.0, 2.0];

fn parallel_grid(opts: &VerifyOptions) -> Vec<f64> {
    range(0.0, 4.0, if opts.full_level() { 0.25 } else { 1.0 })
}

pub const CLOSED_FORM: &str = "closed-form oracle agreement";

/// Seven parallel-framework negativities against their closed forms.
pub fn closed_form_agreement(opts: &VerifyOptions) -> Check {
    let run = || -> Result<(f64, String)> {
        let mut worst = 0.0f64;
        let mut count = 0;
        for theta in THETAS {
            for xi0 in XI0S {
                let initial = BoostFamily::Parallel.initial_state(1.0, xi0, theta)?;
                for omega in parallel_grid(opts) {
                    let measured = NegativitySet::measure(apply_boost(&initial, &BoostParams::along_z(omega)).psi())?;
                    let mut reference = closed_form_parallel(theta, xi0, omega);
                    reference.s1s2 += opts.perturbation;
                    worst = worst.max(measured.max_abs_diff(&reference));
                    count += 1;
                }
            }
        }
        Ok((worst, format!("{count} grid points")))
    };
    within(1, CLOSED_FORM, 1e-9, run())
}

pub const PARTICLE_INVARIANCE: &str = "particle-particle invariance";

fn random_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let r2: f64 = v.iter().map(|x| x * x).sum();
        if (1e-2..=1.0).contains(&r2) {
            return v;
        }
    }
}

/// `N^{P1S1;P2S2}` and `E_L` along random boost trajectories.
pub fn particle_invariance(opts: &VerifyOptions) -> Check {
    let samples = if opts.full_level() { 100 } else { 20 };
    let run = || -> Result<(f64, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let (mut drift, mut entropy_err) = (0.0f64, 0.0f64);
        for k in 0..samples {
            let theta = rng.gen_range(0.0..PI);
            let xi0 = rng.gen_range(0.0..2.0);
            let n = random_direction(&mut rng);
            let omega_max = rng.gen_range(0.0..3.0);
            let family = if k % 2 == 0 { BoostFamily::Parallel } else { BoostFamily::Perpendicular };
            let initial = family.initial_state(1.0, xi0, theta)?;
            let n0 = negativity(initial.psi(), &particle_partition())?;
            let e0 = particle_linear_entropy(initial.psi())?;
            let sin2 = (2.0 * theta).sin();
            entropy_err = entropy_err.max((e0 - sin2 * sin2 - opts.perturbation).abs());
            for omega in linspace(0.0, omega_max, 7) {
                let boosted = apply_boost(&initial, &BoostParams::new(omega, n)?);
                drift = drift.max((negativity(boosted.psi(), &particle_partition())? - n0).abs());
                drift = drift.max((particle_linear_entropy(boosted.psi())? - e0).abs());
            }
        }
        Ok((drift, entropy_err))
    };
    match run() {
        Ok((drift, entropy_err)) => Check {
            id: 2,
            name: PARTICLE_INVARIANCE,
            passed: drift < 1e-9 && entropy_err < 1e-10,
            max_deviation: drift.max(entropy_err),
            tolerance: 1e-9,
            detail: format!("{samples} trajectories; |E_L - sin^2(2 theta)| max {entropy_err:.3e} (tolerance 1e-10)"),
        },
        Err(e) => errored(2, PARTICLE_INVARIANCE, 1e-9, e),
    }
}

pub const SPIN_REST_INVARIANCE: &str = "spin-one-vs-rest invariance";

pub fn spin_rest_invariance(opts: &VerifyOptions) -> Check {
    let run = || -> Result<(f64, String)> {
        let part = Bipartition::new(4, [S1], [P1, P2, S2])?;
        let mut worst = [0.0f64; 2];
        let mut worst_at_quarter = 0.0f64;
        for (slot, family) in [BoostFamily::Parallel, BoostFamily::Perpendicular].into_iter().enumerate() {
            for theta in THETAS.into_iter().chain([FRAC_PI_2, 1.1]) {
                for xi0 in XI0S {
                    let initial = family.initial_state(1.0, xi0, theta)?;
                    for omega in parallel_grid(opts) {
                        let n = negativity(apply_boost(&initial, &family.boost(omega)).psi(), &part)?;
                        let dev = (n - (2.0 * theta).sin().abs() - opts.perturbation).abs();
                        worst[slot] = worst[slot].max(dev);
                        if theta == FRAC_PI_4 {
                            worst_at_quarter = worst_at_quarter.max(dev);
                        }
                    }
                }
            }
        }
        let detail = format!(
            "parallel {:.3e}, perpendicular {:.3e}, both families at theta = pi/4 {worst_at_quarter:.3e}",
            worst[0], worst[1]
        );
        Ok((worst[0].max(worst[1]), detail))
    };
    within(3, SPIN_REST_INVARIANCE, 1e-9, run())
}

pub const REST_FRAME_ZERO: &str = "rest-frame zero";

/// Boosting by `ω = ξ0` brings particle 2 to rest.
pub fn rest_frame_zero(_opts: &VerifyOptions) -> Check {
    let run = || -> Result<(f64, String)> {
        let part = Bipartition::new(4, [P2], [P1, S1, S2])?;
        let mut worst = 0.0f64;
        for theta in [FRAC_PI_8, FRAC_PI_4, 3.0 * FRAC_PI_8, 0.3] {
            for xi0 in [0.5, 1.0, 2.0] {
                let initial = BoostFamily::Parallel.initial_state(1.0, xi0, theta)?;
                let boosted = apply_boost(&initial, &BoostParams::along_z(xi0));
                worst = worst.max(negativity(boosted.psi(), &part)?);
                let delta = mean_negativities(boosted.psi())?.difference(&mean_negativities(initial.psi())?);
                worst = worst.max(delta.iter().fold(0.0f64, |m, d| m.max(d.abs())));
            }
        }
        Ok((worst, "N^{P2;P1S1S2} and |dN1..dN4| at omega = xi0".into()))
    };
    within(4, REST_FRAME_ZERO, 1e-10, run())
}

pub const COM_EXTREMUM: &str = "centre-of-momentum extremum";

/// Argmax of `N^{S1;S2}(ω)` at `θ = π/4`, `ξ0 = 1`.
pub fn com_extremum(_opts: &VerifyOptions) -> Check {
    let step = 0.01;
    let run = || -> Result<(f64, String)> {
        let part = Bipartition::new(4, [S1], [S2])?;
        let initial = BoostFamily::Parallel.initial_state(1.0, 1.0, FRAC_PI_4)?;
        let mut best = (f64::NEG_INFINITY, 0.0);
        for omega in range(0.0, 4.0, step) {
            let n = negativity(apply_boost(&initial, &BoostParams::along_z(omega)).psi(), &part)?;
            if n > best.0 {
                best = (n, omega);
            }
        }
        Ok(((best.1 - 0.5).abs(), format!("argmax omega = {:.2}, N = {:.6}", best.1, best.0)))
    };
    within(5, COM_EXTREMUM, step + 1e-9, run())
}

pub const PARITY_VANISHING: &str = "parity-parity vanishing";

pub fn parity_vanishing(opts: &VerifyOptions) -> Check {
    let run = || -> Result<(f64, String)> {
        let part = Bipartition::new(4, [P1], [P2])?;
        let mut worst = 0.0f64;
        for theta in THETAS {
            for xi0 in XI0S {
                let initial = BoostFamily::Parallel.initial_state(1.0, xi0, theta)?;
                for omega in parallel_grid(opts) {
                    worst = worst.max(negativity(apply_boost(&initial, &BoostParams::along_z(omega)).psi(), &part)?);
                }
            }
        }
        Ok((worst, String::new()))
    };
    within(6, PARITY_VANISHING, 1e-10, run())
}

pub const MEAN_SHAPE: &str = "mean negativity shape in theta";

/// Peaks at `π/4` and `3π/4`, zeros at `0`, `π/2`, `π`, for `ξ0 = 1/2`.
pub fn mean_shape(opts: &VerifyOptions) -> Check {
    let divisions = if opts.full_level() { 200 } else { 40 };
    let step = PI / divisions as f64;
    let run = || -> Result<(f64, String)> {
        let thetas: Vec<f64> = (0..=divisions).map(|k| k as f64 * step).collect();
        let mut values = Vec::with_capacity(thetas.len());
        for &theta in &thetas {
            values
                .push(mean_negativities(BoostFamily::Perpendicular.initial_state(1.0, 0.5, theta)?.psi())?.as_array());
        }
        let (mut peak_offset, mut zero_level) = (0.0f64, 0.0f64);
        let half = divisions / 2;
        for k in 0..4 {
            let column: Vec<f64> = values.iter().map(|v| v[k]).collect();
            let argmax = |lo: usize, hi: usize| (lo..=hi).max_by(|&a, &b| column[a].total_cmp(&column[b])).unwrap();
            peak_offset = peak_offset.max((thetas[argmax(0, half)] - FRAC_PI_4).abs());
            peak_offset = peak_offset.max((thetas[argmax(half, divisions)] - 3.0 * FRAC_PI_4).abs());
            for z in [0, half, divisions] {
                zero_level = zero_level.max(column[z].abs());
            }
        }
        let detail =
            format!("peak offset {peak_offset:.3e} (grid step {step:.4}); max value at zeros {zero_level:.3e}");
        let dev = if peak_offset <= step + 1e-12 { zero_level } else { f64::INFINITY };
        Ok((dev, detail))
    };
    within(7, MEAN_SHAPE, 1e-10, run())
}

pub const SPIN_MOMENTUM_NON_CREATION: &str = "spin-momentum non-creation";

/// Both spin-momentum cuts of the parity-traced six-qubit state.
pub fn spin_momentum_non_creation(_opts: &VerifyOptions) -> Check {
    let run = || -> Result<(f64, String)> {
        let (mut one_vs_rest, mut cut) = (0.0f64, 0.0f64);
        for alpha in linspace(0.0, FRAC_PI_2, 9) {
            for theta in linspace(0.0, FRAC_PI_2, 9) {
                let initial = build_superposed(1.0, 0.5, alpha, theta)?;
                for omega in [0.0, 0.5, 1.0, 2.0] {
                    let n = SpinMomentumNegativities::measure(&trace_out_parity(&boost_superposed(
                        &initial,
                        &BoostParams::along_x(omega),
                    )))?;
                    one_vs_rest = one_vs_rest.max(n.s1_rest);
                    cut = cut.max(n.spin_momentum);
                }
            }
        }
        Ok((one_vs_rest.max(cut), format!("max N^(S1;p1S2p2) {one_vs_rest:.3e}, max N^(S1S2;p1p2) {cut:.3e}")))
    };
    within(8, SPIN_MOMENTUM_NON_CREATION, 1e-9, run())
}

pub const PROJECTION_RECOVERY: &str = "projection-path recovery";

/// Egg-tray and spin-spin properties of the positive-parity projection.
pub fn projection_recovery(_opts: &VerifyOptions) -> Check {
    let tol = 1e-9;
    let run = || -> Result<(bool, f64, String)> {
        let wigner = rapidities_for_wigner_angle(FRAC_PI_4)?;
        let b = BoostParams::along_x(wigner.omega);
        let projected = |alpha: f64, theta: f64| -> Result<f64> {
            let st = boost_superposed(&build_superposed(1.0, wigner.xi0, alpha, theta)?, &b);
            Ok(SpinMomentumNegativities::measure(&project_positive_parity(&st)?)?.spin_momentum)
        };
        let thetas = linspace(0.0, PI, 9);
        let mut vanish = 0.0f64;
        for &theta in &thetas {
            vanish = vanish.max(projected(0.0, theta)?).max(projected(FRAC_PI_2, theta)?);
        }
        let mut asymmetry = 0.0f64;
        for alpha in linspace(0.0, FRAC_PI_4, 5) {
            for &theta in &thetas {
                asymmetry = asymmetry.max((projected(alpha, theta)? - projected(FRAC_PI_2 - alpha, theta)?).abs());
            }
        }

        let initial = build_superposed(1.0, 1.0, FRAC_PI_4, FRAC_PI_4)?;
        let (mut cut, mut proj_ss, mut traced_ss) = (Vec::new(), Vec::new(), Vec::new());
        for omega in range(0.0, 3.0, 0.25) {
            let st = boost_superposed(&initial, &BoostParams::along_x(omega));
            let p = SpinMomentumNegativities::measure(&project_positive_parity(&st)?)?;
            let t = SpinMomentumNegativities::measure(&trace_out_parity(&st))?;
            cut.push(p.spin_momentum);
            proj_ss.push(p.spin_spin);
            traced_ss.push(t.spin_spin);
        }
        let cut_spread = spread(&cut);
        let proj_spread = spread(&proj_ss);
        let decreasing = traced_ss.windows(2).all(|w| w[1] < w[0]);

        let passed = vanish < tol && asymmetry < tol && cut_spread > tol && proj_spread < tol && decreasing;
        let detail = format!(
            "vanishing at alpha in {{0, pi/2}} {vanish:.3e}; alpha symmetry {asymmetry:.3e}; \
             projected N^(S1S2;p1p2) spread in omega {cut_spread:.3e} (must exceed {tol:.0e}); \
             projected spin-spin spread {proj_spread:.3e}; traced spin-spin strictly decreasing: {decreasing} \
             ({:.4} -> {:.4})",
            traced_ss[0],
            traced_ss[traced_ss.len() - 1]
        );
        Ok((passed, vanish.max(asymmetry).max(proj_spread), detail))
    };
    match run() {
        Ok((passed, dev, detail)) => {
            Check { id: 9, name: PROJECTION_RECOVERY, passed, max_deviation: dev, tolerance: tol, detail }
        }
        Err(e) => errored(9, PROJECTION_RECOVERY, tol, e),
    }
}

pub const UNIT_SUITE: &str = "kinematic and spinor unit suite";

fn anticommutator_deviation() -> f64 {
    let mut mats: Vec<ComplexMatrix> = (0..3).map(alpha).collect();
    mats.push(beta());
    let id2 = ComplexMatrix::identity(4).scale(Complex64::new(2.0, 0.0));
    let mut worst = 0.0f64;
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let anti = &(a * b) + &(b * a);
            let expected = if i == j { id2.clone() } else { ComplexMatrix::zeros(4, 4) };
            worst = worst.max(anti.max_abs_diff(&expected));
        }
    }
    worst
}

fn orthonormality_deviation(momenta: &[FourMomentum]) -> Result<f64> {
    let mut worst = 0.0f64;
    for p in momenta {
        let bases: &[SpinBasis] =
            if p.magnitude() > 0.0 { &[SpinBasis::ZAxis, SpinBasis::Helicity] } else { &[SpinBasis::ZAxis] };
        for &basis in bases {
            for s in [Spin::Up, Spin::Down] {
                for t in [Spin::Up, Spin::Down] {
                    let delta = if s == t { 1.0 } else { 0.0 };
                    let (us, ut) = (bispinor_u(p, s, basis)?, bispinor_u(p, t, basis)?);
                    let (vs, vt) = (bispinor_v(p, s, basis)?, bispinor_v(p, t, basis)?);
                    worst = worst.max((us.inner(&ut) - delta).norm());
                    worst = worst.max((vs.inner(&vt) - delta).norm());
                    worst = worst.max(us.inner(&vt).norm());
                }
            }
        }
    }
    Ok(worst)
}

fn composition_deviation(momenta: &[FourMomentum]) -> Result<f64> {
    let mut worst = 0.0f64;
    for n in [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [1.0, -2.0, 0.5]] {
        for (w1, w2) in [(0.3, 0.7), (1.5, -0.4), (2.0, 1.0)] {
            let b1 = BoostParams::new(w1, n)?;
            let (b2, both) = (b1.with_omega(w2), b1.with_omega(w1 + w2));
            let s = &boost_bispinor_matrix(&b2) * &boost_bispinor_matrix(&b1);
            let reference = boost_bispinor_matrix(&both);
            worst = worst.max(s.max_abs_diff(&reference) / reference.frobenius_norm());
            for p in momenta {
                let stepwise = boost_four_momentum(&boost_four_momentum(p, &b1), &b2);
                let direct = boost_four_momentum(p, &both);
                worst = worst.max((stepwise.e() - direct.e()).abs() / direct.e());
                for k in 0..3 {
                    worst = worst.max((stepwise.momentum()[k] - direct.momentum()[k]).abs() / direct.e());
                }
            }
        }
    }
    Ok(worst)
}

/// Orthonormality, Dirac algebra, boost composition and the Wigner root.
pub fn unit_suite(opts: &VerifyOptions) -> Check {
    let run = || -> Result<(f64, String)> {
        let momenta = [
            FourMomentum::at_rest(1.0)?,
            FourMomentum::along_z(1.0, 1.3)?,
            FourMomentum::new(1.0, [0.4, -1.2, 0.7])?,
            FourMomentum::new(2.5, [-3.0, 0.1, -0.2])?,
        ];
        let ortho = orthonormality_deviation(&momenta)?;
        let anti = anticommutator_deviation();
        let compose = composition_deviation(&momenta)?;
        let root = (1.0 + 2f64.sqrt()).acosh() + opts.perturbation;
        let quarter = rapidities_for_wigner_angle(FRAC_PI_4)?;
        let wigner = (quarter.omega - root).abs().max((wigner_angle(quarter.xi0, quarter.omega) - FRAC_PI_4).abs());
        let detail = format!(
            "orthonormality {ortho:.1e}, anticommutators {anti:.1e}, composition {compose:.1e}, \
             Wigner pi/4 root omega = {:.10} ({wigner:.1e})",
            quarter.omega
        );
        Ok((ortho.max(anti).max(compose).max(wigner), detail))
    };
    within(10, UNIT_SUITE, 1e-10, run())
}

/// All checks of a level in criterion order.
pub fn run_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = vec![
        closed_form_agreement(opts),
        particle_invariance(opts),
        spin_rest_invariance(opts),
        rest_frame_zero(opts),
        com_extremum(opts),
        parity_vanishing(opts),
        mean_shape(opts),
    ];
    if opts.full_level() {
        checks.push(spin_momentum_non_creation(opts));
        checks.push(projection_recovery(opts));
    }
    checks.push(unit_suite(opts));
    checks
}
