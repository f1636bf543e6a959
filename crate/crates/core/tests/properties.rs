use bispinor_core::dirac::{
    alpha, beta, bispinor_u, bispinor_v, boost_bispinor, boost_bispinor_matrix, boost_four_momentum, dirac_hamiltonian,
    BoostParams, FourMomentum, Spin, SpinBasis,
};
use bispinor_core::measures::{negativity, Bipartition};
use bispinor_core::superposition::{rapidities_for_wigner_angle, wigner_angle};
use bispinor_core::tensor::{hermitian_eigenvalues, kron, normalize, partial_trace, partial_transpose, ComplexMatrix};
use bispinor_core::{Complex64, QubitSubset, StateVector};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn state(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1 << n).prop_filter_map("null vector", |v| {
        let s = StateVector::new(v.into_iter().map(|(a, b)| c(a, b)).collect()).ok()?;
        normalize(&s).ok()
    })
}

/// Random subset of `0..n` that is neither empty nor full.
fn proper_subset(n: usize) -> impl Strategy<Value = QubitSubset> {
    (1usize..(1 << n) - 1)
        .prop_map(move |mask| QubitSubset::new((0..n).filter(|k| mask >> k & 1 == 1).collect()).unwrap())
}

fn unitary_2x2(a: f64, b: f64, g: f64) -> ComplexMatrix {
    let (ca, sa) = (a.cos(), a.sin());
    let eb = c(b.cos(), b.sin());
    let eg = c(g.cos(), g.sin());
    ComplexMatrix::from_row_major(2, 2, vec![eb * ca, -eg.conj() * sa, eg * sa, eb.conj() * ca]).unwrap()
}

fn local_unitary(angles: &[(f64, f64, f64)]) -> ComplexMatrix {
    angles.iter().fold(ComplexMatrix::identity(1), |acc, &(a, b, g)| kron(&acc, &unitary_2x2(a, b, g)))
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn momentum() -> impl Strategy<Value = FourMomentum> {
    (0.2..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64).prop_filter_map("zero momentum", |(m, x, y, z)| {
        if x * x + y * y + z * z < 1e-4 {
            return None;
        }
        FourMomentum::new(m, [x, y, z]).ok()
    })
}

fn direction() -> impl Strategy<Value = [f64; 3]> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_filter("null direction", |(x, y, z)| x * x + y * y + z * z > 1e-3)
        .prop_map(|(x, y, z)| [x, y, z])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_transposes_of_complementary_sides_share_spectra(psi in state(4), side in proper_subset(4)) {
        let rho = psi.density();
        let a = sorted(hermitian_eigenvalues(&partial_transpose(&rho, &side).unwrap()).unwrap());
        let b = sorted(hermitian_eigenvalues(&partial_transpose(&rho, &side.complement(4)).unwrap()).unwrap());
        prop_assert!(max_diff(&a, &b) < 1e-10);
    }

    #[test]
    fn partial_trace_preserves_trace(psi in state(4), keep in proper_subset(4)) {
        let reduced = partial_trace(&psi.density(), &keep).unwrap();
        prop_assert!((reduced.trace() - c(1.0, 0.0)).norm() < 1e-12);
        prop_assert!(reduced.hermiticity_deviation() < 1e-12);
        prop_assert!(hermitian_eigenvalues(&reduced).unwrap().iter().all(|&l| l > -1e-12));
    }

    #[test]
    fn partial_traces_compose(psi in state(5)) {
        let rho = psi.density();
        let stepwise = partial_trace(&partial_trace(&rho, &QubitSubset::from([0, 2, 3])).unwrap(), &QubitSubset::from([0, 2])).unwrap();
        let direct = partial_trace(&rho, &QubitSubset::from([0, 3])).unwrap();
        prop_assert!(stepwise.max_abs_diff(&direct) < 1e-12);
        let via_state = psi.reduced_density(&QubitSubset::from([0, 3])).unwrap();
        prop_assert!(via_state.max_abs_diff(&direct) < 1e-12);
    }

    #[test]
    fn kron_spectrum_is_product_of_spectra(a in state(2), b in state(1), wa in 0.1..1.0f64) {
        let mixed = &a.density().scale(c(wa, 0.0)) + &ComplexMatrix::identity(4).scale(c((1.0 - wa) / 4.0, 0.0));
        let ea = hermitian_eigenvalues(&mixed).unwrap();
        let eb = hermitian_eigenvalues(&b.density()).unwrap();
        let products = sorted(ea.iter().flat_map(|x| eb.iter().map(move |y| x * y)).collect());
        let direct = sorted(hermitian_eigenvalues(&kron(&mixed, &b.density())).unwrap());
        prop_assert!(max_diff(&products, &direct) < 1e-12);
    }

    #[test]
    fn kron_is_associative(a in state(1), b in state(2), d in state(1)) {
        let (ra, rb, rd) = (a.density(), b.density(), d.density());
        let left = kron(&kron(&ra, &rb), &rd);
        let right = kron(&ra, &kron(&rb, &rd));
        prop_assert!(left.max_abs_diff(&right) < 1e-15);
        prop_assert!(a.kron(&b).kron(&d).density().max_abs_diff(&left) < 1e-14);
    }

    #[test]
    fn negativity_is_swap_symmetric(psi in state(4), side in proper_subset(4)) {
        let part = Bipartition::new(4, side.clone(), side.complement(4)).unwrap();
        let n = negativity(&psi, &part).unwrap();
        prop_assert!((0.0..=1.0).contains(&n));
        prop_assert!((n - negativity(&psi, &part.swapped()).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn negativity_of_mixed_reduction_is_swap_symmetric(psi in state(4)) {
        let part = Bipartition::new(4, [0], [2]).unwrap();
        let n = negativity(&psi, &part).unwrap();
        prop_assert!((n - negativity(&psi, &part.swapped()).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn negativity_is_local_unitary_invariant(
        psi in state(4),
        angles in prop::collection::vec((0.0..6.3f64, 0.0..6.3f64, 0.0..6.3f64), 4),
    ) {
        let u = local_unitary(&angles);
        let rotated = StateVector::new(u.mul_vec(psi.amplitudes()).unwrap()).unwrap();
        for part in [
            Bipartition::new(4, [0], [1, 2, 3]).unwrap(),
            Bipartition::new(4, [0, 1], [2, 3]).unwrap(),
            Bipartition::new(4, [1], [3]).unwrap(),
            Bipartition::new(4, [0], [2, 3]).unwrap(),
        ] {
            let d = negativity(&psi, &part).unwrap() - negativity(&rotated, &part).unwrap();
            prop_assert!(d.abs() < 1e-9);
        }
    }

    #[test]
    fn product_states_are_ppt(a in state(2), b in state(2)) {
        let psi = a.kron(&b);
        let part = Bipartition::new(4, [0, 1], [2, 3]).unwrap();
        prop_assert_eq!(negativity(&psi, &part).unwrap(), 0.0);
    }

    #[test]
    fn dirac_spinors_solve_the_hamiltonian(p in momentum(), helicity in any::<bool>()) {
        let basis = if helicity { SpinBasis::Helicity } else { SpinBasis::ZAxis };
        let h = dirac_hamiltonian(&p);
        for s in [Spin::Up, Spin::Down] {
            let u = bispinor_u(&p, s, basis).unwrap();
            let v = bispinor_v(&p, s, basis).unwrap();
            let hu = h.mul_vec(u.components()).unwrap();
            let hv = h.mul_vec(v.components()).unwrap();
            for k in 0..4 {
                prop_assert!((hu[k] - u.components()[k] * p.e()).norm() < 1e-10);
                prop_assert!((hv[k] + v.components()[k] * p.e()).norm() < 1e-10);
            }
            for t in [Spin::Up, Spin::Down] {
                let expected = if s == t { 1.0 } else { 0.0 };
                prop_assert!((u.inner(&bispinor_u(&p, t, basis).unwrap()) - c(expected, 0.0)).norm() < 1e-10);
                prop_assert!(u.inner(&bispinor_v(&p, t, basis).unwrap()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn helicity_spinors_are_helicity_eigenstates(p in momentum()) {
        let r = p.magnitude();
        let n = p.momentum().map(|x| x / r);
        // Σ·n̂ = diag(σ·n̂, σ·n̂) in the Dirac representation commutes with H
        let sigma_n = {
            let a = bispinor_core::dirac::alpha_dot(n);
            &a * &kron(&bispinor_core::dirac::sigma_x(), &ComplexMatrix::identity(2))
        };
        for s in [Spin::Up, Spin::Down] {
            let u = bispinor_u(&p, s, SpinBasis::Helicity).unwrap();
            let out = sigma_n.mul_vec(u.components()).unwrap();
            for (o, c) in out.iter().zip(u.components()) {
                prop_assert!((o - c * s.sign()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn boosts_keep_momenta_on_shell_and_compose(p in momentum(), n in direction(), w1 in -3.0..3.0f64, w2 in -3.0..3.0f64) {
        let b1 = BoostParams::new(w1, n).unwrap();
        let b2 = b1.with_omega(w2);
        let both = b1.with_omega(w1 + w2);
        let stepwise = boost_four_momentum(&boost_four_momentum(&p, &b1), &b2);
        let direct = boost_four_momentum(&p, &both);
        prop_assert!(stepwise.mass_shell_residual().abs() < 1e-8 * stepwise.e().powi(2));
        let scale = direct.e();
        prop_assert!((stepwise.e() - direct.e()).abs() < 1e-11 * scale);
        for k in 0..3 {
            prop_assert!((stepwise.momentum()[k] - direct.momentum()[k]).abs() < 1e-11 * scale);
        }
        let s = &boost_bispinor_matrix(&b2) * &boost_bispinor_matrix(&b1);
        prop_assert!(s.max_abs_diff(&boost_bispinor_matrix(&both)) < 1e-11 * boost_bispinor_matrix(&both).frobenius_norm());
    }

    #[test]
    fn boosted_spinor_is_a_spinor_of_the_boosted_momentum(p in momentum(), n in direction(), w in -2.0..2.0f64) {
        let b = BoostParams::new(w, n).unwrap();
        let u = bispinor_u(&p, Spin::Up, SpinBasis::ZAxis).unwrap();
        let moved = boost_bispinor(&u, &b);
        let p2 = boost_four_momentum(&p, &b);
        let out = dirac_hamiltonian(&p2).mul_vec(moved.components()).unwrap();
        for (o, c) in out.iter().zip(moved.components()) {
            prop_assert!((o - c * p2.e()).norm() < 1e-9 * p2.e());
        }
    }

    #[test]
    fn wigner_angle_round_trips(delta in 0.0..1.5f64) {
        let params = rapidities_for_wigner_angle(delta).unwrap();
        prop_assert!((wigner_angle(params.xi0, params.omega) - delta).abs() < 1e-10);
    }
}

#[test]
fn dirac_matrices_anticommute() {
    let mut mats: Vec<ComplexMatrix> = (0..3).map(alpha).collect();
    mats.push(beta());
    let id = ComplexMatrix::identity(4);
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let anti = &(a * b) + &(b * a);
            let expected = if i == j { id.scale(c(2.0, 0.0)) } else { ComplexMatrix::zeros(4, 4) };
            assert!(anti.max_abs_diff(&expected) < 1e-15, "({i}, {j})");
        }
    }
}
