mod common;

use common::*;
use proptest::prelude::*;
use qir_core::channels::{dephase, dephasings_commute, monitor, monitor_n};
use qir_core::entropy::{irreality, relative_entropy, uncertainty, vn_entropy};
use qir_core::relations::{Evaluation, Relation};
use qir_core::rng::StreamRng;
use qir_core::states::*;
use qir_core::{herm_eig, BipartiteState, CMatrix, C64};

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=4, 1usize..=3)
}

fn state(d_a: usize, d_b: usize, rng: &mut StreamRng) -> BipartiteState {
    if rng.uniform() < 0.3 {
        haar_random_pure_with(d_a, d_b, rng).unwrap()
    } else {
        let r = rng.int_inclusive(1, d_a * d_b);
        random_mixed_with(d_a, d_b, r, rng).unwrap()
    }
}

fn haar_unitary(d: usize, rng: &mut StreamRng) -> CMatrix {
    random_basis_with(d, rng).unwrap().vectors().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_traces_preserve_trace(seed: u64, (d_a, d_b) in dims()) {
        let m = random_matrix(d_a * d_b, &mut StreamRng::new(seed, 0));
        let t = m.trace();
        prop_assert!((m.partial_trace_a(d_a, d_b).unwrap().trace() - t).norm() <= 1e-12);
        prop_assert!((m.partial_trace_b(d_a, d_b).unwrap().trace() - t).norm() <= 1e-12);
    }

    #[test]
    fn kron_is_compatible_with_partial_traces(seed: u64, (d_a, d_b) in dims()) {
        let mut rng = StreamRng::new(seed, 0);
        let a = random_matrix(d_a, &mut rng);
        let b = random_matrix(d_b, &mut rng);
        let ab = a.kron(&b);
        let expect_b = CMatrix::from_fn(d_b, |i, j| b[(i, j)] * a.trace());
        prop_assert!(ab.partial_trace_a(d_a, d_b).unwrap().max_abs_diff(&expect_b) <= 1e-11);
    }

    #[test]
    fn spectrum_is_unitarily_invariant(seed: u64, d in 2usize..=8) {
        let mut rng = StreamRng::new(seed, 0);
        let m = random_hermitian(d, &mut rng);
        let u = haar_unitary(d, &mut rng);
        let a = herm_eig(&m).unwrap().values;
        let b = herm_eig(&m.conjugate_by(&u).unwrap()).unwrap().values;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
    }

    #[test]
    fn entropy_is_unitarily_invariant(seed: u64, (d_a, d_b) in dims()) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(d_a, d_b, &mut rng);
        let u = haar_unitary(d_a * d_b, &mut rng);
        let rotated = s.rho().conjugate_by(&u).unwrap();
        prop_assert!((vn_entropy(s.rho()).unwrap() - vn_entropy(&rotated).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn pinching_identity(seed: u64, (d_a, d_b) in dims()) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(d_a, d_b, &mut rng);
        let x = random_basis_with(d_a, &mut rng).unwrap();
        let d = relative_entropy(s.rho(), dephase(&x, &s).unwrap().rho()).unwrap();
        prop_assert!((d - irreality(&x, &s).unwrap()).abs() <= 1e-8);
    }

    #[test]
    fn irreality_ignores_basis_order_and_phases(seed: u64, (d_a, d_b) in dims()) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(d_a, d_b, &mut rng);
        let x = random_basis_with(d_a, &mut rng).unwrap();
        let shift = rng.int_inclusive(1, d_a - 1);
        let cols: Vec<Vec<C64>> = (0..d_a)
            .map(|k| {
                let phase = C64::from_polar(1.0, std::f64::consts::TAU * rng.uniform());
                x.ket((k + shift) % d_a).iter().map(|z| z * phase).collect()
            })
            .collect();
        let relabeled = ObservableBasis::new(CMatrix::from_columns(&cols).unwrap()).unwrap();
        prop_assert!((irreality(&x, &s).unwrap() - irreality(&relabeled, &s).unwrap()).abs() <= 1e-10);
        prop_assert!((uncertainty(&x, &s).unwrap() - uncertainty(&relabeled, &s).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn channel_invariants(seed: u64, (d_a, d_b) in dims(), eps in 0.0f64..=1.0) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(d_a, d_b, &mut rng);
        let x = random_basis_with(d_a, &mut rng).unwrap();
        let y = random_basis_with(d_a, &mut rng).unwrap();
        let once = dephase(&x, &s).unwrap();
        prop_assert!(dephase(&x, &once).unwrap().rho().max_abs_diff(once.rho()) <= 1e-12);
        prop_assert!(once.reduced_b().max_abs_diff(&s.reduced_b()) <= 1e-12);
        prop_assert!(validate_density(once.rho(), d_a * d_b).is_ok());
        let m = monitor(&y, eps, &s).unwrap();
        prop_assert!(validate_density(m.rho(), d_a * d_b).is_ok());
        prop_assert!(m.reduced_b().max_abs_diff(&s.reduced_b()) <= 1e-12);
        prop_assert!((uncertainty(&y, &m).unwrap() - uncertainty(&y, &s).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn monitoring_with_commuting_dephasings_is_monotone(seed: u64, (d_a, d_b) in dims(), eps in 0.0f64..=1.0, mub: bool) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(d_a, d_b, &mut rng);
        let (x, y) = if mub {
            (computational_basis(d_a).unwrap(), fourier_basis(d_a).unwrap())
        } else {
            let x = random_basis_with(d_a, &mut rng).unwrap();
            (x.clone(), x)
        };
        prop_assert!(dephasings_commute(&x, &y).unwrap());
        let m = monitor(&y, eps, &s).unwrap();
        prop_assert!(irreality(&x, &m).unwrap() <= irreality(&x, &s).unwrap() + 1e-9);
    }

    #[test]
    fn composition_law(seed: u64, eps in 0.0f64..=1.0, n in 1usize..=10) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(2, 2, &mut rng);
        let y = random_basis_with(2, &mut rng).unwrap();
        let eff = 1.0 - (1.0 - eps).powi(n as i32);
        let a = monitor_n(&y, eps, n, &s).unwrap();
        let b = monitor(&y, eff, &s).unwrap();
        prop_assert!(a.rho().max_abs_diff(b.rho()) <= 1e-10);
    }

    #[test]
    fn irreality_splits_into_uncertainty_and_conditional_entropy(seed: u64, (d_a, d_b) in dims()) {
        let mut rng = StreamRng::new(seed, 0);
        let s = state(d_a, d_b, &mut rng);
        let x = random_basis_with(d_a, &mut rng).unwrap();
        let y = random_basis_with(d_a, &mut rng).unwrap();
        let e = Evaluation::compute(&x, &y, &s, None).unwrap();
        prop_assert!((e.irreality_x() - (e.uncertainty_x() - e.cond_entropy())).abs() <= 1e-9);
        prop_assert!(e.constraint1(1e-9).holds);
        // The combined slack is the sum of the memory and irreality slacks.
        let sum = e.slack(Relation::MemoryUr) + e.slack(Relation::IrrealityUr);
        prop_assert!((e.slack(Relation::CombinedUr) - sum).abs() <= 1e-9);
    }
}

#[test]
fn channel_invariants_over_a_thousand_triples() {
    for i in 0..1000 {
        let mut rng = StreamRng::new(77, i);
        let d_a = rng.int_inclusive(2, 4);
        let d_b = rng.int_inclusive(1, 3);
        let s = state(d_a, d_b, &mut rng);
        let x = random_basis_with(d_a, &mut rng).unwrap();
        let y = random_basis_with(d_a, &mut rng).unwrap();
        let eps = rng.uniform();
        let once = dephase(&x, &s).unwrap();
        assert!(dephase(&x, &once).unwrap().rho().max_abs_diff(once.rho()) <= 1e-12);
        assert!(once.reduced_b().max_abs_diff(&s.reduced_b()) <= 1e-12);
        let m = monitor(&y, eps, &s).unwrap();
        assert!(validate_density(m.rho(), d_a * d_b).is_ok());
        assert!(m.reduced_b().max_abs_diff(&s.reduced_b()) <= 1e-12);
        assert!((uncertainty(&y, &m).unwrap() - uncertainty(&y, &s).unwrap()).abs() <= 1e-9);
        // The monitored bound holds for every pair, commuting or not.
        let e = Evaluation::compute(&x, &y, &s, Some(eps)).unwrap();
        assert!(e.slack(Relation::MonitorBound) >= -1e-9);
        if dephasings_commute(&x, &y).unwrap() {
            assert!(irreality(&x, &m).unwrap() <= irreality(&x, &s).unwrap() + 1e-9);
        }
    }
}

/// Monitoring by a basis whose dephasing does not commute with Φ_X can
/// create X-coherence: an X eigenstate acquires positive irreality.
#[test]
fn non_commuting_monitor_raises_irreality() {
    let x = computational_basis(2).unwrap();
    let t = std::f64::consts::PI / 8.0;
    let y = ObservableBasis::new(
        CMatrix::from_real(2, &[t.cos(), -t.sin(), t.sin(), t.cos()]).unwrap(),
    )
    .unwrap();
    let s = BipartiteState::from_pure(2, 1, &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
    assert!(!dephasings_commute(&x, &y).unwrap());
    assert_eq!(irreality(&x, &s).unwrap(), 0.0);
    // Off-diagonal of Φ_Y(|0⟩⟨0|) is cos t · sin t · (cos²t − sin²t).
    let m = monitor(&y, 1.0, &s).unwrap();
    let c = t.cos() * t.sin() * (t.cos().powi(2) - t.sin().powi(2));
    assert!((m.rho()[(0, 1)].re - c).abs() <= 1e-15);
    assert!(irreality(&x, &m).unwrap() > 0.1);
}

#[test]
fn full_rank_entropies_match_characteristic_polynomial() {
    for i in 0..200 {
        let mut rng = StreamRng::new(78, i);
        let (d_a, d_b) = [(2, 1), (2, 2)][i as usize % 2];
        let s = random_mixed_with(d_a, d_b, d_a * d_b, &mut rng).unwrap();
        assert!((vn_entropy(s.rho()).unwrap() - oracle_entropy(s.rho())).abs() <= 1e-8);
    }
}
