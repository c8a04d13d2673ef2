mod common;

use common::{random_hermitian, random_pd, random_with_norm};
use liehodge::cochain::CochainComplex;
use liehodge::lie_core::{catalog, CartanFrame, ModuleRep};
use liehodge::linalg::{max_abs, op_norm, residual, CMat, C64};
use liehodge::semigroup::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scaled(m: &CMat, s: f64) -> CMat {
    m * C64::new(s, 0.0)
}

#[test]
fn expm_inverse_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let a = random_hermitian(&mut rng, 8, 0.5);
        let p = expm(&a).unwrap() * expm(&scaled(&a, -1.0)).unwrap();
        assert!(residual(&p, &CMat::identity(8, 8)) <= 1e-12);
    }
}

#[test]
fn semigroup_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let a = random_pd(&mut rng, 6, 0.1, 3.0);
        let (t, s) = (rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0));
        let lhs = expm(&scaled(&a, -(t + s))).unwrap();
        let rhs = expm(&scaled(&a, -t)).unwrap() * expm(&scaled(&a, -s)).unwrap();
        assert!(residual(&lhs, &rhs) <= 1e-10);
    }
}

#[test]
fn dyson_phillips_random_splits() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let a = random_pd(&mut rng, 8, 0.5, 2.0);
        let b = random_with_norm(&mut rng, 8, 0.1 * op_norm(&a));
        let split = PerturbationSplit::new(a.clone(), b.clone(), DEFAULT_ORDER, DEFAULT_QUAD_NODES).unwrap();
        for t in [0.1, 0.5, 1.0] {
            let r = dyson_phillips(&split, t).unwrap();
            let oracle = expm(&scaled(&(&a + &b), -t)).unwrap();
            let err = op_norm(&(&r.sum - &oracle));
            assert!(err <= 1e-6, "t={t} err={err}");
            assert!(err <= r.majorant_tail + 1e-8, "t={t} err={err} tail={}", r.majorant_tail);
            assert!(r.warning.is_none());
        }
    }
}

#[test]
fn dyson_phillips_error_decreases_with_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let a = random_pd(&mut rng, 6, 0.5, 2.0);
    let b = random_with_norm(&mut rng, 6, 0.5);
    let oracle = expm(&scaled(&(&a + &b), -1.0)).unwrap();
    let split = PerturbationSplit::new(a, b, 12, DEFAULT_QUAD_NODES).unwrap();
    let terms = dyson_terms(&split, 1.0).unwrap();
    let mut acc = CMat::zeros(6, 6);
    let mut last = f64::INFINITY;
    for term in &terms {
        acc += term;
        let err = op_norm(&(&acc - &oracle));
        assert!(err < last || err < 1e-13, "{err} after {last}");
        last = err;
    }
}

#[test]
fn majorant_flags_for_alpha_half_model() {
    let grid = log_grid(1e-7, 10.0, 320);
    let phi = Sampled::from_fn(&grid, |t| (-t).exp()).unwrap();
    let psi = Sampled::from_fn(&grid, |t| (-t).exp() / t.sqrt()).unwrap();
    let data = MajorantData::new(phi, psi).unwrap();
    let t_grid: Vec<f64> = (0..50).map(|k| 0.1 + 0.1 * k as f64).collect();
    let rep = majorant_theta(&data, &t_grid, 8).unwrap();
    assert!(rep.pass);
    assert!(rep.partial_sums_monotone);
    assert!(rep.omega1.is_finite() && rep.omega1 > 0.0);
}

#[test]
fn majorant_flags_and_domination_for_operator_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let a = random_pd(&mut rng, 4, 0.5, 2.0);
    let b = random_with_norm(&mut rng, 4, 0.3);
    let grid = log_grid(1e-6, 10.0, 160);
    let data = MajorantData::from_split(&a, &b, &grid).unwrap();
    let t_grid: Vec<f64> = (0..50).map(|k| 0.1 + 0.1 * k as f64).collect();
    let rep = majorant_theta(&data, &t_grid, 8).unwrap();
    assert!(rep.pass);
    let split = PerturbationSplit::new(a, b, 8, DEFAULT_QUAD_NODES).unwrap();
    for t in [0.5, 1.0, 2.0] {
        let r = dyson_phillips(&split, t).unwrap();
        for n in 0..=8 {
            let bound = 2f64.powi(-(n as i32)) * t.powi(-2) * (t * rep.omega1).exp();
            assert!(r.per_term_norms[n] <= r.majorant_terms[n] * (1.0 + 1e-3) + 1e-14);
            assert!(r.per_term_norms[n] <= bound);
        }
    }
}

#[test]
fn negative_samples_are_rejected() {
    assert!(matches!(Sampled::new(vec![0.1, 0.2], vec![1.0, -1.0]), Err(liehodge::Error::Majorant(_))));
}

fn su2_trivial() -> CochainComplex {
    let frame = CartanFrame::for_spec(&catalog::su2()).unwrap();
    CochainComplex::new(&frame, &ModuleRep::trivial(3)).unwrap()
}

#[test]
fn heat_apply_small_time_and_harmonic_input() {
    let cx = su2_trivial();
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let v: Vec<C64> = (0..3).map(|_| C64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
    let out = heat_apply(&cx, 1, 1e-8, &v).unwrap();
    let dev = out.iter().zip(&v).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    assert!(dev <= 1e-6);
    for q in [0, 3] {
        let h = vec![C64::new(1.0, 0.0)];
        for t in [0.5, 5.0, 50.0] {
            let out = heat_apply(&cx, q, t, &h).unwrap();
            assert!((out[0] - h[0]).norm() <= 1e-12);
        }
    }
}

#[test]
fn heat_decay_rate_matches_smallest_eigenvalue() {
    let cx = su2_trivial();
    let lam = cx.spectrum(1).unwrap()[0];
    let v = vec![C64::new(0.3, 0.0), C64::new(-1.0, 0.2), C64::new(0.5, 0.0)];
    let norm = |w: &[C64]| w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let (t1, t2) = (10.0, 20.0);
    let n1 = norm(&heat_apply(&cx, 1, t1, &v).unwrap());
    let n2 = norm(&heat_apply(&cx, 1, t2, &v).unwrap());
    let rate = -(n2 / n1).ln() / (t2 - t1);
    assert!((rate - lam).abs() <= 1e-8, "rate {rate} vs {lam}");
}

#[test]
fn heat_split_matches_dyson_phillips() {
    let frame = CartanFrame::for_spec(&catalog::su2()).unwrap();
    let cx = CochainComplex::new(&frame, &ModuleRep::spin_half()).unwrap();
    let split = heat_split(&cx, 1, 12, DEFAULT_QUAD_NODES).unwrap();
    let r = dyson_phillips(&split, 0.5).unwrap();
    let oracle = expm(&(cx.laplacian(1).unwrap().matrix * C64::new(-0.5, 0.0))).unwrap();
    assert!(max_abs(&(&r.sum - &oracle)) <= 1e-8);
}
