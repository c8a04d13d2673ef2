use liehodge::group_numerics::*;
use nalgebra::Matrix2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn el(m: Matrix2<f64>) -> GroupElement {
    GroupElement::sl2r(m).unwrap()
}

fn max_diff(a: &Matrix2<f64>, b: &Matrix2<f64>) -> f64 {
    (a - b).amax()
}

#[test]
fn iwasawa_trivial_cases() {
    let x = el(diag(2f64.ln()));
    let f = iwasawa_nak(&x).unwrap();
    assert!(max_diff(&f.n, &Matrix2::identity()) < 1e-15);
    assert!(max_diff(&f.k, &Matrix2::identity()) < 1e-15);
    assert!((f.a[(0, 0)] - 2.0).abs() < 1e-15);

    let r = rotation(0.7);
    let f = iwasawa_nak(&el(r)).unwrap();
    assert!(max_diff(&f.a, &Matrix2::identity()) < 1e-15);
    assert!(max_diff(&f.k, &r) < 1e-15);

    let u = unipotent(1.0);
    let f = iwasawa_nak(&el(u)).unwrap();
    assert!(max_diff(&f.n, &u) < 1e-15);
    assert!(f.h.abs() < 1e-15);
}

#[test]
fn iwasawa_paths_agree_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let x = el(random_sl2r(&mut rng));
        let a = iwasawa_nak(&x).unwrap();
        let b = iwasawa_nak_gram_schmidt(&x).unwrap();
        let m = x.real().unwrap();
        assert!(max_diff(&a.product(), &m) <= 1e-12 * m.amax().max(1.0));
        assert!(max_diff(&a.n, &b.n) <= 1e-10);
        assert!(max_diff(&a.a, &b.a) <= 1e-10);
        assert!(max_diff(&a.k, &b.k) <= 1e-10);
        assert!((a.k.determinant() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn kak_examples() {
    // Symmetric positive definite: eigen-decomposition oracle.
    let q = rotation(0.4);
    let s = q * Matrix2::new(3.0, 0.0, 0.0, 1.0 / 3.0) * q.transpose();
    let f = cartan_kak(&el(s)).unwrap();
    assert!((f.a_plus[(0, 0)] - 3.0).abs() < 1e-12);
    assert!(max_diff(&f.k1, &f.k2.transpose()) < 1e-12);

    let f = cartan_kak(&el(rotation(1.1))).unwrap();
    assert!(max_diff(&f.a_plus, &Matrix2::identity()) < 1e-12);

    let f = cartan_kak(&el(Matrix2::new(0.5, 0.0, 0.0, 2.0))).unwrap();
    assert!(max_diff(&f.a_plus, &Matrix2::new(2.0, 0.0, 0.0, 0.5)) < 1e-12);
    assert!(max_diff(&(f.k1 * f.k2), &Matrix2::identity()) < 1e-12);
    assert!(f.k1[(0, 0)].abs() < 1e-12);
}

#[test]
fn kak_reconstructs_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let m = random_sl2r(&mut rng);
        let f = cartan_kak(&el(m)).unwrap();
        assert!(max_diff(&f.product(), &m) <= 1e-12 * m.amax().max(1.0));
        assert!(f.a_plus[(0, 0)] >= 1.0);
        assert!((f.k1.determinant() - 1.0).abs() < 1e-12);
        assert!((f.k2.determinant() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn norm_p_examples_and_symmetries() {
    assert!(norm_p(&el(rotation(2.0))).unwrap() < 1e-15);
    for s in [-1.5, -0.3, 0.2, 2.0] {
        let v = norm_p(&el(diag(s))).unwrap();
        assert!((v - s.abs() * 8f64.sqrt()).abs() < 1e-12);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let m = random_sl2r(&mut rng);
        let v = norm_p(&el(m)).unwrap();
        let inv = m.try_inverse().unwrap();
        assert!((norm_p(&el(inv)).unwrap() - v).abs() < 1e-10);
        let k = rotation(0.3) * m * rotation(-1.9);
        assert!((norm_p(&el(k)).unwrap() - v).abs() < 1e-12);
    }
}

#[test]
fn norm_p_subadditive_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..1000 {
        let x = random_sl2r(&mut rng);
        let y = random_sl2r(&mut rng);
        let lhs = norm_p(&el(x * y)).unwrap();
        let rhs = norm_p(&el(x)).unwrap() + norm_p(&el(y)).unwrap();
        assert!(lhs <= rhs + 1e-9);
    }
}

#[test]
fn su2_elements_are_rejected_by_real_operations() {
    use num_complex::Complex64 as C;
    let m = Matrix2::new(C::new(0.0, 1.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(0.0, -1.0));
    let x = GroupElement::su2(m).unwrap();
    assert!(matches!(iwasawa_nak(&x), Err(liehodge::Error::Model(_))));
    assert!(GroupElement::sl2r(Matrix2::new(2.0, 0.0, 0.0, 2.0)).is_err());
}

#[test]
fn phi0_identity_and_symmetries() {
    let cfg = SphericalConfig::default();
    assert_eq!(spherical_phi0(&el(Matrix2::identity()), &cfg).unwrap(), 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let m = random_sl2r(&mut rng);
        let v = spherical_phi0(&el(m), &cfg).unwrap();
        assert!(v > 0.0 && v <= 1.0);
        let inv = spherical_phi0(&el(m.try_inverse().unwrap()), &cfg).unwrap();
        assert!((inv - v).abs() <= 1e-8);
        let k = spherical_phi0(&el(rotation(0.8) * m * rotation(2.3)), &cfg).unwrap();
        assert!((k - v).abs() <= 1e-8);
    }
}

#[test]
fn phi0_matches_high_resolution_reference() {
    let x = el(diag(1.0));
    let v = spherical_phi0(&x, &SphericalConfig::default()).unwrap();
    let r = spherical_phi0(&x, &SphericalConfig::new(4096).unwrap()).unwrap();
    assert!((v - r).abs() <= 1e-10);
}

#[test]
fn phi0_in_unit_interval_on_kak_grid() {
    let cfg = SphericalConfig::default();
    for i in 0..10 {
        for j in 0..10 {
            let t = 0.4 * i as f64;
            let th = 0.6 * j as f64;
            let v = spherical_phi0(&el(rotation(th) * diag(t) * rotation(-0.5 * th)), &cfg).unwrap();
            assert!(v > 0.0 && v <= 1.0 + 1e-15);
        }
    }
}

#[test]
fn phi0_richardson_order() {
    let r = richardson(&el(diag(2.0)), 8, 5).unwrap();
    assert!(r.at_least_second_order(1e-13), "{:?}", r);
}

#[test]
fn phi0_precision_warning_on_coarse_grid() {
    let v = spherical_phi0_value(&el(diag(3.0)), &SphericalConfig::new(8).unwrap()).unwrap();
    assert!(v.warning.is_some());
    assert!(SphericalConfig::new(6).is_err());
    assert!(SphericalConfig::new(9).is_err());
}

#[test]
fn growth_fit_passes_on_chamber_grid() {
    let t: Vec<f64> = (0..10).map(|i| 0.5 + 0.5 * i as f64).collect();
    let fit = growth_fit(&t, &SphericalConfig::default(), DEFAULT_GROWTH_SLACK).unwrap();
    println!("{:?}", fit);
    assert!(fit.pass);
    assert!(fit.c.is_finite() && fit.d.is_finite());
}

#[test]
fn growth_fit_rejects_corrupted_values() {
    let cfg = SphericalConfig::default();
    let t: Vec<f64> = (0..10).map(|i| 0.5 + 0.5 * i as f64).collect();
    let vals: Vec<f64> = t
        .iter()
        .map(|&s| spherical_phi0(&el(diag(s)), &cfg).unwrap() * s.exp())
        .collect();
    assert!(!growth_fit_values(&t, &vals, DEFAULT_GROWTH_SLACK).unwrap().pass);
    assert!(growth_fit_values(&t[..2], &vals[..2], 0.05).is_err());
}

#[test]
fn growth_bound_near_origin_holds_with_unit_constant() {
    let cfg = SphericalConfig::default();
    for s in [1e-4, 1e-3, 1e-2] {
        let v = spherical_phi0(&el(diag(s)), &cfg).unwrap();
        assert!(v <= 1.0);
        // C = 1, d = 1 bound: e^{-t}(1 + t) ≥ 1 − t²/2.
        assert!(v <= 1.0 + 1e-15 && (-s).exp() * (1.0 + s) >= 1.0 - s * s);
    }
}

#[test]
fn seminorm_weight_examples() {
    let cfg = SphericalConfig::default();
    let e = el(Matrix2::identity());
    for (r, p) in [(0.0, 1.0), (2.0, 2.0), (5.0, f64::INFINITY)] {
        assert_eq!(seminorm_weight(&e, r, p, &cfg).unwrap(), 1.0);
    }
    let x = el(diag(1.0));
    let w = seminorm_weight(&x, 2.0, 2.0, &cfg).unwrap();
    let oracle = (1.0 + norm_p(&x).unwrap()).powi(2) / spherical_phi0(&x, &cfg).unwrap();
    assert!((w - oracle).abs() <= 1e-12 * oracle);
    let mut last = 0.0;
    for r in [0.0, 0.5, 1.0, 2.0] {
        let w = seminorm_weight(&x, r, 2.0, &cfg).unwrap();
        assert!(w > last);
        last = w;
    }
}
