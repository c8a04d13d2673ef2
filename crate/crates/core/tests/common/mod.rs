#![allow(dead_code)]

use liehodge::linalg::{CMat, C64};
use rand::Rng;

pub fn random_unitary(rng: &mut impl Rng, n: usize) -> CMat {
    let z = CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    z.qr().q()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize, scale: f64) -> CMat {
    let z = CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)));
    (&z + z.adjoint()) * C64::new(0.5, 0.0)
}

/// Q diag(λ) Q* with λ uniform in [lo, hi].
pub fn random_pd(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> CMat {
    let q = random_unitary(rng, n);
    let d = CMat::from_diagonal(&nalgebra::DVector::from_fn(n, |_, _| C64::new(rng.gen_range(lo..hi), 0.0)));
    &q * d * q.adjoint()
}

/// Random complex matrix rescaled to operator norm `norm`.
pub fn random_with_norm(rng: &mut impl Rng, n: usize, norm: f64) -> CMat {
    let z = CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let s = liehodge::linalg::op_norm(&z);
    z * C64::new(norm / s, 0.0)
}
