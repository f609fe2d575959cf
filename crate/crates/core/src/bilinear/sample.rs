//! Exact rational sampling of the sphere identity.
//!
//! Independent of the coefficient identities, a nice normed map `F`
//! of shape `(n+1, m+1, n+m+1)` must satisfy `||f(x, y)||^2 =
//! 2 f_1(x, y)` with `f = F/2` for all points on the shifted spheres
//! `||x||^2 = 2 x_1`; equivalently `||F(x, y)||^2 = 4 F_1(x, y)`.
//! This module checks that identity on seeded random rational sphere
//! points with exact arithmetic, giving a second route to the same
//! verdict as the coefficient checks.
//!
//! Rational points come from the lines through the origin: for any
//! rational direction `u` with `u_1 != 0`, the second intersection of
//! the line `R u` with the shifted sphere is `(2 u_1 / ||u||^2) u`.

use num::rational::BigRational;
use num::traits::Zero;
use num::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::BilinearMap;

/// A rational point on the shifted sphere `||x||^2 = 2 x_1` in
/// `R^dim`, drawn from small random integer directions.
pub fn sphere_point(dim: usize, rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    loop {
        let u: Vec<i64> = (0..dim).map(|_| rng.gen_range(-9..=9)).collect();
        if u[0] == 0 {
            continue;
        }
        let norm_sq: i64 = u.iter().map(|v| v * v).sum();
        let scale = BigRational::new(BigInt::from(2 * u[0]), BigInt::from(norm_sq));
        return u
            .into_iter()
            .map(|v| &scale * BigRational::from_integer(BigInt::from(v)))
            .collect();
    }
}

/// Evaluates `F(x, y)` exactly.
pub fn apply(map: &BilinearMap, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(x.len(), map.a);
    assert_eq!(y.len(), map.b);
    map.mats
        .iter()
        .map(|m| {
            let mut acc = BigRational::zero();
            for (j, l, v) in m.entries() {
                if v != 0 {
                    acc += &x[j] * &y[l] * BigRational::from_integer(BigInt::from(v));
                }
            }
            acc
        })
        .collect()
}

/// Index of the first seeded sample violating
/// `||F(x, y)||^2 = 4 F_1(x, y)` on the shifted spheres, or `None`
/// if all pass.
pub fn sample_failure(map: &BilinearMap, samples: usize, seed: u64) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let x = sphere_point(map.a, &mut rng);
        let y = sphere_point(map.b, &mut rng);
        let f = apply(map, &x, &y);
        let lhs: BigRational = f.iter().map(|v| v * v).sum();
        let rhs = &f[0] * BigRational::from_integer(BigInt::from(4));
        if lhs != rhs {
            return Some(i);
        }
    }
    None
}

/// Whether the sampling identity holds on `samples` seeded points.
pub fn sample_check(map: &BilinearMap, samples: usize, seed: u64) -> bool {
    sample_failure(map, samples, seed).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::{certify_nice, realize, SearchBudget};

    #[test]
    fn sphere_points_satisfy_the_sphere_equation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = sphere_point(5, &mut rng);
            let lhs: BigRational = x.iter().map(|v| v * v).sum();
            let rhs = &x[0] * BigRational::from_integer(BigInt::from(2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn samples_agree_with_the_coefficient_check() {
        let d = certify_nice(4, 3, &SearchBudget::default()).unwrap();
        let map = realize(&d).unwrap();
        assert!(map.verify_normed());
        assert!(sample_check(&map, 100, 0xC0FFEE));

        // Any single-entry mutation is caught by both routes.
        let mut broken = map.clone();
        let old = broken.mats[3].get(1, 1);
        broken.mats[3].set(1, 1, old + 1);
        assert!(!broken.verify_normed());
        assert!(!sample_check(&broken, 100, 0xC0FFEE));
    }
}
