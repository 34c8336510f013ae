//! Seeded samplers. Integer entries are drawn uniformly from `[−h, h]`.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::invariants::Point;
use crate::linalg::{det, inverse, Matrix};
use crate::rational::{int, Rational};

pub type Rng = ChaCha8Rng;

/// Entry bound used when none is given.
pub const DEFAULT_HEIGHT: i64 = 10;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a base seed with a cell index (splitmix64 finaliser), so that
/// every cell of a randomized suite has an independent, reproducible stream.
pub fn cell_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn int_in(rng: &mut Rng, h: i64) -> i64 {
    rng.random_range(-h..=h)
}

pub fn nonzero_int_in(rng: &mut Rng, h: i64) -> i64 {
    let v = rng.random_range(1..=h);
    if rng.random_bool(0.5) {
        v
    } else {
        -v
    }
}

pub fn matrix(rng: &mut Rng, rows: usize, cols: usize, h: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(int_in(rng, h)))
}

/// Rejection-samples an integer matrix with nonzero determinant.
pub fn invertible(rng: &mut Rng, n: usize, h: i64) -> Matrix {
    loop {
        let g = matrix(rng, n, n, h);
        if !det(&g).expect("square").eq(&int(0)) {
            return g;
        }
    }
}

pub fn point(rng: &mut Rng, n: usize, p: usize, q: usize, r: usize, h: i64) -> Point {
    let b = matrix(rng, n, p, h);
    let c = matrix(rng, q, n, h);
    let a = (0..r.max(1)).map(|_| matrix(rng, n, n, h)).collect();
    Point::new(b, c, a).expect("consistent shapes")
}

/// A point with `A = g·diag(t)·g⁻¹` for distinct integers `t` (so `A` is
/// regular semisimple) and every entry of `B` and `C` nonzero.
pub fn generic_point(rng: &mut Rng, n: usize, p: usize, q: usize, h: i64) -> Point {
    let t = distinct_values(rng, n, h);
    let g = invertible(rng, n, h);
    let a = &(&g * &Matrix::diagonal(&t)) * &inverse(&g).expect("invertible");
    let b = Matrix::from_fn(n, p, |_, _| int(nonzero_int_in(rng, h)));
    let c = Matrix::from_fn(q, n, |_, _| int(nonzero_int_in(rng, h)));
    Point::enhanced(b, c, a).expect("consistent shapes")
}

/// `n` pairwise-distinct integers from `[−h, h]` (h is widened if needed).
pub fn distinct_values(rng: &mut Rng, n: usize, h: i64) -> Vec<Rational> {
    let h = h.max(n as i64);
    let mut out: Vec<i64> = Vec::with_capacity(n);
    while out.len() < n {
        let v = int_in(rng, h);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.into_iter().map(int).collect()
}

/// `c·bᵀ` for random integer vectors; rank ≤ 1 by construction.
pub fn rank_le1(rng: &mut Rng, q: usize, p: usize, h: i64) -> Matrix {
    let c = matrix(rng, q, 1, h);
    let b = matrix(rng, 1, p, h);
    &c * &b
}

/// `c·bᵀ` with every entry of `c` and `b` nonzero.
pub fn full_rank1(rng: &mut Rng, q: usize, p: usize, h: i64) -> Matrix {
    let c = Matrix::from_fn(q, 1, |_, _| int(nonzero_int_in(rng, h)));
    let b = Matrix::from_fn(1, p, |_, _| int(nonzero_int_in(rng, h)));
    &c * &b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = matrix(&mut rng(42), 3, 3, DEFAULT_HEIGHT);
        let b = matrix(&mut rng(42), 3, 3, DEFAULT_HEIGHT);
        assert_eq!(a, b);
        assert_ne!(cell_seed(1, 0), cell_seed(1, 1));
    }

    #[test]
    fn samplers_respect_contracts() {
        let mut r = rng(3);
        for _ in 0..20 {
            let g = invertible(&mut r, 3, 2);
            assert_ne!(det(&g).unwrap(), int(0));
            let t = distinct_values(&mut r, 5, 2);
            for i in 0..5 {
                for j in i + 1..5 {
                    assert_ne!(t[i], t[j]);
                }
            }
            assert!(crate::linalg::rank(&rank_le1(&mut r, 3, 2, 5)) <= 1);
        }
    }
}
