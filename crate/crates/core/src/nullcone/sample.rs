//! Random points of the components `C_k = G·U_k` and the tangent-space
//! dimension count at them.

use super::weights::u_k_pattern;
use crate::invariants::{group_action, Point};
use crate::linalg::{rank, Matrix};
use crate::random::{self, Rng, DEFAULT_HEIGHT};
use crate::rational::int;

/// Random `u ∈ U_k` whose adjoint part has every superdiagonal entry
/// nonzero, hence is principal nilpotent.
pub fn random_u_k(rng: &mut Rng, n: usize, p: usize, q: usize, k: usize, h: i64) -> Point {
    assert!(k <= n, "k must lie in 0..=n");
    let b = Matrix::from_fn(n, p, |i, _| {
        if i < k {
            int(random::int_in(rng, h))
        } else {
            int(0)
        }
    });
    let c = Matrix::from_fn(q, n, |_, j| {
        if j >= k {
            int(random::int_in(rng, h))
        } else {
            int(0)
        }
    });
    let a = Matrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            int(random::nonzero_int_in(rng, h))
        } else if j > i + 1 {
            int(random::int_in(rng, h))
        } else {
            int(0)
        }
    });
    Point::enhanced(b, c, a).expect("consistent shapes")
}

/// `g·u` for random `u ∈ U_k` and random invertible `g`.
pub fn sample_component(n: usize, p: usize, q: usize, k: usize, seed: u64) -> Point {
    let mut rng = random::rng(seed);
    let u = random_u_k(&mut rng, n, p, q, k, DEFAULT_HEIGHT);
    let g = random::invertible(&mut rng, n, DEFAULT_HEIGHT);
    group_action(&g, &u).expect("g is invertible")
}

/// `(XB, −CX, [X, A])` flattened in tangent order (`A`, `B`, `C`).
fn orbit_tangent(u: &Point, x: &Matrix) -> Vec<crate::rational::Rational> {
    let a = u.a().expect("r = 1");
    let mut out: Vec<_> = (&(x * a) - &(a * x)).entries().to_vec();
    out.extend((x * u.b()).entries().iter().cloned());
    out.extend((-&(u.c() * x)).entries().iter().cloned());
    out
}

/// `dim(𝔤·u + U_k)` at a given `u ∈ U_k`. Coordinates inside `U_k` are
/// counted directly; the orbit directions contribute the rank of their
/// projection onto the complementary coordinates.
pub fn tangent_dim_at(u: &Point, k: usize) -> usize {
    let (n, p, q) = (u.n(), u.p(), u.q());
    let pat = u_k_pattern(n, p, q, k);
    let mut outside = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !pat.a_entries[i][j] {
                outside.push(i * n + j);
            }
        }
    }
    for i in 0..n {
        if !pat.b_rows[i] {
            outside.extend((0..p).map(|j| n * n + i * p + j));
        }
    }
    for i in 0..q {
        for j in 0..n {
            if !pat.c_cols[j] {
                outside.push(n * n + n * p + i * n + j);
            }
        }
    }
    let cols: Vec<Vec<_>> = (0..n * n)
        .map(|idx| orbit_tangent(u, &Matrix::unit(n, n, idx / n, idx % n)))
        .collect();
    let proj = Matrix::from_fn(outside.len(), n * n, |r, c| cols[c][outside[r]].clone());
    debug_assert!(cols.iter().all(|v| v.len() == n * n + n * p + q * n));
    debug_assert!(u_k_pattern(n, p, q, k).contains(u));
    pat.dim() + rank(&proj)
}

/// `dim(𝔤·u + U_k)` at a random principal `u ∈ U_k`.
pub fn component_tangent_dim(n: usize, p: usize, q: usize, k: usize, seed: u64) -> usize {
    let mut rng = random::rng(seed);
    let u = random_u_k(&mut rng, n, p, q, k, DEFAULT_HEIGHT);
    tangent_dim_at(&u, k)
}
