//! Closed-form dimensions of the null cone and its components, and the
//! nilpotent orbits of largest dimension inside each component.

use crate::invariants::Point;
use crate::linalg::Matrix;
use crate::orbits::stabilizer;
use crate::random::{self, DEFAULT_HEIGHT};
use crate::rational::int;

/// `dim C_k = (n² − n) + pk + q(n − k)`.
pub fn component_dim(n: usize, p: usize, q: usize, k: usize) -> usize {
    n * n - n + p * k + q * (n - k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullconeSummary {
    pub component_dims: Vec<usize>,
    pub nullcone_dim: usize,
    pub equidimensional: bool,
}

pub fn nullcone_summary(n: usize, p: usize, q: usize) -> NullconeSummary {
    let component_dims: Vec<usize> = (0..=n).map(|k| component_dim(n, p, q, k)).collect();
    let nullcone_dim = component_dims.iter().copied().max().unwrap_or(0);
    let equidimensional = component_dims.iter().all(|&d| d == component_dims[0]);
    NullconeSummary {
        component_dims,
        nullcone_dim,
        equidimensional,
    }
}

/// The point `(ξ, η, e)` with `e` the principal nilpotent (ones on the
/// superdiagonal), `ξ = [e_k | ξ₁′ ; 0]` and `η = [0 | η₁]`. Requires
/// `1 ≤ k ≤ n`; `xi_rest` is `k × (p − 1)` and `eta_block` is `q × (n − k)`.
pub fn witness_family_point(n: usize, k: usize, xi_rest: &Matrix, eta_block: &Matrix) -> Point {
    assert!(1 <= k && k <= n, "family needs 1 ≤ k ≤ n");
    let p = xi_rest.cols() + 1;
    let q = eta_block.rows();
    assert_eq!(xi_rest.rows(), k);
    assert_eq!(eta_block.cols(), n - k);
    let b = Matrix::from_fn(n, p, |i, j| match (i < k, j) {
        (false, _) => int(0),
        (true, 0) => int((i + 1 == k) as i64),
        (true, j) => xi_rest.get(i, j - 1).clone(),
    });
    let c = Matrix::from_fn(q, n, |i, j| {
        if j >= k {
            eta_block.get(i, j - k).clone()
        } else {
            int(0)
        }
    });
    Point::enhanced(b, c, Matrix::principal_nilpotent(n)).expect("consistent shapes")
}

/// `(B, C, A) ↦ (J Cᵀ, Bᵀ J, J Aᵀ J)` with `J` the antidiagonal
/// permutation. Sends a `(p, q)` point to a `(q, p)` point, maps `U_k` onto
/// `U_{n−k}`, commutes with the group action up to `g ↦ J g⁻ᵀ J`, and is
/// an involution.
pub fn transpose_dual(w: &Point) -> Point {
    let n = w.n();
    let j = Matrix::from_fn(n, n, |r, c| int((r + c + 1 == n) as i64));
    let a = w.a().expect("r = 1");
    Point::enhanced(
        &j * &w.c().transpose(),
        &w.b().transpose() * &j,
        &(&j * &a.transpose()) * &j,
    )
    .expect("consistent shapes")
}

fn witness_seed(n: usize, p: usize, q: usize, k: usize) -> u64 {
    let key = ((n as u64) << 48) ^ ((p as u64) << 32) ^ ((q as u64) << 16) ^ k as u64;
    random::cell_seed(0x0b17_5eed, key)
}

/// A point of `C_k` whose orbit has the largest dimension among nilpotent
/// orbits in `C_k`, with that orbit dimension. Uses the `ξ`-family when
/// `k ≥ n − k` and its transpose dual otherwise.
pub fn generic_orbit_witness(n: usize, p: usize, q: usize, k: usize) -> (Point, usize) {
    assert!(k <= n, "k must lie in 0..=n");
    let w = if 2 * k >= n {
        let mut rng = random::rng(witness_seed(n, p, q, k));
        let xi_rest = random::matrix(&mut rng, k, p - 1, DEFAULT_HEIGHT);
        let eta = random::matrix(&mut rng, q, n - k, DEFAULT_HEIGHT);
        witness_family_point(n, k, &xi_rest, &eta)
    } else {
        let (dual, _) = generic_orbit_witness(n, q, p, n - k);
        transpose_dual(&dual)
    };
    let orbit_dim = stabilizer(&w).orbit_dim;
    (w, orbit_dim)
}
