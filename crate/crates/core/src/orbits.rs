//! Stabilizers, regular semisimplicity, and reconstruction of closed orbits
//! from invariant data.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::invariants::{evaluate_invariants, require_same_shape, Point};
use crate::linalg::{char_poly, check_distinct, kernel, rank, vandermonde_solve, Matrix, Subspace};
use crate::rational::Rational;

/// Lie-algebra stabilizer `{X ∈ M_n : XB = 0, CX = 0, [X, A_i] = 0}` of a
/// point and the resulting orbit dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub stab_dim: usize,
    pub orbit_dim: usize,
    /// Subspace of `ℚ^{n²}`; coordinates are the entries of `X` row-major.
    pub kernel_basis: Subspace,
}

impl StabilizerReport {
    /// The kernel basis reshaped into `n×n` matrices.
    pub fn kernel_matrices(&self) -> Vec<Matrix> {
        let n2 = self.kernel_basis.ambient_dim();
        let n = (n2 as f64).sqrt().round() as usize;
        self.kernel_basis
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_vec(n, n, v).expect("n² entries"))
            .collect()
    }
}

/// `(XB, CX, [X, A_1], …, [X, A_r])` flattened, the linear map whose
/// kernel is the stabilizer.
fn stabilizer_equations(w: &Point, x: &Matrix) -> Vec<Rational> {
    let mut out: Vec<Rational> = (x * w.b()).entries().to_vec();
    out.extend((w.c() * x).entries().iter().cloned());
    for a in w.a_list() {
        out.extend((&(x * a) - &(a * x)).entries().iter().cloned());
    }
    out
}

/// Solves the stabilizer system exactly. The stabilizer subgroup has the
/// same dimension as this Lie algebra, so `orbit_dim = n² − stab_dim`.
pub fn stabilizer(w: &Point) -> StabilizerReport {
    let n = w.n();
    let columns: Vec<Vec<Rational>> = (0..n * n)
        .map(|idx| stabilizer_equations(w, &Matrix::unit(n, n, idx / n, idx % n)))
        .collect();
    let rows = columns[0].len();
    let system = Matrix::from_fn(rows, n * n, |i, j| columns[j][i].clone());
    let kernel_basis = kernel(&system);
    let stab_dim = kernel_basis.dim();
    let report = StabilizerReport {
        stab_dim,
        orbit_dim: n * n - stab_dim,
        kernel_basis,
    };
    debug_assert!(report
        .kernel_matrices()
        .iter()
        .all(|x| stabilizer_equations(w, x).iter().all(Zero::is_zero)));
    report
}

/// Whether `A` has `n` distinct eigenvalues over the algebraic closure,
/// decided by the discriminant of its characteristic polynomial.
pub fn is_regular_semisimple(a: &Matrix) -> Result<bool> {
    Ok(!char_poly(a)?.discriminant().is_zero())
}

/// `X = c·b` with `c` a column and `b` a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneFactor {
    pub c: Vec<Rational>,
    pub b: Vec<Rational>,
}

/// Data produced while reconstructing a fiber point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionData {
    pub t: Vec<Rational>,
    pub x: Vec<Matrix>,
    pub factors: Vec<RankOneFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub point: Point,
    pub data: ReconstructionData,
}

/// Factors a matrix of rank ≤ 1. The first nonzero column becomes `c`; `b`
/// is scaled so that its entry in that column is 1. Returns `None` when the
/// rank is at least two.
pub fn rank_one_factor(x: &Matrix) -> Option<RankOneFactor> {
    let (q, p) = x.shape();
    let Some(j0) = (0..p).find(|&j| (0..q).any(|i| !x.get(i, j).is_zero())) else {
        return Some(RankOneFactor {
            c: vec![Rational::zero(); q],
            b: vec![Rational::zero(); p],
        });
    };
    let c = x.col(j0);
    let i0 = c.iter().position(|v| !v.is_zero()).expect("nonzero column");
    let pivot = x.get(i0, j0);
    let b: Vec<Rational> = (0..p).map(|j| x.get(i0, j) / pivot).collect();
    let f = RankOneFactor { c, b };
    if &Matrix::column(&f.c) * &Matrix::row_vector(&f.b) == *x {
        Some(f)
    } else {
        None
    }
}

/// Builds `w = (B, C, diag(t))` with `π_W(w) = ((Σ t_i^k)_k; Γ)`.
///
/// `X = D(t)^{-1}Γ` must consist of rank-≤1 blocks; with `strict_rank1`
/// rank-0 blocks are rejected as well.
pub fn reconstruct_fiber_point(
    t: &[Rational],
    gamma: &[Matrix],
    strict_rank1: bool,
) -> Result<Reconstruction> {
    let n = t.len();
    if n == 0 || gamma.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "need n ≥ 1 nodes and n blocks, got {} and {}",
            n,
            gamma.len()
        )));
    }
    check_distinct(t)?;
    let x = vandermonde_solve(t, gamma)?;
    let (q, p) = gamma[0].shape();
    let mut factors = Vec::with_capacity(n);
    for (k, xk) in x.iter().enumerate() {
        let rk = rank(xk);
        if rk > 1 || (strict_rank1 && rk == 0) {
            return Err(Error::FiberConditionViolated(format!(
                "X^({}) has rank {rk}",
                k + 1
            )));
        }
        factors.push(rank_one_factor(xk).expect("rank ≤ 1"));
    }
    let b = Matrix::from_fn(n, p, |r, j| factors[r].b[j].clone());
    let c = Matrix::from_fn(q, n, |i, r| factors[r].c[i].clone());
    let point = Point::enhanced(b, c, Matrix::diagonal(t))?;
    Ok(Reconstruction {
        point,
        data: ReconstructionData {
            t: t.to_vec(),
            x,
            factors,
        },
    })
}

/// Closed orbits are separated by invariants: compares `π_W` exactly.
pub fn same_closed_orbit(w1: &Point, w2: &Point) -> Result<bool> {
    require_same_shape(w1, w2)?;
    Ok(evaluate_invariants(w1)? == evaluate_invariants(w2)?)
}
