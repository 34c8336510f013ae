//! The quotient map `π_W(B, C, A) = ((trace A^k)_{k=1..n}; (C A^k B)_{k=0..n-1})`
//! and its exact differential.

use num_traits::Zero;

use super::{Point, TangentVector};
use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix};
use crate::rational::{int, Rational};

/// Value of the quotient map: `tau[k-1] = trace(A^k)` for `k = 1..=n` and
/// `gamma[k] = C·A^k·B` for `k = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    pub tau: Vec<Rational>,
    pub gamma: Vec<Matrix>,
}

impl InvariantVector {
    pub fn is_zero(&self) -> bool {
        self.tau.iter().all(Zero::is_zero) && self.gamma.iter().all(Matrix::is_zero)
    }

    /// Coordinates in a fixed order: the `n` traces, then each `Γ^{(k)}`
    /// flattened row-major.
    pub fn flatten(&self) -> Vec<Rational> {
        let mut v = self.tau.clone();
        for g in &self.gamma {
            v.extend(g.entries().iter().cloned());
        }
        v
    }
}

/// `A^0, …, A^m`.
pub(crate) fn powers(a: &Matrix, m: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(m + 1);
    out.push(Matrix::identity(a.rows()));
    for k in 1..=m {
        let next = &out[k - 1] * a;
        out.push(next);
    }
    out
}

/// `π_W(w)` for an `r = 1` point.
pub fn evaluate_invariants(w: &Point) -> Result<InvariantVector> {
    let a = w.a()?;
    let n = w.n();
    let mut tau = Vec::with_capacity(n);
    let mut gamma = Vec::with_capacity(n);
    let mut ak = Matrix::identity(n);
    let mut akb = w.b().clone();
    for _ in 0..n {
        gamma.push(w.c() * &akb);
        akb = a * &akb;
        ak = &ak * a;
        tau.push(ak.trace()?);
    }
    Ok(InvariantVector { tau, gamma })
}

/// Directional derivative `dπ_W(w)[δw]` by the product rule:
/// `dτ_k = k·trace(A^{k-1} δA)` and
/// `dΓ^{(k)} = δC A^k B + Σ_{i<k} C A^i δA A^{k-1-i} B + C A^k δB`.
pub fn differential(w: &Point, dw: &TangentVector) -> Result<InvariantVector> {
    let a = w.a()?;
    dw.check_against(w)?;
    let n = w.n();
    let pw = powers(a, n);
    let ca: Vec<Matrix> = pw.iter().map(|p| w.c() * p).collect();
    let ab: Vec<Matrix> = pw.iter().map(|p| p * w.b()).collect();
    Ok(differential_with(&pw, &ca, &ab, dw))
}

fn differential_with(
    pw: &[Matrix],
    ca: &[Matrix],
    ab: &[Matrix],
    dw: &TangentVector,
) -> InvariantVector {
    let n = pw.len() - 1;
    let tau = (1..=n)
        .map(|k| (&pw[k - 1] * &dw.da).trace().expect("square") * int(k as i64))
        .collect();
    let da_ab: Vec<Matrix> = ab.iter().map(|m| &dw.da * m).collect();
    let gamma = (0..n)
        .map(|k| {
            let mut g = &(&dw.dc * &ab[k]) + &(&ca[k] * &dw.db);
            for i in 0..k {
                g = &g + &(&ca[i] * &da_ab[k - 1 - i]);
            }
            g
        })
        .collect();
    InvariantVector { tau, gamma }
}

/// Matrix of `dπ_W(w)`: one column per standard basis vector of the
/// tangent space (see [`TangentVector::basis`]), rows in the order of
/// [`InvariantVector::flatten`].
pub fn jacobian(w: &Point) -> Result<Matrix> {
    let a = w.a()?;
    let (n, p, q) = (w.n(), w.p(), w.q());
    let pw = powers(a, n);
    let ca: Vec<Matrix> = pw.iter().map(|m| w.c() * m).collect();
    let ab: Vec<Matrix> = pw.iter().map(|m| m * w.b()).collect();
    let domain = n * n + n * p + n * q;
    let columns: Vec<Vec<Rational>> = (0..domain)
        .map(|j| differential_with(&pw, &ca, &ab, &TangentVector::basis(n, p, q, j)).flatten())
        .collect();
    let rows = n + n * q * p;
    Ok(Matrix::from_fn(rows, domain, |i, j| columns[j][i].clone()))
}

/// Exact rank of `dπ_W(w)`.
pub fn jacobian_rank(w: &Point) -> Result<usize> {
    Ok(rank(&jacobian(w)?))
}

/// `min(dim W, dim of the target) = min(n² + np + nq, n + npq)`.
pub fn jacobian_rank_bound(n: usize, p: usize, q: usize) -> usize {
    (n * n + n * p + n * q).min(n + n * p * q)
}

/// Fails unless both points share `(n, p, q)`.
pub(crate) fn require_same_shape(w1: &Point, w2: &Point) -> Result<()> {
    if w1.same_shape(w2) {
        Ok(())
    } else {
        Err(Error::ShapeMismatch("points live in different spaces".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_point() -> Point {
        Point::enhanced(
            Matrix::from_i64(&[[1], [1]]),
            Matrix::from_i64(&[[1, 1]]),
            Matrix::from_i64(&[[1, 0], [0, 2]]),
        )
        .unwrap()
    }

    #[test]
    fn diagonal_example_by_hand() {
        let v = evaluate_invariants(&example_point()).unwrap();
        assert_eq!(v.tau, vec![int(3), int(5)]);
        assert_eq!(v.gamma, vec![Matrix::from_i64(&[[2]]), Matrix::from_i64(&[[3]])]);
    }

    #[test]
    fn zero_and_nilpotent_points_vanish() {
        assert!(evaluate_invariants(&Point::zero(3, 2, 1, 1)).unwrap().is_zero());
        let w = Point::enhanced(
            Matrix::zeros(4, 1),
            Matrix::zeros(2, 4),
            Matrix::principal_nilpotent(4),
        )
        .unwrap();
        assert!(evaluate_invariants(&w).unwrap().is_zero());
    }

    #[test]
    fn rejects_multiple_adjoint_copies() {
        assert!(evaluate_invariants(&Point::zero(2, 1, 1, 2)).is_err());
    }

    #[test]
    fn differential_at_origin() {
        let w = Point::zero(3, 2, 2, 1);
        let dw = TangentVector {
            db: Matrix::from_i64(&[[1, 2], [3, 4], [5, 6]]),
            dc: Matrix::from_i64(&[[1, 0, 1], [0, 1, 0]]),
            da: Matrix::from_i64(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]),
        };
        let d = differential(&w, &dw).unwrap();
        assert_eq!(d.tau, vec![int(16), int(0), int(0)]);
        assert!(d.gamma.iter().all(Matrix::is_zero));
        assert!(differential(&example_point(), &TangentVector::zero(2, 1, 1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn jacobian_rank_at_origin_is_one() {
        assert_eq!(jacobian_rank(&Point::zero(3, 2, 1, 1)).unwrap(), 1);
    }

    #[test]
    fn generic_jacobian_rank() {
        // n = 2, p = q = 1 with distinct eigenvalues and nonvanishing B, C
        assert_eq!(jacobian_rank(&example_point()).unwrap(), 4);
        let w = Point::enhanced(
            Matrix::from_i64(&[[1, 2], [-1, 3], [2, 5]]),
            Matrix::from_i64(&[[1, 4, -2]]),
            Matrix::from_i64(&[[1, 2, 0], [0, -1, 3], [4, 1, 2]]),
        )
        .unwrap();
        assert_eq!(jacobian_rank(&w).unwrap(), 9);
    }

    #[test]
    fn shape_mismatch_in_differential() {
        let r = differential(&example_point(), &TangentVector::zero(3, 1, 1));
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }
}
