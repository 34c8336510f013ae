use crate::error::{Error, Result};
use crate::linalg::{det, Matrix};
use crate::rational::Rational;

/// The two `SL_n`-invariants of a `p = q = 1` point and the Hankel
/// determinant of the `GL_n`-invariants `γ^k = vA^k u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlRelation {
    /// `det(v; vA; …; vA^{n-1})`
    pub d1: Rational,
    /// `det(u, Au, …, A^{n-1}u)`
    pub d2: Rational,
    /// `det(vA^{i+j}u)_{0≤i,j<n}`
    pub hankel_det: Rational,
    /// `d1·d2 == hankel_det`
    pub holds: bool,
}

pub fn sl_relation_check(u: &Matrix, v: &Matrix, a: &Matrix) -> Result<SlRelation> {
    let n = a.rows();
    if !a.is_square() || u.shape() != (n, 1) || v.shape() != (1, n) {
        return Err(Error::ShapeMismatch(format!(
            "need u {n}x1, v 1x{n}, A {n}x{n}"
        )));
    }
    let mut right = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    let mut au = u.clone();
    let mut va = v.clone();
    for _ in 0..n {
        right.push(au.col(0));
        left.push(va.row(0).to_vec());
        au = a * &au;
        va = &va * a;
    }
    let d1 = det(&Matrix::from_rows(left.clone())?)?;
    let d2 = det(&Matrix::from_rows(right.clone())?.transpose())?;
    // γ^{i+j} = vA^{i+j}u, computed as powers of a single chain so the
    // Hankel matrix does not reuse the Krylov factorisation above.
    let mut gammas = Vec::with_capacity(2 * n);
    let mut chain = u.clone();
    for _ in 0..2 * n.max(1) - 1 {
        gammas.push((v * &chain).get(0, 0).clone());
        chain = a * &chain;
    }
    let hankel = Matrix::from_fn(n, n, |i, j| gammas[i + j].clone());
    let hankel_det = det(&hankel)?;
    let holds = &d1 * &d2 == hankel_det;
    Ok(SlRelation {
        d1,
        d2,
        hankel_det,
        holds,
    })
}
