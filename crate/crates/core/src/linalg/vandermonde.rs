use num_traits::{One, Zero};

use super::Matrix;
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// `D(t) = (t_j^i)` for `i, j = 0..n`; row `i` holds the `i`-th powers.
pub fn vandermonde(t: &[Rational]) -> Matrix {
    let n = t.len();
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one(); n]];
    for i in 1..n {
        let next = rows[i - 1].iter().zip(t).map(|(p, x)| p * x).collect();
        rows.push(next);
    }
    if n == 0 {
        return Matrix::zeros(0, 0);
    }
    Matrix::from_rows(rows).expect("square")
}

pub(crate) fn check_distinct(t: &[Rational]) -> Result<()> {
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] == t[j] {
                return Err(Error::DegenerateSpectrum(format!(
                    "t[{i}] = t[{j}] = {}",
                    format_rational(&t[i])
                )));
            }
        }
    }
    Ok(())
}

/// `D(t)^{-1}`, read off the Lagrange basis: row `r` lists the coefficients
/// (constant term first) of `L_r(x) = ∏_{j≠r} (x − t_j)/(t_r − t_j)`,
/// because `Σ_k [x^k]L_r · t_j^k = L_r(t_j) = δ_{rj}`.
pub fn vandermonde_inverse(t: &[Rational]) -> Result<Matrix> {
    check_distinct(t)?;
    let n = t.len();
    let rows = (0..n)
        .map(|r| {
            // ascending coefficients of ∏_{j≠r} (x − t_j)
            let mut poly = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, tj) in t.iter().enumerate() {
                if j == r {
                    continue;
                }
                let mut next = vec![Rational::zero(); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * tj;
                }
                poly = next;
                denom *= &t[r] - tj;
            }
            let inv = denom.recip();
            poly.into_iter().map(|c| c * &inv).collect()
        })
        .collect();
    if n == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows)
}

/// Solves `Σ_r t_r^k X^{(r)} = rhs_k` for `k = 0..n`, returning
/// `(X^{(1)}, …, X^{(n)})`.
pub fn vandermonde_solve(t: &[Rational], rhs: &[Matrix]) -> Result<Vec<Matrix>> {
    if t.len() != rhs.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} nodes but {} right-hand sides",
            t.len(),
            rhs.len()
        )));
    }
    let Some(first) = rhs.first() else {
        return Ok(Vec::new());
    };
    let shape = first.shape();
    if rhs.iter().any(|m| m.shape() != shape) {
        return Err(Error::ShapeMismatch("right-hand sides differ in shape".into()));
    }
    let inv = vandermonde_inverse(t)?;
    Ok((0..t.len())
        .map(|r| {
            let mut acc = Matrix::zeros(shape.0, shape.1);
            for (k, g) in rhs.iter().enumerate() {
                let c = inv.get(r, k);
                if !c.is_zero() {
                    acc = &acc + &g.scale(c);
                }
            }
            acc
        })
        .collect())
}

/// `(Σ_r t_r^k X^{(r)})_{k=0..n}`, the forward map of [`vandermonde_solve`].
pub fn vandermonde_apply(t: &[Rational], xs: &[Matrix]) -> Result<Vec<Matrix>> {
    if t.len() != xs.len() {
        return Err(Error::ShapeMismatch("nodes and blocks differ in count".into()));
    }
    let Some(first) = xs.first() else {
        return Ok(Vec::new());
    };
    let d = vandermonde(t);
    let (q, p) = first.shape();
    Ok((0..t.len())
        .map(|k| {
            let mut acc = Matrix::zeros(q, p);
            for (r, x) in xs.iter().enumerate() {
                acc = &acc + &x.scale(d.get(k, r));
            }
            acc
        })
        .collect())
}
