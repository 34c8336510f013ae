//! The map `Ψ(t; X) = ((Σ_i t_i^k)_{k=1..n}; (Σ_r t_r^k X^{(r)})_{k=0..n-1})`
//! on `ℚ^n × Det_1(M_{q,p})^n`, and the toy model showing that images of
//! closed invariant sets under such maps need not be closed.

use num_traits::Zero;

use super::InvariantVector;
use crate::error::{Error, Result};
use crate::linalg::{power_sums_of, rank, vandermonde_apply, Matrix, MonicPoly};
use crate::rational::{int, Rational};

/// `Ψ(t; X)`. Every `X^{(k)}` must have rank at most one.
pub fn psi_map(t: &[Rational], xs: &[Matrix]) -> Result<InvariantVector> {
    if t.len() != xs.len() || t.is_empty() {
        return Err(Error::ShapeMismatch(format!(
            "{} nodes but {} blocks",
            t.len(),
            xs.len()
        )));
    }
    for (k, x) in xs.iter().enumerate() {
        let rk = rank(x);
        if rk > 1 {
            return Err(Error::NotInDet1(format!("X^({}) has rank {rk}", k + 1)));
        }
    }
    let gamma = vandermonde_apply(t, xs)?;
    Ok(InvariantVector {
        tau: power_sums_of(t, t.len()),
        gamma,
    })
}

/// A value `((Σ a_i^k)_k; (Σ a_i^k v_i)_k)` of the toy map, `k = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToyValue {
    pub power_sums: Vec<Rational>,
    pub moments: Vec<Matrix>,
}

impl ToyValue {
    /// Max-abs distance over all coordinates.
    pub fn distance(&self, other: &ToyValue) -> Rational {
        let d_tau = self
            .power_sums
            .iter()
            .zip(&other.power_sums)
            .map(|(x, y)| {
                let d = x - y;
                if d < Rational::zero() {
                    -d
                } else {
                    d
                }
            })
            .max()
            .unwrap_or_else(Rational::zero);
        let d_mom = self
            .moments
            .iter()
            .zip(&other.moments)
            .map(|(x, y)| (x - y).max_abs())
            .max()
            .unwrap_or_else(Rational::zero);
        d_tau.max(d_mom)
    }
}

/// Output of [`nonclosed_image_demo`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonClosedDemo {
    /// `ψ(a; v)` at `a = (ε, 2ε, …, nε)`, `v_i = u / a_i`.
    pub image_point: ToyValue,
    /// `(0; (n·u, 0, …, 0))`.
    pub limit_point: ToyValue,
    pub gap: Rational,
    /// True when no point of `Z = {a_i v_i = u}` can map onto the limit.
    pub limit_excluded: bool,
}

/// `ψ(a; v) = ((Σ a_i^k)_{k=1..n}; (Σ a_i^k v_i)_{k=1..n})`.
pub fn toy_map(a: &[Rational], v: &[Matrix]) -> ToyValue {
    let n = a.len();
    let power_sums = power_sums_of(a, n);
    let (rows, cols) = v[0].shape();
    let mut pw: Vec<Rational> = a.to_vec();
    let mut moments = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            for (p, x) in pw.iter_mut().zip(a) {
                *p *= x;
            }
        }
        let mut m = Matrix::zeros(rows, cols);
        for (c, vi) in pw.iter().zip(v) {
            m = &m + &vi.scale(c);
        }
        moments.push(m);
    }
    ToyValue {
        power_sums,
        moments,
    }
}

/// Whether a toy value can be attained from `Z = {(a; v) : a_i v_i = u}`
/// with `u ≠ 0` is decided here only in the direction that matters: its
/// power sums fix `∏(x − a_i)` by Newton's identities, and a vanishing
/// constant term forces some `a_i = 0`, contradicting `a_i v_i = u`.
pub fn toy_value_excluded_from_z(value: &ToyValue) -> bool {
    let f = MonicPoly::from_power_sums(&value.power_sums);
    f.coeffs().last().is_some_and(Zero::is_zero)
}

/// Exhibits a sequence in `ψ(Z)` converging to a point outside `ψ(Z)`.
pub fn nonclosed_image_demo(n: usize, u: &Matrix, eps: &Rational) -> Result<NonClosedDemo> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if u.is_zero() {
        return Err(Error::InvalidArgument("u must be nonzero".into()));
    }
    if rank(u) != 1 {
        return Err(Error::NotInDet1("u must have rank one".into()));
    }
    if eps.is_zero() {
        return Err(Error::InvalidArgument("eps must be nonzero".into()));
    }
    let a: Vec<Rational> = (1..=n).map(|i| eps * int(i as i64)).collect();
    let v: Vec<Matrix> = a.iter().map(|ai| u.scale(&ai.recip())).collect();
    let image_point = toy_map(&a, &v);
    let (rows, cols) = u.shape();
    let mut moments = vec![Matrix::zeros(rows, cols); n];
    moments[0] = u.scale(&int(n as i64));
    let limit_point = ToyValue {
        power_sums: vec![Rational::zero(); n],
        moments,
    };
    let gap = image_point.distance(&limit_point);
    let limit_excluded = toy_value_excluded_from_z(&limit_point);
    Ok(NonClosedDemo {
        image_point,
        limit_point,
        gap,
        limit_excluded,
    })
}
