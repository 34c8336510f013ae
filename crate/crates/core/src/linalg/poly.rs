//! Characteristic polynomials, discriminants and Newton's identities.

use num_traits::{One, Zero};

use super::{det, Matrix};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Monic polynomial, coefficients listed from `x^n` down to the constant
/// term. The leading coefficient is always 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicPoly {
    coeffs: Vec<Rational>,
}

impl MonicPoly {
    /// Builds from the non-leading coefficients `c_1, …, c_n` of
    /// `x^n + c_1 x^{n-1} + … + c_n`.
    pub fn from_lower(lower: Vec<Rational>) -> Self {
        let mut coeffs = Vec::with_capacity(lower.len() + 1);
        coeffs.push(Rational::one());
        coeffs.extend(lower);
        MonicPoly { coeffs }
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut coeffs = vec![Rational::one()];
        for r in roots {
            let mut next = coeffs.clone();
            next.push(Rational::zero());
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] -= c * r;
            }
            coeffs = next;
        }
        MonicPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True for `x^n`.
    pub fn is_pure_power(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        a.require_square()?;
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in &self.coeffs {
            acc = &(&acc * a) + &Matrix::identity(n).scale(c);
        }
        Ok(acc)
    }

    /// Coefficients of the derivative, high degree first (not monic).
    pub fn derivative(&self) -> Vec<Rational> {
        let n = self.degree();
        self.coeffs[..n]
            .iter()
            .enumerate()
            .map(|(i, c)| c * int((n - i) as i64))
            .collect()
    }

    /// `Res(f, f')` via the Sylvester determinant. Zero exactly when `f` has
    /// a repeated root over the algebraic closure.
    pub fn resultant_with_derivative(&self) -> Rational {
        let n = self.degree();
        if n <= 1 {
            return Rational::one();
        }
        let f = &self.coeffs;
        let g = self.derivative();
        let m = n - 1;
        let size = n + m;
        let syl = Matrix::from_fn(size, size, |i, j| {
            if i < m {
                j.checked_sub(i)
                    .and_then(|k| f.get(k).cloned())
                    .unwrap_or_else(Rational::zero)
            } else {
                j.checked_sub(i - m)
                    .and_then(|k| g.get(k).cloned())
                    .unwrap_or_else(Rational::zero)
            }
        });
        det(&syl).expect("square")
    }

    /// `(-1)^{n(n-1)/2} Res(f, f')` for monic `f`.
    pub fn discriminant(&self) -> Rational {
        let n = self.degree();
        let r = self.resultant_with_derivative();
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Power sums `p_1, …, p_m` of the roots, via Newton's identities.
    pub fn power_sums(&self, m: usize) -> Vec<Rational> {
        let n = self.degree();
        let c = &self.coeffs;
        let mut p: Vec<Rational> = Vec::with_capacity(m);
        for k in 1..=m {
            // p_k + c_1 p_{k-1} + … + c_{k-1} p_1 + k c_k = 0  (c_i = 0 for i > n)
            let mut s = Rational::zero();
            for i in 1..k.min(n + 1) {
                s += &c[i] * &p[k - i - 1];
            }
            if k <= n {
                s += &c[k] * int(k as i64);
            }
            p.push(-s);
        }
        p
    }

    /// Inverse of [`MonicPoly::power_sums`]: the monic degree-`n` polynomial
    /// whose roots have power sums `p_1, …, p_n`.
    pub fn from_power_sums(p: &[Rational]) -> Self {
        let n = p.len();
        let mut c: Vec<Rational> = vec![Rational::one()];
        for k in 1..=n {
            let mut s = p[k - 1].clone();
            for i in 1..k {
                s += &c[i] * &p[k - i - 1];
            }
            c.push(-s / int(k as i64));
        }
        MonicPoly { coeffs: c }
    }
}

/// Characteristic polynomial `det(x·1 − A)` by Faddeev–LeVerrier.
///
/// The recurrence `M_k = A·M_{k-1} + c_{k-1}·1`, `c_k = −trace(A·M_k)/k`
/// only divides by the small integers `k`, which is exact over ℚ.
pub fn char_poly(a: &Matrix) -> Result<MonicPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let id = Matrix::identity(n);
    let mut lower = Vec::with_capacity(n);
    let mut m = Matrix::zeros(n, n);
    let mut prev = Rational::one();
    for k in 1..=n {
        m = &(a * &m) + &id.scale(&prev);
        let am = a * &m;
        let c = -am.trace()? / int(k as i64);
        lower.push(c.clone());
        prev = c;
    }
    let poly = MonicPoly::from_lower(lower);
    debug_assert!(poly.eval_matrix(a)?.is_zero(), "Cayley–Hamilton");
    Ok(poly)
}

/// `(t_1^k + … + t_n^k)` for `k = 1..=m`.
pub fn power_sums_of(t: &[Rational], m: usize) -> Vec<Rational> {
    let mut pw: Vec<Rational> = t.to_vec();
    let mut out = Vec::with_capacity(m);
    for k in 1..=m {
        if k > 1 {
            for (p, x) in pw.iter_mut().zip(t) {
                *p *= x;
            }
        }
        out.push(pw.iter().sum());
    }
    out
}
