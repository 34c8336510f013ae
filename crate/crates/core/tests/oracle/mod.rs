//! Deliberately naive reference computations on `Vec<Vec<Rational>>`,
//! sharing no code with the library beyond the number type.

#![allow(dead_code)]

use enhanced_adjoint::{Matrix, Point, Rational};
use num_traits::{One, Signed, Zero};

pub type M = Vec<Vec<Rational>>;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn of(m: &Matrix) -> M {
    m.to_rows()
}

pub fn zeros(r: usize, c: usize) -> M {
    vec![vec![Rational::zero(); c]; r]
}

pub fn eye(n: usize) -> M {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

pub fn cols(a: &M, rows_hint: usize) -> usize {
    a.first().map_or(rows_hint, Vec::len)
}

pub fn mm(a: &M, b: &M) -> M {
    let (r, k) = (a.len(), b.len());
    let c = b.first().map_or(0, Vec::len);
    let mut out = zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            let mut s = q(0);
            for t in 0..k {
                s += &a[i][t] * &b[t][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn add(a: &M, b: &M) -> M {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

pub fn scale(a: &M, s: &Rational) -> M {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn transpose(a: &M) -> M {
    let c = a.first().map_or(0, Vec::len);
    (0..c).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn trace(a: &M) -> Rational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

pub fn is_zero(a: &M) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

/// Row reduction with plain rational arithmetic.
pub fn rank(a: &M) -> usize {
    let mut m = a.clone();
    let rows = m.len();
    let c = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..c {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &m[r][col];
            for j in col..c {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn inverse(a: &M) -> Option<M> {
    let n = a.len();
    let mut m: M = a
        .iter()
        .zip(eye(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..2 * n {
                    let d = &f * &m[col][j];
                    m[i][j] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Leibniz expansion; only for small `n`.
pub fn det_leibniz(a: &M) -> Rational {
    let n = a.len();
    permutations(n)
        .into_iter()
        .map(|sigma| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| sigma[i] > sigma[j])
                .count();
            let mut prod = q(1);
            for i in 0..n {
                prod *= &a[i][sigma[i]];
            }
            if inversions % 2 == 1 {
                -prod
            } else {
                prod
            }
        })
        .sum()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// `(τ_1..τ_n, Γ^(0)..Γ^(n−1))` by repeated multiplication.
pub fn invariants(b: &M, c: &M, a: &M) -> (Vec<Rational>, Vec<M>) {
    let n = a.len();
    let mut tau = Vec::new();
    let mut pw = eye(n);
    let mut gamma = Vec::new();
    for _ in 0..n {
        gamma.push(mm(&mm(c, &pw), b));
        pw = mm(&pw, a);
        tau.push(trace(&pw));
    }
    (tau, gamma)
}

/// `(gB, Cg⁻¹, gA_ig⁻¹)`.
pub fn act(g: &M, b: &M, c: &M, a: &[M]) -> (M, M, Vec<M>) {
    let gi = inverse(g).expect("invertible");
    (
        mm(g, b),
        mm(c, &gi),
        a.iter().map(|x| mm(&mm(g, x), &gi)).collect(),
    )
}

pub fn point_parts(w: &Point) -> (M, M, Vec<M>) {
    (of(w.b()), of(w.c()), w.a_list().iter().map(of).collect())
}

/// Rank of `X ↦ (XB, CX, [X, A_i])`, giving `dim` of the stabilizer as
/// `n² − rank`.
pub fn stabilizer_dim(b: &M, c: &M, a: &[M]) -> usize {
    let n = b.len();
    let mut columns = Vec::new();
    for idx in 0..n * n {
        let mut x = zeros(n, n);
        x[idx / n][idx % n] = q(1);
        let mut col: Vec<Rational> = mm(&x, b).into_iter().flatten().collect();
        col.extend(mm(c, &x).into_iter().flatten());
        for ai in a {
            let xa = mm(&x, ai);
            let ax = mm(ai, &x);
            col.extend(
                xa.into_iter()
                    .flatten()
                    .zip(ax.into_iter().flatten())
                    .map(|(u, v)| u - v),
            );
        }
        columns.push(col);
    }
    n * n - rank(&transpose(&columns))
}

/// `dim Σ_j A^j Im B` and `dim ⋂_j ker(C A^j)` from Krylov matrices.
pub fn krylov_interval(b: &M, c: &M, a: &M) -> (usize, usize) {
    let n = a.len();
    let mut right: M = zeros(n, 0);
    let mut below: M = Vec::new();
    let mut ab = b.clone();
    let mut ca = c.clone();
    for _ in 0..n {
        for (row, extra) in right.iter_mut().zip(&ab) {
            row.extend(extra.iter().cloned());
        }
        below.extend(ca.iter().cloned());
        ab = mm(a, &ab);
        ca = mm(&ca, a);
    }
    (rank(&right), n - rank(&below))
}

/// Elementary symmetric polynomials from power sums (Newton's identities).
pub fn elementary_from_power_sums(p: &[Rational]) -> Vec<Rational> {
    let n = p.len();
    let mut e = vec![q(1)];
    for k in 1..=n {
        let mut s = q(0);
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        e.push(s / q(k as i64));
    }
    e
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

pub fn one() -> Rational {
    Rational::one()
}
