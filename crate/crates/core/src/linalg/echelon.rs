//! Gauss–Jordan elimination and everything derived from it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Subspace};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Output of [`rref_decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub rank: usize,
    pub column_space: Subspace,
    pub kernel: Subspace,
}

/// Rows scaled to integers (each by the lcm of its denominators).
fn integer_rows(rows: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    rows.iter()
        .map(|row| {
            let d = row
                .iter()
                .fold(BigInt::one(), |acc, x| if x.denom().is_one() { acc } else { acc.lcm(x.denom()) });
            let ints = row
                .iter()
                .map(|x| if d.is_one() { x.numer().clone() } else { x.numer() * (&d / x.denom()) })
                .collect();
            (ints, d)
        })
        .unzip()
}

/// Fraction-free (Bareiss) elimination on integer rows. Every division is
/// exact because intermediate entries are minors of the input. With
/// `reduce_above` the pivot columns are cleared above as well and every
/// pivot ends up equal to the last one. Returns the pivot columns and the
/// number of row swaps.
fn bareiss(rows: &mut [Vec<BigInt>], cols: usize, reduce_above: bool) -> (Vec<usize>, usize) {
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(r, p);
            swaps += 1;
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("pivot row");
        let piv = pivot_row[c].clone();
        let targets = below.iter_mut().chain(head.iter_mut().filter(|_| reduce_above));
        for row in targets {
            let f = std::mem::take(&mut row[c]);
            for j in 0..cols {
                if j == c {
                    continue;
                }
                if f.is_zero() {
                    if !row[j].is_zero() {
                        row[j] = &row[j] * &piv / &prev;
                    }
                } else {
                    row[j] = (&row[j] * &piv - &f * &pivot_row[j]) / &prev;
                }
            }
        }
        pivots.push(c);
        prev = piv;
        r += 1;
    }
    (pivots, swaps)
}

/// Gauss–Jordan elimination returning reduced rows over ℚ.
fn eliminate(rows: &mut [Vec<Rational>], cols: usize, reduce_above: bool) -> Vec<usize> {
    let (mut ints, _) = integer_rows(rows);
    let (pivots, _) = bareiss(&mut ints, cols, reduce_above);
    if reduce_above {
        let d = pivots
            .last()
            .map(|&c| ints[pivots.len() - 1][c].clone())
            .unwrap_or_else(BigInt::one);
        for (row, int_row) in rows.iter_mut().zip(ints) {
            for (x, v) in row.iter_mut().zip(int_row) {
                *x = if v.is_zero() { Rational::zero() } else { Rational::new(v, d.clone()) };
            }
        }
    }
    pivots
}

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// at or below the current row, so the result is deterministic.
pub fn rref(m: &Matrix) -> Echelon {
    let mut rows = m.to_rows();
    let pivots = eliminate(&mut rows, m.cols(), true);
    let reduced = if m.rows() == 0 {
        Matrix::zeros(0, m.cols())
    } else {
        Matrix::from_rows(rows).expect("rectangular")
    };
    Echelon { reduced, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    let mut rows = m.to_rows();
    eliminate(&mut rows, m.cols(), false).len()
}

/// Basis vectors of the null space, one per free column, read off the
/// reduced echelon form (not yet canonicalised).
pub(crate) fn kernel_vectors(e: &Echelon, cols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![None; cols];
    for (r, &c) in e.pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..cols)
        .filter(|&f| is_pivot[f].is_none())
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in e.pivots.iter().enumerate() {
                v[c] = -e.reduced.get(r, f).clone();
            }
            v
        })
        .collect()
}

pub fn kernel(m: &Matrix) -> Subspace {
    let e = rref(m);
    let vs = kernel_vectors(&e, m.cols());
    Subspace::from_vectors(m.cols(), &vs).expect("kernel vectors have ambient length")
}

/// Rank, column space and kernel of `m`, all exact.
pub fn rref_decompose(m: &Matrix) -> Decomposition {
    let e = rref(m);
    let kernel = Subspace::from_vectors(m.cols(), &kernel_vectors(&e, m.cols()))
        .expect("kernel vectors have ambient length");
    let column_space = Subspace::span(&m.select_cols(&e.pivots));
    Decomposition {
        rank: e.rank(),
        column_space,
        kernel,
    }
}

/// Determinant by fraction-level Gaussian elimination.
pub fn det(m: &Matrix) -> Result<Rational> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut ints, scales) = integer_rows(&m.to_rows());
    let (pivots, swaps) = bareiss(&mut ints, n, false);
    if pivots.len() < n {
        return Ok(Rational::zero());
    }
    let scale = scales.iter().fold(BigInt::one(), |acc, d| acc * d);
    let d = Rational::new(ints[n - 1][n - 1].clone(), scale);
    Ok(if swaps % 2 == 1 { -d } else { d })
}

/// Exact inverse; [`Error::Singular`] when the rank is deficient.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    m.require_square()?;
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(n))?;
    let e = rref(&aug);
    if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(e.reduced.block(0, n, n, n))
}
