use num_traits::Zero;

use super::echelon::{kernel_vectors, rref};
use super::Matrix;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A linear subspace of ℚ^ambient.
///
/// The basis is stored as the columns of a matrix in reduced column echelon
/// form, which is unique per subspace: equal subspaces compare equal
/// field-by-field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

/// Result of [`Subspace::compare`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceRelation {
    Equal,
    /// `self ⊊ other`
    Contained,
    /// `other ⊊ self`
    Contains,
    Incomparable,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Column space of `m`.
    pub fn span(m: &Matrix) -> Self {
        let e = rref(&m.transpose());
        let k = e.rank();
        Subspace {
            ambient_dim: m.rows(),
            basis: e.reduced.block(0, 0, k, m.rows()).transpose(),
        }
    }

    /// Span of a list of vectors, each of length `ambient_dim`.
    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::AmbientMismatch(ambient_dim, v.len()));
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient_dim));
        }
        let rows = Matrix::from_rows(vectors.to_vec())?;
        Ok(Subspace::span(&rows.transpose()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one vector per column.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|j| self.basis.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim == other.ambient_dim {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim))
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(&self.basis.hstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // x = S·y = T·z  ⇔  [S | −T]·(y; z) = 0
        let stacked = self.basis.hstack(&(-&other.basis))?;
        let e = rref(&stacked);
        let d = self.dim();
        let vs: Vec<Vec<Rational>> = kernel_vectors(&e, stacked.cols())
            .into_iter()
            .map(|yz| self.basis.apply(&yz[..d]))
            .collect();
        Subspace::from_vectors(self.ambient_dim, &vs)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let m = self.basis.hstack(&Matrix::column(v)).expect("same rows");
        super::echelon::rank(&m) == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim())
    }

    /// Containment relation, decided by the rank of the stacked bases.
    pub fn compare(&self, other: &Subspace) -> Result<SubspaceRelation> {
        let joint = self.sum(other)?.dim();
        Ok(match (joint == self.dim(), joint == other.dim()) {
            (true, true) => SubspaceRelation::Equal,
            (false, true) => SubspaceRelation::Contained,
            (true, false) => SubspaceRelation::Contains,
            (false, false) => SubspaceRelation::Incomparable,
        })
    }

    /// `A·S`
    pub fn image(&self, a: &Matrix) -> Result<Subspace> {
        if a.cols() != self.ambient_dim {
            return Err(Error::AmbientMismatch(a.cols(), self.ambient_dim));
        }
        Ok(Subspace::span(&a.try_mul(&self.basis)?))
    }

    /// `{x ∈ self : A·x ∈ target}`
    pub fn preimage_within(&self, a: &Matrix, target: &Subspace) -> Result<Subspace> {
        if a.cols() != self.ambient_dim || a.rows() != target.ambient_dim {
            return Err(Error::AmbientMismatch(a.cols(), self.ambient_dim));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        // x = S·y with A·S·y = T·z
        let asb = a.try_mul(&self.basis)?;
        let stacked = asb.hstack(&(-&target.basis))?;
        let e = rref(&stacked);
        let d = self.dim();
        let vs: Vec<Vec<Rational>> = kernel_vectors(&e, stacked.cols())
            .into_iter()
            .map(|yz| self.basis.apply(&yz[..d]))
            .collect();
        Subspace::from_vectors(self.ambient_dim, &vs)
    }

    pub fn is_invariant_under(&self, a: &Matrix) -> Result<bool> {
        self.contains(&self.image(a)?)
    }
}

/// Free-function form of [`Subspace::compare`].
pub fn subspace_compare(s: &Subspace, t: &Subspace) -> Result<SubspaceRelation> {
    s.compare(t)
}
