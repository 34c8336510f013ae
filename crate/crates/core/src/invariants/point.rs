use crate::error::{Error, Result};
use crate::linalg::{inverse, Matrix};
use crate::rational::Rational;

/// A point `(B, C, (A_1, …, A_r))` of `M_{n,p} ⊕ M_{q,n} ⊕ M_n^r`.
///
/// `r = 1` is the enhanced adjoint representation proper; larger `r` is
/// only used by the trace-word invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    n: usize,
    p: usize,
    q: usize,
    b: Matrix,
    c: Matrix,
    a: Vec<Matrix>,
}

impl Point {
    /// Validates shapes: `B` is `n×p`, `C` is `q×n`, each `A_i` is `n×n`,
    /// with `n, p, q ≥ 1` and at least one adjoint copy.
    pub fn new(b: Matrix, c: Matrix, a: Vec<Matrix>) -> Result<Self> {
        let Some(a0) = a.first() else {
            return Err(Error::ShapeMismatch("need at least one adjoint matrix".into()));
        };
        let n = a0.rows();
        let (p, q) = (b.cols(), c.rows());
        if n == 0 || p == 0 || q == 0 {
            return Err(Error::ShapeMismatch("n, p, q must be positive".into()));
        }
        if a.iter().any(|m| m.shape() != (n, n)) {
            return Err(Error::ShapeMismatch(format!("adjoint parts must be {n}x{n}")));
        }
        if b.rows() != n {
            return Err(Error::ShapeMismatch(format!("B must have {n} rows")));
        }
        if c.cols() != n {
            return Err(Error::ShapeMismatch(format!("C must have {n} columns")));
        }
        Ok(Point { n, p, q, b, c, a })
    }

    /// `r = 1` point `(B, C, A)`.
    pub fn enhanced(b: Matrix, c: Matrix, a: Matrix) -> Result<Self> {
        Point::new(b, c, vec![a])
    }

    pub fn zero(n: usize, p: usize, q: usize, r: usize) -> Self {
        Point::new(
            Matrix::zeros(n, p),
            Matrix::zeros(q, n),
            vec![Matrix::zeros(n, n); r.max(1)],
        )
        .expect("positive dimensions")
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn r(&self) -> usize {
        self.a.len()
    }
    pub fn b(&self) -> &Matrix {
        &self.b
    }
    pub fn c(&self) -> &Matrix {
        &self.c
    }
    pub fn a_list(&self) -> &[Matrix] {
        &self.a
    }

    /// The adjoint part of an `r = 1` point.
    pub fn a(&self) -> Result<&Matrix> {
        match self.a.as_slice() {
            [a] => Ok(a),
            _ => Err(Error::InvalidArgument(format!(
                "operation needs r = 1, point has r = {}",
                self.r()
            ))),
        }
    }

    /// `dim W = n²·r + np + nq`.
    pub fn ambient_dim(&self) -> usize {
        self.n * self.n * self.r() + self.n * self.p + self.n * self.q
    }

    pub fn same_shape(&self, other: &Point) -> bool {
        (self.n, self.p, self.q, self.r()) == (other.n, other.p, other.q, other.r())
    }

    /// `w + s·δw` for an `r = 1` point.
    pub fn translate(&self, dw: &TangentVector, s: &Rational) -> Result<Point> {
        let a = self.a()?;
        dw.check_against(self)?;
        Point::enhanced(
            &self.b + &dw.db.scale(s),
            &self.c + &dw.dc.scale(s),
            a + &dw.da.scale(s),
        )
    }
}

/// A tangent vector `(δB, δC, δA)` at an `r = 1` point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentVector {
    pub db: Matrix,
    pub dc: Matrix,
    pub da: Matrix,
}

impl TangentVector {
    pub fn zero(n: usize, p: usize, q: usize) -> Self {
        TangentVector {
            db: Matrix::zeros(n, p),
            dc: Matrix::zeros(q, n),
            da: Matrix::zeros(n, n),
        }
    }

    /// The `index`-th standard basis vector, ordered as the `n²` entries of
    /// `δA` (row-major), then the `np` entries of `δB`, then the `qn`
    /// entries of `δC`.
    pub fn basis(n: usize, p: usize, q: usize, index: usize) -> Self {
        let mut t = TangentVector::zero(n, p, q);
        if index < n * n {
            t.da = Matrix::unit(n, n, index / n, index % n);
        } else if index < n * n + n * p {
            let i = index - n * n;
            t.db = Matrix::unit(n, p, i / p, i % p);
        } else {
            let i = index - n * n - n * p;
            assert!(i < q * n, "basis index out of range");
            t.dc = Matrix::unit(q, n, i / n, i % n);
        }
        t
    }

    pub fn add(&self, other: &TangentVector) -> TangentVector {
        TangentVector {
            db: &self.db + &other.db,
            dc: &self.dc + &other.dc,
            da: &self.da + &other.da,
        }
    }

    pub fn scale(&self, s: &Rational) -> TangentVector {
        TangentVector {
            db: self.db.scale(s),
            dc: self.dc.scale(s),
            da: self.da.scale(s),
        }
    }

    pub(crate) fn check_against(&self, w: &Point) -> Result<()> {
        let (n, p, q) = (w.n(), w.p(), w.q());
        if self.db.shape() != (n, p) || self.dc.shape() != (q, n) || self.da.shape() != (n, n) {
            return Err(Error::ShapeMismatch(format!(
                "tangent vector does not match a point with (n, p, q) = ({n}, {p}, {q})"
            )));
        }
        Ok(())
    }
}

/// `g·(B, C, (A_i)) = (gB, Cg⁻¹, (gA_ig⁻¹))`.
pub fn group_action(g: &Matrix, w: &Point) -> Result<Point> {
    if g.shape() != (w.n(), w.n()) {
        return Err(Error::ShapeMismatch(format!(
            "group element must be {0}x{0}",
            w.n()
        )));
    }
    let g_inv = inverse(g)?;
    Point::new(
        g * w.b(),
        w.c() * &g_inv,
        w.a_list().iter().map(|a| &(g * a) * &g_inv).collect(),
    )
}
