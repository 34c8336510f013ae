//! JSON encodings. Rationals are strings `"num/den"` in lowest terms (the
//! denominator is omitted when it is 1); on input, JSON integers are
//! accepted too. Matrices are row-major arrays of arrays.
//!
//! Every decoding failure, including inconsistent shapes, is reported as
//! [`Error::Malformed`].

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::invariants::{InvariantVector, Point, WordInvariants};
use crate::linalg::Matrix;
use crate::nullcone::{Certificate, ComponentInterval, NullconeSummary};
use crate::orbits::StabilizerReport;
use crate::rational::{format_rational, parse_rational, Rational};

/// A rational in its wire form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"a/b\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
                parse_rational(v).map(Q).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
                Ok(Q(crate::rational::int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
                Ok(Q(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(V)
    }
}

type RawMatrix = Vec<Vec<Q>>;

fn matrix_out(m: &Matrix) -> RawMatrix {
    m.to_rows().into_iter().map(|r| r.into_iter().map(Q).collect()).collect()
}

fn matrix_in(raw: RawMatrix, what: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Rational>> = raw
        .into_iter()
        .map(|r| r.into_iter().map(|q| q.0).collect())
        .collect();
    Matrix::from_rows(rows).map_err(|e| Error::Malformed(format!("{what}: {e}")))
}

fn decode<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

fn encode<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct PointWire {
    n: usize,
    p: usize,
    q: usize,
    #[serde(default = "one")]
    r: usize,
    #[serde(rename = "A")]
    a: Vec<RawMatrix>,
    #[serde(rename = "B")]
    b: RawMatrix,
    #[serde(rename = "C")]
    c: RawMatrix,
}

fn one() -> usize {
    1
}

pub fn point_to_json(w: &Point) -> String {
    encode(&PointWire {
        n: w.n(),
        p: w.p(),
        q: w.q(),
        r: w.r(),
        a: w.a_list().iter().map(matrix_out).collect(),
        b: matrix_out(w.b()),
        c: matrix_out(w.c()),
    })
}

pub fn point_from_json(text: &str) -> Result<Point> {
    let raw: PointWire = decode(text)?;
    let (n, p, q, r) = (raw.n, raw.p, raw.q, raw.r);
    let a = raw
        .a
        .into_iter()
        .enumerate()
        .map(|(i, m)| matrix_in(m, &format!("A[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if a.len() != r {
        return Err(Error::Malformed(format!("r = {r} but {} adjoint blocks", a.len())));
    }
    // An n×0 or 0×n block cannot be written as nested arrays unambiguously,
    // so shapes are checked against the declared sizes.
    let b = matrix_in(raw.b, "B")?;
    let c = matrix_in(raw.c, "C")?;
    if b.shape() != (n, p) || c.shape() != (q, n) || a.iter().any(|m| m.shape() != (n, n)) {
        return Err(Error::Malformed(format!(
            "block shapes disagree with n = {n}, p = {p}, q = {q}"
        )));
    }
    Point::new(b, c, a).map_err(|e| Error::Malformed(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct InvariantWire {
    tau: Vec<Q>,
    gamma: Vec<RawMatrix>,
}

pub fn invariants_to_json(v: &InvariantVector) -> String {
    encode(&InvariantWire {
        tau: v.tau.iter().cloned().map(Q).collect(),
        gamma: v.gamma.iter().map(matrix_out).collect(),
    })
}

pub fn invariants_from_json(text: &str) -> Result<InvariantVector> {
    let raw: InvariantWire = decode(text)?;
    Ok(InvariantVector {
        tau: raw.tau.into_iter().map(|q| q.0).collect(),
        gamma: raw
            .gamma
            .into_iter()
            .map(|m| matrix_in(m, "gamma"))
            .collect::<Result<_>>()?,
    })
}

#[derive(Serialize)]
struct WordWire {
    tau: BTreeMap<String, Q>,
    gamma: BTreeMap<String, RawMatrix>,
}

/// Words are keyed by their comma-joined letters; the empty word is `""`.
pub fn word_invariants_to_json(v: &WordInvariants) -> String {
    encode(&WordWire {
        tau: v.tau.iter().map(|(w, x)| (w.to_string(), Q(x.clone()))).collect(),
        gamma: v.gamma.iter().map(|(w, m)| (w.to_string(), matrix_out(m))).collect(),
    })
}

#[derive(Serialize)]
struct StabilizerWire {
    stab_dim: usize,
    orbit_dim: usize,
    kernel_basis: RawMatrix,
}

pub fn stabilizer_to_json(s: &StabilizerReport) -> String {
    encode(&StabilizerWire {
        stab_dim: s.stab_dim,
        orbit_dim: s.orbit_dim,
        kernel_basis: matrix_out(s.kernel_basis.basis()),
    })
}

/// Input of fiber reconstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionInput {
    pub t: Vec<Rational>,
    pub gamma: Vec<Matrix>,
}

#[derive(Deserialize)]
struct ReconstructionWire {
    t: Vec<Q>,
    gamma: Vec<RawMatrix>,
}

pub fn reconstruction_input_from_json(text: &str) -> Result<ReconstructionInput> {
    let raw: ReconstructionWire = decode(text)?;
    let gamma: Vec<Matrix> = raw
        .gamma
        .into_iter()
        .map(|m| matrix_in(m, "gamma"))
        .collect::<Result<_>>()?;
    if let Some(first) = gamma.first() {
        if gamma.iter().any(|m| m.shape() != first.shape()) || first.rows() == 0 || first.cols() == 0
        {
            return Err(Error::Malformed("gamma blocks must share a nonempty shape".into()));
        }
    }
    if gamma.len() != raw.t.len() || gamma.is_empty() {
        return Err(Error::Malformed(format!(
            "{} nodes but {} gamma blocks",
            raw.t.len(),
            gamma.len()
        )));
    }
    Ok(ReconstructionInput {
        t: raw.t.into_iter().map(|q| q.0).collect(),
        gamma,
    })
}

#[derive(Serialize)]
struct CertificateWire {
    k: usize,
    g: RawMatrix,
    lambda: Vec<i64>,
}

pub fn certificate_to_json(c: &Certificate) -> String {
    encode(&CertificateWire {
        k: c.k,
        g: matrix_out(&c.g),
        lambda: c.lambda.0.clone(),
    })
}

#[derive(Serialize)]
struct IntervalWire {
    in_null_cone: bool,
    d_min: Option<usize>,
    d_max: Option<usize>,
}

/// Off the null cone both bounds are `null`.
pub fn interval_to_json(c: &ComponentInterval) -> String {
    encode(&IntervalWire {
        in_null_cone: c.in_null_cone,
        d_min: c.d_min,
        d_max: c.d_max,
    })
}

#[derive(Serialize)]
struct SummaryWire<'a> {
    component_dims: &'a [usize],
    nullcone_dim: usize,
    equidimensional: bool,
}

pub fn summary_to_json(s: &NullconeSummary) -> String {
    encode(&SummaryWire {
        component_dims: &s.component_dims,
        nullcone_dim: s.nullcone_dim,
        equidimensional: s.equidimensional,
    })
}

#[derive(Serialize)]
struct ErrorWire<'a> {
    error: &'a str,
    detail: String,
}

/// `{"error": code, "detail": message}`
pub fn error_to_json(e: &Error) -> String {
    encode(&ErrorWire {
        error: e.code(),
        detail: e.to_string(),
    })
}
