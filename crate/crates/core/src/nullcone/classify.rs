//! Membership in the null cone and in its irreducible components, with
//! explicit destabilizing certificates.

use num_traits::Zero;

use super::weights::{u_k_pattern, x_k, OnePsg};
use crate::error::{Error, Result};
use crate::invariants::{evaluate_invariants, group_action, Point};
use crate::linalg::{inverse, Matrix, Subspace};
use crate::rational::Rational;

/// `w ∈ N(W)`, i.e. every generating invariant vanishes at `w`.
pub fn in_null_cone(w: &Point) -> Result<bool> {
    Ok(evaluate_invariants(w)?.is_zero())
}

/// Equivalent test: `A` nilpotent and `C A^k B = 0` for all `k < n`.
pub fn in_null_cone_by_nilpotency(w: &Point) -> Result<bool> {
    let a = w.a()?;
    let n = w.n();
    if !a.pow(n as u32)?.is_zero() {
        return Ok(false);
    }
    let mut akb = w.b().clone();
    for _ in 0..n {
        if !(w.c() * &akb).is_zero() {
            return Ok(false);
        }
        akb = a * &akb;
    }
    Ok(true)
}

/// The `A`-span of `Im B`: smallest `A`-invariant subspace containing the
/// columns of `B`.
pub fn b_span(w: &Point) -> Result<Subspace> {
    let a = w.a()?;
    let mut s = Subspace::span(w.b());
    loop {
        let next = s.sum(&s.image(a)?)?;
        if next.dim() == s.dim() {
            return Ok(s);
        }
        s = next;
    }
}

/// Largest `A`-invariant subspace inside `ker C`, i.e. `⋂_j ker(C A^j)`.
pub fn c_core(w: &Point) -> Result<Subspace> {
    let a = w.a()?;
    let mut k = Subspace::span(&crate::linalg::kernel(w.c()).basis().clone());
    loop {
        let next = k.preimage_within(a, &k)?;
        if next.dim() == k.dim() {
            return Ok(k);
        }
        k = next;
    }
}

/// The set of `k` with `w ∈ C_k`, which is always an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInterval {
    pub in_null_cone: bool,
    /// `dim S_B`; `None` off the null cone.
    pub d_min: Option<usize>,
    /// `dim K`; `None` off the null cone.
    pub d_max: Option<usize>,
}

impl ComponentInterval {
    pub fn contains(&self, k: usize) -> bool {
        match (self.d_min, self.d_max) {
            (Some(lo), Some(hi)) => lo <= k && k <= hi,
            _ => false,
        }
    }

    pub fn components(&self) -> Vec<usize> {
        match (self.d_min, self.d_max) {
            (Some(lo), Some(hi)) => (lo..=hi).collect(),
            _ => Vec::new(),
        }
    }
}

pub fn component_interval(w: &Point) -> Result<ComponentInterval> {
    if !in_null_cone(w)? {
        return Ok(ComponentInterval {
            in_null_cone: false,
            d_min: None,
            d_max: None,
        });
    }
    let s = b_span(w)?;
    let k = c_core(w)?;
    debug_assert!(k.contains(&s).unwrap_or(false), "S_B ⊆ K on the null cone");
    Ok(ComponentInterval {
        in_null_cone: true,
        d_min: Some(s.dim()),
        d_max: Some(k.dim()),
    })
}

/// `g ∈ GL_n` with `g·w ∈ U_k`, together with the cocharacter that
/// contracts `U_k` to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub k: usize,
    pub g: Matrix,
    pub lambda: OnePsg,
}

fn span_of(v: &[Rational]) -> Subspace {
    Subspace::span(&Matrix::column(v))
}

/// Extends a basis of `lower` towards `upper` (both `A`-invariant, `A`
/// nilpotent on the quotient) one vector at a time, each new vector mapped
/// by `A` into the span of the previous ones. Stops after `limit` vectors.
fn adapted_extension(
    a: &Matrix,
    lower: &Subspace,
    upper: &Subspace,
    limit: usize,
) -> Result<(Vec<Vec<Rational>>, Subspace)> {
    let mut current = lower.clone();
    let mut out = Vec::new();
    while current.dim() < upper.dim() && out.len() < limit {
        let layer = upper.preimage_within(a, &current)?;
        let v = layer
            .basis_vectors()
            .into_iter()
            .find(|v| !current.contains_vector(v))
            .ok_or_else(|| Error::InvalidArgument("A is not nilpotent on the quotient".into()))?;
        current = current.sum(&span_of(&v))?;
        out.push(v);
    }
    Ok((out, current))
}

/// Builds a flag `0 ⊂ V_1 ⊂ … ⊂ V_n` with `A V_i ⊆ V_{i−1}`,
/// `Im B ⊆ V_k ⊆ ker C`, and returns `g = [v_1 … v_n]⁻¹`.
pub fn adapted_certificate(w: &Point, k: usize) -> Result<Certificate> {
    let n = w.n();
    if !in_null_cone(w)? {
        return Err(Error::NotInNullCone);
    }
    let a = w.a()?;
    let s = b_span(w)?;
    let core = c_core(w)?;
    if k < s.dim() || k > core.dim() {
        return Err(Error::NotAMember {
            k,
            d_min: s.dim(),
            d_max: core.dim(),
        });
    }
    let (mut basis, _) = adapted_extension(a, &Subspace::zero(n), &s, usize::MAX)?;
    let (middle, f) = adapted_extension(a, &s, &core, k - s.dim())?;
    basis.extend(middle);
    let (top, _) = adapted_extension(a, &f, &Subspace::full(n), usize::MAX)?;
    basis.extend(top);
    let p = Matrix::from_fn(n, n, |i, j| basis[j][i].clone());
    let g = inverse(&p)?;
    let cert = Certificate {
        k,
        g,
        lambda: OnePsg::for_component(n, k),
    };
    debug_assert!(check_certificate(w, &cert).unwrap_or(false));
    Ok(cert)
}

/// `g·w ∈ U_k` and `λ` pairs positively with every weight of `X_k`.
pub fn check_certificate(w: &Point, cert: &Certificate) -> Result<bool> {
    let n = w.n();
    if cert.k > n || cert.lambda.0.len() != n {
        return Ok(false);
    }
    let moved = group_action(&cert.g, w)?;
    let in_pattern = u_k_pattern(n, w.p(), w.q(), cert.k).contains(&moved);
    let positive = x_k(n, cert.k).iter().all(|gamma| cert.lambda.pairing(gamma) > 0);
    Ok(in_pattern && positive)
}

/// `λ(t)·w → 0` as `t → 0` for the moved point, checked coordinate-wise:
/// every nonzero coordinate of `g·w` has positive `λ`-weight.
pub fn certificate_contracts(w: &Point, cert: &Certificate) -> Result<bool> {
    let moved = group_action(&cert.g, w)?;
    let l = &cert.lambda.0;
    let a = moved.a()?;
    let n = w.n();
    for i in 0..n {
        if l[i] <= 0 && moved.b().row(i).iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
        if -l[i] <= 0 && moved.c().col(i).iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
        for j in 0..n {
            if l[i] - l[j] <= 0 && !a.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
