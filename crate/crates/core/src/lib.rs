//! Exact computational invariant theory for the enhanced adjoint action
//! of `GL_n` on `W = M_{n,p} ⊕ M_{q,n} ⊕ M_n`,
//! `g·(B, C, A) = (gB, Cg⁻¹, gAg⁻¹)`.
//!
//! Everything is computed over ℚ with arbitrary precision; there is no
//! floating point anywhere. The crate is organised as
//!
//! * [`linalg`]: matrices, echelon forms, subspaces, characteristic
//!   polynomials and Vandermonde solves;
//! * [`invariants`]: the generating invariants, the quotient map and its
//!   Jacobian, trace-word invariants, and the auxiliary map `Ψ`;
//! * [`orbits`]: stabilizers, regular semisimplicity and fiber
//!   reconstruction;
//! * [`nullcone`]: weights, maximal unstable subspaces, component
//!   classification and destabilising certificates;
//! * [`wire`]: the JSON formats used by the command-line tool;
//! * [`verify`]: randomized property suites.
//!
//! The guide under `book/` walks through the mathematics; its code
//! snippets are compiled and run as doctests of this crate.

pub mod error;
pub mod invariants;
pub mod linalg;
pub mod nullcone;
pub mod orbits;
pub mod random;
pub mod rational;
pub mod verify;
pub mod wire;

pub use error::{Error, Result};
pub use invariants::{InvariantVector, Point, TangentVector, Word};
pub use linalg::{Matrix, MonicPoly, Subspace};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/reconstruction.md")]
    mod reconstruction {}
    #[doc = include_str!("../../../book/src/null-cone.md")]
    mod null_cone {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
