//! Trace-word invariants `τ_I = trace(A_I)` and `γ^K = C·A_K·B` for points
//! with several adjoint copies.

use std::collections::BTreeMap;
use std::fmt;

use super::Point;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// A multi-index `(i_1, …, i_ℓ)` with letters in `1..=r`. The empty word
/// stands for the identity matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>, r: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > r) {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} outside 1..={r}"
            )));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Lexicographically least cyclic rotation.
    pub fn cyclic_canonical(&self) -> Word {
        let l = self.0.len();
        (0..l.max(1))
            .map(|s| {
                let mut v = self.0[s.min(l)..].to_vec();
                v.extend_from_slice(&self.0[..s.min(l)]);
                v
            })
            .min()
            .map(Word)
            .unwrap_or_else(Word::empty)
    }

    pub fn is_cyclic_canonical(&self) -> bool {
        *self == self.cyclic_canonical()
    }

    /// `A_{i_1} ⋯ A_{i_ℓ}`.
    pub fn product(&self, a: &[Matrix]) -> Matrix {
        let n = a[0].rows();
        self.0
            .iter()
            .fold(Matrix::identity(n), |acc, &i| &acc * &a[i - 1])
    }
}

impl fmt::Display for Word {
    /// Letters joined by commas; the empty word prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All trace-word invariants up to a length bound.
///
/// `tau` is keyed by cyclically canonical nonempty words only; `gamma`
/// holds every word, including the empty one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordInvariants {
    pub tau: BTreeMap<Word, Rational>,
    pub gamma: BTreeMap<Word, Matrix>,
}

/// Evaluates `τ_I` for `1 ≤ |I| ≤ max_len` and `γ^K` for `|K| ≤ max_len`.
pub fn word_invariants(w: &Point, max_len: usize) -> WordInvariants {
    let a = w.a_list();
    let r = a.len();
    let mut tau = BTreeMap::new();
    let mut gamma = BTreeMap::new();
    // A_K·B, grown one letter at a time on the left: A_{iK}B = A_i·(A_K B).
    // Full products A_K are only needed for words that are τ-keys.
    let mut layer: Vec<(Vec<usize>, Matrix, Matrix)> =
        vec![(Vec::new(), Matrix::identity(w.n()), w.b().clone())];
    gamma.insert(Word::empty(), w.c() * w.b());
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * r);
        for (letters, prod, prod_b) in &layer {
            for i in 1..=r {
                let mut word = Vec::with_capacity(letters.len() + 1);
                word.push(i);
                word.extend_from_slice(letters);
                let p = &a[i - 1] * prod;
                let pb = &a[i - 1] * prod_b;
                let key = Word(word.clone());
                gamma.insert(key.clone(), w.c() * &pb);
                if key.is_cyclic_canonical() {
                    tau.insert(key, p.trace().expect("square"));
                }
                next.push((word, p, pb));
            }
        }
        layer = next;
    }
    WordInvariants { tau, gamma }
}
