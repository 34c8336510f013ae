//! Torus weights of `W`, one-parameter subgroups, and maximal unstable
//! subsets of weights.

use std::collections::{BTreeSet, HashSet};

use crate::invariants::Point;

/// A character of the diagonal torus in the `ε`-basis, with the dimension
/// of its weight space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coeffs: Vec<i64>,
    pub multiplicity: usize,
}

/// A cocharacter `t ↦ diag(t^{λ_1}, …, t^{λ_n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OnePsg(pub Vec<i64>);

impl OnePsg {
    /// `⟨λ, γ⟩ = Σ λ_i γ_i`.
    pub fn pairing(&self, gamma: &[i64]) -> i64 {
        self.0.iter().zip(gamma).map(|(l, g)| l * g).sum()
    }

    /// `(k, k−1, …, 1, −1, …, −(n−k))`, the cocharacter whose positive
    /// weights are exactly `X_k`.
    pub fn for_component(n: usize, k: usize) -> OnePsg {
        OnePsg(
            (0..n)
                .map(|i| {
                    if i < k {
                        (k - i) as i64
                    } else {
                        -((i + 1 - k) as i64)
                    }
                })
                .collect(),
        )
    }
}

fn eps(n: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = sign;
    v
}

fn root(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

/// `Λ(W)` for `r` adjoint copies: `0` with multiplicity `n·r`, each root
/// `ε_i − ε_j` with multiplicity `r`, `ε_i` with multiplicity `p` and
/// `−ε_i` with multiplicity `q`.
pub fn weights_of_w_general(n: usize, p: usize, q: usize, r: usize) -> Vec<Weight> {
    let mut out = vec![Weight {
        coeffs: vec![0; n],
        multiplicity: n * r,
    }];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Weight {
                    coeffs: root(n, i, j),
                    multiplicity: r,
                });
            }
        }
    }
    for i in 0..n {
        out.push(Weight {
            coeffs: eps(n, i, 1),
            multiplicity: p,
        });
    }
    for i in 0..n {
        out.push(Weight {
            coeffs: eps(n, i, -1),
            multiplicity: q,
        });
    }
    out
}

/// `Λ(W)` for the enhanced adjoint representation (`r = 1`).
pub fn weights_of_w(n: usize, p: usize, q: usize) -> Vec<Weight> {
    weights_of_w_general(n, p, q, 1)
}

/// Which coordinates of `W = M_{n,p} ⊕ M_{q,n} ⊕ M_n` belong to a sum of
/// weight spaces. Rows of `B` carry `ε_i`, columns of `C` carry `−ε_j`,
/// and the entry `A_{ij}` carries `ε_i − ε_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordinatePattern {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub b_rows: Vec<bool>,
    pub c_cols: Vec<bool>,
    pub a_entries: Vec<Vec<bool>>,
}

impl CoordinatePattern {
    pub fn dim(&self) -> usize {
        self.p * self.b_rows.iter().filter(|&&x| x).count()
            + self.q * self.c_cols.iter().filter(|&&x| x).count()
            + self.a_entries.iter().flatten().filter(|&&x| x).count()
    }

    /// True when every coordinate of `w` outside the pattern vanishes.
    pub fn contains(&self, w: &Point) -> bool {
        let Ok(a) = w.a() else { return false };
        if (w.n(), w.p(), w.q()) != (self.n, self.p, self.q) {
            return false;
        }
        let b_ok = (0..self.n)
            .filter(|&i| !self.b_rows[i])
            .all(|i| w.b().row(i).iter().all(num_traits::Zero::is_zero));
        let c_ok = (0..self.n)
            .filter(|&j| !self.c_cols[j])
            .all(|j| w.c().col(j).iter().all(num_traits::Zero::is_zero));
        let a_ok = (0..self.n).all(|i| {
            (0..self.n).all(|j| self.a_entries[i][j] || num_traits::Zero::is_zero(a.get(i, j)))
        });
        b_ok && c_ok && a_ok
    }
}

/// `V(λ) = ⊕_{⟨λ,γ⟩ > 0} W_γ` as a coordinate pattern.
pub fn unstable_subspace(lambda: &OnePsg, n: usize, p: usize, q: usize) -> CoordinatePattern {
    let l = &lambda.0;
    assert_eq!(l.len(), n, "cocharacter length");
    CoordinatePattern {
        n,
        p,
        q,
        b_rows: (0..n).map(|i| l[i] > 0).collect(),
        c_cols: (0..n).map(|j| -l[j] > 0).collect(),
        a_entries: (0..n)
            .map(|i| (0..n).map(|j| l[i] - l[j] > 0).collect())
            .collect(),
    }
}

/// `U_k`: first `k` rows of `B`, last `n − k` columns of `C`, strictly upper
/// triangular `A`.
pub fn u_k_pattern(n: usize, p: usize, q: usize, k: usize) -> CoordinatePattern {
    unstable_subspace(&OnePsg::for_component(n, k), n, p, q)
}

/// `X_k = Δ_n⁺ ∪ {ε_i : i ≤ k} ∪ {−ε_j : j > k}` (1-based indices).
pub fn x_k(n: usize, k: usize) -> BTreeSet<Vec<i64>> {
    let mut s = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            s.insert(root(n, i, j));
        }
    }
    for i in 0..k {
        s.insert(eps(n, i, 1));
    }
    for j in k..n {
        s.insert(eps(n, j, -1));
    }
    s
}

/// One class of maximal unstable weight subsets modulo `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnstableSubset {
    /// `Some(k)` when the class is that of `X_k`.
    pub k: Option<usize>,
    /// Canonical representative (equal to `X_k` when `k` is set).
    pub weights: BTreeSet<Vec<i64>>,
}

/// Distinct nonzero weights indexed for bitmask arithmetic.
struct WeightIndex {
    weights: Vec<Vec<i64>>,
    /// `perm_maps[σ][w]` = index of `σ·weight_w`.
    perm_maps: Vec<Vec<usize>>,
}

impl WeightIndex {
    fn new(n: usize) -> Self {
        let mut weights = Vec::new();
        for i in 0..n {
            weights.push(eps(n, i, 1));
            weights.push(eps(n, i, -1));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    weights.push(root(n, i, j));
                }
            }
        }
        assert!(weights.len() <= 64, "n too large for bitmask enumeration");
        let perm_maps = permutations(n)
            .into_iter()
            .map(|sigma| {
                weights
                    .iter()
                    .map(|w| {
                        let mut moved = vec![0; n];
                        for (i, &c) in w.iter().enumerate() {
                            moved[sigma[i]] = c;
                        }
                        weights.iter().position(|x| *x == moved).expect("closed under S_n")
                    })
                    .collect()
            })
            .collect();
        WeightIndex { weights, perm_maps }
    }

    fn mask_of(&self, lambda: &[i64]) -> u64 {
        self.weights.iter().enumerate().fold(0, |m, (idx, w)| {
            let pair: i64 = lambda.iter().zip(w).map(|(l, g)| l * g).sum();
            if pair > 0 {
                m | (1 << idx)
            } else {
                m
            }
        })
    }

    fn mask_of_set(&self, set: &BTreeSet<Vec<i64>>) -> u64 {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| set.contains(*w))
            .fold(0, |m, (idx, _)| m | (1 << idx))
    }

    fn set_of_mask(&self, mask: u64) -> BTreeSet<Vec<i64>> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask >> idx & 1 == 1)
            .map(|(_, w)| w.clone())
            .collect()
    }

    fn canonical(&self, mask: u64) -> u64 {
        self.perm_maps
            .iter()
            .map(|map| {
                map.iter()
                    .enumerate()
                    .filter(|(idx, _)| mask >> idx & 1 == 1)
                    .fold(0u64, |m, (_, &to)| m | (1 << to))
            })
            .min()
            .expect("at least the identity permutation")
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Brute-force search over all cocharacters with entries in
/// `[−box_bound, box_bound]`: collects their unstable weight sets, keeps
/// the maximal ones, and reduces modulo `S_n`. Classes matching some `X_k`
/// are reported with that `k` and sorted by it.
///
/// `p, q ≥ 1` only matter in that both `±ε_i` occur as weights.
pub fn enumerate_maximal_unstable(
    n: usize,
    p: usize,
    q: usize,
    box_bound: i64,
) -> Vec<UnstableSubset> {
    assert!(n >= 1 && p >= 1 && q >= 1, "n, p, q must be positive");
    let index = WeightIndex::new(n);
    let mut masks: HashSet<u64> = HashSet::new();
    let mut lambda = vec![-box_bound; n];
    loop {
        masks.insert(index.mask_of(&lambda));
        // odometer increment
        let mut pos = 0;
        while pos < n && lambda[pos] == box_bound {
            lambda[pos] = -box_bound;
            pos += 1;
        }
        if pos == n {
            break;
        }
        lambda[pos] += 1;
    }
    let all: Vec<u64> = masks.into_iter().collect();
    let maximal: Vec<u64> = all
        .iter()
        .copied()
        .filter(|&m| m != 0 && !all.iter().any(|&o| o != m && o & m == m))
        .collect();
    let classes: BTreeSet<u64> = maximal.iter().map(|&m| index.canonical(m)).collect();
    let x_canon: Vec<u64> = (0..=n)
        .map(|k| index.canonical(index.mask_of_set(&x_k(n, k))))
        .collect();
    let mut out: Vec<UnstableSubset> = classes
        .into_iter()
        .map(|c| match x_canon.iter().position(|&x| x == c) {
            Some(k) => UnstableSubset {
                k: Some(k),
                weights: x_k(n, k),
            },
            None => UnstableSubset {
                k: None,
                weights: index.set_of_mask(c),
            },
        })
        .collect();
    out.sort_by_key(|s| s.k.unwrap_or(usize::MAX));
    out
}
