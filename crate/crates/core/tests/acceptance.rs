//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Library results are checked against the naive computations in
//! `oracle/` and, where a closed form is known, against that closed form.

mod oracle;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use enhanced_adjoint::invariants::{
    evaluate_invariants, group_action, jacobian, jacobian_rank, nonclosed_image_demo, psi_map,
    sl_relation_check, word_invariants,
};
use enhanced_adjoint::linalg::Matrix;
use enhanced_adjoint::nullcone::{
    adapted_certificate, component_interval, component_tangent_dim, enumerate_maximal_unstable,
    generic_orbit_witness, nullcone_summary, sample_component, transpose_dual,
    witness_family_point,
};
use enhanced_adjoint::orbits::{is_regular_semisimple, reconstruct_fiber_point, stabilizer};
use enhanced_adjoint::random::{self, cell_seed, Rng, DEFAULT_HEIGHT};
use enhanced_adjoint::{Error, Point, Rational};
use num_traits::Zero;
use oracle::*;

const SEED: u64 = 0x00ac_ce97;

type Verdict = (bool, String);

fn rng_for(tag: u64, index: u64) -> Rng {
    random::rng(cell_seed(SEED ^ tag.rotate_left(40), index))
}

fn grid_npq() -> Vec<(usize, usize, usize)> {
    let mut g = Vec::new();
    for n in 1..=4 {
        for p in 1..=3 {
            for q in 1..=3 {
                g.push((n, p, q));
            }
        }
    }
    g
}

/// All words of length `0..=len` over `1..=r`.
fn words(r: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 1..=r {
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn word_product(a: &[M], word: &[usize]) -> M {
    word.iter().fold(eye(a[0].len()), |acc, &i| mm(&acc, &a[i - 1]))
}

/// Checks every key and value of the library's word map against direct
/// products, and that τ keys are one per rotation class.
fn words_match_oracle(w: &Point, len: usize) -> bool {
    let lib = word_invariants(w, len);
    let (b, c, a) = point_parts(w);
    let all = words(a.len(), len);
    let rotation_classes: BTreeSet<Vec<usize>> = all
        .iter()
        .filter(|x| !x.is_empty())
        .map(|x| {
            (0..x.len())
                .map(|s| x[s..].iter().chain(&x[..s]).copied().collect::<Vec<_>>())
                .min()
                .unwrap()
        })
        .collect();
    if lib.gamma.len() != all.len() || lib.tau.len() != rotation_classes.len() {
        return false;
    }
    let tau_ok = lib
        .tau
        .iter()
        .all(|(k, v)| *v == trace(&word_product(&a, k.letters())));
    let gamma_ok = lib
        .gamma
        .iter()
        .all(|(k, v)| of(v) == mm(&mm(&c, &word_product(&a, k.letters())), &b));
    tau_ok && gamma_ok
}

fn criterion_1() -> Verdict {
    let mut samples = 0;
    let mut bad = Vec::new();
    for (cell, &(n, p, q)) in grid_npq().iter().enumerate() {
        for r in 1..=2 {
            for i in 0..200u64 {
                let mut rng = rng_for(1, (cell as u64 * 2 + r as u64) * 1000 + i);
                let w = random::point(&mut rng, n, p, q, r, DEFAULT_HEIGHT);
                let g = random::invertible(&mut rng, n, DEFAULT_HEIGHT);
                let gw = group_action(&g, &w).unwrap();
                let (b, c, a) = point_parts(&w);
                let (gb, gc, ga) = act(&of(&g), &b, &c, &a);
                let mut ok = point_parts(&gw) == (gb, gc, ga);
                let len = 2 * n - 1;
                if r == 1 {
                    let v = evaluate_invariants(&w).unwrap();
                    ok &= v == evaluate_invariants(&gw).unwrap();
                    if i % 10 == 0 {
                        let (tau, gamma) = invariants(&b, &c, &a[0]);
                        ok &= v.tau == tau && v.gamma.iter().map(of).collect::<Vec<_>>() == gamma;
                    }
                }
                ok &= word_invariants(&w, len) == word_invariants(&gw, len);
                if i % 20 == 0 {
                    ok &= words_match_oracle(&w, len);
                }
                samples += 1;
                if !ok {
                    bad.push((n, p, q, r, i));
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!("{samples} (g, w) pairs, r in {{1,2}}, words up to length 2n-1; mismatches {bad:?}"),
    )
}

/// Derivative at `s = 0` of the degree-`d` interpolant through `0..=d`.
fn derivative_weights(d: usize) -> Vec<Rational> {
    (0..=d as i64)
        .map(|j| {
            let mut total = q(0);
            for m in 0..=d as i64 {
                if m == j {
                    continue;
                }
                let mut term = q(1) / q(j - m);
                for l in 0..=d as i64 {
                    if l != j && l != m {
                        term *= q(-l) / q(j - l);
                    }
                }
                total += term;
            }
            total
        })
        .collect()
}

/// Jacobian of `π_W` from exact interpolation along each coordinate line;
/// every coordinate of `π_W` is a polynomial of degree ≤ n + 1 there.
fn jacobian_oracle(w: &Point) -> M {
    let (b, c, a) = point_parts(w);
    let a = &a[0];
    let (n, p, qq) = (w.n(), w.p(), w.q());
    let d = n + 1;
    let weights = derivative_weights(d);
    let flat = |b: &M, c: &M, a: &M| {
        let (tau, gamma) = invariants(b, c, a);
        tau.into_iter()
            .chain(gamma.into_iter().flatten().flatten())
            .collect::<Vec<_>>()
    };
    let mut columns = Vec::new();
    let dirs = n * n + n * p + qq * n;
    for idx in 0..dirs {
        let mut col = vec![q(0); n + n * p * qq];
        for (s, wt) in weights.iter().enumerate() {
            let (mut b2, mut c2, mut a2) = (b.clone(), c.clone(), a.clone());
            let s = q(s as i64);
            if idx < n * n {
                a2[idx / n][idx % n] += &s;
            } else if idx < n * n + n * p {
                let k = idx - n * n;
                b2[k / p][k % p] += &s;
            } else {
                let k = idx - n * n - n * p;
                c2[k / n][k % n] += &s;
            }
            for (x, v) in col.iter_mut().zip(flat(&b2, &c2, &a2)) {
                *x += wt * &v;
            }
        }
        columns.push(col);
    }
    transpose(&columns)
}

fn criterion_2() -> Verdict {
    let mut worst = (usize::MAX, (0, 0, 0));
    let mut exceed = 0;
    let mut oracle_mismatch = 0;
    for (cell, &(n, p, qq)) in grid_npq().iter().enumerate() {
        let bound = (n * n + n * p + n * qq).min(n + n * p * qq);
        let mut generic = 0;
        for i in 0..200u64 {
            let mut rng = rng_for(2, cell as u64 * 1000 + i);
            let w = random::generic_point(&mut rng, n, p, qq, DEFAULT_HEIGHT);
            let rk = jacobian_rank(&w).unwrap();
            if rk > bound {
                exceed += 1;
            }
            if rk == n * (p + qq) {
                generic += 1;
            }
            if i < 2 {
                let oj = jacobian_oracle(&w);
                if of(&jacobian(&w).unwrap()) != oj || rank(&oj) != rk {
                    oracle_mismatch += 1;
                }
            }
        }
        if generic < worst.0 {
            worst = (generic, (n, p, qq));
        }
    }
    (
        worst.0 >= 190 && exceed == 0 && oracle_mismatch == 0,
        format!(
            "rank n(p+q) on >= {}/200 per (n,p,q) (lowest at {:?}); {exceed} above bound; {oracle_mismatch} Jacobian/oracle mismatches",
            worst.0, worst.1
        ),
    )
}

fn rank_one_data(rng: &mut Rng, n: usize, p: usize, qq: usize, full: bool) -> (Vec<Rational>, Vec<M>) {
    let t = random::distinct_values(rng, n, DEFAULT_HEIGHT);
    let xs = (0..n)
        .map(|_| {
            if full {
                of(&random::full_rank1(rng, qq, p, DEFAULT_HEIGHT))
            } else {
                of(&random::rank_le1(rng, qq, p, DEFAULT_HEIGHT))
            }
        })
        .collect();
    (t, xs)
}

/// `Γ^(k) = Σ_r t_r^k X^(r)`, `k = 0..n`.
fn gamma_of(t: &[Rational], xs: &[M]) -> Vec<M> {
    let n = t.len();
    (0..n)
        .map(|k| {
            let mut acc = zeros(xs[0].len(), xs[0][0].len());
            for (tr, x) in t.iter().zip(xs) {
                let mut pw = q(1);
                for _ in 0..k {
                    pw *= tr;
                }
                acc = add(&acc, &scale(x, &pw));
            }
            acc
        })
        .collect()
}

fn power_sums(t: &[Rational]) -> Vec<Rational> {
    (1..=t.len())
        .map(|k| {
            t.iter()
                .map(|x| (0..k).fold(q(1), |acc, _| acc * x))
                .sum()
        })
        .collect()
}

fn mats(xs: &[M]) -> Vec<Matrix> {
    xs.iter().map(|x| Matrix::from_rows(x.clone()).unwrap()).collect()
}

fn criterion_3() -> Verdict {
    let mut samples = 0;
    let mut bad = Vec::new();
    for (cell, &(n, p, qq)) in grid_npq().iter().enumerate() {
        for i in 0..20u64 {
            let mut rng = rng_for(3, cell as u64 * 1000 + i);
            let (t, xs) = rank_one_data(&mut rng, n, p, qq, true);
            let rec = reconstruct_fiber_point(&t, &mats(&gamma_of(&t, &xs)), true).unwrap();
            let w = &rec.point;
            let (b, c, a) = point_parts(w);
            let domain = n * n + n * p + n * qq;
            let ok = is_regular_semisimple(w.a().unwrap()).unwrap()
                && stabilizer(w).stab_dim == 0
                && stabilizer_dim(&b, &c, &a) == 0
                && domain - jacobian_rank(w).unwrap() == n * n
                && domain - rank(&jacobian_oracle(w)) == n * n;
            samples += 1;
            if !ok {
                bad.push((n, p, qq, i));
            }
        }
    }
    (
        bad.is_empty(),
        format!("{samples} reconstructed regular semisimple points: stab 0, fiber dim n^2; failures {bad:?}"),
    )
}

fn criterion_4() -> Verdict {
    let mut samples = 0;
    let mut bad = Vec::new();
    for (cell, &(n, p, qq)) in grid_npq().iter().enumerate() {
        for i in 0..200u64 {
            let mut rng = rng_for(4, cell as u64 * 1000 + i);
            let (t, xs) = rank_one_data(&mut rng, n, p, qq, false);
            let gamma = gamma_of(&t, &xs);
            let rec = reconstruct_fiber_point(&t, &mats(&gamma), false).unwrap();
            let (b, c, a) = point_parts(&rec.point);
            let (tau, g2) = invariants(&b, &c, &a[0]);
            samples += 1;
            if tau != power_sums(&t) || g2 != gamma {
                bad.push((n, p, qq, i));
            }
        }
    }
    (
        bad.is_empty(),
        format!("{samples} round trips exact; failures {bad:?}"),
    )
}

fn criterion_5() -> Verdict {
    let mut checked = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=6 {
        for p in 1..=3 {
            for qq in 1..=3 {
                if p != 1 && qq != 1 {
                    continue;
                }
                let image = n * (p + qq);
                let ambient = n + n * p * qq;
                let mut rng = rng_for(5, (n * 100 + p * 10 + qq) as u64);
                let best = (0..5)
                    .map(|_| {
                        let w = random::generic_point(&mut rng, n, p, qq, DEFAULT_HEIGHT);
                        jacobian_rank(&w).unwrap()
                    })
                    .max()
                    .unwrap();
                checked.push((n, p, qq));
                if image != ambient || best != ambient {
                    bad.push((n, p, qq, best));
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!(
            "n(p+q) = n+npq and attained by the Jacobian for {} (n,p,q) with n<=6; failures {bad:?}",
            checked.len()
        ),
    )
}

fn x_k_oracle(n: usize, k: usize) -> BTreeSet<Vec<i64>> {
    let unit = |i: usize, s: i64| {
        let mut v = vec![0; n];
        v[i] = s;
        v
    };
    let mut s = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = unit(i, 1);
            v[j] = -1;
            s.insert(v);
        }
    }
    s.extend((0..k).map(|i| unit(i, 1)));
    s.extend((k..n).map(|j| unit(j, -1)));
    s
}

/// Independent count of maximal unstable sets modulo `S_n`.
fn maximal_unstable_classes(n: usize, bound: i64) -> usize {
    let mut weights = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut v = vec![0; n];
            v[i] = s;
            weights.push(v);
        }
        for j in 0..n {
            if i != j {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                weights.push(v);
            }
        }
    }
    let mut sets: BTreeSet<BTreeSet<Vec<i64>>> = BTreeSet::new();
    let side = (2 * bound + 1) as usize;
    for code in 0..side.pow(n as u32) {
        let lambda: Vec<i64> = (0..n)
            .map(|i| (code / side.pow(i as u32) % side) as i64 - bound)
            .collect();
        let set: BTreeSet<Vec<i64>> = weights
            .iter()
            .filter(|w| w.iter().zip(&lambda).map(|(a, b)| a * b).sum::<i64>() > 0)
            .cloned()
            .collect();
        sets.insert(set);
    }
    let maximal: Vec<_> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t != *s && s.is_subset(t)))
        .collect();
    let canon: BTreeSet<Vec<Vec<i64>>> = maximal
        .iter()
        .map(|s| {
            permutations(n)
                .iter()
                .map(|sigma| {
                    let mut moved: Vec<Vec<i64>> = s
                        .iter()
                        .map(|w| {
                            let mut v = vec![0; n];
                            for i in 0..n {
                                v[sigma[i]] = w[i];
                            }
                            v
                        })
                        .collect();
                    moved.sort();
                    moved
                })
                .min()
                .unwrap()
        })
        .collect();
    canon.len()
}

fn criterion_6() -> Verdict {
    let mut bad = Vec::new();
    for n in 1..=5 {
        for bound in [n as i64, 2 * n as i64] {
            let classes = enumerate_maximal_unstable(n, 2, 3, bound);
            let ok = classes.len() == n + 1
                && classes
                    .iter()
                    .enumerate()
                    .all(|(k, c)| c.k == Some(k) && c.weights == x_k_oracle(n, k));
            if !ok {
                bad.push((n, bound));
            }
        }
        if n <= 4 && maximal_unstable_classes(n, n as i64) != n + 1 {
            bad.push((n, -1));
        }
    }
    (
        bad.is_empty(),
        format!("n+1 classes equal to X_0..X_n for n=1..5 (box n and 2n, brute-force recount n<=4); failures {bad:?}"),
    )
}

fn criterion_7() -> Verdict {
    let mut bad = Vec::new();
    let mut cells = 0;
    let mut min_hits = 20;
    for n in 2..=4 {
        for p in 1..=3 {
            for qq in 1..=3 {
                let formula = |k: usize| n * n - n + p * k + qq * (n - k);
                for k in 0..=n {
                    let mut hits = 0;
                    for s in 0..20u64 {
                        let d = component_tangent_dim(n, p, qq, k, cell_seed(SEED ^ 7, (cells * 100) as u64 + s));
                        if d > formula(k) {
                            bad.push((n, p, qq, k, d));
                        }
                        if d == formula(k) {
                            hits += 1;
                        }
                    }
                    cells += 1;
                    min_hits = min_hits.min(hits);
                    if hits < 19 {
                        bad.push((n, p, qq, k, hits));
                    }
                }
                let s = nullcone_summary(n, p, qq);
                let expected: Vec<usize> = (0..=n).map(formula).collect();
                let summary_ok = s.component_dims == expected
                    && s.nullcone_dim == n * n - n + n * p.max(qq)
                    && s.equidimensional == (p == qq)
                    && (s.nullcone_dim == n * n) == (p == 1 && qq == 1);
                if !summary_ok {
                    bad.push((n, p, qq, usize::MAX, 0));
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!("{cells} (n,p,q,k) cells, formula attained on >= {min_hits}/20 seeds, never exceeded; summaries consistent; failures {bad:?}"),
    )
}

/// `g·w ∈ U_k` coordinate-wise and `λ` positive on `X_k`, from scratch.
fn certificate_oracle(w: &Point, k: usize, g: &Matrix, lambda: &[i64]) -> bool {
    let n = w.n();
    let (b, c, a) = point_parts(w);
    let (gb, gc, ga) = act(&of(g), &b, &c, &a);
    let b_ok = gb.iter().skip(k).flatten().all(Zero::is_zero);
    let c_ok = gc.iter().all(|row| row[..k].iter().all(Zero::is_zero));
    let a_ok = (0..n).all(|i| (0..=i).all(|j| ga[0][i][j].is_zero()));
    let l_ok = lambda.len() == n
        && x_k_oracle(n, k)
            .iter()
            .all(|wt| wt.iter().zip(lambda).map(|(x, y)| x * y).sum::<i64>() > 0);
    b_ok && c_ok && a_ok && l_ok
}

fn criterion_8() -> Verdict {
    let mut samples = 0;
    let mut certs = 0;
    let mut bad = Vec::new();
    let mut cell = 0u64;
    for (n, p, qq) in grid_npq() {
        for k in 0..=n {
            for i in 0..1000u64 {
                let w = sample_component(n, p, qq, k, cell_seed(SEED ^ 8, cell * 10_000 + i));
                let iv = component_interval(&w).unwrap();
                let (b, c, a) = point_parts(&w);
                let (lo, hi) = krylov_interval(&b, &c, &a[0]);
                let (tau, gamma) = invariants(&b, &c, &a[0]);
                let null = tau.iter().all(Zero::is_zero) && gamma.iter().all(is_zero);
                let mut ok = null
                    && iv.in_null_cone
                    && iv.d_min == Some(lo)
                    && iv.d_max == Some(hi)
                    && lo <= k
                    && k <= hi;
                for kk in lo..=hi.min(n) {
                    if !ok {
                        break;
                    }
                    match adapted_certificate(&w, kk) {
                        Ok(cert) => {
                            certs += 1;
                            ok &= cert.k == kk && certificate_oracle(&w, kk, &cert.g, &cert.lambda.0);
                        }
                        Err(_) => ok = false,
                    }
                }
                if i % 10 == 0 {
                    for kk in (0..=n).filter(|&x| x < lo || x > hi) {
                        ok &= matches!(adapted_certificate(&w, kk), Err(Error::NotAMember { .. }));
                    }
                }
                samples += 1;
                if !ok {
                    bad.push((n, p, qq, k, i));
                }
            }
            cell += 1;
        }
    }
    (
        bad.is_empty(),
        format!("{samples} samples over {cell} (n,p,q,k) cells, {certs} certificates verified; failures {:?}", &bad[..bad.len().min(10)]),
    )
}

fn criterion_9() -> Verdict {
    let mut bad = Vec::new();
    let mut family = 0;
    let mut dual = 0;
    let mut witnesses = 0;
    for n in 1..=6 {
        for k in 0..=n {
            for p in 1..=3 {
                for qq in 1..=3 {
                    let mut rng = rng_for(9, (n * 1000 + k * 100 + p * 10 + qq) as u64);
                    for _ in 0..3 {
                        let (w, expected) = if k >= 1 && 2 * k >= n {
                            let xi = random::matrix(&mut rng, k, p - 1, DEFAULT_HEIGHT);
                            let eta = random::matrix(&mut rng, qq, n - k, DEFAULT_HEIGHT);
                            family += 1;
                            (witness_family_point(n, k, &xi, &eta), n - k)
                        } else if 2 * k < n {
                            let xi = random::matrix(&mut rng, n - k, qq - 1, DEFAULT_HEIGHT);
                            let eta = random::matrix(&mut rng, p, k, DEFAULT_HEIGHT);
                            dual += 1;
                            (transpose_dual(&witness_family_point(n, n - k, &xi, &eta)), k)
                        } else {
                            continue;
                        };
                        let (b, c, a) = point_parts(&w);
                        if stabilizer(&w).stab_dim != expected || stabilizer_dim(&b, &c, &a) != expected {
                            bad.push(("family", n, p, qq, k));
                        }
                    }
                    let (w, od) = generic_orbit_witness(n, p, qq, k);
                    let (b, c, a) = point_parts(&w);
                    let (lo, hi) = krylov_interval(&b, &c, &a[0]);
                    let m = k.min(n - k);
                    witnesses += 1;
                    if od != n * n - m || stabilizer_dim(&b, &c, &a) != m || !(lo <= k && k <= hi) {
                        bad.push(("witness", n, p, qq, k));
                    }
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!(
            "{family} family points with k >= n-k have stab n-k; {dual} dual points with k < n-k have stab k; {witnesses} witnesses have orbit dim n^2-min(k,n-k); failures {bad:?}"
        ),
    )
}

fn criterion_10() -> Verdict {
    let mut bad = Vec::new();
    for n in 1..=4 {
        for i in 0..100u64 {
            let mut rng = rng_for(10, (n * 1000) as u64 + i);
            let u = random::matrix(&mut rng, n, 1, DEFAULT_HEIGHT);
            let v = random::matrix(&mut rng, 1, n, DEFAULT_HEIGHT);
            let a = random::matrix(&mut rng, n, n, DEFAULT_HEIGHT);
            let r = sl_relation_check(&u, &v, &a).unwrap();
            let (uo, vo, ao) = (of(&u), of(&v), of(&a));
            let mut left = Vec::new();
            let mut right = Vec::new();
            let (mut x, mut y) = (vo.clone(), uo.clone());
            for _ in 0..n {
                left.push(x[0].clone());
                right.push(y.iter().map(|row| row[0].clone()).collect::<Vec<_>>());
                x = mm(&x, &ao);
                y = mm(&ao, &y);
            }
            let d1 = det_leibniz(&left);
            let d2 = det_leibniz(&transpose(&right));
            let mut pw = eye(n);
            let mut moments = Vec::new();
            for _ in 0..2 * n - 1 {
                moments.push(mm(&mm(&vo, &pw), &uo)[0][0].clone());
                pw = mm(&pw, &ao);
            }
            let hankel: M = (0..n)
                .map(|i| (0..n).map(|j| moments[i + j].clone()).collect())
                .collect();
            let h = det_leibniz(&hankel);
            if !(r.holds && r.d1 == d1 && r.d2 == d2 && r.hankel_det == h && &d1 * &d2 == h) {
                bad.push((n, i));
            }
        }
    }
    (
        bad.is_empty(),
        format!("400 inputs (100 per n <= 4): D1*D2 = Hankel determinant, values match Leibniz expansion; failures {bad:?}"),
    )
}

fn criterion_11() -> Verdict {
    let mut bad = Vec::new();
    let mut perms_checked = 0;
    for (cell, &(n, p, qq)) in grid_npq().iter().enumerate() {
        for i in 0..10u64 {
            let mut rng = rng_for(11, cell as u64 * 1000 + i);
            let t: Vec<Rational> = (0..n).map(|_| q(random::int_in(&mut rng, 5))).collect();
            let xs: Vec<M> = (0..n)
                .map(|_| of(&random::rank_le1(&mut rng, qq, p, DEFAULT_HEIGHT)))
                .collect();
            let base = psi_map(&t, &mats(&xs)).unwrap();
            if base.tau != power_sums(&t) || base.gamma.iter().map(of).collect::<Vec<_>>() != gamma_of(&t, &xs) {
                bad.push(("psi", n, p, qq));
            }
            for sigma in permutations(n) {
                let ts: Vec<_> = sigma.iter().map(|&j| t[j].clone()).collect();
                let xp: Vec<_> = sigma.iter().map(|&j| xs[j].clone()).collect();
                perms_checked += 1;
                if psi_map(&ts, &mats(&xp)).unwrap() != base {
                    bad.push(("perm", n, p, qq));
                }
            }
        }
        // toy model: a = (ε, 2ε, …, nε), v_i = u / a_i
        let mut rng = rng_for(11, 999_000 + cell as u64);
        let u = random::full_rank1(&mut rng, qq, p, DEFAULT_HEIGHT);
        let uo = of(&u);
        let mut gaps = Vec::new();
        for den in [10, 20, 40] {
            let eps = q(1) / q(den);
            let demo = nonclosed_image_demo(n, &u, &eps).unwrap();
            let a: Vec<Rational> = (1..=n as i64).map(|j| &eps * q(j)).collect();
            let mut gap = power_sums(&a).iter().map(abs).max().unwrap();
            for k in 1..=n {
                let mut m = zeros(qq, p);
                for ai in &a {
                    let pw = (1..k).fold(q(1), |acc, _| acc * ai);
                    m = add(&m, &scale(&uo, &pw));
                }
                if k == 1 {
                    m = add(&m, &scale(&uo, &q(-(n as i64))));
                }
                gap = gap.max(m.iter().flatten().map(abs).max().unwrap());
            }
            let limit_e = elementary_from_power_sums(&demo.limit_point.power_sums);
            let image_e = elementary_from_power_sums(&demo.image_point.power_sums);
            if demo.gap != gap || !demo.limit_excluded || !limit_e[n].is_zero() || image_e[n].is_zero() {
                bad.push(("toy", n, p, qq));
            }
            gaps.push(gap);
        }
        if !gaps.windows(2).all(|w| w[1] < w[0]) {
            bad.push(("gap order", n, p, qq));
        }
    }
    (
        bad.is_empty(),
        format!("{perms_checked} permuted evaluations equal; toy gaps strictly decreasing at eps = 1/10, 1/20, 1/40 with limit excluded; failures {bad:?}"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("invariance", criterion_1),
        ("quotient dimension", criterion_2),
        ("fiber dimension", criterion_3),
        ("reconstruction round trip", criterion_4),
        ("coregularity count", criterion_5),
        ("maximal unstable classes", criterion_6),
        ("component dimensions", criterion_7),
        ("classifier vs sampler", criterion_8),
        ("stabilizer formula", criterion_9),
        ("SL_n relation", criterion_10),
        ("Psi properties", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| (false, "panicked".to_string()));
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<26} {} [{:.1?}] {detail}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
