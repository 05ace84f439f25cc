//! Independent oracles shared by the integration tests. None of these call
//! into the library routine they are used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hc_core::linalg::{q, Matrix};
use hc_core::principal_block::{alpha_position, beta_position};
use hc_core::quiver_algebra::{FdAlgebra, QuiverRep};
use rand::rngs::StdRng;
use rand::Rng;

/// `p(n)` from Euler's pentagonal number recurrence.
pub fn pentagonal_p(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                total += sign * p[i - g2];
            }
        }
        p[i] = total;
    }
    p[n] as u64
}

/// All partitions of `n` as part lists, by recursion on the largest part.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

/// `λ_i − λ_{i+1} < m` for every `i`, counting the last part against zero.
pub fn restricted(p: &[usize], m: usize) -> bool {
    (0..p.len()).all(|i| part(p, i) - part(p, i + 1) < m)
}

/// Every part but the last equals `m − 1`, and the last is at most `m − 1`.
pub fn trivial_shape(p: &[usize], m: usize) -> bool {
    match p.split_last() {
        None => true,
        Some((&last, init)) => init.iter().all(|&x| x == m - 1) && last < m,
    }
}

/// Every pair `(μ, ν)` with `μ` `m`-restricted and `λ = μ + mν`, by search.
pub fn brute_decompositions(lambda: &[usize], m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n: usize = lambda.iter().sum();
    let mut found = Vec::new();
    for nu_size in 0..=n / m {
        for nu in partitions_of(nu_size) {
            for mu in partitions_of(n - m * nu_size) {
                if !restricted(&mu, m) {
                    continue;
                }
                let len = lambda.len().max(mu.len()).max(nu.len());
                if (0..len).all(|i| part(&mu, i) + m * part(&nu, i) == part(lambda, i)) {
                    found.push((mu.clone(), nu.clone()));
                }
            }
        }
    }
    found
}

/// Simples with `m`-restricted part of trivial shape, found by search.
pub fn brute_simple_count(n: usize, m: usize) -> usize {
    partitions_of(n)
        .into_iter()
        .filter(|lambda| {
            let d = brute_decompositions(lambda, m);
            assert_eq!(d.len(), 1);
            trivial_shape(&d[0].0, m)
        })
        .count()
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta numbers.
pub fn character(lambda: &[usize], rho: &[usize]) -> i64 {
    let len = lambda.len();
    let beta: BTreeSet<usize> = (0..len).map(|i| lambda[i] + (len - 1 - i)).collect();
    mn(&beta, rho)
}

fn mn(beta: &BTreeSet<usize>, rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for &b in beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.range(b - r + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - r);
        let sign = if between.is_multiple_of(2) { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}

pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Centralizer order `z_ρ = Π i^{m_i} m_i!`.
pub fn z(rho: &[usize]) -> i64 {
    let mut out = 1i64;
    let mut i = 0;
    while i < rho.len() {
        let mut j = i;
        while j < rho.len() && rho[j] == rho[i] {
            j += 1;
        }
        let mult = j - i;
        out *= (rho[i] as i64).pow(mult as u32) * factorial(mult);
        i = j;
    }
    out
}

/// `⟨Res λ, τ_1 ⊠ … ⊠ τ_r⟩` over the Young subgroup, summed over its conjugacy classes.
pub fn branching_by_characters(lambda: &[usize], blocks: &[usize], taus: &[Vec<usize>]) -> i64 {
    let order: i64 = blocks.iter().map(|&b| factorial(b)).product();
    let mut total = 0i64;
    let mut classes: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for &b in blocks {
        let mut next = Vec::new();
        for c in &classes {
            for rho in partitions_of(b) {
                let mut c = c.clone();
                c.push(rho);
                next.push(c);
            }
        }
        classes = next;
    }
    for class in classes {
        let mut joined: Vec<usize> = class.concat();
        joined.sort_unstable_by(|a, b| b.cmp(a));
        let size: i64 = order / class.iter().map(|r| z(r)).product::<i64>();
        let inner: i64 = class.iter().zip(taus).map(|(r, t)| character(t, r)).product();
        total += size * character(lambda, &joined) * inner;
    }
    assert_eq!(total % order, 0);
    total / order
}

/// Number of nonzero paths, including trivial ones, in a quiver with zero
/// relations; `None` if some path is longer than `bound`.
pub fn monomial_path_count(
    vertices: usize,
    arrows: &[(usize, usize)],
    zero_paths: &[Vec<usize>],
    bound: usize,
) -> Option<usize> {
    let mut count = vertices;
    let mut stack: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    while let Some(path) = stack.pop() {
        if zero_paths.iter().any(|z| path.windows(z.len()).any(|w| w == z.as_slice())) {
            continue;
        }
        if path.len() > bound {
            return None;
        }
        count += 1;
        let end = arrows[*path.last().unwrap()].1;
        for (a, &(s, _)) in arrows.iter().enumerate() {
            if s == end {
                let mut next = path.clone();
                next.push(a);
                stack.push(next);
            }
        }
    }
    Some(count)
}

/// The block quiver as index data: arrows `α_i: i → i−1`, `β_i: i−1 → i` and
/// the zero paths `β_i α_i` (walk `β` then `α`) and `α_i β_i`.
pub fn block_quiver_data(k: usize) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let mut arrows = Vec::new();
    let mut zeros = Vec::new();
    for i in 1..=k {
        let a = arrows.len();
        arrows.push((i, i - 1));
        arrows.push((i - 1, i));
        zeros.push(vec![a + 1, a]);
        zeros.push(vec![a, a + 1]);
    }
    (arrows, zeros)
}

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| q(rng.gen_range(-2..=2)))
}

/// A random representation of the `k`-block with vertex dimensions at most
/// `max_dim`: `α_i` is arbitrary and `β_i` factors through `ker α_i` and
/// kills `im α_i`, so both relations hold by construction.
pub fn random_block_rep(alg: &FdAlgebra, k: usize, max_dim: usize, rng: &mut StdRng) -> QuiverRep {
    let dims: Vec<usize> = (0..=k).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mut maps = vec![Matrix::zeros(0, 0); 2 * k];
    for i in 1..=k {
        let alpha = random_matrix(rng, dims[i - 1], dims[i]);
        let kernel = alpha.kernel();
        let left_kernel = alpha.transpose().kernel().transpose();
        let middle = random_matrix(rng, kernel.cols(), left_kernel.rows());
        let beta = kernel.mul(&middle).mul(&left_kernel);
        maps[alpha_position(i)] = alpha;
        maps[beta_position(i)] = beta;
    }
    QuiverRep::new(alg, dims, maps).expect("random block representation satisfies the relations")
}

/// The two-parameter classification, decided on unreduced numerator/denominator pairs.
pub fn two_param_oracle(c: (i64, i64), cp: (i64, i64), n: i64) -> (&'static str, Option<i64>) {
    let (a, b) = c;
    let (x, y) = cp;
    let diff_integral = (a * y - x * b) % (b * y) == 0;
    let sum_integral = (a * y + x * b) % (b * y) == 0;
    if diff_integral || sum_integral {
        return ("DerivedEquivalence", None);
    }
    let reduce = |p: i64, q: i64| {
        let g = gcd(p.abs(), q.abs());
        (p / g * q.signum(), (q / g).abs())
    };
    let (_, m1) = reduce(a, b);
    let (_, m2) = reduce(x, y);
    if m1 == m2 && n % m1 == 0 {
        return ("RepOfSymmetricGroup", Some(n / m1));
    }
    ("Zero", None)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub type GridPoint = ((i64, i64), (i64, i64), usize);

/// 200 parameter triples `(c, c', n)` covering all three outcomes.
pub fn two_param_grid() -> Vec<GridPoint> {
    let left = [(1, 2), (3, 2), (1, 3), (2, 3), (-1, 3), (1, 4), (3, 4), (1, 5), (2, 5), (-3, 5)];
    let right = [(1, 2), (-1, 2), (5, 2), (1, 3), (4, 3), (1, 4), (-1, 4), (3, 5), (4, 5), (1, 6)];
    let mut out = Vec::new();
    for c in left {
        for cp in right {
            for n in [6, 10] {
                out.push((c, cp, n));
            }
        }
    }
    out
}
