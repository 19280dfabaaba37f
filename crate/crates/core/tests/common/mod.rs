//! Random graph sources and brute-force oracles shared by the integration
//! tests. The oracles work from the edge list with dense arithmetic and plain
//! subset loops, independent of the library's enumeration and degree code.

#![allow(dead_code)]

use pmcut_core::{Graph, Kind};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)` with weights drawn by `weight`.
pub fn random_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: f64,
    mut weight: impl FnMut(&mut ChaCha8Rng) -> f64,
) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, weight(rng)));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    random_graph(rng, n, p, |_| 1.0)
}

pub fn int_weighted(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    random_graph(rng, n, p, |r| r.gen_range(1..=5) as f64)
}

pub fn real_weighted(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    random_graph(rng, n, p, |r| r.gen_range(0.1..3.0))
}

/// Graph whose edge set is bit `k` of `code` over the pairs `(u, v)`, `u < v`.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::unweighted(n, edges).unwrap()
}

pub fn dense_adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; g.n()]; g.n()];
    for e in g.edges() {
        a[e.u][e.v] = e.w;
        a[e.v][e.u] = e.w;
    }
    a
}

/// `M x` for the `kind` matrix of `g`, built from the edge list.
pub fn dense_apply(g: &Graph, kind: Kind, x: &[f64]) -> Vec<f64> {
    let a = dense_adjacency(g);
    let n = g.n();
    (0..n)
        .map(|i| {
            let d: f64 = a[i].iter().sum();
            let ax: f64 = (0..n).map(|j| a[i][j] * x[j]).sum();
            match kind {
                Kind::A => ax,
                Kind::L => d * x[i] - ax,
                Kind::Q => d * x[i] + ax,
            }
        })
        .collect()
}

/// Sign vector of the subset `mask`: `+1` inside, `-1` outside.
pub fn signs(n: usize, mask: u64) -> Vec<f64> {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { 1.0 } else { -1.0 })
        .collect()
}

pub fn members(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Eigenvalue of `M` on the sign vector of `mask`, if it is an eigenvector.
pub fn sign_eigenvalue(g: &Graph, kind: Kind, mask: u64, tol: f64) -> Option<f64> {
    let x = signs(g.n(), mask);
    let y = dense_apply(g, kind, &x);
    let lambda = y[0] * x[0];
    y.iter()
        .zip(&x)
        .all(|(yi, xi)| (yi - lambda * xi).abs() <= tol)
        .then_some(lambda)
}

pub fn cut_of(g: &Graph, mask: u64) -> f64 {
    g.edges()
        .iter()
        .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
        .map(|e| e.w)
        .sum()
}

/// Maximum cut and the lexicographically smallest optimal side containing 0.
pub fn brute_max_cut(g: &Graph) -> (f64, Vec<usize>) {
    let n = g.n();
    let mut best = f64::NEG_INFINITY;
    for mask in (0..1u64 << n).filter(|m| m & 1 == 1) {
        best = best.max(cut_of(g, mask));
    }
    let witness = (0..1u64 << n)
        .filter(|m| m & 1 == 1 && cut_of(g, *m) >= best - 1e-9)
        .map(|m| members(n, m))
        .min()
        .unwrap();
    (best, witness)
}

/// Every `(kind, eigenvalue, members)` with a non-constant sign eigenvector.
pub fn brute_sign_eigenvectors(g: &Graph, tol: f64) -> Vec<(Kind, f64, Vec<usize>)> {
    let n = g.n();
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    for kind in Kind::ALL {
        for mask in (0..full).filter(|m| m & 1 == 1) {
            if let Some(lambda) = sign_eigenvalue(g, kind, mask, tol) {
                out.push((kind, lambda, members(n, mask)));
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then_with(|| a.2.cmp(&b.2))
    });
    out
}
