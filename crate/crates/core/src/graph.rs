//! Simple weighted undirected graphs, vertex bipartitions and the subgraph
//! operators used throughout the crate.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Weights above this are not treated as exact integers.
const MAX_EXACT_WEIGHT: f64 = (1u64 << 40) as f64;

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// A simple weighted undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted lexicographically, so two
/// graphs built from the same edge set compare equal regardless of input order.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, f64)>>,
    degrees: Vec<f64>,
    total_weight: f64,
    integer_weights: bool,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate pairs, out-of-range
    /// endpoints and non-positive weights.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        for (a, b, w) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidWeight { u: a, v: b, w });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            normalized.push(Edge { u, v, w });
        }
        normalized.sort_by_key(|e| (e.u, e.v));
        Ok(Self::from_sorted(n, normalized))
    }

    /// Builds a unit-weight graph from vertex pairs.
    pub fn unweighted<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, 1.0)))
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut degrees = vec![0.0; n];
        let mut total_weight = 0.0;
        let mut integer_weights = true;
        for e in &edges {
            adjacency[e.u].push((e.v, e.w));
            adjacency[e.v].push((e.u, e.w));
            degrees[e.u] += e.w;
            degrees[e.v] += e.w;
            total_weight += e.w;
            integer_weights &= e.w.fract() == 0.0 && e.w <= MAX_EXACT_WEIGHT;
        }
        Graph {
            n,
            edges,
            adjacency,
            degrees,
            total_weight,
            integer_weights,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v` with the connecting edge weight.
    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adjacency[v]
    }

    /// Weighted degrees `d_i(G)`.
    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn max_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(0.0, f64::max)
    }

    /// Sum of all edge weights `W`.
    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    /// True when every weight is an integer, so that degree sums and
    /// eigen-equation checks can be done in exact integer arithmetic.
    pub fn weights_are_integer(&self) -> bool {
        self.integer_weights
    }

    pub fn has_unit_weights(&self) -> bool {
        self.edges.iter().all(|e| e.w == 1.0)
    }

    pub(crate) fn int_weight(w: f64) -> i64 {
        w as i64
    }

    /// Integer degrees, present only when all weights are integers.
    pub fn int_degrees(&self) -> Option<Vec<i64>> {
        if !self.integer_weights {
            return None;
        }
        let mut degrees = vec![0i64; self.n];
        for e in &self.edges {
            let w = Self::int_weight(e.w);
            degrees[e.u] += w;
            degrees[e.v] += w;
        }
        Some(degrees)
    }

    pub fn total_int_weight(&self) -> Option<i64> {
        self.integer_weights
            .then(|| self.edges.iter().map(|e| Self::int_weight(e.w)).sum())
    }

    /// The weight of edge `{u, v}`, or zero when absent.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.adjacency
            .get(u)
            .and_then(|row| row.iter().find(|&&(x, _)| x == v))
            .map_or(0.0, |&(_, w)| w)
    }

    /// Multiplies every edge weight by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.n, self.edges.iter().map(|e| (e.u, e.v, e.w * c)))
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        Self::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.w)),
        )
    }

    /// The graph with the listed edges removed (absent pairs are ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let removed: HashSet<(usize, usize)> = removed
            .iter()
            .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        let kept = self
            .edges
            .iter()
            .filter(|e| !removed.contains(&(e.u, e.v)))
            .copied()
            .collect();
        Self::from_sorted(self.n, kept)
    }

    /// Keeps only the edges for which `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Self {
        let kept = self.edges.iter().filter(|e| keep(e)).copied().collect();
        Self::from_sorted(self.n, kept)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(u, _) in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Two-colours the graph by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap_or(false);
                for &(u, _) in &self.adjacency[v] {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

/// Returns `r` when every weighted degree equals `r`.
///
/// Integer-weighted graphs are compared exactly; otherwise degrees may differ
/// by `1e-9 * max(1, max degree)`.
pub fn regularity(g: &Graph) -> Option<f64> {
    regularity_with(g, &Tolerances::default())
}

pub fn regularity_with(g: &Graph, tol: &Tolerances) -> Option<f64> {
    if let Some(degrees) = g.int_degrees() {
        let first = degrees.first().copied().unwrap_or(0);
        return degrees.iter().all(|&d| d == first).then_some(first as f64);
    }
    let degrees = g.degrees();
    let first = degrees.first().copied().unwrap_or(0.0);
    let slack = tol.deg_for(g.max_degree());
    degrees
        .iter()
        .all(|&d| (d - first).abs() <= slack)
        .then_some(first)
}

/// A vertex bipartition `(S, V \ S)` in canonical form: vertex 0 is in `S`.
///
/// `p_S` and `-p_S` describe the same bipartition, so constructors flip the
/// sides whenever vertex 0 would land outside `S`. Ordering compares the
/// sorted member lists of `S` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    n: usize,
    members: Vec<usize>,
    #[serde(skip)]
    in_s: Vec<bool>,
}

impl Partition {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mut in_s = vec![false; n];
        for &v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            in_s[v] = true;
        }
        Ok(Self::from_flags(in_s))
    }

    /// Builds the partition from `S`-membership flags, canonicalizing.
    pub fn from_flags(mut in_s: Vec<bool>) -> Self {
        if in_s.first() == Some(&false) {
            in_s.iter_mut().for_each(|b| *b = !*b);
        }
        let members = (0..in_s.len()).filter(|&i| in_s[i]).collect();
        Partition {
            n: in_s.len(),
            members,
            in_s,
        }
    }

    /// Builds the partition whose `S` is the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self::from_flags((0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    /// Builds the partition from a `+/-1` vector (`+1` marks `S`).
    pub fn from_signs(signs: &[i8]) -> Self {
        Self::from_flags(signs.iter().map(|&s| s > 0).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted members of `S`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Sorted members of the complement of `S`.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.in_s[i]).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_s[v]
    }

    pub fn same_side(&self, a: usize, b: usize) -> bool {
        self.in_s[a] == self.in_s[b]
    }

    /// `|S|` and `|V \ S|`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.members.len(), self.n - self.members.len())
    }

    /// True when one side is empty, i.e. the vector is constant.
    pub fn is_constant(&self) -> bool {
        self.members.len() == self.n
    }

    /// The partition vector `p_S`.
    pub fn vector(&self) -> Vec<i8> {
        self.in_s.iter().map(|&b| if b { 1 } else { -1 }).collect()
    }

    pub fn to_mask(&self) -> Option<u64> {
        (self.n <= 64).then(|| self.members.iter().fold(0u64, |m, &i| m | 1 << i))
    }

    pub(crate) fn check_dimension(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found: self.n,
            });
        }
        Ok(())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members).then(self.n.cmp(&other.n))
    }
}

/// An induced subgraph together with its vertex correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `new_to_old[k]` is the original index of subgraph vertex `k`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[i]` is the subgraph index of original vertex `i`.
    pub old_to_new: Vec<Option<usize>>,
}

/// `G[s]`: the vertices in `s` (deduplicated, in increasing order) and every
/// edge with both ends in `s`.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<Subgraph> {
    let mut old_to_new = vec![None; g.n()];
    let mut new_to_old: Vec<usize> = Vec::with_capacity(s.len());
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for v in sorted {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        old_to_new[v] = Some(new_to_old.len());
        new_to_old.push(v);
    }
    let edges = g
        .edges()
        .iter()
        .filter_map(|e| {
            Some(Edge {
                u: old_to_new[e.u]?,
                v: old_to_new[e.v]?,
                w: e.w,
            })
        })
        .collect();
    Ok(Subgraph {
        graph: Graph::from_sorted(new_to_old.len(), edges),
        new_to_old,
        old_to_new,
    })
}

/// `G[E(S, V \ S)]` on all `n` vertices: exactly the edges crossing `p`.
pub fn cut_edge_subgraph(g: &Graph, p: &Partition) -> Result<Graph> {
    p.check_dimension(g)?;
    Ok(g.filter_edges(|e| !p.same_side(e.u, e.v)))
}

/// `G[S] + G[V \ S]` on all `n` vertices: exactly the edges not crossing `p`.
pub fn inside_subgraph(g: &Graph, p: &Partition) -> Result<Graph> {
    p.check_dimension(g)?;
    Ok(g.filter_edges(|e| p.same_side(e.u, e.v)))
}

/// `d_i(S, V \ S)`: weight of edges from `i` to the opposite side of `p`.
pub fn cross_degree(g: &Graph, p: &Partition, i: usize) -> f64 {
    g.neighbors(i)
        .iter()
        .filter(|&&(j, _)| !p.same_side(i, j))
        .map(|&(_, w)| w)
        .sum()
}

/// Weight of edges from `i` to its own side of `p`.
pub fn side_degree(g: &Graph, p: &Partition, i: usize) -> f64 {
    g.neighbors(i)
        .iter()
        .filter(|&&(j, _)| p.same_side(i, j))
        .map(|&(_, w)| w)
        .sum()
}

/// Disjoint union `g + h`; vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            w: e.w,
        }))
        .collect();
    Graph::from_sorted(g.n() + h.n(), edges)
}

/// Join `g ∇ h`: the disjoint union plus every unit-weight edge between the
/// two vertex sets.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let mut edges = disjoint_union(g, h).edges;
    for u in 0..g.n() {
        for v in 0..h.n() {
            edges.push(Edge {
                u,
                v: v + shift,
                w: 1.0,
            });
        }
    }
    edges.sort_by_key(|e| (e.u, e.v));
    Graph::from_sorted(g.n() + h.n(), edges)
}
