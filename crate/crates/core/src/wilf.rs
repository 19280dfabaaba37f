//! Exhaustive search for `+/-1` eigenvectors of `A`, `L` and `Q`.
//!
//! Every non-constant canonical bipartition is visited in Gray-code order.
//! Moving one vertex across only changes the own-side and cross degrees of
//! that vertex and its neighbours, so each step is pure degree bookkeeping;
//! no eigendecomposition runs inside the loop.

use std::ops::{Add, Range, Sub};

use serde::Serialize;

use crate::enumerate::{check_cap, partition_count, run_blocks, walk};
use crate::error::{Error, Result};
use crate::exactness::{direct_check, Kind};
use crate::graph::{Graph, Partition};
use crate::spectra::graph_spectrum_with;
use crate::Options;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WilfSolution {
    pub kind: Kind,
    pub eigenvalue: f64,
    pub partition: Partition,
    /// 1-based position of the eigenvalue in the descending spectrum (first
    /// match when repeated).
    pub eigenvalue_index: usize,
    pub multiplicity: usize,
}

trait Degree:
    Copy + PartialEq + Add<Output = Self> + Sub<Output = Self> + Default + Send + Sync
{
    fn close(self, other: Self, slack: f64) -> bool;
    fn to_f64(self) -> f64;
}

impl Degree for i64 {
    fn close(self, other: Self, _: f64) -> bool {
        self == other
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Degree for f64 {
    fn close(self, other: Self, slack: f64) -> bool {
        (self - other).abs() <= slack
    }

    fn to_f64(self) -> f64 {
        self
    }
}

#[derive(Clone, Copy)]
struct Wanted {
    a: bool,
    l: bool,
    q: bool,
}

type Hit = (Kind, f64, u64);

fn common<T: Degree>(values: impl Iterator<Item = T>, slack: f64) -> Option<T> {
    let mut first = None;
    for x in values {
        match first {
            None => first = Some(x),
            Some(f) if !x.close(f, slack) => return None,
            _ => {}
        }
    }
    first
}

fn scan_block<T: Degree>(
    adjacency: &[Vec<(usize, T)>],
    full: u64,
    range: Range<u64>,
    wanted: Wanted,
    slack: f64,
) -> Vec<Hit> {
    let n = adjacency.len();
    let mut own = vec![T::default(); n];
    let mut cross = vec![T::default(); n];
    let mut hits = Vec::new();
    walk(range, |mask, flipped| {
        match flipped {
            None => {
                for (v, row) in adjacency.iter().enumerate() {
                    own[v] = T::default();
                    cross[v] = T::default();
                    for &(u, w) in row {
                        if (mask >> u & 1) == (mask >> v & 1) {
                            own[v] = own[v] + w;
                        } else {
                            cross[v] = cross[v] + w;
                        }
                    }
                }
            }
            Some(v) => {
                let side = mask >> v & 1;
                for &(u, w) in &adjacency[v] {
                    if mask >> u & 1 == side {
                        own[u] = own[u] + w;
                        cross[u] = cross[u] - w;
                    } else {
                        own[u] = own[u] - w;
                        cross[u] = cross[u] + w;
                    }
                }
                std::mem::swap(&mut own[v], &mut cross[v]);
            }
        }
        if mask == full {
            return;
        }
        if wanted.a {
            if let Some(lambda) = common((0..n).map(|i| own[i] - cross[i]), 2.0 * slack) {
                hits.push((Kind::A, lambda.to_f64(), mask));
            }
        }
        if wanted.l {
            if let Some(r) = common(cross.iter().copied(), slack) {
                hits.push((Kind::L, 2.0 * r.to_f64(), mask));
            }
        }
        if wanted.q {
            if let Some(r) = common(own.iter().copied(), slack) {
                hits.push((Kind::Q, 2.0 * r.to_f64(), mask));
            }
        }
    });
    hits
}

fn adjacency<T: Copy>(g: &Graph, weight: impl Fn(f64) -> T) -> Vec<Vec<(usize, T)>> {
    (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&(u, w)| (u, weight(w)))
                .collect()
        })
        .collect()
}

/// Every `(kind, eigenvalue, partition)` with `M p_S = eigenvalue * p_S`,
/// sorted by kind, then eigenvalue, then partition.
///
/// Each hit is re-verified by direct multiplication before it is reported.
pub fn wilf_solve(g: &Graph, kinds: &[Kind], opts: &Options) -> Result<Vec<WilfSolution>> {
    let n = g.n();
    check_cap(n, opts.max_n)?;
    let wanted = Wanted {
        a: kinds.contains(&Kind::A),
        l: kinds.contains(&Kind::L),
        q: kinds.contains(&Kind::Q),
    };
    if n < 2 {
        return Ok(Vec::new());
    }
    let full = partition_count(n) * 2 - 1;
    let slack = opts.tol.deg_for(g.max_degree());
    let blocks = if g.weights_are_integer() {
        let adj = adjacency(g, |w| w as i64);
        run_blocks(n, opts.threads, |range| {
            scan_block(&adj, full, range, wanted, slack)
        })?
    } else {
        let adj = adjacency(g, |w| w);
        run_blocks(n, opts.threads, |range| {
            scan_block(&adj, full, range, wanted, slack)
        })?
    };

    let mut hits: Vec<(Kind, f64, Partition)> = blocks
        .into_iter()
        .flatten()
        .map(|(kind, value, mask)| (kind, value, Partition::from_mask(n, mask)))
        .collect();
    hits.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then_with(|| a.2.cmp(&b.2))
    });

    let cmp_slack = opts.tol.cmp_for(n);
    let mut solutions = Vec::with_capacity(hits.len());
    for kind in Kind::ALL {
        let of_kind: Vec<_> = hits.iter().filter(|h| h.0 == kind).collect();
        if of_kind.is_empty() {
            continue;
        }
        let spectrum = graph_spectrum_with(g, kind.matrix_kind(), &opts.tol)?;
        for (kind, value, partition) in of_kind {
            match direct_check(g, partition, *kind, &opts.tol)? {
                Some(direct) if (direct - value).abs() <= cmp_slack => {}
                other => {
                    return Err(Error::OracleMismatch(format!(
                        "{kind} on {:?}: degree value {value}, direct {other:?}",
                        partition.members()
                    )))
                }
            }
            let (eigenvalue_index, multiplicity) =
                spectrum.position_of(*value, cmp_slack).ok_or_else(|| {
                    Error::OracleMismatch(format!("{kind} eigenvalue {value} not in the spectrum"))
                })?;
            solutions.push(WilfSolution {
                kind: *kind,
                eigenvalue: *value,
                partition: partition.clone(),
                eigenvalue_index,
                multiplicity,
            });
        }
    }
    Ok(solutions)
}

/// Whether the `kind` matrix of `g` has a non-constant `+/-1` eigenvector.
pub fn wilf_decide(g: &Graph, kind: Kind, opts: &Options) -> Result<bool> {
    Ok(!wilf_solve(g, &[kind], opts)?.is_empty())
}
