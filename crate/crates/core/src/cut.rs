//! Cut and cohesion weights, exact maximum cut, and the eigenvalue upper
//! bounds on the maximum cut.

use std::cmp::Ordering;
use std::ops::{Add, Range, Sub};

use serde::Serialize;

use crate::enumerate::{check_cap, lex_cmp, run_blocks, walk};
use crate::error::Result;
use crate::graph::{Graph, Partition};
use crate::spectra::{three_spectra, three_spectra_with, Spectrum};
use crate::Options;

/// `cut_G(S)`: total weight of edges with one end on each side.
pub fn cut_weight(g: &Graph, p: &Partition) -> Result<f64> {
    p.check_dimension(g)?;
    Ok(g.edges()
        .iter()
        .filter(|e| !p.same_side(e.u, e.v))
        .map(|e| e.w)
        .sum())
}

/// `coh_G(S)`: total weight of edges inside either side.
pub fn cohesion(g: &Graph, p: &Partition) -> Result<f64> {
    p.check_dimension(g)?;
    Ok(g.edges()
        .iter()
        .filter(|e| p.same_side(e.u, e.v))
        .map(|e| e.w)
        .sum())
}

/// An optimal bipartition found by exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxCut {
    pub mcut: f64,
    pub mcoh: f64,
    pub total_weight: f64,
    /// Lexicographically smallest optimal `S` (vertex 0 always included).
    pub witness: Partition,
}

/// The eigenvalue upper bounds on `mcut(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralBounds {
    /// `(n/4) μ_1`.
    pub laplacian: f64,
    /// `W - (n/4) q_n`.
    pub signless_laplacian: f64,
    /// `W/2 - (n/4) λ_n`.
    pub adjacency: f64,
    /// `(n/4) s_A`.
    pub spread_adjacency: f64,
    /// `(n/4) s_Q`.
    pub spread_signless: f64,
}

impl SpectralBounds {
    pub fn named(&self) -> [(&'static str, f64); 5] {
        [
            ("laplacian", self.laplacian),
            ("signless_laplacian", self.signless_laplacian),
            ("adjacency", self.adjacency),
            ("spread_adjacency", self.spread_adjacency),
            ("spread_signless", self.spread_signless),
        ]
    }

    /// Names of the bounds that `mcut` exceeds by more than `slack`.
    pub fn violations(&self, mcut: f64, slack: f64) -> Vec<&'static str> {
        self.named()
            .into_iter()
            .filter(|&(_, b)| mcut > b + slack)
            .map(|(name, _)| name)
            .collect()
    }
}

/// Maximum cut together with every spectral bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutResult {
    pub mcut: f64,
    pub mcoh: f64,
    pub total_weight: f64,
    pub witness: Partition,
    pub bounds: SpectralBounds,
}

trait CutValue:
    Copy + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Default + Send + Sync
{
}
impl CutValue for i64 {}
impl CutValue for f64 {}

fn weighted_adjacency<T: Copy>(g: &Graph, weight: impl Fn(f64) -> T) -> Vec<Vec<(usize, T)>> {
    (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&(u, w)| (u, weight(w)))
                .collect()
        })
        .collect()
}

/// Calls `visit(mask, cut)` for every partition of the block, updating the
/// cut incrementally as single vertices change sides.
fn scan_cuts<T: CutValue>(
    adjacency: &[Vec<(usize, T)>],
    range: Range<u64>,
    mut visit: impl FnMut(u64, T),
) {
    let mut cut = T::default();
    walk(range, |mask, flipped| {
        match flipped {
            None => {
                cut = T::default();
                for (v, row) in adjacency.iter().enumerate() {
                    for &(u, w) in row {
                        if v < u && (mask >> v & 1) != (mask >> u & 1) {
                            cut = cut + w;
                        }
                    }
                }
            }
            Some(v) => {
                let side = mask >> v & 1;
                for &(u, w) in &adjacency[v] {
                    if mask >> u & 1 == side {
                        cut = cut - w;
                    } else {
                        cut = cut + w;
                    }
                }
            }
        }
        visit(mask, cut);
    });
}

fn better(candidate: (i64, u64), best: (i64, u64)) -> bool {
    candidate.0 > best.0
        || (candidate.0 == best.0 && lex_cmp(candidate.1, best.1) == Ordering::Less)
}

/// Exact maximum cut over all `2^(n-1)` canonical bipartitions.
///
/// Integer-weighted graphs are solved in `i64`. Otherwise the maximum `M` is
/// found first and the witness is the lexicographically smallest partition
/// whose cut is within the comparison tolerance of `M`.
pub fn exact_max_cut(g: &Graph, opts: &Options) -> Result<MaxCut> {
    let n = g.n();
    check_cap(n, opts.max_n)?;
    if n == 0 {
        return Ok(MaxCut {
            mcut: 0.0,
            mcoh: 0.0,
            total_weight: 0.0,
            witness: Partition::from_flags(Vec::new()),
        });
    }
    let (mcut, mask) = if let Some(total) = g.total_int_weight() {
        let adjacency = weighted_adjacency(g, Graph::int_weight);
        let per_block = run_blocks(n, opts.threads, |range| {
            let mut best: Option<(i64, u64)> = None;
            scan_cuts(&adjacency, range, |mask, cut| {
                if best.is_none_or(|b| better((cut, mask), b)) {
                    best = Some((cut, mask));
                }
            });
            best
        })?;
        let (cut, mask) = per_block
            .into_iter()
            .flatten()
            .reduce(|a, b| if better(b, a) { b } else { a })
            .expect("at least one partition");
        debug_assert!(cut <= total);
        (cut as f64, mask)
    } else {
        let adjacency = weighted_adjacency(g, |w| w);
        let maxima = run_blocks(n, opts.threads, |range| {
            let mut best = f64::NEG_INFINITY;
            scan_cuts(&adjacency, range, |_, cut| best = best.max(cut));
            best
        })?;
        let mcut = maxima.into_iter().fold(f64::NEG_INFINITY, f64::max);
        let threshold = mcut - opts.tol.cmp_for(n);
        let witnesses = run_blocks(n, opts.threads, |range| {
            let mut best: Option<u64> = None;
            scan_cuts(&adjacency, range, |mask, cut| {
                if cut >= threshold && best.is_none_or(|b| lex_cmp(mask, b) == Ordering::Less) {
                    best = Some(mask);
                }
            });
            best
        })?;
        let mask = witnesses
            .into_iter()
            .flatten()
            .min_by(|&a, &b| lex_cmp(a, b))
            .expect("the maximum is attained");
        (mcut, mask)
    };
    let total_weight = g.total_weight();
    let mcoh = match g.total_int_weight() {
        Some(total) => (total - mcut as i64) as f64,
        None => total_weight - mcut,
    };
    Ok(MaxCut {
        mcut,
        mcoh,
        total_weight,
        witness: Partition::from_mask(n, mask),
    })
}

/// All spectral bounds, from the three spectra.
pub fn bounds_from_spectra(g: &Graph, a: &Spectrum, l: &Spectrum, q: &Spectrum) -> SpectralBounds {
    let quarter_n = g.n() as f64 / 4.0;
    let w = g.total_weight();
    SpectralBounds {
        laplacian: quarter_n * l.largest(),
        signless_laplacian: w - quarter_n * q.smallest(),
        adjacency: w / 2.0 - quarter_n * a.smallest(),
        spread_adjacency: quarter_n * a.spread(),
        spread_signless: quarter_n * q.spread(),
    }
}

pub fn spectral_bounds(g: &Graph) -> Result<SpectralBounds> {
    let [a, l, q] = three_spectra(g)?;
    Ok(bounds_from_spectra(g, &a, &l, &q))
}

/// Exact maximum cut with all spectral bounds.
pub fn max_cut(g: &Graph, opts: &Options) -> Result<CutResult> {
    let optimum = exact_max_cut(g, opts)?;
    let [a, l, q] = three_spectra_with(g, &opts.tol)?;
    let bounds = bounds_from_spectra(g, &a, &l, &q);
    Ok(CutResult {
        mcut: optimum.mcut,
        mcoh: optimum.mcoh,
        total_weight: optimum.total_weight,
        witness: optimum.witness,
        bounds,
    })
}
