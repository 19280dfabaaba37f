//! Exactness of the spectral max-cut bounds and the degree characterization
//! of `+/-1` partition-vector eigenvectors.
//!
//! For a bipartition `(S, V \ S)` with partition vector `p_S`:
//!
//! * `Q p_S = q p_S` iff `G[S]` and `G[V \ S]` are both `q/2`-regular;
//! * `L p_S = μ p_S` iff every vertex has cross degree `μ/2`;
//! * `A p_S = λ p_S` iff `d_i(own side) - d_i(cross) = λ` for every vertex.
//!
//! [`structural_check`] evaluates these degree conditions. [`direct_check`]
//! multiplies the matrix by `p_S` and is kept independent of it as an oracle.

use std::fmt;

use serde::Serialize;

use crate::cut::{exact_max_cut, MaxCut};
use crate::error::{Error, Result};
use crate::graph::{
    cut_edge_subgraph, induced_subgraph, inside_subgraph, regularity_with, Graph, Partition,
};
use crate::matrix::{build_matrix, MatrixKind};
use crate::spectra::{eigen_sym_with, graph_spectrum_with, three_spectra_with, Spectrum};
use crate::tolerance::Tolerances;
use crate::Options;

/// The three graph matrices whose max-cut bounds can be exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    A,
    L,
    Q,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::A, Kind::L, Kind::Q];

    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            Kind::A => MatrixKind::Adjacency,
            Kind::L => MatrixKind::Laplacian,
            Kind::Q => MatrixKind::SignlessLaplacian,
        }
    }

    /// Conventional name of the extreme eigenvalue the bound uses.
    pub fn eigenvalue_name(self) -> &'static str {
        match self {
            Kind::A => "lambda_n",
            Kind::L => "mu_1",
            Kind::Q => "q_n",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::L => "L",
            Kind::Q => "Q",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Kind::A),
            "l" => Ok(Kind::L),
            "q" => Ok(Kind::Q),
            _ => Err(Error::Hypothesis(format!("unknown matrix kind {s:?}"))),
        }
    }
}

/// Degree data of one vertex relative to a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VertexDegrees {
    pub vertex: usize,
    pub in_s: bool,
    /// Weighted degree inside the vertex's own side.
    pub own: f64,
    /// Weighted degree towards the other side.
    pub cross: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuralVerdict {
    pub kind: Kind,
    pub satisfied: bool,
    /// The eigenvalue the degree condition yields, when satisfied.
    pub eigenvalue: Option<f64>,
    pub detail: Vec<VertexDegrees>,
}

enum Values {
    Int(Vec<i64>),
    Real(Vec<f64>),
}

impl Values {
    /// The common value of all entries, if they agree (exactly for integers).
    fn constant(&self, slack: f64) -> Option<f64> {
        match self {
            Values::Int(v) => {
                let first = *v.first()?;
                v.iter().all(|&x| x == first).then_some(first as f64)
            }
            Values::Real(v) => {
                let first = *v.first()?;
                v.iter()
                    .all(|&x| (x - first).abs() <= slack)
                    .then_some(first)
            }
        }
    }
}

/// Per-vertex own-side degrees read off the induced subgraphs `G[S]`,
/// `G[V \ S]`, and cross degrees read off `G[E(S, V \ S)]`.
fn side_and_cross_degrees(g: &Graph, p: &Partition) -> Result<(Values, Values)> {
    let sides = [
        induced_subgraph(g, p.members())?,
        induced_subgraph(g, &p.complement())?,
    ];
    let cut = cut_edge_subgraph(g, p)?;
    if g.weights_are_integer() {
        let mut own = vec![0i64; g.n()];
        for side in &sides {
            let degrees = side
                .graph
                .int_degrees()
                .expect("subgraph of an integer graph");
            for (k, &v) in side.new_to_old.iter().enumerate() {
                own[v] = degrees[k];
            }
        }
        let cross = cut.int_degrees().expect("subgraph of an integer graph");
        Ok((Values::Int(own), Values::Int(cross)))
    } else {
        let mut own = vec![0.0; g.n()];
        for side in &sides {
            for (k, &v) in side.new_to_old.iter().enumerate() {
                own[v] = side.graph.degrees()[k];
            }
        }
        Ok((Values::Real(own), Values::Real(cut.degrees().to_vec())))
    }
}

fn require_proper(g: &Graph, p: &Partition) -> Result<()> {
    p.check_dimension(g)?;
    if p.is_constant() {
        return Err(Error::ConstantPartition);
    }
    Ok(())
}

/// Decides from degrees alone whether `p_S` is an eigenvector of the `kind`
/// matrix, and of which eigenvalue.
pub fn structural_check(
    g: &Graph,
    p: &Partition,
    kind: Kind,
    tol: &Tolerances,
) -> Result<StructuralVerdict> {
    require_proper(g, p)?;
    let (own, cross) = side_and_cross_degrees(g, p)?;
    let slack = tol.deg_for(g.max_degree());
    let eigenvalue = match kind {
        Kind::Q => own.constant(slack).map(|r| 2.0 * r),
        Kind::L => cross.constant(slack).map(|r| 2.0 * r),
        Kind::A => {
            let diff = match (&own, &cross) {
                (Values::Int(o), Values::Int(c)) => {
                    Values::Int(o.iter().zip(c).map(|(a, b)| a - b).collect())
                }
                (Values::Real(o), Values::Real(c)) => {
                    Values::Real(o.iter().zip(c).map(|(a, b)| a - b).collect())
                }
                _ => unreachable!("both degree lists share the weight type"),
            };
            diff.constant(2.0 * slack)
        }
    };
    let as_f64 = |v: &Values, i: usize| match v {
        Values::Int(x) => x[i] as f64,
        Values::Real(x) => x[i],
    };
    let detail = (0..g.n())
        .map(|v| VertexDegrees {
            vertex: v,
            in_s: p.contains(v),
            own: as_f64(&own, v),
            cross: as_f64(&cross, v),
        })
        .collect();
    Ok(StructuralVerdict {
        kind,
        satisfied: eigenvalue.is_some(),
        eigenvalue,
        detail,
    })
}

/// Computes `M p_S` and returns `λ` when `M p_S = λ p_S`.
///
/// Integer-weighted graphs are checked in exact integer arithmetic; otherwise
/// componentwise agreement within the comparison tolerance is required.
pub fn direct_check(g: &Graph, p: &Partition, kind: Kind, tol: &Tolerances) -> Result<Option<f64>> {
    require_proper(g, p)?;
    let m = build_matrix(g, kind.matrix_kind());
    let signs = p.vector();
    let n = g.n();
    if g.weights_are_integer() {
        let product: Vec<i64> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j) as i64 * signs[j] as i64).sum())
            .collect();
        let lambda = product[0] * signs[0] as i64;
        let ok = (0..n).all(|i| product[i] == lambda * signs[i] as i64);
        Ok(ok.then_some(lambda as f64))
    } else {
        let x: Vec<f64> = signs.iter().map(|&s| s as f64).collect();
        let product = m.mul_vec(&x);
        let lambda = product[0] * x[0];
        let slack = tol.cmp_for(n);
        let ok = (0..n).all(|i| (product[i] - lambda * x[i]).abs() <= slack);
        Ok(ok.then_some(lambda))
    }
}

/// Whether a graph attains one of the eigenvalue max-cut bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactnessCertificate {
    pub kind: Kind,
    pub is_exact: bool,
    /// `λ_n`, `μ_1` or `q_n`.
    pub eigenvalue_used: f64,
    /// `2(W - 2 mcut)/n`, `4 mcut/n` or `4(W - mcut)/n`.
    pub bound_value: f64,
    pub residual: f64,
    /// The comparison tolerance the verdict used.
    pub tolerance: f64,
    pub mcut: f64,
    pub total_weight: f64,
    pub witness: Partition,
    /// Degree check of the witness, run when the graph is exact.
    pub structural_check: Option<StructuralVerdict>,
}

impl ExactnessCertificate {
    /// True when the residual clears the strictness margin (10 tolerances),
    /// so "not exact" can be asserted safely.
    pub fn clearly_inexact(&self) -> bool {
        self.residual > 10.0 * self.tolerance
    }
}

/// Builds a certificate from a precomputed optimum and the spectrum of the
/// `kind` matrix.
pub fn certificate_from(
    g: &Graph,
    kind: Kind,
    optimum: &MaxCut,
    spectrum: &Spectrum,
    tol: &Tolerances,
) -> Result<ExactnessCertificate> {
    let n = g.n() as f64;
    let w = optimum.total_weight;
    let mcut = optimum.mcut;
    let (eigenvalue_used, bound_value) = match kind {
        Kind::L => (spectrum.largest(), 4.0 * mcut / n),
        Kind::Q => (spectrum.smallest(), 4.0 * optimum.mcoh / n),
        Kind::A => (spectrum.smallest(), 2.0 * (w - 2.0 * mcut) / n),
    };
    let residual = (eigenvalue_used - bound_value).abs();
    let tolerance = tol.cmp_for(g.n());
    let is_exact = residual <= tolerance;
    let structural_check = if is_exact && !optimum.witness.is_constant() {
        Some(structural_check(g, &optimum.witness, kind, tol)?)
    } else {
        None
    };
    Ok(ExactnessCertificate {
        kind,
        is_exact,
        eigenvalue_used,
        bound_value,
        residual,
        tolerance,
        mcut,
        total_weight: w,
        witness: optimum.witness.clone(),
        structural_check,
    })
}

/// Certifies `kind`-exactness from scratch: exact maximum cut, one
/// eigendecomposition, and a degree check of the witness when exact.
pub fn certify_exactness(g: &Graph, kind: Kind, opts: &Options) -> Result<ExactnessCertificate> {
    let optimum = exact_max_cut(g, opts)?;
    let spectrum = graph_spectrum_with(g, kind.matrix_kind(), &opts.tol)?;
    certificate_from(g, kind, &optimum, &spectrum, &opts.tol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExclusivityReport {
    /// Certificates in `A`, `L`, `Q` order.
    pub certificates: Vec<ExactnessCertificate>,
    pub regular: Option<f64>,
    pub connected: bool,
    pub exact_kinds: Vec<Kind>,
    /// Exact in two kinds iff regular and exact in the third: so a
    /// non-regular graph is exact in at most one kind and a regular graph in
    /// none or all three.
    pub exclusivity_holds: bool,
}

impl ExclusivityReport {
    pub fn certificate(&self, kind: Kind) -> &ExactnessCertificate {
        &self.certificates[kind as usize]
    }
}

/// Certifies all three kinds and checks the exclusivity relation.
pub fn exclusivity_check(g: &Graph, opts: &Options) -> Result<ExclusivityReport> {
    let optimum = exact_max_cut(g, opts)?;
    let spectra = three_spectra_with(g, &opts.tol)?;
    exclusivity_from(g, &optimum, &spectra, &opts.tol)
}

/// As [`exclusivity_check`] with a precomputed optimum and `[A, L, Q]` spectra.
pub fn exclusivity_from(
    g: &Graph,
    optimum: &MaxCut,
    spectra: &[Spectrum; 3],
    tol: &Tolerances,
) -> Result<ExclusivityReport> {
    let certificates = Kind::ALL
        .iter()
        .zip(spectra)
        .map(|(&kind, s)| certificate_from(g, kind, optimum, s, tol))
        .collect::<Result<Vec<_>>>()?;
    let exact_kinds: Vec<Kind> = certificates
        .iter()
        .filter(|c| c.is_exact)
        .map(|c| c.kind)
        .collect();
    let regular = regularity_with(g, tol);
    let exclusivity_holds = !matches!(
        (regular, exact_kinds.len()),
        (_, 2) | (None, 3) | (Some(_), 1)
    );
    Ok(ExclusivityReport {
        certificates,
        regular,
        connected: g.is_connected(),
        exact_kinds,
        exclusivity_holds,
    })
}

/// Outcome of the sufficient conditions for `L`- and `Q`-exactness on a
/// maximum-cut bipartition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SufficientReport {
    /// Cut graph `r`-regular and `2r >= μ_1(G[S] + G[S̄]) + μ_2(G[E(S, S̄)])`.
    pub l_sufficient: bool,
    /// Inside graph `r`-regular and `2r <= q_n(G[S] + G[S̄]) + q_{n-1}(G[E(S, S̄)])`.
    pub q_sufficient: bool,
    pub cut_regularity: Option<f64>,
    pub inside_regularity: Option<f64>,
    /// `(2r, μ_1(inside) + μ_2(cut))` when the cut graph is regular.
    pub l_sides: Option<(f64, f64)>,
    /// `(2r, q_n(inside) + q_{n-1}(cut))` when the inside graph is regular.
    pub q_sides: Option<(f64, f64)>,
}

/// Tests the sufficient conditions on `p`, which must be a maximum cut.
pub fn sufficient_condition_check(
    g: &Graph,
    p: &Partition,
    opts: &Options,
) -> Result<SufficientReport> {
    p.check_dimension(g)?;
    let optimum = exact_max_cut(g, opts)?;
    let cut = crate::cut::cut_weight(g, p)?;
    let optimal = if g.weights_are_integer() {
        cut == optimum.mcut
    } else {
        cut >= optimum.mcut - opts.tol.cmp_for(g.n())
    };
    if !optimal {
        return Err(Error::NotOptimal {
            cut,
            mcut: optimum.mcut,
        });
    }
    let tol = &opts.tol;
    let slack = tol.cmp_for(g.n());
    let cut_graph = cut_edge_subgraph(g, p)?;
    let inside = inside_subgraph(g, p)?;
    let cut_regularity = regularity_with(&cut_graph, tol);
    let inside_regularity = regularity_with(&inside, tol);
    let n = g.n();

    let l_sides = match cut_regularity {
        Some(r) if n >= 2 => {
            let mu_inside =
                eigen_sym_with(&build_matrix(&inside, MatrixKind::Laplacian), &opts.tol)?;
            let mu_cut =
                eigen_sym_with(&build_matrix(&cut_graph, MatrixKind::Laplacian), &opts.tol)?;
            Some((2.0 * r, mu_inside.values[0] + mu_cut.values[1]))
        }
        _ => None,
    };
    let q_sides = match inside_regularity {
        Some(r) if n >= 2 => {
            let q_inside = eigen_sym_with(
                &build_matrix(&inside, MatrixKind::SignlessLaplacian),
                &opts.tol,
            )?;
            let q_cut = eigen_sym_with(
                &build_matrix(&cut_graph, MatrixKind::SignlessLaplacian),
                &opts.tol,
            )?;
            Some((2.0 * r, q_inside.values[n - 1] + q_cut.values[n - 2]))
        }
        _ => None,
    };
    Ok(SufficientReport {
        l_sufficient: l_sides.is_some_and(|(lhs, rhs)| lhs >= rhs - slack),
        q_sufficient: q_sides.is_some_and(|(lhs, rhs)| lhs <= rhs + slack),
        cut_regularity,
        inside_regularity,
        l_sides,
        q_sides,
    })
}
