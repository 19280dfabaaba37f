//! The full analysis report and its canonical JSON form.
//!
//! JSON output has sorted keys, a top-level `"schema"` version, numbers
//! rounded to 12 significant digits and `-0` printed as `0`, so the same
//! input gives byte-identical output whatever the thread count.

use pmcut_core::cut::{bounds_from_spectra, exact_max_cut, CutResult};
use pmcut_core::exactness::{exclusivity_from, ExclusivityReport};
use pmcut_core::graph::regularity_with;
use pmcut_core::spectra::{spread_report, three_spectra_with};
use pmcut_core::wilf::wilf_solve;
use pmcut_core::{Graph, Kind, Options, SpreadReport, Tolerances, WilfSolution};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub total_weight: f64,
    /// Common degree when the graph is regular.
    pub regular: Option<f64>,
    pub connected: bool,
    pub bipartite: bool,
}

impl GraphSummary {
    pub fn of(g: &Graph, tol: &Tolerances) -> Self {
        GraphSummary {
            n: g.n(),
            m: g.m(),
            total_weight: g.total_weight(),
            regular: regularity_with(g, tol),
            connected: g.is_connected(),
            bipartite: g.is_bipartite(),
        }
    }
}

/// Eigenvalues of `A`, `L` and `Q`, each in descending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectraValues {
    pub adjacency: Vec<f64>,
    pub laplacian: Vec<f64>,
    pub signless_laplacian: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub version: &'static str,
    pub tolerances: Tolerances,
    pub graph: GraphSummary,
    pub spectra: SpectraValues,
    pub spreads: SpreadReport,
    pub cut: CutResult,
    pub exactness: ExclusivityReport,
    pub wilf: Vec<WilfSolution>,
}

/// Runs the whole pipeline: one exhaustive maximum cut, one decomposition
/// per matrix, and one exhaustive `+/-1` eigenvector search.
pub fn analyze(g: &Graph, opts: &Options) -> pmcut_core::Result<Report> {
    let optimum = exact_max_cut(g, opts)?;
    let [a, l, q] = three_spectra_with(g, &opts.tol)?;
    let bounds = bounds_from_spectra(g, &a, &l, &q);
    let spreads = spread_report(g, &a, &l, &q, &opts.tol);
    let spectra = [a, l, q];
    let exactness = exclusivity_from(g, &optimum, &spectra, &opts.tol)?;
    let wilf = wilf_solve(g, &Kind::ALL, opts)?;
    let [a, l, q] = spectra;
    Ok(Report {
        schema: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        tolerances: opts.tol,
        graph: GraphSummary::of(g, &opts.tol),
        spectra: SpectraValues {
            adjacency: a.values,
            laplacian: l.values,
            signless_laplacian: q.values,
        },
        spreads,
        cut: CutResult {
            mcut: optimum.mcut,
            mcoh: optimum.mcoh,
            total_weight: optimum.total_weight,
            witness: optimum.witness,
            bounds,
        },
        exactness,
        wilf,
    })
}

/// `x` rounded to 12 significant digits, with `-0` mapped to `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

fn normalize(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        // serde_json's default map is ordered by key.
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect())
        }
        other => other,
    }
}

/// Canonical pretty-printed JSON of any serializable value.
pub fn to_canonical_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut text = serde_json::to_string_pretty(&normalize(serde_json::to_value(value)?))?;
    text.push('\n');
    Ok(text)
}

/// A number as plain text: 12 significant digits, always with a decimal
/// point or exponent. Magnitudes below `1e-12` are eigensolver noise and
/// print as `0.0`.
pub fn fmt_num(x: f64) -> String {
    let x = if x.abs() < 1e-12 { 0.0 } else { x };
    format!("{:?}", round_sig(x))
}

pub fn fmt_set(members: &[usize]) -> String {
    let inner: Vec<String> = members.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}
