//! Subcommand implementations. Each returns the text to print on stdout.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use pmcut_core::cut::max_cut;
use pmcut_core::exactness::{certify_exactness, ExactnessCertificate};
use pmcut_core::families::{self, certify_family, FamilyReport, FamilySpec, FAMILY_MAX_N};
use pmcut_core::generate::Generator;
use pmcut_core::io::{read_edge_list, save_edge_list};
use pmcut_core::wilf::wilf_solve;
use pmcut_core::{Error, Graph, Kind, Options, WilfSolution};
use serde::Serialize;

use crate::args::{Cli, Command, FamilyArgs, FamilyName, GlobalArgs};
use crate::report::{analyze, fmt_num, fmt_set, to_canonical_json, Report, SCHEMA_VERSION};
use crate::CliError;

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let global = &cli.global;
    match &cli.command {
        Command::Analyze { path } => cmd_analyze(path, global),
        Command::Maxcut { path } => cmd_maxcut(path, global),
        Command::Exact { path, matrix } => cmd_exact(path, &matrix.kinds(), global),
        Command::Wilf { path, matrix } => cmd_wilf(path, &matrix.kinds(), global),
        Command::Family(args) => cmd_family(args, global),
    }
}

/// Wraps a command result with the schema version for JSON output.
#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: &'a T,
}

fn json<T: Serialize>(body: &T) -> Result<String, CliError> {
    Ok(to_canonical_json(&Envelope {
        schema: SCHEMA_VERSION,
        body,
    })?)
}

pub fn cmd_analyze(path: &Path, global: &GlobalArgs) -> Result<String, CliError> {
    let g = read_edge_list(path)?;
    let report = analyze(&g, &global.analysis_options())?;
    if global.json {
        return Ok(to_canonical_json(&report)?);
    }
    Ok(analysis_text(&report))
}

fn analysis_text(r: &Report) -> String {
    let mut out = String::new();
    let g = &r.graph;
    let regular = g
        .regular
        .map_or("no".to_string(), |d| format!("yes, degree {}", fmt_num(d)));
    let _ = writeln!(
        out,
        "n = {}, m = {}, W = {}",
        g.n,
        g.m,
        fmt_num(g.total_weight)
    );
    let _ = writeln!(
        out,
        "regular: {regular}; connected: {}; bipartite: {}",
        g.connected, g.bipartite
    );
    for (name, values) in [
        ("A", &r.spectra.adjacency),
        ("L", &r.spectra.laplacian),
        ("Q", &r.spectra.signless_laplacian),
    ] {
        let list: Vec<String> = values.iter().map(|&v| fmt_num(v)).collect();
        let _ = writeln!(out, "spectrum {name}: [{}]", list.join(", "));
    }
    let s = &r.spreads;
    let _ = writeln!(
        out,
        "spreads: s_A = {}, s_L = {}, s_Q = {}; 2 s_A = {} <= s_L + s_Q = {}",
        fmt_num(s.s_a),
        fmt_num(s.s_l),
        fmt_num(s.s_q),
        fmt_num(s.lhs),
        fmt_num(s.rhs)
    );
    out.push_str(&cut_text(&r.cut));
    for c in &r.exactness.certificates {
        let _ = writeln!(out, "{}", certificate_line(c));
    }
    out.push_str(&wilf_text(&r.wilf));
    out
}

fn cut_text(c: &pmcut_core::CutResult) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "mcut = {} with S = {}",
        fmt_num(c.mcut),
        fmt_set(c.witness.members())
    );
    for (name, value) in c.bounds.named() {
        let _ = writeln!(out, "  bound {name}: {}", fmt_num(value));
    }
    out
}

pub fn cmd_maxcut(path: &Path, global: &GlobalArgs) -> Result<String, CliError> {
    let g = read_edge_list(path)?;
    let result = max_cut(&g, &global.analysis_options())?;
    if global.json {
        return json(&result);
    }
    Ok(cut_text(&result))
}

/// One line such as `Q-exact: true (q_n = 2.0, bound = 2.0)`.
pub fn certificate_line(c: &ExactnessCertificate) -> String {
    format!(
        "{}-exact: {} ({} = {}, bound = {})",
        c.kind,
        c.is_exact,
        c.kind.eigenvalue_name(),
        fmt_num(c.eigenvalue_used),
        fmt_num(c.bound_value)
    )
}

#[derive(Serialize)]
struct Certificates {
    certificates: Vec<ExactnessCertificate>,
}

pub fn cmd_exact(path: &Path, kinds: &[Kind], global: &GlobalArgs) -> Result<String, CliError> {
    let g = read_edge_list(path)?;
    let certificates = certify(&g, kinds, &global.analysis_options())?;
    if global.json {
        return json(&Certificates { certificates });
    }
    Ok(certificates
        .iter()
        .map(|c| certificate_line(c) + "\n")
        .collect())
}

fn certify(
    g: &Graph,
    kinds: &[Kind],
    opts: &Options,
) -> pmcut_core::Result<Vec<ExactnessCertificate>> {
    if kinds.len() == 1 {
        return Ok(vec![certify_exactness(g, kinds[0], opts)?]);
    }
    let report = pmcut_core::exactness::exclusivity_check(g, opts)?;
    Ok(kinds
        .iter()
        .map(|&k| report.certificate(k).clone())
        .collect())
}

#[derive(Serialize)]
struct Solutions {
    solutions: Vec<WilfSolution>,
}

fn wilf_text(solutions: &[WilfSolution]) -> String {
    if solutions.is_empty() {
        return "no +/-1 eigenvectors\n".to_string();
    }
    solutions
        .iter()
        .map(|s| {
            format!(
                "{} eigenvalue {} (position {}, multiplicity {}) on S = {}\n",
                s.kind,
                fmt_num(s.eigenvalue),
                s.eigenvalue_index,
                s.multiplicity,
                fmt_set(s.partition.members())
            )
        })
        .collect()
}

pub fn cmd_wilf(path: &Path, kinds: &[Kind], global: &GlobalArgs) -> Result<String, CliError> {
    let g = read_edge_list(path)?;
    let solutions = wilf_solve(&g, kinds, &global.analysis_options())?;
    if global.json {
        return json(&Solutions { solutions });
    }
    Ok(wilf_text(&solutions))
}

fn required<'a, T>(value: &'a Option<T>, flag: &str, name: FamilyName) -> Result<&'a T, Error> {
    value
        .as_ref()
        .ok_or_else(|| Error::Hypothesis(format!("family {name:?} needs --{flag}")))
}

fn component(value: &Option<Generator>, flag: &str, name: FamilyName) -> Result<Graph, Error> {
    required(value, flag, name)?.build()
}

/// Builds the requested family member without certifying it.
pub fn build_family(args: &FamilyArgs) -> Result<(Graph, FamilySpec), Error> {
    let name = args.name;
    let pair = || -> Result<(Graph, Graph), Error> {
        Ok((
            component(&args.h1, "h1", name)?,
            component(&args.h2, "h2", name)?,
        ))
    };
    match name {
        FamilyName::K2Tk2 => families::make_k2_join_tk2(*required(&args.t, "t", name)?),
        FamilyName::SameOrderJoin => {
            let (h1, h2) = pair()?;
            families::make_same_order_join(&h1, &h2)
        }
        FamilyName::RegularJoin => {
            let (h1, h2) = pair()?;
            families::make_regular_join(&h1, &h2)
        }
        FamilyName::AExactJoin => {
            let (h1, h2) = pair()?;
            families::make_a_exact_join(&h1, &h2)
        }
        FamilyName::HJoinIndependent => {
            families::make_h_join_independent(&component(&args.h, "h", name)?)
        }
        FamilyName::K33JoinK4 => Ok(families::fixture_k33_join_k4()),
        FamilyName::C3JoinCycle => families::fixture_c3_join_cycle(*required(&args.n, "n", name)?),
        FamilyName::C3JoinC3 => Ok(families::fixture_c3_join_c3()),
    }
}

fn certificate_path(args: &FamilyArgs) -> PathBuf {
    args.certificate.clone().unwrap_or_else(|| {
        let mut name = args.out.clone().into_os_string();
        name.push(".cert.json");
        PathBuf::from(name)
    })
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn cmd_family(args: &FamilyArgs, global: &GlobalArgs) -> Result<String, CliError> {
    let (g, spec) = build_family(args)?;
    let report: FamilyReport = certify_family(&spec, &g, &global.options(FAMILY_MAX_N))?;
    save_edge_list(&g, &args.out)?;
    let cert_path = certificate_path(args);
    let cert_json = json(&report)?;
    std::fs::write(&cert_path, &cert_json).map_err(|e| io_error(&cert_path, e))?;
    if global.json {
        return Ok(cert_json);
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} ({}): n = {}, m = {}",
        spec.label,
        spec.family,
        g.n(),
        g.m()
    );
    for c in &report.exactness.certificates {
        let _ = writeln!(out, "{}", certificate_line(c));
    }
    let _ = writeln!(out, "graph written to {}", args.out.display());
    let _ = writeln!(out, "certificate written to {}", cert_path.display());
    Ok(out)
}
