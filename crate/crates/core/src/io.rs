//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! p <n> <m>
//! <u> <v> [<w>]      (m lines, 0-based, w defaults to 1)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses an edge list. Errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some((n, m)) = header else {
            match tokens[..] {
                ["p", n, m] => {
                    let n = n
                        .parse()
                        .map_err(|_| parse_error(line_no, format!("invalid vertex count {n:?}")))?;
                    let m = m
                        .parse()
                        .map_err(|_| parse_error(line_no, format!("invalid edge count {m:?}")))?;
                    if n == 0 {
                        return Err(parse_error(line_no, "graph must have at least one vertex"));
                    }
                    header = Some((n, m));
                    continue;
                }
                _ => return Err(parse_error(line_no, "expected header \"p <n> <m>\"")),
            }
        };
        if edges.len() == m {
            return Err(parse_error(
                line_no,
                format!("more than the {m} declared edges"),
            ));
        }
        let (u, v, w) = match tokens[..] {
            [u, v] => (u, v, None),
            [u, v, w] => (u, v, Some(w)),
            _ => return Err(parse_error(line_no, "expected \"<u> <v> [<w>]\"")),
        };
        let vertex = |t: &str| -> Result<usize> {
            let x: usize = t
                .parse()
                .map_err(|_| parse_error(line_no, format!("invalid vertex {t:?}")))?;
            if x >= n {
                return Err(parse_error(
                    line_no,
                    format!("vertex {x} out of range 0..{n}"),
                ));
            }
            Ok(x)
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        if u == v {
            return Err(parse_error(line_no, format!("self-loop at vertex {u}")));
        }
        let w = match w {
            None => 1.0,
            Some(t) => {
                let w: f64 = t
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("invalid weight {t:?}")))?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(parse_error(line_no, format!("weight {t} must be positive")));
                }
                w
            }
        };
        let (a, b) = (u.min(v), u.max(v));
        if !seen.insert((a, b)) {
            return Err(parse_error(line_no, format!("duplicate edge {a}-{b}")));
        }
        edges.push((u, v, w));
    }
    let Some((n, m)) = header else {
        return Err(parse_error(
            last_line.max(1),
            "missing header \"p <n> <m>\"",
        ));
    };
    if edges.len() != m {
        return Err(parse_error(
            last_line.max(1),
            format!("header declares {m} edges but {} were found", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Writes the edge list with edges in lexicographic order; unit weights are
/// omitted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for e in g.edges() {
        if e.w == 1.0 {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        } else {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
        }
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_edge_list(&text)
}

pub fn save_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, write_edge_list(g)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
