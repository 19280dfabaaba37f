//! Named unit-weight graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require(ok: bool, generator: &'static str, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSize {
            generator,
            reason: reason.to_string(),
        })
    }
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete", "n must be at least 1")?;
    Graph::unweighted(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `C_n`.
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle", "n must be at least 3")?;
    Graph::unweighted(n, (0..n).map(|u| (u, (u + 1) % n)))
}

/// `P_n`, the path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path", "n must be at least 1")?;
    Graph::unweighted(n, (1..n).map(|u| (u - 1, u)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(
        a >= 1 && b >= 1,
        "complete_bipartite",
        "both sides must be non-empty",
    )?;
    Graph::unweighted(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `nK_1`, the edgeless graph.
pub fn empty(n: usize) -> Result<Graph> {
    require(n >= 1, "empty", "n must be at least 1")?;
    Ok(Graph::edgeless(n))
}

/// `tK_2`, a perfect matching on `2t` vertices.
pub fn matching(t: usize) -> Result<Graph> {
    require(t >= 1, "matching", "t must be at least 1")?;
    Graph::unweighted(2 * t, (0..t).map(|i| (2 * i, 2 * i + 1)))
}

/// The circulant graph on `n` vertices joining `i` and `i ± k` for each offset.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    require(n >= 1, "circulant", "n must be at least 1")?;
    let mut pairs = std::collections::BTreeSet::new();
    for &k in offsets {
        let k = k % n;
        require(k != 0, "circulant", "offsets must be non-zero modulo n")?;
        for u in 0..n {
            let v = (u + k) % n;
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    Graph::unweighted(n, pairs)
}

/// The Petersen graph.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::unweighted(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>())
        .expect("Petersen edge list is valid")
}

/// A named generator, parsed from strings such as `cycle:5`,
/// `complete_bipartite:3,3` or `petersen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    Matching(usize),
    Circulant(usize, Vec<usize>),
    Petersen,
}

impl Generator {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Generator::Complete(n) => complete(*n),
            Generator::Cycle(n) => cycle(*n),
            Generator::Path(n) => path(*n),
            Generator::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            Generator::Empty(n) => empty(*n),
            Generator::Matching(t) => matching(*t),
            Generator::Circulant(n, offsets) => circulant(*n, offsets),
            Generator::Petersen => Ok(petersen()),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidSize {
            generator: "generator",
            reason,
        };
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| bad(format!("bad number {a:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let one = |nums: &[usize]| match nums {
            [x] => Ok(*x),
            _ => Err(bad(format!("{name} takes exactly one size"))),
        };
        match name.trim() {
            "complete" | "K" => Ok(Generator::Complete(one(&nums)?)),
            "cycle" | "C" => Ok(Generator::Cycle(one(&nums)?)),
            "path" | "P" => Ok(Generator::Path(one(&nums)?)),
            "empty" => Ok(Generator::Empty(one(&nums)?)),
            "matching" => Ok(Generator::Matching(one(&nums)?)),
            "complete_bipartite" | "K_ab" => match nums[..] {
                [a, b] => Ok(Generator::CompleteBipartite(a, b)),
                _ => Err(bad("complete_bipartite takes two sizes".into())),
            },
            "circulant" => match nums.split_first() {
                Some((&n, offsets)) if !offsets.is_empty() => {
                    Ok(Generator::Circulant(n, offsets.to_vec()))
                }
                _ => Err(bad("circulant takes n followed by offsets".into())),
            },
            "petersen" if nums.is_empty() => Ok(Generator::Petersen),
            other => Err(bad(format!("unknown graph {other:?}"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Complete(n) => write!(f, "complete:{n}"),
            Generator::Cycle(n) => write!(f, "cycle:{n}"),
            Generator::Path(n) => write!(f, "path:{n}"),
            Generator::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Generator::Empty(n) => write!(f, "empty:{n}"),
            Generator::Matching(t) => write!(f, "matching:{t}"),
            Generator::Circulant(n, offsets) => {
                write!(f, "circulant:{n}")?;
                offsets.iter().try_for_each(|k| write!(f, ",{k}"))
            }
            Generator::Petersen => write!(f, "petersen"),
        }
    }
}
