//! Spectral maximum-cut analysis for simple weighted graphs.
//!
//! The crate computes the adjacency (`A`), Laplacian (`L`) and signless
//! Laplacian (`Q`) spectra of a graph, solves maximum cut exactly by
//! exhaustive Gray-code enumeration, evaluates the eigenvalue upper bounds on
//! the maximum cut, and certifies when a graph attains them ("exact" graphs).
//! It also decides, by a degree-only characterization, which bipartitions give
//! eigenvectors with entries in `{-1, +1}`.
//!
//! ```
//! use pmcut_core::{generate, exactness, Kind, Options};
//!
//! let c4 = generate::cycle(4).unwrap();
//! let cert = exactness::certify_exactness(&c4, Kind::Q, &Options::default()).unwrap();
//! assert!(cert.is_exact);
//! ```

pub mod cut;
mod enumerate;
mod error;
pub mod exactness;
pub mod families;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod spectra;
mod tolerance;
pub mod wilf;

pub use cut::{CutResult, SpectralBounds};
pub use error::{Error, Result};
pub use exactness::{ExactnessCertificate, Kind, StructuralVerdict};
pub use families::{Family, FamilyReport, FamilySpec};
pub use graph::{Edge, Graph, Partition, Subgraph};
pub use matrix::{MatrixKind, SymmetricMatrix};
pub use spectra::{Spectrum, SpreadReport};
pub use tolerance::Tolerances;
pub use wilf::WilfSolution;

/// Default largest vertex count accepted by the exhaustive enumerators.
pub const DEFAULT_MAX_N: usize = 28;

/// Hard upper limit imposed by the 64-bit partition masks.
pub const HARD_MAX_N: usize = 63;

/// Knobs shared by every enumeration-backed operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub threads: usize,
    pub max_n: usize,
    pub tol: Tolerances,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            threads: 1,
            max_n: DEFAULT_MAX_N,
            tol: Tolerances::default(),
        }
    }
}

impl Options {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_tol(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }
}
