//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pmcut_core::generate::Generator;
use pmcut_core::{Kind, Options, Tolerances, DEFAULT_MAX_N};

#[derive(Debug, Parser)]
#[command(
    name = "pmcut",
    version,
    about = "Spectral maximum-cut analysis of graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Base tolerance for eigenvalue comparisons, scaled by n.
    #[arg(long, global = true, default_value_t = Tolerances::default().cmp)]
    pub tol: f64,
    /// Base bound on eigenpair residuals, scaled by the matrix norm.
    #[arg(long, global = true, default_value_t = Tolerances::default().eig)]
    pub eig_tol: f64,
    /// Base tolerance for weighted-degree comparisons, scaled by the largest degree.
    #[arg(long, global = true, default_value_t = Tolerances::default().deg)]
    pub deg_tol: f64,
    /// Worker threads for the exhaustive searches (defaults to the CPU count).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest vertex count for exhaustive searches [default: 28, or 20 for `family`].
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
}

impl GlobalArgs {
    pub fn options(&self, default_max_n: usize) -> Options {
        let threads = self
            .threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        Options::default()
            .with_threads(threads)
            .with_max_n(self.max_n.unwrap_or(default_max_n))
            .with_tol(
                Tolerances::default()
                    .with_cmp(self.tol)
                    .with_eig(self.eig_tol)
                    .with_deg(self.deg_tol),
            )
    }

    pub fn analysis_options(&self) -> Options {
        self.options(DEFAULT_MAX_N)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectra, spreads, maximum cut with bounds, exactness and +/-1 eigenvectors.
    Analyze { path: PathBuf },
    /// Exact maximum cut with the eigenvalue bounds.
    Maxcut { path: PathBuf },
    /// Certify exactness for one or all matrices.
    Exact {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixChoice::All)]
        matrix: MatrixChoice,
    },
    /// List every bipartition whose +/-1 vector is an eigenvector.
    Wilf {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixChoice::All)]
        matrix: MatrixChoice,
    },
    /// Build a member of an exact family, certify it and write it out.
    Family(FamilyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixChoice {
    A,
    L,
    Q,
    All,
}

impl MatrixChoice {
    pub fn kinds(self) -> Vec<Kind> {
        match self {
            MatrixChoice::A => vec![Kind::A],
            MatrixChoice::L => vec![Kind::L],
            MatrixChoice::Q => vec![Kind::Q],
            MatrixChoice::All => Kind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// K2 join tK2 (needs --t).
    K2Tk2,
    /// H1 join H2 with equal orders (needs --h1, --h2).
    SameOrderJoin,
    /// Join of r-regular graphs with min order >= 2r (needs --h1, --h2).
    RegularJoin,
    /// Join of r1-, r2-regular graphs with n1 - r2 = n2 - r1 > max(r1, r2) (needs --h1, --h2).
    AExactJoin,
    /// H join (n + r)K1 for r-regular H (needs --h).
    HJoinIndependent,
    /// K33 join K4, not Q-exact.
    K33JoinK4,
    /// C3 join Cn, not Q-exact (needs --n >= 4).
    C3JoinCycle,
    /// C3 join C3 = K6, Q-exact.
    C3JoinC3,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub name: FamilyName,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// First component, e.g. `cycle:5`, `complete_bipartite:3,3`, `petersen`.
    #[arg(long)]
    pub h1: Option<Generator>,
    #[arg(long)]
    pub h2: Option<Generator>,
    #[arg(long)]
    pub h: Option<Generator>,
    /// Where to write the graph as an edge list.
    #[arg(long)]
    pub out: PathBuf,
    /// Where to write the certificate JSON [default: OUT with `.cert.json` appended].
    #[arg(long)]
    pub certificate: Option<PathBuf>,
}
