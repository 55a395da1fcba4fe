use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::Format;

#[derive(Debug, Parser)]
#[command(name = "qiso", version, about = "Exact symbolic checks for quantum SU(2), its Podles spheres and SO_mu(3)")]
pub struct Cli {
    /// Sphere parameter t in (0, 1), e.g. 1/2
    #[arg(long, global = true)]
    pub t: Option<String>,
    /// `symbolic` or a rational in (0, 1)
    #[arg(long, global = true)]
    pub q: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Flat `key = value` file; flags override it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Highest spectral level 2l that may be built
    #[arg(long, global = true)]
    pub max_l2: Option<i32>,
    /// Highest spectral level 2l the spectral suite verifies
    #[arg(long, global = true)]
    pub top_l2: Option<i32>,
    /// Degree bound for the Hopf axiom and Haar invariance sweeps (default 6)
    #[arg(long, global = true)]
    pub hopf_degree: Option<usize>,
    /// Word length bound of the rewriting sweep (default 6)
    #[arg(long, global = true)]
    pub confluence_bound: Option<usize>,
    /// Report zero timings
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Print residuals of passing lines too
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression (the algebra is inferred)
    Normalize { expr: String },
    /// Coproduct, rendered as a sum of `x (x) y`
    Coproduct { expr: String },
    /// Counit, a scalar
    Counit { expr: String },
    /// Antipode
    Antipode { expr: String },
    /// Haar state of an O(SU_mu(2)) expression
    Haar { expr: String },
    /// Dual pairing <f, x> with f in U_mu(su(2)), x in O(SU_mu(2))
    Pair { f: String, x: String },
    /// f |> x, or x <| f with --right
    Act {
        f: String,
        x: String,
        #[arg(long)]
        right: bool,
    },
    /// Spectral basis vectors of level 2l with their squared norms
    Basis {
        #[arg(long, default_value_t = 1)]
        l2: i32,
    },
    /// Gram matrix of level 2l (nonzero entries)
    Gram {
        #[arg(long, default_value_t = 1)]
        l2: i32,
    },
    /// Corepresentation block of level 2l (nonzero entries)
    Corep {
        #[arg(long, default_value_t = 1)]
        l2: i32,
    },
    /// The coaction coefficients T1..T4, S1..S4
    Extract {
        #[arg(default_value = "ts")]
        what: String,
    },
    /// Run a verification suite
    Verify {
        /// presentations | hopf | actions | podles | so3 | lemmas | spectral | w32 | printed | all
        suite: Option<String>,
        /// Keep only these check ids (comma separated)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Per-suite summary of every suite, the printed forms included
    Report,
}
