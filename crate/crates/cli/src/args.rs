use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "keller", version, about = "Keller maps, bifurcation sets and integer points on curves")]
pub struct Cli {
    /// Emit a JSON report (verb, inputs digest, results) instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jacobian test, cubic-linear recognition and formal inverse.
    Check {
        map: PathBuf,
        /// Truncation degree of the inverse series (default 3^(n-1)).
        #[arg(long)]
        degree_cap: Option<u32>,
        /// Also print the inverse components.
        #[arg(long)]
        show_inverse: bool,
    },
    /// Minimal polynomials h_i, leading coefficients a_i, H, cone form and d_F.
    Bifurcation {
        map: PathBuf,
        /// Skip the generic fiber degree.
        #[arg(long)]
        no_fiber_degree: bool,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// The generic-line polynomial sigma(U, V).
    Sigma {
        map: PathBuf,
        /// Component data "h ; g1 ; g2 ..." over Y1..Yn (repeatable).
        #[arg(long)]
        component: Vec<String>,
        /// Evaluate at u1,...,un,v1,...,vn.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Map surgeries; writes a map file.
    Transform(TransformArgs),
    /// SL(n, Z) matrix with a given first column.
    SlComplete {
        /// Comma-separated primitive vector.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// SL(n, Z) matrix sending one primitive vector to another.
    SlMap {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Emit a curve equation system.
    Curve {
        #[arg(value_enum)]
        kind: CurveKind,
        map: PathBuf,
        /// Number of vanishing components for `cfm`.
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Base point of the line for `line`.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// Direction of the line for `line`.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integer points of a system in the box [-radius, radius]^n.
    Search {
        system: PathBuf,
        #[arg(long)]
        radius: u64,
        #[arg(long, default_value_t = 20_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Report only whether a nonzero point exists.
        #[arg(long)]
        nonzero: bool,
    },
    /// Genus from the Hurwitz relation and branch-configuration feasibility.
    Hurwitz {
        #[arg(long)]
        d: u32,
        /// Comma-separated local degrees at the points at infinity.
        #[arg(long)]
        branches: String,
        #[arg(long, allow_hyphen_values = true)]
        genus: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    Cf,
    Cfm,
    Line,
    Sos,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[command(subcommand)]
    pub op: TransformOp,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum TransformOp {
    /// (1/r) F(r X).
    Scale {
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Append m fixed variables.
    Extend {
        map: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// A F A^{-1}; matrix rows separated by `;`, entries by `,`.
    Conjugate {
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// F(Z - a) - F(-a).
    Translate {
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Diagonal conjugation of an integer cubic-linear map.
    #[command(name = "theoremB")]
    TheoremB {
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Extension by one variable with row sums in the last column.
    Cor1 { map: PathBuf },
    /// Scale a cubic-linear map over Q to integer rows.
    ClearDenominators { map: PathBuf },
}
