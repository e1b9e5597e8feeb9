//! `mfkit`: build, verify and analyze graded matrix factorizations.
//!
//! Reports are JSON documents on stdout; summaries go to stderr. Exit codes:
//! 0 success, 1 verification failure, 2 usage or input error, 3 refusal on
//! resource grounds.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "mfkit", version, about = "Matrix factorizations and strength of homogeneous polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build, verify and inspect matrix factorizations.
    #[command(subcommand)]
    Mf(MfCommand),
    /// Singular-locus profile of a polynomial: e(f), strength lower bound, rank thresholds.
    Analyze {
        /// File holding one polynomial (`-` for stdin).
        poly_file: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Strength certificates.
    #[command(subcommand)]
    Strength(StrengthCommand),
    /// Compare the ranks exhibited by a decomposition with the singular-locus thresholds.
    BgsCheck {
        /// Decomposition or catalog-entry JSON (`-` for stdin).
        #[arg(long)]
        decomp: String,
    },
    /// Emit an example polynomial with its strength decomposition.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Exhaustive search for a reduced factorization over F_2 or F_3.
    Search {
        #[arg(long)]
        field: String,
        #[arg(long)]
        rank: usize,
        /// Twists of F and G, e.g. `0,0/1,1`.
        #[arg(long)]
        pattern: String,
        poly_file: String,
        /// Comma-separated variable names.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
}

#[derive(Debug, Args)]
struct RingArgs {
    /// `Q` or `Fp:<p>`.
    #[arg(long, default_value = "Q")]
    field: String,
    /// Comma-separated variable names; inferred from the input when omitted.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
enum MfCommand {
    /// Knörrer-type construction from a strength decomposition.
    Build {
        /// Decomposition or catalog-entry JSON (`-` for stdin).
        #[arg(long)]
        decomp: String,
        /// Output file (`-` or omitted for stdout).
        #[arg(long)]
        out: Option<String>,
    },
    /// Check phi*psi = psi*phi = f*id, grading and reducedness.
    Verify { mf: String },
    /// The pair (r, c) with det(phi) = c * f^r.
    McmRank { mf: String },
}

#[derive(Debug, Subcommand)]
enum StrengthCommand {
    /// Jacobian-minor certificate for the collective strength of the given forms.
    Cert {
        #[arg(required = true)]
        poly_files: Vec<String>,
        #[command(flatten)]
        ring: RingArgs,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// x0*y0 + ... + xs*ys.
    Quadric {
        #[arg(long)]
        s: usize,
    },
    /// z0^d + ... + zn^d.
    PowerSum {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
    },
    /// sum_i x_i * (y_{i,0}^(d-1) + ... + y_{i,n}^(d-1)) in disjoint blocks.
    DisjointBlocks {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    /// Determinant of a generic n x n matrix (2 <= n <= 4).
    GenericDet {
        #[arg(long)]
        n: usize,
    },
    /// Pfaffian of a generic skew-symmetric n x n matrix (n = 4 or 6).
    Pfaffian {
        #[arg(long)]
        n: usize,
    },
    /// z0*z1^5 + z2^2*z3^4 + z4^3*z5^3.
    MixedType,
    /// g1*g6 + g2*g5 + g3*g4 with g_k the degree-k power sum in n+1 variables.
    PowerSumProducts {
        #[arg(long)]
        n: usize,
    },
    /// Seeded random decomposition of type mu.
    Sample {
        /// Degrees of the g_i, e.g. `1,2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u32>,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
        /// Overrides MFKIT_SEED.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Monomials per factor.
        #[arg(long, default_value_t = 2)]
        terms: usize,
    },
    /// Every entry of the standard list, as a JSON array.
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mfkit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
