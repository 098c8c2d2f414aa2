mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact finite-dimensional algebras, coalgebras and their twisted duals.
#[derive(Parser, Debug)]
#[command(name = "findual", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named algebra or coalgebra and print its JSON form.
    Construct(ConstructArgs),
    /// Dualize an algebra or coalgebra read from a JSON file.
    Dualize(InputArgs),
    /// Check the axioms of a twisting or cotwisting map read from a JSON file.
    TwistCheck(InputArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Profile every central fiber of the quantum plane over GF(p).
    QplaneCensus(CensusArgs),
    /// Invariants of the first-order neighbourhood of an Azumaya point.
    QplanePoint(PointArgs),
    /// Run the acceptance matrix and print one line per criterion.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Comatrix,
    Triangular,
    Path,
    Grouplike,
    DividedPower,
    LineDist,
    MatrixAlgebra,
    TruncatedPower,
    CyclicGroup,
    Diagonal,
    UpperTriangular,
    QplaneBox,
    QplaneFiber,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Size parameter: matrix size, number of vertices, set size, truncation order.
    #[arg(long)]
    pub size: Option<usize>,
    /// Work over GF(p); the rationals when omitted.
    #[arg(long)]
    pub p: Option<u64>,
    /// Quiver arrows as `s-t` pairs, comma separated.
    #[arg(long)]
    pub arrows: Option<String>,
    /// Line-distribution points as `value:multiplicity`, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
    /// Order of the root of unity for quantum-plane kinds.
    #[arg(long, visible_alias = "q-order")]
    pub n: Option<u64>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// JSON document: a bare value or a report whose results hold one.
    pub input: std::path::PathBuf,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Duality,
    Twists,
    Coradical,
    Qplane,
    TwistedDuality,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Seed of the random twisting-map corpus.
    #[arg(long, default_value_t = findual_core::criteria::CORPUS_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 500)]
    pub trials: usize,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long, visible_alias = "q-order")]
    pub n: u64,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[arg(long, visible_alias = "q-order")]
    pub n: u64,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub c: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = commands::configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(commands::run(cli.command, &argv[1..]))
}
