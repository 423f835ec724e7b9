mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

/// Exact solvers for zero exemplar distance and exemplar LCS.
///
/// Exit status: 0 yes, 1 no, 2 usage or parse error, 3 precondition
/// violated, 4 cap or time budget exceeded.
#[derive(Parser, Debug)]
#[command(name = "zed", version)]
pub struct Cli {
    /// Append a JSON line describing the run to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,

    /// Worker threads for parallel solvers (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide ZED for two sequence genomes.
    SolveSeq(SolveSeqArgs),
    /// Decide ZED for two set genomes.
    SolveSet(SolveSetArgs),
    /// Exemplar longest common subsequence.
    Elcs(ElcsArgs),
    /// Compile a 3-CNF formula into a ZED instance.
    Reduce(ReduceArgs),
    /// Check a certificate against two genomes.
    Verify(VerifyArgs),
    /// Brute-force satisfiability of a 3-CNF formula.
    Sat(SatArgs),
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Cross-check the solvers on seeded random instances.
    Selftest(SelftestArgs),
    /// Time the solvers on generated instances.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqMode {
    Auto,
    Special,
    Exact,
}

#[derive(Args, Debug)]
pub struct SolveSeqArgs {
    pub g1: PathBuf,
    pub g2: PathBuf,
    #[arg(long, value_enum, default_value_t = SeqMode::Auto)]
    pub mode: SeqMode,
    /// Write the common exemplar genome here on YES.
    #[arg(long, value_name = "PATH")]
    pub cert_out: Option<PathBuf>,
    /// Largest family count the exact solver accepts.
    #[arg(long, default_value_t = zed_core::seq::DEFAULT_FAMILY_CAP)]
    pub max_families: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetMode {
    Auto,
    Matching,
    Fpt,
    Exact,
}

#[derive(Args, Debug)]
pub struct SolveSetArgs {
    pub g1: PathBuf,
    pub g2: PathBuf,
    #[arg(long, value_enum, default_value_t = SetMode::Auto)]
    pub mode: SetMode,
    #[arg(long, value_name = "PATH")]
    pub cert_out: Option<PathBuf>,
    /// Largest chromosome count the permutation search accepts.
    #[arg(long, default_value_t = zed_core::set::DEFAULT_K_CAP)]
    pub max_k: usize,
    /// Time budget of the exact search, in seconds.
    #[arg(long, default_value_t = 120)]
    pub timeout_secs: u64,
    /// Largest number of candidate chromosome pairs of one family in the
    /// exact search.
    #[arg(long, default_value_t = 64)]
    pub max_pairs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ElcsMode {
    Special,
    Oracle,
}

#[derive(Args, Debug)]
pub struct ElcsArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    /// Comma-separated mandatory families; every other family is optional.
    #[arg(long, value_delimiter = ',', value_name = "IDS")]
    pub mandatory: Vec<u32>,
    #[arg(long, value_enum, default_value_t = ElcsMode::Special)]
    pub mode: ElcsMode,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Seq,
    Set,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub variant: Variant,
    pub cnf: PathBuf,
    /// Writes PREFIX.g1, PREFIX.g2 and PREFIX.tsv.
    #[arg(long, value_name = "PREFIX")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub variant: Variant,
    pub g1: PathBuf,
    pub g2: PathBuf,
    pub cert: PathBuf,
}

#[derive(Args, Debug)]
pub struct SatArgs {
    pub cnf: PathBuf,
    #[arg(long, default_value_t = zed_core::sat::DEFAULT_SAT_CAP)]
    pub max_vars: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Cnf,
    Seq,
    Set,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// cnf: number of variables.
    #[arg(long, default_value_t = 3)]
    pub vars: u32,
    /// cnf: number of clauses.
    #[arg(long, default_value_t = 2)]
    pub clauses: usize,
    /// cnf: no clause repeats a variable.
    #[arg(long)]
    pub distinct: bool,
    /// seq: number of gene families.
    #[arg(long, default_value_t = 6)]
    pub families: u32,
    /// set: size of the ground set.
    #[arg(long, default_value_t = 8)]
    pub ground: u32,
    /// set: chromosomes of the first genome.
    #[arg(long, default_value_t = 4)]
    pub k1: usize,
    /// set: chromosomes of the second genome.
    #[arg(long, default_value_t = 4)]
    pub k2: usize,
    /// seq/set: most copies of one family in one genome.
    #[arg(long, default_value_t = 2)]
    pub max_copies: usize,
    /// seq/set: every family occurs once in at least one genome.
    #[arg(long)]
    pub special: bool,
    /// seq/set: build both genomes around a hidden common solution.
    #[arg(long)]
    pub planted: bool,
    /// seq: random orientations.
    #[arg(long)]
    pub signs: bool,
    /// Output file (cnf) or prefix for PREFIX.g1 and PREFIX.g2 (seq, set).
    /// cnf goes to standard output without it.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutantArg {
    WrongWeight,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 60)]
    pub budget_secs: u64,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, hide = true, value_enum)]
    pub mutant: Option<MutantArg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchWhat {
    Lcs,
    Matching,
    Fpt,
    SeqExact,
    All,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(value_enum, default_value_t = BenchWhat::All)]
    pub what: BenchWhat,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
