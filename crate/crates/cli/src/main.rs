//! `colouring`: command-line access to colouring-core.
//!
//! Exit codes: 0 success, 1 the property or construction asked about does not
//! hold, 2 bad input, 3 an internal check failed.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::Report;

/// Directory consulted for `--perm` files that are not found as given, and
/// the default target of `tables export`.
pub const DATA_DIR_ENV: &str = "COLOURING_DATA_DIR";

#[derive(Parser, Debug)]
#[command(name = "colouring", version, about = "Colouring bijections of finite groups")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a group.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Test a permutation for the colouring-bijection family of properties.
    Verify(VerifyArgs),
    /// Backtracking search for colouring bijections, SCMs or complete mappings.
    Search(SearchArgs),
    /// Count strong complete mappings and the colouring bijections among them.
    Census(CensusArgs),
    /// Lift a colouring bijection of G/H to G.
    Lift(LiftArgs),
    /// Colour a 3-group by recursive lifting.
    Colour(ColourArgs),
    /// Chromatic certificate for the Cayley graph on G³.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Automorphism group order and orbits of permutations under it.
    Aut(AutArgs),
    /// The embedded reference tables.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum GroupAction {
    /// Order, centre, classification and lifting subgroups.
    Show { spec: String },
}

#[derive(Subcommand, Debug)]
pub enum GraphAction {
    Check(GraphCheckArgs),
}

#[derive(Subcommand, Debug)]
pub enum TablesAction {
    /// Recompute every derived column and compare.
    Verify,
    /// Write each table column as a permutation file.
    Export {
        /// Defaults to $COLOURING_DATA_DIR, then `data`.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub group: String,
    /// Permutation file, or `identity`.
    #[arg(long)]
    pub perm: String,
    #[arg(long)]
    pub cb: bool,
    #[arg(long)]
    pub scm: bool,
    #[arg(long)]
    pub cm: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TargetArg {
    Cb,
    Scm,
    Cm,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    FailFirst,
    Ascending,
}

#[derive(Args, Debug)]
#[group(id = "mode", multiple = false)]
pub struct ModeArgs {
    /// Stop at the first solution (default).
    #[arg(long, group = "mode")]
    pub first: bool,
    /// Count all solutions.
    #[arg(long, group = "mode")]
    pub count: bool,
    /// Collect up to N solutions.
    #[arg(long, value_name = "N", group = "mode")]
    pub enumerate: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum)]
    pub target: TargetArg,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long)]
    pub fix_identity: bool,
    /// Node budget; the search stops, unexhausted, once it is spent.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value = "fail-first")]
    pub order: OrderArg,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Where to write found permutations; with several, `_<i>` is appended to the stem.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub fix_identity: bool,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    #[arg(long)]
    pub group: String,
    /// `auto`, or generator labels such as `(0,0,1,0),(0,0,0,1)`.
    #[arg(long, default_value = "auto")]
    pub subgroup: String,
    /// Colouring bijection of a group isomorphic to G/H.
    #[arg(long)]
    pub quotient_perm: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ColourArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GraphCheckArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub perm: String,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Also write the edge list (|G| <= 9).
    #[arg(long)]
    pub export_dimacs: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AutArgs {
    #[arg(long)]
    pub group: String,
    /// Permutation whose orbit under conjugation by automorphisms is reported.
    #[arg(long)]
    pub orbit: Option<String>,
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
    let machine = cli.machine;
    match commands::run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.report.render(machine));
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            let code = commands::exit_code(&e);
            if machine {
                let mut r = Report::new();
                r.set("error", format!("{e:#}")).set("exit code", code);
                print!("{}", r.render(true));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
