use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod range;

use range::IntRange;

#[derive(Parser, Debug)]
#[command(name = "flopcalc", version, about = "Window and kernel computations for Grassmannian flops")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "FLOPCALC_FORMAT", default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate or compare window sets.
    #[command(subcommand)]
    Window(WindowCmd),
    /// Print one of the k = 2 complexes, or the GL(H) resolution ("weyman").
    Complex(ComplexArgs),
    /// Run a verification and report pass/fail with witnesses.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand, Debug)]
enum WindowCmd {
    Generate(WindowArgs),
    Compare {
        #[command(flatten)]
        window: WindowArgs,
        /// Golden file in the window JSON schema.
        #[arg(long)]
        golden: PathBuf,
    },
}

#[derive(Args, Debug)]
struct WindowArgs {
    /// W, Wprime or Tseu.
    #[arg(long, default_value = "W")]
    family: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct ComplexArgs {
    /// I0, I1, I2, OC, DeltaBar or weyman.
    which: String,
    /// R-charge of p.
    #[arg(long, default_value_t = 2)]
    rcharge_unit: i32,
    /// Group terms by page column or by homological degree (text only).
    #[arg(long, value_enum, default_value = "column")]
    layout: LayoutArg,
    /// Compare against a golden complex file instead of printing.
    #[arg(long)]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LayoutArg {
    Column,
    Hdeg,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Koszul restriction weights equal the Grassmannian-flop window.
    Lemma31 {
        #[arg(long, default_value = "2")]
        k: IntRange,
        #[arg(long, default_value = "3..8")]
        n: IntRange,
    },
    /// O_C weights and the tensor-product bound into Wprime.
    Prop44 {
        #[arg(long, default_value = "3..10")]
        n: IntRange,
    },
    /// Resolution of O_C over GL(S1) x GL(S2).
    #[command(name = "resolveOC", alias = "resolve-oc")]
    ResolveOc {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// GL(H) resolution from the Springer-type datum.
    Weyman {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Term-level cancellation of the three-row convolution down to the
    /// closure of the diagonal.
    Cancellation {
        /// auto, or a fixed R-charge for p.
        #[arg(long, default_value = "auto")]
        rcharge_unit: String,
        /// Largest row offset tried.
        #[arg(long, default_value_t = 8)]
        max_offset: i32,
    },
    /// Bounded check of the generators of the invariant ring.
    Invariants {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_deg: u32,
        /// Drop a generator, e.g. "det p" (negative control).
        #[arg(long)]
        omit: Vec<String>,
        /// Largest number of monomials per multidegree block.
        #[arg(long, default_value_t = flopcalc_core::invariants::DEFAULT_BLOCK_LIMIT)]
        block_limit: usize,
    },
    /// TSEU(2, n) equals Wprime(2, n).
    #[command(name = "tseu-eq")]
    TseuEq {
        #[arg(long, default_value = "3..12")]
        n: IntRange,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Window(WindowCmd::Generate(a)) => commands::window_generate(&a.family, a.k, a.n),
        Command::Window(WindowCmd::Compare { window: a, golden }) => {
            commands::window_compare(&a.family, a.k, a.n, &golden)
        }
        Command::Complex(a) => commands::complex(
            &a.which,
            a.rcharge_unit,
            matches!(a.layout, LayoutArg::Hdeg),
            a.golden.as_deref(),
        ),
        Command::Verify(v) => match v {
            VerifyCmd::Lemma31 { k, n } => commands::verify_lemma31(&k, &n),
            VerifyCmd::Prop44 { n } => commands::verify_prop44(&n),
            VerifyCmd::ResolveOc { golden } => commands::verify_resolve_oc(golden.as_deref()),
            VerifyCmd::Weyman { golden } => commands::verify_weyman(golden.as_deref()),
            VerifyCmd::Cancellation {
                rcharge_unit,
                max_offset,
            } => commands::verify_cancellation(&rcharge_unit, max_offset),
            VerifyCmd::Invariants {
                n,
                max_deg,
                omit,
                block_limit,
            } => commands::verify_invariants(n, max_deg, &omit, block_limit),
            VerifyCmd::TseuEq { n } => commands::verify_tseu_eq(&n),
        },
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.render(cli.format));
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
