use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_cli::commands::{self, CommandError, MinorsOptions, Scan};
use hurwitz_cli::input::parse_polynomial;
use hurwitz_cli::report::Report;
use hurwitz_core::markov::{MarkovKind, Side};
use hurwitz_core::{Tolerances, DEFAULT_AXIS_TOL, DEFAULT_TOL};

/// Hurwitz stability of complex matrix polynomials.
///
/// Exit codes: 0 stable (or report only), 1 unstable, 2 inapplicable or
/// ambiguous, 3 input error.
#[derive(Parser)]
#[command(name = "hurwitz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Relative tolerance for Hermitian, inertia and definiteness decisions.
    #[arg(long, default_value_t = DEFAULT_TOL, global = true)]
    tol: f64,
    /// Relative half-width of the band around the imaginary axis.
    #[arg(long = "axis-tol", default_value_t = DEFAULT_AXIS_TOL, global = true)]
    axis_tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Even,
    OddFirst,
    OddSecond,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum SidesArg {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanArg {
    Contiguous,
    Noncontiguous,
    Vanishing,
}

#[derive(Subcommand)]
enum Command {
    /// All criteria, the eigenvalue oracle and their agreement.
    Analyze {
        file: PathBuf,
        /// Sides for the Markov-parameter criterion.
        #[arg(long, value_enum, default_value_t = SidesArg::Right)]
        side: SidesArg,
        #[command(flatten)]
        common: Common,
    },
    /// Markov parameters of one side.
    Markov {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Stieltjes continued fraction and its verdict.
    Cf {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Half-plane zero counts from Hankel inertia next to the oracle counts.
    Inertia {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[command(flatten)]
        common: Common,
    },
    /// Block-Hankel minors and quasiminors.
    Minors {
        file: PathBuf,
        #[arg(long = "max-order")]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value_t = ScanArg::Contiguous)]
        scan: ScanArg,
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Random index sets for the vanishing scan.
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Zero counts from the eigenvalues of the block companion matrix.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    }
}

fn run(cmd: Command) -> (Result<Report, CommandError>, Format) {
    let (file, common) = match &cmd {
        Command::Analyze { file, common, .. }
        | Command::Markov { file, common, .. }
        | Command::Cf { file, common }
        | Command::Inertia { file, common, .. }
        | Command::Minors { file, common, .. }
        | Command::Oracle { file, common } => (file.clone(), *common),
    };
    let tols = Tolerances {
        linalg: common.tol,
        axis: common.axis_tol,
    };
    let f = match parse_polynomial(&file) {
        Ok(f) => f,
        Err(e) => return (Err(e.into()), common.format),
    };
    let report = match cmd {
        Command::Analyze { side, .. } => {
            let sides: &[Side] = match side {
                SidesArg::Left => &[Side::Left],
                SidesArg::Right => &[Side::Right],
                SidesArg::Both => &[Side::Right, Side::Left],
            };
            commands::analyze(&f, sides, tols)
        }
        Command::Markov { kind, side: s, count, .. } => {
            let kind = kind.map(|k| match k {
                KindArg::Even => MarkovKind::Even,
                KindArg::OddFirst => MarkovKind::OddFirst,
                KindArg::OddSecond => MarkovKind::OddSecond,
            });
            commands::markov_command(&f, kind, side(s), count, tols)
        }
        Command::Cf { .. } => commands::cf_command(&f, tols),
        Command::Inertia { side: s, .. } => commands::inertia_command(&f, side(s), tols),
        Command::Minors {
            max_order,
            scan,
            window,
            side: s,
            budget,
            seed,
            ..
        } => {
            let scan = match scan {
                ScanArg::Contiguous => Scan::Contiguous,
                ScanArg::Noncontiguous => Scan::Noncontiguous,
                ScanArg::Vanishing => Scan::Vanishing,
            };
            let opts = MinorsOptions {
                side: side(s),
                max_order,
                window,
                scan,
                budget,
                seed,
            };
            commands::minors_command(&f, opts, tols)
        }
        Command::Oracle { .. } => commands::oracle_command(&f, tols),
    };
    (report, common.format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = run(cli.command);
    match result {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
