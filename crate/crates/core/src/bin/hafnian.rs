use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hafnian::commands::{self, Outcome, DEFAULT_MAX_ORDER};

#[derive(Parser)]
#[command(name = "hafnian", version, about = "Exact hafnians and the Toeplitz closed form")]
struct Cli {
    /// Print a single JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force hafnian of an integer matrix file.
    Hafnian {
        file: PathBuf,
        /// Largest order accepted; the cost grows as (n - 1)!!.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Hafnian of T(a, b) of order 2m by the closed form.
    Toeplitz {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        m: u64,
        #[arg(long = "mod", allow_hyphen_values = true)]
        modulus: Option<String>,
    },
    /// Terms m = 1..=K of A001515 or A278990.
    Seq {
        name: String,
        #[arg(long = "max-m")]
        max_m: u64,
    },
    /// Bessel polynomial y_m(x).
    Bessel {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Also compute Hf(T(x + 1, x)) and compare.
        #[arg(long)]
        check_hafnian: bool,
    },
    /// Sweep the closed form against the brute-force oracle.
    Verify {
        #[arg(long = "max-m")]
        max_m: u64,
        #[arg(long)]
        range: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Time the in-ring modular evaluation.
    Bench {
        #[arg(long)]
        m: u64,
        #[arg(long = "mod")]
        modulus: String,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        /// Time m, 2m and 4m.
        #[arg(long)]
        sweep: bool,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeat: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Outcome = match cli.command {
        Command::Hafnian { file, max_order } => commands::cmd_hafnian(&file, max_order),
        Command::Toeplitz { a, b, m, modulus } => commands::cmd_toeplitz(&a, &b, m, modulus.as_deref()),
        Command::Seq { name, max_m } => commands::cmd_sequence(&name, max_m),
        Command::Bessel { m, x, check_hafnian } => commands::cmd_bessel(m, &x, check_hafnian),
        Command::Verify { max_m, range, max_order } => commands::cmd_verify(max_m, range, max_order),
        Command::Bench { m, modulus, a, b, sweep, repeat } => {
            commands::cmd_bench(m, &modulus, &a, &b, sweep, repeat)
        }
    };
    for line in &outcome.diagnostics {
        eprintln!("{line}");
    }
    if let Some(report) = &outcome.report {
        if cli.json {
            println!("{}", report.to_json());
        } else {
            print!("{report}");
        }
    }
    ExitCode::from(outcome.exit.code())
}
