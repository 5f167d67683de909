mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperdet_core::json::{error_json, to_line};

use commands::{Failure, Output, Run};

#[derive(Parser, Debug)]
#[command(name = "hyperdet", version, about = "Exact Hankel hyperdeterminants")]
pub struct Cli {
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true, env = "HYPERDET_THREADS")]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Input given as a file path or inline JSON.
#[derive(clap::Args, Debug, Clone, Default)]
pub struct InputArgs {
    #[arg(long, conflicts_with = "json")]
    pub input: Option<std::path::PathBuf>,
    /// Inline JSON document.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Brute-force hyperdeterminant of a tensor; odd orders keep the first
    /// index fixed.
    Det {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Hankel hyperdeterminant through the fast path.
    Hankel {
        #[command(flatten)]
        input: InputArgs,
        /// Sequence family tag such as `factorial` or `bell:2`.
        #[arg(long, conflicts_with_all = ["input", "json"])]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Toeplitz hyperdeterminant from `{"f": {offset: value}, "n", "k"}`.
    Toeplitz {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Order-4 Hankel hyperdeterminant as a Pfaffian of the derivative Gram matrix.
    Pfaffian4 {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// Closed form of a family's Hankel hyperdeterminant.
    ClosedForm {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// Turanian of a classical family as a polynomial in x.
    Turanian {
        /// `legendre`, `laguerre:alpha`, `hermite`, `charlier[:a]`,
        /// `meixner:beta,gamma` or `krawtchouk:p,N`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, value_enum)]
        route: Option<RouteArg>,
        /// Also evaluate the determinant of the polynomial values directly.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Both sides of the multivariate Jacobi integral identity.
    KanekoCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = JacobiArg::Operator)]
        route: JacobiArg,
    },
    /// Schur expansion of the hyperdeterminant of complete symmetric functions.
    Schur {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Target basis: m, s, h, e or p.
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// Named identity checks.
    Identity {
        #[arg(value_enum)]
        case: IdentityCase,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Number of ones in the exponent pattern.
        #[arg(long)]
        s: Option<usize>,
        /// Number of twos in the exponent pattern.
        #[arg(long)]
        m: Option<usize>,
        /// Binomial parameter N.
        #[arg(long = "big-n")]
        big_n: Option<usize>,
        /// Sequence for the pseudo-hyperdeterminant cases.
        #[arg(long, value_enum)]
        sequence: Option<PseudoArg>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Product,
    Jacobi,
    Wronskian,
    Integral,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum JacobiArg {
    Printed,
    Operator,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PseudoArg {
    Hilbert,
    GammaRatio,
    Factorial,
    FactorialTwo,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityCase {
    #[value(name = "appendixA")]
    AppendixA,
    #[value(name = "appendixC")]
    AppendixC,
    #[value(name = "KZbell")]
    KzBell,
    #[value(name = "bQ")]
    BQ,
    #[value(name = "fibonacci")]
    Fibonacci,
    #[value(name = "laplacian")]
    Laplacian,
    #[value(name = "binomial-shift")]
    BinomialShift,
}

fn emit(out: &Output, format: Format) -> String {
    match format {
        Format::Json => to_line(&out.to_json()),
        Format::Text => out.to_text(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let mut stdout = std::io::stdout().lock();
    match cli.command.run() {
        Ok(out) => {
            let _ = stdout.write_all(emit(&out, cli.format).as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            let text = match cli.format {
                Format::Json => to_line(&error_json(&e)),
                Format::Text => format!("error: {e}\n"),
            };
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(1)
        }
    }
}
