use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sierpinski_codes::{CodeKind, ExportFormat};

mod commands;
mod table;

/// Sierpiński graphs and their covering codes.
#[derive(Parser)]
#[command(name = "sierpinski", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print S(n,k) as DOT, JSON or an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "edgelist", value_parser = parse_format)]
        format: ExportFormat,
    },
    /// Check a code file against one of the code definitions.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: CodeKind,
        /// Path to the code file, or `-` for stdin.
        #[arg(long = "code-file", default_value = "-")]
        code_file: String,
    },
    /// Print the explicit optimal code for S(n,k).
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: CodeKind,
    },
    /// Compute a minimum code exactly.
    Solve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: CodeKind,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long = "node-budget", default_value_t = 100_000_000)]
        node_budget: u64,
        /// Single worker with a reproducible witness.
        #[arg(long)]
        deterministic: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Search with generic bounds only.
        #[arg(long = "no-structural")]
        no_structural: bool,
    },
    /// Tabulate predicted, constructed and (optionally) solved sizes.
    Table {
        /// Values of n: `2`, `2,3` or `2-4`.
        #[arg(long)]
        n: String,
        /// Values of k, same syntax as `--n`.
        #[arg(long)]
        k: String,
        /// Comma-separated kinds.
        #[arg(long, default_value = "dom,td,id,ld")]
        kinds: String,
        #[arg(long, default_value = "csv")]
        format: String,
        /// Run the solver on rows with at most this many vertices.
        #[arg(long = "solve-cap")]
        solve_cap: Option<usize>,
    },
    /// Compare the identifying-code minimum with ceil(|V| - |V|/max degree).
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

fn parse_kind(s: &str) -> Result<CodeKind, String> {
    s.parse().map_err(|e: sierpinski_codes::Error| e.to_string())
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse().map_err(|e: sierpinski_codes::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen { n, k, format } => commands::gen(n, k, format),
        Command::Verify { n, k, kind, code_file } => commands::verify(n, k, kind, &code_file),
        Command::Construct { n, k, kind } => commands::construct(n, k, kind),
        Command::Solve {
            n,
            k,
            kind,
            timeout,
            node_budget,
            deterministic,
            jobs,
            no_structural,
        } => commands::solve(
            n,
            k,
            kind,
            commands::SolveFlags {
                timeout,
                node_budget,
                deterministic,
                jobs,
                structural: !no_structural,
            },
        ),
        Command::Table {
            n,
            k,
            kinds,
            format,
            solve_cap,
        } => table::run(&n, &k, &kinds, &format, solve_cap),
        Command::Conjecture { n, k } => commands::conjecture(n, k),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::EXIT_USAGE)
        }
    }
}
