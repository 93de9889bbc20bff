use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tcurve_cli::run;

/// Decide, from boundary tangency data, whether an isolating-block
/// handlebody forces its maximal invariant set to have nontrivial
/// one-dimensional cohomology.
#[derive(Parser)]
#[command(
    name = "tcurve",
    version,
    after_long_help = "INPUT FORMAT:\n  \
    Lines; `#` comments to end of line. First significant line: `genus <g>`.\n  \
    Then one word per line, either `x<k>`/`x<k>^-1` tokens separated by\n  \
    spaces, or a compact run of ASCII letters (a..z = x1..x26, capitals for\n  \
    inverses), or the literal `1` for an empty word (an inessential curve).\n\n\
    ORIENTATION:\n  \
    Words are taken exactly as supplied. Read every tangency curve oriented\n  \
    as the boundary of the exit region of the block; the verdict is\n  \
    unchanged if every word is inverted, but mixing conventions between\n  \
    curves of one file is the caller's responsibility.\n\n\
    EXIT CODES:\n  \
    0 success (for `check`: the criterion holds), 1 operational error,\n  \
    3 criterion fails, 4 exploration budget exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit one machine-readable JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include the move-by-move reduction log in `check` text output.
    #[arg(long, global = true)]
    trace: bool,
    /// Upper bound on worker threads. Computations currently run on a
    /// single thread, so any bound is already satisfied; the flag caps, it
    /// never raises.
    #[arg(long, global = true, value_name = "N", value_parser = parse_threads)]
    threads: Option<usize>,
}

fn parse_threads(value: &str) -> Result<usize, String> {
    match value.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err("must be an integer >= 1".into()),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide the cut-system criterion for a tangency-data file.
    Check { file: PathBuf },
    /// Print the minimal set and the reduction trace for a file.
    Reduce { file: PathBuf },
    /// Certify the greedy reduction against exhaustive exploration.
    Oracle {
        file: PathBuf,
        /// Largest total length explored (default: the input's length).
        #[arg(long)]
        cap: Option<usize>,
        /// Largest number of states visited before giving up.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// List the catalog of essential curve patterns for a genus.
    Models {
        #[arg(long)]
        genus: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { file } => {
            run::load(file).and_then(|doc| run::check(&doc, cli.json, cli.trace))
        }
        Command::Reduce { file } => run::load(file).and_then(|doc| run::reduce(&doc, cli.json)),
        Command::Oracle { file, cap, budget } => {
            run::load(file).and_then(|doc| run::oracle(&doc, *cap, *budget, cli.json))
        }
        Command::Models { genus } => run::models(*genus, cli.json),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            let _ = std::io::stdout().flush();
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
