use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hstrata::cli::{
    analyze_document, nose_table, poset_graph, run_suite, strata_table, FormSpaceDocument, GraphFormat, Suite,
    TableFormat, VerifyOptions,
};
use hstrata::experiments::sample_hilbert_burch;
use hstrata::linalg::Modulus;
use hstrata::{Error, Partition};

/// Hilbert-function strata of spaces of binary forms.
#[derive(Parser)]
#[command(name = "hstrata", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every invariant of a space given as a JSON document ("-" for stdin).
    Analyze { path: PathBuf },
    /// Tabulate the strata of Grass(R_j, d).
    Enumerate {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        d: usize,
        /// Tabulate scroll strata instead.
        #[arg(long)]
        nose: bool,
        #[arg(long, value_enum, default_value_t = TableArg::Csv)]
        format: TableArg,
        /// Mark the closure of the stratum with this partition, e.g. 5,1.
        #[arg(long)]
        star: Option<String>,
        /// Base-point degree of the starred stratum.
        #[arg(long, default_value_t = 0)]
        star_c: usize,
    },
    /// Closure poset as a graph.
    Poset {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = GraphArg::Dot)]
        format: GraphArg,
    },
    /// Random space with prescribed relation degrees, over F_p.
    Sample {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        d: usize,
        /// Relation degrees, e.g. 4,2.
        #[arg(long = "D", value_name = "DEGREES")]
        degrees: String,
        #[arg(long, default_value_t = 0)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and print a JSON summary.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, requires = "d")]
        j: Option<usize>,
        #[arg(long, requires = "j")]
        d: Option<usize>,
        /// Largest j (or n for the mu suite) in exhaustive suites.
        #[arg(long)]
        max_j: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        /// Number of independent seeds per check.
        #[arg(long)]
        seeds: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Dims,
    Orders,
    Closure,
    Semicontinuity,
    Mu,
    Oracles,
    Formulas,
}

enum Failure {
    Usage(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Analyze { path } => {
            let doc = if path.as_os_str() == "-" {
                FormSpaceDocument::from_reader(io::stdin().lock())?
            } else {
                FormSpaceDocument::from_reader(File::open(&path).map_err(Error::from)?)?
            };
            let report = analyze_document(&doc)?;
            Ok(serde_json::to_string_pretty(&report).map_err(Error::from)? + "\n")
        }
        Command::Enumerate { j, d, nose, format, star, star_c } => {
            let format = match format {
                TableArg::Csv => TableFormat::Csv,
                TableArg::Json => TableFormat::Json,
            };
            if nose {
                return Ok(nose_table(j, d, format)?);
            }
            let star = star.as_deref().map(Partition::parse).transpose()?;
            Ok(strata_table(j, d, format, star.as_ref().map(|p| (p, star_c)))?)
        }
        Command::Poset { j, d, format } => {
            let format = match format {
                GraphArg::Dot => GraphFormat::Dot,
                GraphArg::Json => GraphFormat::Json,
            };
            Ok(poset_graph(j, d, format)?)
        }
        Command::Sample { j, d, degrees, c, seed, out } => {
            let degrees = Partition::parse(&degrees)?;
            let sample = sample_hilbert_burch(j, d, &degrees, c, seed, Modulus::from_env()?)?;
            let doc = FormSpaceDocument::from_prime_space(&sample.space);
            let text = serde_json::to_string_pretty(&doc).map_err(Error::from)? + "\n";
            match out {
                Some(path) => {
                    std::fs::write(path, text).map_err(Error::from)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Verify { suite, j, d, max_j, trials, seeds, seed } => {
            let suite = match suite {
                SuiteArg::Dims => Suite::Dims,
                SuiteArg::Orders => Suite::Orders,
                SuiteArg::Closure => Suite::Closure,
                SuiteArg::Semicontinuity => Suite::Semicontinuity,
                SuiteArg::Mu => Suite::Mu,
                SuiteArg::Oracles => Suite::Oracles,
                SuiteArg::Formulas => Suite::Formulas,
            };
            if let (Some(j), Some(d)) = (j, d) {
                if d == 0 || d > j + 1 {
                    return Err(Failure::Usage(Error::InvalidDimension { j, d }));
                }
            }
            let opts = VerifyOptions {
                grid: j.zip(d),
                max_j,
                trials,
                seeds,
                seed,
                modulus: Modulus::from_env()?,
            };
            let summary = run_suite(suite, &opts)?;
            let text = serde_json::to_string_pretty(&summary).map_err(Error::from)? + "\n";
            if summary.passed {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
