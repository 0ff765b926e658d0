use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lie_hasse_cli::{cmd_classify, cmd_hasse, cmd_map, cmd_verify, spec, ClassifyOptions, CliError, Format};

/// Restricted-weight Hasse diagrams and surjective diagram-map search.
#[derive(Parser)]
#[command(name = "lie-hasse", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Hasse diagram of a dominant weight
    Hasse {
        /// System token, e.g. G2, A6, E8
        system: String,
        /// Weight token: fund:<node> or [k1,...,kn]
        weight: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Enumerate all labelings with an induced map between two diagrams
    Map {
        src_system: String,
        src_weight: String,
        tgt_system: String,
        tgt_weight: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the pairwise classification up to a rank cap
    Classify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Include same-system pairs (reported separately by default)
        #[arg(long)]
        include_identity: bool,
        /// Include witness vertex maps in the output
        #[arg(long)]
        witnesses: bool,
        /// Drop the extremal-to-extremal restriction on labelings
        #[arg(long)]
        no_extremal_constraint: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-run the classification and diff it against the expected table
    Verify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>), CliError> {
    match cli.command {
        Command::Hasse {
            system,
            weight,
            out,
        } => {
            let format = Format::parse(&out.format)?;
            let parsed = spec::parse_spec(&system, &weight)?;
            Ok((cmd_hasse(&parsed, format)?, out.output))
        }
        Command::Map {
            src_system,
            src_weight,
            tgt_system,
            tgt_weight,
            out,
        } => {
            let format = Format::parse(&out.format)?;
            let src = spec::parse_spec(&src_system, &src_weight)?;
            let tgt = spec::parse_spec(&tgt_system, &tgt_weight)?;
            Ok((cmd_map(&src, &tgt, format)?, out.output))
        }
        Command::Classify {
            max_rank,
            include_identity,
            witnesses,
            no_extremal_constraint,
            out,
        } => {
            let format = Format::parse(&out.format)?;
            let opts = ClassifyOptions {
                max_rank,
                extremal_constraint: !no_extremal_constraint,
                include_identity,
                witnesses,
            };
            Ok((cmd_classify(opts, format)?, out.output))
        }
        Command::Verify { max_rank } => Ok((cmd_verify(max_rank)?, None)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, sink)) => match sink {
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            Some(path) => match fs::File::create(&path).and_then(|mut f| f.write_all(text.as_bytes())) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("io error: cannot write {}: {e}", path.display());
                    ExitCode::from(2)
                }
            },
        },
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
