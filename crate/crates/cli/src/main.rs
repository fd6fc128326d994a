use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use unsharp_cli::{
    cmd_check, cmd_deduction, cmd_gen, cmd_laws, cmd_search, cmd_tables, load, CliError, CliResult,
    DeductionCmd, LawsOptions, Outcome, EXIT_USAGE,
};
use unsharp_core::search::SearchConfig;
use unsharp_core::{LawId, OperatorKind};

/// Unsharp negation and implication on finite meet-semilattices with 0.
///
/// FILE arguments accept a structure file or a spec string: fig1..fig4,
/// remark5, chain:N, bool:K, mn:N, prod:SPEC+SPEC.
#[derive(Parser)]
#[command(name = "unsharp", version)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Neg,
    Imp,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure and summarise it.
    Check { file: String },
    /// Print the operation table of negation or implication.
    Tables {
        file: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Check the law catalog, or a single equation, on a structure.
    Laws {
        file: String,
        /// Restrict to these laws (repeatable), e.g. T2.xii.
        #[arg(long = "law")]
        laws: Vec<LawId>,
        /// Check this equation instead of the catalog.
        #[arg(long, conflicts_with = "laws")]
        equation: Option<String>,
        /// Seed for the characterization perturbations.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the characterization perturbation checks.
        #[arg(long)]
        characterize: bool,
        /// Perturbations per operator for --characterize.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// With --equation, list every failing binding.
        #[arg(long, requires = "equation")]
        all: bool,
    },
    /// Look for a structure violating an equation.
    Search {
        #[arg(long)]
        equation: String,
        #[arg(long, default_value_t = 1)]
        min: usize,
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// Random instances drawn after the exhaustive stream.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Filters, deductive systems and congruences.
    Deduction {
        file: String,
        #[command(subcommand)]
        sub: DeductionSub,
    },
    /// Write the structure named by a spec as a structure file.
    Gen {
        spec: String,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum DeductionSub {
    /// List all filters by generator.
    Filters,
    /// List all deductive systems.
    Dsys,
    /// Classes of theta(SET), e.g. `theta d,1`.
    Theta { set: String },
    /// Deductive systems, filters and congruence top classes coincide.
    Th3,
    /// Top classes of congruences are filters generating sub-congruences.
    Lemma1,
    /// Theta(F) membership via implication sets, for a filter F.
    Prop { set: String },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Check { file } => Ok(cmd_check(&load(&file)?)),
        Command::Tables { file, kind } => {
            let kind = match kind {
                Kind::Neg => OperatorKind::Negation,
                Kind::Imp => OperatorKind::Implication,
            };
            Ok(cmd_tables(&load(&file)?, kind))
        }
        Command::Laws {
            file,
            laws,
            equation,
            seed,
            characterize,
            trials,
            all,
        } => {
            let opts = LawsOptions {
                laws,
                equation,
                characterize,
                trials,
                seed,
                all,
            };
            cmd_laws(&load(&file)?, &opts)
        }
        Command::Search {
            equation,
            min,
            max,
            count,
            seed,
        } => cmd_search(
            &equation,
            &SearchConfig {
                min,
                max,
                count,
                seed,
            },
        ),
        Command::Deduction { file, sub } => {
            let cmd = match sub {
                DeductionSub::Filters => DeductionCmd::Filters,
                DeductionSub::Dsys => DeductionCmd::Dsys,
                DeductionSub::Theta { set } => DeductionCmd::Theta(set),
                DeductionSub::Th3 => DeductionCmd::Th3,
                DeductionSub::Lemma1 => DeductionCmd::Lemma1,
                DeductionSub::Prop { set } => DeductionCmd::Prop(set),
            };
            cmd_deduction(&load(&file)?, &cmd)
        }
        Command::Gen { spec, output } => {
            let out = cmd_gen(&spec)?;
            if let Some(path) = output {
                std::fs::write(&path, &out.text).map_err(|e| CliError::Io(path, e))?;
                return Ok(Outcome {
                    text: String::new(),
                    ..out
                });
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("valid JSON")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
