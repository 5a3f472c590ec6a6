//! `kawt`: check, evaluate and compare weighted programs, and run the law suites.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use kawt::SemiringKind;

#[derive(Parser, Debug)]
#[command(name = "kawt", version, about = "Kleene algebra with weights and tests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and sort-check a program file, then print it normalised.
    Check { program: PathBuf },
    /// Interpret a program over a model file and print the relation.
    Eval {
        program: PathBuf,
        model: PathBuf,
        /// Partial-sum cap for every star (default: states + 1).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Least weight of reaching each atom from the given atoms.
    Optimal {
        program: PathBuf,
        /// Weight of a weighting variable, as `name=value`.
        #[arg(long = "weights", value_name = "NAME=VALUE", num_args = 1.., value_parser = parse_weight)]
        weights: Vec<(String, u64)>,
        /// Start atoms: a Boolean expression or a rendered atom such as `{a !b}`.
        #[arg(long)]
        from: String,
        /// Program-symbol bound (default: exact for star-free programs, 8 otherwise).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Compare two programs, optionally under `e = 0` hypotheses.
    #[command(group(ArgGroup::new("method").required(true).args(["bound", "models"])))]
    Equiv {
        left: PathBuf,
        right: PathBuf,
        /// Equations file of hypotheses `e = 0`; may be repeated.
        #[arg(long = "hyp", value_name = "FILE")]
        hyps: Vec<PathBuf>,
        /// Compare guarded languages up to this many program symbols.
        #[arg(long)]
        bound: Option<usize>,
        /// Compare relations entrywise in every model file of this directory.
        #[arg(long, value_name = "DIR")]
        models: Option<PathBuf>,
        /// Weights for the language comparison (default: i-th variable gets i + 1).
        #[arg(long = "weights", value_name = "NAME=VALUE", num_args = 1.., value_parser = parse_weight)]
        weights: Vec<(String, u64)>,
        /// Star cap for the model comparison.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run one of the randomized law suites.
    Axioms {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per law (default depends on the suite).
        #[arg(long)]
        samples: Option<usize>,
        /// Restrict to one semiring.
        #[arg(long, value_parser = parse_semiring)]
        semiring: Option<SemiringKind>,
        /// Run on the deliberately broken instance instead.
        #[arg(long)]
        mutant: bool,
    },
    /// The ski-rental walkthrough for one trip length and ski price.
    SkiDemo {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        y: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Semiring,
    Lifted,
    Psg,
    Thm1,
    Thm2,
}

fn parse_weight(s: &str) -> Result<(String, u64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, found `{s}`"))?;
    let value = value
        .trim()
        .parse::<u64>()
        .map_err(|e| format!("weight of `{}`: {e}", name.trim()))?;
    Ok((name.trim().to_string(), value))
}

fn parse_semiring(s: &str) -> Result<SemiringKind, String> {
    s.parse().map_err(|e: kawt::semiring::UnknownSemiring| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::Check { program } => commands::check(&program, &mut out),
        Command::Eval { program, model, cap } => commands::eval(&program, &model, cap, &mut out),
        Command::Optimal {
            program,
            weights,
            from,
            bound,
        } => commands::optimal(&program, &weights, &from, bound, &mut out),
        Command::Equiv {
            left,
            right,
            hyps,
            bound,
            models,
            weights,
            cap,
        } => {
            let method = match (bound, models) {
                (Some(k), _) => commands::EquivMethod::Bounded { bound: k, weights },
                (None, Some(dir)) => commands::EquivMethod::Models { dir, cap },
                (None, None) => unreachable!("clap requires one of --bound and --models"),
            };
            commands::equiv(&left, &right, &hyps, method, &mut out)
        }
        Command::Axioms {
            suite,
            seed,
            samples,
            semiring,
            mutant,
        } => commands::axioms(suite, seed, samples, semiring, mutant, &mut out),
        Command::SkiDemo { n, y } => commands::ski_demo(n, y, &mut out),
    };
    print!("{out}");
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
