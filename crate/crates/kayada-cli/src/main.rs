use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use kayada::{parse_theme, EvaluationConfig, EvolutionConfig, Theme};
use kayada_cli::{
    evaluate_corpus, evaluate_ratings, matrix_tables, run_generate, stats_chisq, stats_pearson,
};

/// Kāyadā variation toolkit: analyze a theme, evolve variations, and
/// evaluate the results.
#[derive(Parser)]
#[command(name = "kayada", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the count, relative, and cumulative transition tables of a theme.
    Matrix {
        /// Theme file.
        #[arg(long)]
        theme: PathBuf,
        /// Drop the wrap-around transition even if the theme is cyclic.
        #[arg(long)]
        acyclic: bool,
        /// Write the tables to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evolve variations of a theme and write the ranked corpus.
    Generate(GenerateArgs),
    /// Score rated items (or an auto-rated corpus) on the fourteen
    /// creativity criteria.
    Evaluate(EvaluateArgs),
    /// Correlation and independence statistics over data files.
    Stats {
        #[command(subcommand)]
        which: StatsCommand,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// Theme file.
    #[arg(long)]
    theme: PathBuf,
    /// Corpus destination; stdout when omitted (stats then go to stderr).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the run's random stream.
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Population size.
    #[arg(long, default_value_t = 30)]
    population_size: usize,
    /// Generation cap.
    #[arg(long, default_value_t = 20)]
    generations: u32,
    /// Stop once this share of the population reaches fitness zero.
    #[arg(long, default_value_t = 0.65)]
    goal_proportion: f64,
    /// Probability of the per-generation mutation step.
    #[arg(long, default_value_t = 0.2)]
    mutation_rate: f64,
    /// Per-pair crossover probability.
    #[arg(long, default_value_t = 0.9)]
    crossover_rate: f64,
    /// Chromosome length; defaults to the theme's bharī length.
    #[arg(long)]
    length: Option<usize>,
    /// Treat the theme as acyclic regardless of its declared type.
    #[arg(long)]
    acyclic: bool,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Ratings file (id,typicality,quality,inspiring).
    #[arg(long, conflicts_with = "corpus")]
    ratings: Option<PathBuf>,
    /// Corpus file to auto-rate; requires --theme.
    #[arg(long, requires = "theme")]
    corpus: Option<PathBuf>,
    /// Theme file, for the auto-rater.
    #[arg(long)]
    theme: Option<PathBuf>,
    /// Typicality threshold.
    #[arg(long, default_value_t = 0.7)]
    alpha: f64,
    /// Quality threshold.
    #[arg(long, default_value_t = 0.7)]
    beta: f64,
    /// Report destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum StatsCommand {
    /// Pearson correlation of a paired-sample file.
    Pearson {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chi-square test of independence over a contingency file.
    Chisq {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_theme(path: &Path) -> Result<Theme> {
    parse_theme(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Matrix { theme, acyclic, out } => {
            let label = theme.display().to_string();
            let text = matrix_tables(&load_theme(&theme)?, &label, acyclic)?;
            emit(out.as_deref(), &text)
        }
        Command::Generate(args) => {
            let mut theme = load_theme(&args.theme)?;
            if args.acyclic {
                theme.composition.cyclic = false;
            }
            let config = EvolutionConfig {
                population_size: args.population_size,
                length: args.length,
                max_generations: args.generations,
                mutation_rate: args.mutation_rate,
                crossover_rate: args.crossover_rate,
                goal_proportion: args.goal_proportion,
                rng_seed: args.rng_seed,
            };
            let label = args.theme.display().to_string();
            let report = run_generate(&theme, &label, &config)?;
            match &args.out {
                Some(path) => {
                    emit(Some(path), &report.corpus)?;
                    print!("{}", report.stats_table);
                }
                None => {
                    print!("{}", report.corpus);
                    eprint!("{}", report.stats_table);
                }
            }
            Ok(())
        }
        Command::Evaluate(args) => {
            let config = EvaluationConfig {
                typicality_threshold: args.alpha,
                quality_threshold: args.beta,
                ..EvaluationConfig::default()
            };
            let text = match (&args.ratings, &args.corpus) {
                (Some(ratings), None) => {
                    let label = ratings.display().to_string();
                    evaluate_ratings(&read(ratings)?, &label, &config)?
                }
                (None, Some(corpus)) => {
                    let theme_path = args.theme.as_ref().expect("clap enforces --theme");
                    let label = corpus.display().to_string();
                    evaluate_corpus(&read(corpus)?, &label, &load_theme(theme_path)?, &config)?
                }
                _ => bail!("pass either --ratings FILE or --corpus FILE --theme FILE"),
            };
            emit(args.out.as_deref(), &text)
        }
        Command::Stats { which } => match which {
            StatsCommand::Pearson { input, out } => {
                let text = stats_pearson(&read(&input)?, &input.display().to_string())?;
                emit(out.as_deref(), &text)
            }
            StatsCommand::Chisq { input, out } => {
                let text = stats_chisq(&read(&input)?, &input.display().to_string())?;
                emit(out.as_deref(), &text)
            }
        },
    }
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
