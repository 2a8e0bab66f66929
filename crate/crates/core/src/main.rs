use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use opinion_forge::classify::JudgeOptions;
use opinion_forge::corpus::IngestMode;
use opinion_forge::pipeline::{self, PipelineError, RunConfig, RunReport, TaggerSource, DEFAULT_SEED, SEED_ENV};
use opinion_forge::summarize::DEFAULT_MIN_SUPPORT;

#[derive(Parser)]
#[command(
    name = "opinion-forge",
    version,
    about = "Lexicon-based opinion mining for product reviews"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every stage: ingest, tag, classify, summarize, evaluate, stats.
    Run(RunArgs),
    /// Validate a review file and write the normalized corpus.
    Ingest {
        #[arg(long)]
        reviews: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Segment, tokenize and tag a corpus file.
    Tag {
        /// Corpus written by `ingest` [default: <out>/corpus.jsonl].
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        tagger: TaggerArgs,
        /// Also write a sentence/token/surface/tag TSV.
        #[arg(long)]
        dump_tokens: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Classify tagged sentences and reviews.
    Classify {
        /// Tagged file written by `tag` [default: <out>/tagged.jsonl].
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Per-product feature summaries.
    Summarize {
        /// Analyzed file written by `classify` [default: <out>/analyzed.jsonl].
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        summary: SummaryArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Score predictions against rating-derived labels.
    Evaluate {
        /// Analyzed file written by `classify` [default: <out>/analyzed.jsonl].
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Per-category review counts.
    Stats {
        /// Review file [default: <out>/corpus.jsonl].
        #[arg(long)]
        reviews: Option<PathBuf>,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Train a tagger and report held-out accuracy.
    Train {
        /// Treebank of word_TAG lines [default: bundled treebank].
        #[arg(long)]
        treebank: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        epochs: u32,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct ModeArgs {
    /// Fail on the first invalid line (default).
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    /// Skip invalid lines with a warning.
    #[arg(long)]
    lenient: bool,
}

impl ModeArgs {
    fn mode(&self) -> IngestMode {
        if self.lenient {
            IngestMode::Lenient
        } else {
            IngestMode::Strict
        }
    }
}

#[derive(Args)]
struct TaggerArgs {
    /// Tagger model written by `train`.
    #[arg(long, conflicts_with = "treebank")]
    model: Option<PathBuf>,
    /// Treebank to train the tagger from.
    #[arg(long)]
    treebank: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    epochs: u32,
}

impl TaggerArgs {
    fn source(&self) -> TaggerSource {
        match (&self.model, &self.treebank) {
            (Some(m), _) => TaggerSource::Model(m.clone()),
            (None, Some(t)) => TaggerSource::Treebank(t.clone()),
            (None, None) => TaggerSource::Bundled,
        }
    }
}

#[derive(Args)]
struct LexiconArgs {
    /// Lexicon TSV [default: bundled lexicon].
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Let noun and pronoun tokens match lexicon entries.
    #[arg(long)]
    no_pos_filter: bool,
}

#[derive(Args)]
struct SummaryArgs {
    #[arg(long, default_value_t = DEFAULT_MIN_SUPPORT)]
    min_support: usize,
    /// Feature list, one term per line; replaces mining.
    #[arg(long)]
    features: Option<PathBuf>,
    /// Summarize only this product model.
    #[arg(long)]
    product: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    reviews: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
    #[command(flatten)]
    tagger: TaggerArgs,
    #[command(flatten)]
    lexicon: LexiconArgs,
    #[command(flatten)]
    summary: SummaryArgs,
    #[arg(long)]
    dump_tokens: bool,
    #[command(flatten)]
    common: Common,
}

fn dispatch(command: Command) -> Result<RunReport, PipelineError> {
    match command {
        Command::Run(a) => pipeline::run_pipeline(&RunConfig {
            reviews: a.reviews,
            lexicon: a.lexicon.lexicon,
            tagger: a.tagger.source(),
            out: a.common.out,
            seed: a.common.seed,
            mode: a.mode.mode(),
            pos_filter: !a.lexicon.no_pos_filter,
            min_support: a.summary.min_support,
            product: a.summary.product,
            features: a.summary.features,
            dump_tokens: a.dump_tokens,
            epochs: a.tagger.epochs,
        }),
        Command::Ingest { reviews, mode, common } => {
            pipeline::run_ingest(&reviews, mode.mode(), &common.out, common.seed)
        }
        Command::Tag {
            input,
            tagger,
            dump_tokens,
            common,
        } => {
            let input = input.unwrap_or_else(|| common.out.join(pipeline::CORPUS_FILE));
            pipeline::run_tag(
                &input,
                &tagger.source(),
                tagger.epochs,
                dump_tokens,
                &common.out,
                common.seed,
            )
        }
        Command::Classify { input, lexicon, common } => {
            let input = input.unwrap_or_else(|| common.out.join(pipeline::TAGGED_FILE));
            let options = JudgeOptions {
                pos_filter: !lexicon.no_pos_filter,
            };
            pipeline::run_classify(&input, lexicon.lexicon.as_deref(), options, &common.out, common.seed)
        }
        Command::Summarize { input, summary, common } => {
            let input = input.unwrap_or_else(|| common.out.join(pipeline::ANALYZED_FILE));
            pipeline::run_summarize(
                &input,
                summary.min_support,
                summary.features.as_deref(),
                summary.product.as_deref(),
                &common.out,
                common.seed,
            )
        }
        Command::Evaluate { input, common } => {
            let input = input.unwrap_or_else(|| common.out.join(pipeline::ANALYZED_FILE));
            pipeline::run_evaluate(&input, &common.out, common.seed)
        }
        Command::Stats { reviews, mode, common } => {
            let reviews = reviews.unwrap_or_else(|| common.out.join(pipeline::CORPUS_FILE));
            pipeline::run_stats(&reviews, mode.mode(), &common.out, common.seed)
        }
        Command::Train {
            treebank,
            epochs,
            common,
        } => pipeline::run_train(treebank.as_deref(), epochs, &common.out, common.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            for a in &report.artifacts {
                println!("{}  {}", a.sha256(), a.name);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
