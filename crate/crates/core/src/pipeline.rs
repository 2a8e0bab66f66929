//! Stage orchestration and artifact files.
//!
//! Every stage is a pure function from loaded inputs to a list of
//! [`Artifact`]s; nothing touches the output directory until all artifacts of
//! a command are computed. Files are then written through a temporary name and
//! renamed into place. Running the stages one by one over their intermediate
//! files produces the same bytes as [`run_pipeline`].

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::analysis::{classify_tagged, tag_review, AnalyzedReview, TaggedReview};
use crate::bundled;
use crate::classify::{JudgeOptions, OpinionKind};
use crate::corpus::{corpus_stats, parse_reviews_str, reviews_to_string, Corpus, IngestMode, Polarity, Review};
use crate::evaluate::{confusion_matrix, metrics, render_report};
use crate::lexicon::{load_lexicon, Lexicon};
use crate::postag::{evaluate_tagger, parse_treebank, split_heldout, train_tagger, TaggerModel};
use crate::summarize::{
    extract_features, parse_feature_list, render_table, score_features, summarize_corpus, DEFAULT_MIN_SUPPORT,
};

pub const DEFAULT_SEED: u64 = bundled::TAGGER_SEED;
pub const SEED_ENV: &str = "OPINION_FORGE_SEED";

pub const CORPUS_FILE: &str = "corpus.jsonl";
pub const TAGGED_FILE: &str = "tagged.jsonl";
pub const TOKENS_FILE: &str = "tokens.tsv";
pub const ANALYZED_FILE: &str = "analyzed.jsonl";
pub const CLASSIFICATION_CSV: &str = "classification.csv";
pub const CLASSIFICATION_JSON: &str = "classification.json";
pub const SUMMARY_JSON: &str = "summary.json";
pub const SUMMARY_TXT: &str = "summary.txt";
pub const EVALUATION_JSON: &str = "evaluation.json";
pub const EVALUATION_TXT: &str = "evaluation.txt";
pub const STATS_CSV: &str = "stats.csv";
pub const MODEL_FILE: &str = "model.json";
pub const TRAINING_JSON: &str = "training.json";

#[derive(Debug, Error)]
pub enum PipelineError {
    /// Bad or missing input; exit code 1.
    #[error("{0}")]
    Input(String),
    /// A violated internal invariant or failed output write; exit code 2.
    #[error("internal error: {0}")]
    Internal(String),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Input(_) => 1,
            PipelineError::Internal(_) => 2,
        }
    }
}

fn input<E: std::fmt::Display>(context: impl std::fmt::Display) -> impl FnOnce(E) -> PipelineError {
    move |e| PipelineError::Input(format!("{context}: {e}"))
}

/// A named output file and its full contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

impl Artifact {
    fn new(name: &str, contents: String) -> Artifact {
        Artifact {
            name: name.to_string(),
            contents,
        }
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.contents.as_bytes()))
    }
}

/// Where the tagger comes from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TaggerSource {
    /// Trained on the bundled treebank.
    #[default]
    Bundled,
    /// A model file written by `train`.
    Model(PathBuf),
    /// Trained on the 90% split of a treebank file.
    Treebank(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub reviews: PathBuf,
    /// `None` selects the bundled lexicon.
    pub lexicon: Option<PathBuf>,
    pub tagger: TaggerSource,
    pub out: PathBuf,
    pub seed: u64,
    pub mode: IngestMode,
    pub pos_filter: bool,
    pub min_support: usize,
    pub product: Option<String>,
    pub features: Option<PathBuf>,
    pub dump_tokens: bool,
    pub epochs: u32,
}

impl RunConfig {
    pub fn new(reviews: impl Into<PathBuf>, out: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            reviews: reviews.into(),
            lexicon: None,
            tagger: TaggerSource::Bundled,
            out: out.into(),
            seed: DEFAULT_SEED,
            mode: IngestMode::Strict,
            pos_filter: true,
            min_support: DEFAULT_MIN_SUPPORT,
            product: None,
            features: None,
            dump_tokens: false,
            epochs: bundled::TAGGER_EPOCHS,
        }
    }

    pub fn judge_options(&self) -> JudgeOptions {
        JudgeOptions {
            pos_filter: self.pos_filter,
        }
    }
}

/// What a command produced.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub artifacts: Vec<Artifact>,
    /// Non-fatal problems, such as lines skipped in lenient mode.
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn artifact(&self, name: &str) -> Option<&Artifact> {
        self.artifacts.iter().find(|a| a.name == name)
    }

    fn extend(&mut self, artifacts: Vec<Artifact>) {
        self.artifacts.extend(artifacts);
    }
}

fn seed_line(seed: u64) -> String {
    format!("# seed={seed}\n")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifact serializes");
    s.push('\n');
    s
}

fn jsonl<T: Serialize>(seed: u64, items: &[T]) -> String {
    let mut out = seed_line(seed);
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("record serializes"));
        out.push('\n');
    }
    out
}

fn read_text(path: &Path) -> Result<String, PipelineError> {
    fs::read_to_string(path).map_err(input(path.display()))
}

/// Reads a JSONL artifact, skipping `#` comments and blank lines.
pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, PipelineError> {
    let text = read_text(path)?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            serde_json::from_str(l)
                .map_err(|e| PipelineError::Input(format!("{}: line {}: {e}", path.display(), i + 1)))
        })
        .collect()
}

/// Writes all artifacts into `dir`, each through a temporary file.
pub fn write_artifacts(dir: &Path, artifacts: &[Artifact]) -> Result<(), PipelineError> {
    let internal = |e: io::Error, what: &Path| PipelineError::Internal(format!("{}: {e}", what.display()));
    fs::create_dir_all(dir).map_err(|e| internal(e, dir))?;
    let staged: Vec<(PathBuf, PathBuf)> = artifacts
        .iter()
        .map(|a| {
            let tmp = dir.join(format!(".{}.tmp", a.name));
            fs::write(&tmp, &a.contents)
                .map(|()| (tmp.clone(), dir.join(&a.name)))
                .map_err(|e| {
                    let _ = fs::remove_file(&tmp);
                    internal(e, &tmp)
                })
        })
        .collect::<Result<_, _>>()
        .inspect_err(|_| {
            for a in artifacts {
                let _ = fs::remove_file(dir.join(format!(".{}.tmp", a.name)));
            }
        })?;
    for (tmp, dest) in staged {
        fs::rename(&tmp, &dest).map_err(|e| internal(e, &dest))?;
    }
    Ok(())
}

pub fn load_corpus(path: &Path, mode: IngestMode) -> Result<Corpus, PipelineError> {
    let text = read_text(path)?;
    parse_reviews_str(&text, mode).map_err(input(path.display()))
}

pub fn load_lexicon_or_bundled(path: Option<&Path>) -> Result<Lexicon, PipelineError> {
    match path {
        Some(p) => load_lexicon(p).map_err(|e| PipelineError::Input(e.to_string())),
        None => Ok(bundled::lexicon()),
    }
}

/// The tagger for a run. The bundled treebank and treebank files are trained
/// with the run seed on their 90% split.
pub fn load_tagger(source: &TaggerSource, seed: u64, epochs: u32) -> Result<TaggerModel, PipelineError> {
    match source {
        TaggerSource::Bundled if seed == bundled::TAGGER_SEED && epochs == bundled::TAGGER_EPOCHS => {
            Ok(bundled::model().clone())
        }
        TaggerSource::Bundled => {
            let (train, _) = split_heldout(&bundled::treebank());
            train_tagger(&train, epochs, seed).map_err(|e| PipelineError::Internal(e.to_string()))
        }
        TaggerSource::Model(path) => TaggerModel::from_json(&read_text(path)?).map_err(input(path.display())),
        TaggerSource::Treebank(path) => {
            let sentences = parse_treebank(&read_text(path)?).map_err(input(path.display()))?;
            let (train, _) = split_heldout(&sentences);
            train_tagger(&train, epochs, seed).map_err(input(path.display()))
        }
    }
}

fn corpus_warnings(corpus: &Corpus) -> Vec<String> {
    corpus.rejected().iter().map(|e| format!("skipped {e}")).collect()
}

pub fn ingest_stage(corpus: &Corpus, seed: u64) -> Vec<Artifact> {
    let mut contents = seed_line(seed);
    contents.push_str(&reviews_to_string(corpus.reviews()));
    vec![Artifact::new(CORPUS_FILE, contents)]
}

pub fn stats_stage(reviews: &[Review], seed: u64) -> Vec<Artifact> {
    let m = corpus_stats(reviews);
    let contents = format!(
        "{}# total={} reviewers={} products={}\n{}",
        seed_line(seed),
        m.total,
        m.distinct_reviewers,
        m.distinct_products,
        m.to_csv()
    );
    vec![Artifact::new(STATS_CSV, contents)]
}

pub fn tag_stage(
    reviews: &[Review],
    model: &TaggerModel,
    seed: u64,
    dump_tokens: bool,
) -> (Vec<TaggedReview>, Vec<Artifact>) {
    let tagged: Vec<TaggedReview> = reviews.par_iter().map(|r| tag_review(r, model)).collect();
    let mut artifacts = vec![Artifact::new(TAGGED_FILE, jsonl(seed, &tagged))];
    if dump_tokens {
        let mut tsv = seed_line(seed);
        tsv.push_str("sentence_idx\ttoken_idx\tsurface\ttag\n");
        for r in &tagged {
            tsv.push_str(&format!("# review={}\n", r.review.review_id));
            for s in &r.sentences {
                for (j, t) in s.tokens.iter().enumerate() {
                    let tag = t.tag.map_or("", |t| t.symbol());
                    tsv.push_str(&format!("{}\t{j}\t{}\t{tag}\n", s.sentence.index, t.surface));
                }
            }
        }
        artifacts.push(Artifact::new(TOKENS_FILE, tsv));
    }
    (tagged, artifacts)
}

fn classification_csv(seed: u64, analyzed: &[AnalyzedReview]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record([
        "review_id",
        "product_model",
        "rating",
        "ground_truth",
        "predicted",
        "score",
        "sentences",
        "sentiment_sentences",
        "comparative_sentences",
    ])
    .expect("in-memory write");
    for a in analyzed {
        let v = &a.verdict;
        w.write_record([
            v.review_id.clone(),
            a.review.product_model.clone(),
            a.review.rating.stars().to_string(),
            v.ground_truth.to_string(),
            v.predicted.to_string(),
            v.aggregate.to_string(),
            v.sentences.len().to_string(),
            v.sentences.iter().filter(|s| s.is_sentiment).count().to_string(),
            v.sentences
                .iter()
                .filter(|s| s.kind == OpinionKind::Comparative)
                .count()
                .to_string(),
        ])
        .expect("in-memory write");
    }
    let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields");
    seed_line(seed) + &body
}

pub fn classify_stage(
    tagged: Vec<TaggedReview>,
    lexicon: &Lexicon,
    options: JudgeOptions,
    seed: u64,
) -> (Vec<AnalyzedReview>, Vec<Artifact>) {
    let analyzed: Vec<AnalyzedReview> = tagged
        .into_par_iter()
        .map(|t| classify_tagged(t, lexicon, options))
        .collect();
    let verdicts: Vec<_> = analyzed.iter().map(|a| &a.verdict).collect();
    let json = json!({
        "seed": seed,
        "pos_filter": options.pos_filter,
        "lexicon": {
            "source": lexicon.provenance().source,
            "sha256": lexicon.provenance().sha256,
            "entries": lexicon.len(),
        },
        "reviews": verdicts,
    });
    let artifacts = vec![
        Artifact::new(ANALYZED_FILE, jsonl(seed, &analyzed)),
        Artifact::new(CLASSIFICATION_CSV, classification_csv(seed, &analyzed)),
        Artifact::new(CLASSIFICATION_JSON, to_json(&json)),
    ];
    (analyzed, artifacts)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SummarizeOptions {
    pub min_support: usize,
    /// Fixed feature list replacing mining.
    pub features: Option<Vec<String>>,
    pub product: Option<String>,
}

pub fn summarize_stage(
    analyzed: &[AnalyzedReview],
    options: &SummarizeOptions,
    seed: u64,
) -> Result<Vec<Artifact>, PipelineError> {
    if options.min_support == 0 {
        return Err(PipelineError::Input("min-support must be at least 1".into()));
    }
    let (features, source) = match &options.features {
        Some(list) => (score_features(analyzed, list), "file"),
        None => (extract_features(analyzed, options.min_support), "mined"),
    };
    let products = summarize_corpus(analyzed, &features, options.product.as_deref());
    for p in &products {
        let counted: usize = p.features.iter().map(|f| f.opinions()).sum();
        if counted != p.opinion_units {
            return Err(PipelineError::Internal(format!(
                "{}: feature counts sum to {counted} but {} opinion units were emitted",
                p.product_model, p.opinion_units
            )));
        }
    }
    let json = json!({
        "seed": seed,
        "min_support": options.min_support,
        "feature_source": source,
        "features": features,
        "products": products,
    });
    let mut txt = seed_line(seed);
    for (i, p) in products.iter().enumerate() {
        if i > 0 {
            txt.push('\n');
        }
        txt.push_str(&render_table(p));
    }
    Ok(vec![
        Artifact::new(SUMMARY_JSON, to_json(&json)),
        Artifact::new(SUMMARY_TXT, txt),
    ])
}

pub fn evaluate_stage(analyzed: &[AnalyzedReview], seed: u64) -> Vec<Artifact> {
    let matrix = confusion_matrix(analyzed.iter().map(|a| (a.verdict.ground_truth, a.verdict.predicted)));
    let m = metrics(&matrix);
    let json = json!({
        "seed": seed,
        "labels": Polarity::ALL,
        "confusion_matrix": matrix.cells,
        "metrics": m,
    });
    vec![
        Artifact::new(EVALUATION_JSON, to_json(&json)),
        Artifact::new(EVALUATION_TXT, seed_line(seed) + &render_report(&matrix, &m)),
    ]
}

fn summarize_options(config: &RunConfig) -> Result<SummarizeOptions, PipelineError> {
    let features = match &config.features {
        Some(path) => Some(parse_feature_list(&read_text(path)?)),
        None => None,
    };
    Ok(SummarizeOptions {
        min_support: config.min_support,
        features,
        product: config.product.clone(),
    })
}

/// Runs every stage and writes all artifacts into `config.out`.
pub fn run_pipeline(config: &RunConfig) -> Result<RunReport, PipelineError> {
    let corpus = load_corpus(&config.reviews, config.mode)?;
    let lexicon = load_lexicon_or_bundled(config.lexicon.as_deref())?;
    let summarize = summarize_options(config)?;
    let model = load_tagger(&config.tagger, config.seed, config.epochs)?;

    let mut report = RunReport {
        warnings: corpus_warnings(&corpus),
        ..RunReport::default()
    };
    report.warnings.extend(lexicon.warnings().iter().cloned());
    report.extend(ingest_stage(&corpus, config.seed));
    let (tagged, artifacts) = tag_stage(corpus.reviews(), &model, config.seed, config.dump_tokens);
    report.extend(artifacts);
    let (analyzed, artifacts) = classify_stage(tagged, &lexicon, config.judge_options(), config.seed);
    report.extend(artifacts);
    report.extend(summarize_stage(&analyzed, &summarize, config.seed)?);
    report.extend(evaluate_stage(&analyzed, config.seed));
    report.extend(stats_stage(corpus.reviews(), config.seed));

    let stats = corpus_stats(corpus.reviews());
    if stats.total != corpus.len() {
        return Err(PipelineError::Internal(
            "category counts do not sum to the corpus size".into(),
        ));
    }
    write_artifacts(&config.out, &report.artifacts)?;
    Ok(report)
}

fn finish(out: &Path, report: RunReport) -> Result<RunReport, PipelineError> {
    write_artifacts(out, &report.artifacts)?;
    Ok(report)
}

/// `ingest`: validates a review file and writes the normalized corpus.
pub fn run_ingest(reviews: &Path, mode: IngestMode, out: &Path, seed: u64) -> Result<RunReport, PipelineError> {
    let corpus = load_corpus(reviews, mode)?;
    finish(
        out,
        RunReport {
            artifacts: ingest_stage(&corpus, seed),
            warnings: corpus_warnings(&corpus),
        },
    )
}

/// `stats`: category counts of a review file.
pub fn run_stats(reviews: &Path, mode: IngestMode, out: &Path, seed: u64) -> Result<RunReport, PipelineError> {
    let corpus = load_corpus(reviews, mode)?;
    finish(
        out,
        RunReport {
            artifacts: stats_stage(corpus.reviews(), seed),
            warnings: corpus_warnings(&corpus),
        },
    )
}

/// `tag`: reads a corpus file and writes tagged sentences.
pub fn run_tag(
    corpus_file: &Path,
    tagger: &TaggerSource,
    epochs: u32,
    dump_tokens: bool,
    out: &Path,
    seed: u64,
) -> Result<RunReport, PipelineError> {
    let corpus = load_corpus(corpus_file, IngestMode::Strict)?;
    let model = load_tagger(tagger, seed, epochs)?;
    let (_, artifacts) = tag_stage(corpus.reviews(), &model, seed, dump_tokens);
    finish(
        out,
        RunReport {
            artifacts,
            warnings: Vec::new(),
        },
    )
}

/// `classify`: reads tagged sentences and writes verdicts.
pub fn run_classify(
    tagged_file: &Path,
    lexicon: Option<&Path>,
    options: JudgeOptions,
    out: &Path,
    seed: u64,
) -> Result<RunReport, PipelineError> {
    let tagged: Vec<TaggedReview> = read_jsonl(tagged_file)?;
    let lexicon = load_lexicon_or_bundled(lexicon)?;
    let (_, artifacts) = classify_stage(tagged, &lexicon, options, seed);
    finish(
        out,
        RunReport {
            artifacts,
            warnings: lexicon.warnings().to_vec(),
        },
    )
}

/// `summarize`: reads analyzed reviews and writes feature summaries.
pub fn run_summarize(
    analyzed_file: &Path,
    min_support: usize,
    features: Option<&Path>,
    product: Option<&str>,
    out: &Path,
    seed: u64,
) -> Result<RunReport, PipelineError> {
    let analyzed: Vec<AnalyzedReview> = read_jsonl(analyzed_file)?;
    let features = match features {
        Some(p) => Some(parse_feature_list(&read_text(p)?)),
        None => None,
    };
    let options = SummarizeOptions {
        min_support,
        features,
        product: product.map(str::to_string),
    };
    let artifacts = summarize_stage(&analyzed, &options, seed)?;
    finish(
        out,
        RunReport {
            artifacts,
            warnings: Vec::new(),
        },
    )
}

/// `evaluate`: reads analyzed reviews and writes the confusion matrix and metrics.
pub fn run_evaluate(analyzed_file: &Path, out: &Path, seed: u64) -> Result<RunReport, PipelineError> {
    let analyzed: Vec<AnalyzedReview> = read_jsonl(analyzed_file)?;
    finish(
        out,
        RunReport {
            artifacts: evaluate_stage(&analyzed, seed),
            warnings: Vec::new(),
        },
    )
}

/// `train`: fits a tagger on the 90% split of a treebank and reports
/// held-out accuracy on the rest.
pub fn run_train(treebank: Option<&Path>, epochs: u32, out: &Path, seed: u64) -> Result<RunReport, PipelineError> {
    let (sentences, source) = match treebank {
        Some(p) => (
            parse_treebank(&read_text(p)?).map_err(input(p.display()))?,
            p.display().to_string(),
        ),
        None => (bundled::treebank(), "bundled:treebank.txt".to_string()),
    };
    let (train, heldout) = split_heldout(&sentences);
    let model = train_tagger(&train, epochs, seed).map_err(input(&source))?;
    let accuracy = evaluate_tagger(&model, &heldout).map_err(input(&source))?;
    let report = json!({
        "seed": seed,
        "epochs": epochs,
        "treebank": source,
        "train_sentences": train.len(),
        "heldout_sentences": heldout.len(),
        "heldout_accuracy": accuracy,
        "model_sha256": model.hash(),
    });
    finish(
        out,
        RunReport {
            artifacts: vec![
                Artifact::new(MODEL_FILE, model.to_json()),
                Artifact::new(TRAINING_JSON, to_json(&report)),
            ],
            warnings: Vec::new(),
        },
    )
}
