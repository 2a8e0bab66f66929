//! Part-of-speech tagging: a greedy averaged-perceptron sequence tagger over
//! the 46-tag Penn Treebank tagset.
//!
//! Features per token are the lowercased word, 1-3 character prefixes and
//! suffixes, the previous one and two predicted tags, neighbouring words,
//! capitalization and digit/hyphen flags. Frequent unambiguous words are
//! tagged from a dictionary; tokens with no weighted features fall back to
//! `NNP` when capitalized and `NN` otherwise.

mod features;
mod model;
mod tagset;
mod treebank;

use thiserror::Error;

pub use model::{
    evaluate_tagger, score_tagger, train_tagger, TaggerModel, TaggerScore, TrainingMeta, MODEL_FORMAT, MODEL_VERSION,
};
pub use tagset::{PosTag, TagClass, UnknownTag};
pub use treebank::{corpus_hash, parse_treebank, split_heldout, write_treebank, TaggedSentence};

#[derive(Debug, Error)]
pub enum TaggerError {
    #[error("treebank is empty")]
    EmptyTreebank,
    #[error("held-out set is empty")]
    EmptyHeldout,
    #[error("epochs must be positive")]
    ZeroEpochs,
    #[error("tagged sentence has no tokens")]
    EmptySentence,
    #[error("bad token surface {0:?}")]
    BadSurface(String),
    #[error("line {line}: expected surface_TAG, got {pair:?}")]
    MalformedPair { line: usize, pair: String },
    #[error("{}unknown tag {tag:?}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    UnknownTag { line: Option<usize>, tag: String },
    #[error("model file version {found} does not match supported version {expected}")]
    VersionMismatch { found: u32, expected: u32 },
    #[error("bad model file: {0}")]
    BadModel(String),
}
