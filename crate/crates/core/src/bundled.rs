//! Data files compiled into the binary: seed lexicon, training treebank,
//! sample review corpus and its manifest.

use std::sync::OnceLock;

use crate::lexicon::{parse_lexicon, Lexicon};
use crate::postag::{parse_treebank, split_heldout, train_tagger, TaggedSentence, TaggerModel};

pub const LEXICON_TSV: &str = include_str!("../data/lexicon.tsv");
pub const TREEBANK_TXT: &str = include_str!("../data/treebank.txt");
pub const REVIEWS_JSONL: &str = include_str!("../data/reviews.jsonl");
pub const MANIFEST_CSV: &str = include_str!("../data/manifest.csv");

pub const TAGGER_EPOCHS: u32 = 5;
pub const TAGGER_SEED: u64 = 42;

pub fn lexicon() -> Lexicon {
    parse_lexicon(LEXICON_TSV, "bundled:lexicon.tsv").expect("bundled lexicon is valid")
}

pub fn treebank() -> Vec<TaggedSentence> {
    parse_treebank(TREEBANK_TXT).expect("bundled treebank is valid")
}

/// The default tagger: trained once per process on the 90% training split of
/// the bundled treebank.
pub fn model() -> &'static TaggerModel {
    static MODEL: OnceLock<TaggerModel> = OnceLock::new();
    MODEL.get_or_init(|| {
        let (train, _) = split_heldout(&treebank());
        train_tagger(&train, TAGGER_EPOCHS, TAGGER_SEED).expect("bundled treebank trains")
    })
}
