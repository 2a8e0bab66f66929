//! Generators and independent oracles shared by the integration tests.
//!
//! Oracles work on plain strings and tag symbols so they share no lookup,
//! negation or counting code with the library.

#![allow(dead_code)]

use opinion_forge::analysis::{classify_tagged, AnalyzedReview, TaggedReview, TaggedSentenceRecord};
use opinion_forge::classify::JudgeOptions;
use opinion_forge::corpus::{parse_reviews_str, IngestMode, Review};
use opinion_forge::lexicon::{parse_lexicon, Lexicon};
use opinion_forge::postag::PosTag;
use opinion_forge::textproc::{Sentence, Span, Token};
use rand::seq::SliceRandom;
use rand::Rng;

pub const WORDS: [&str; 14] = [
    "good", "bad", "great", "poor", "love", "hate", "fast", "slow", "battery", "screen", "works", "it", "fine", "cheap",
];
pub const NEGATORS: [&str; 5] = ["not", "n't", "n\u{2019}t", "never", "no"];
pub const PUNCT: [&str; 5] = [".", ",", ";", "!", "..."];
pub const FILLER: [&str; 4] = ["the", "is", "at", "all"];
pub const TAGS: [&str; 16] = [
    "JJ", "JJR", "JJS", "RB", "RBR", "VB", "VBZ", "VBD", "NN", "NNS", "NNP", "PRP", "PRP$", "WP", "UH", "DT",
];
pub const CONSTRAINTS: [&str; 10] = ["*", "adj", "adv", "verb", "noun", "intj", "JJ", "VBZ", "NN", "RB"];

#[derive(Debug, Clone)]
pub struct OracleEntry {
    pub term: String,
    pub positive: bool,
    pub micros: i64,
    pub constraint: String,
}

pub fn strength_text(micros: i64) -> String {
    if micros == 1_000_000 {
        "1.0".to_string()
    } else {
        format!("0.{micros:06}")
    }
}

pub fn lexicon_tsv(entries: &[OracleEntry]) -> String {
    entries
        .iter()
        .map(|e| {
            format!(
                "{}\t{}\t{}\t{}\n",
                e.term,
                if e.positive { "positive" } else { "negative" },
                strength_text(e.micros),
                e.constraint
            )
        })
        .collect()
}

pub fn build_lexicon(entries: &[OracleEntry]) -> Lexicon {
    parse_lexicon(&lexicon_tsv(entries), "generated").expect("generated lexicon is valid")
}

/// Random lexicon with distinct (term, constraint) keys and strengths of
/// `unit * k` millionths for `k` in `1..=max_k`.
pub fn random_entries<R: Rng>(rng: &mut R, unit: i64, max_k: i64) -> Vec<OracleEntry> {
    let mut out: Vec<OracleEntry> = Vec::new();
    let n = rng.gen_range(0..20);
    for _ in 0..n {
        let term = WORDS.choose(rng).unwrap().to_string();
        let constraint = CONSTRAINTS.choose(rng).unwrap().to_string();
        if out.iter().any(|e| e.term == term && e.constraint == constraint) {
            continue;
        }
        out.push(OracleEntry {
            term,
            positive: rng.gen_bool(0.5),
            micros: unit * rng.gen_range(1..=max_k),
            constraint,
        });
    }
    out
}

fn random_case<R: Rng>(rng: &mut R, word: &str) -> String {
    match rng.gen_range(0..4) {
        0 => word.to_uppercase(),
        1 => {
            let mut c = word.chars();
            c.next()
                .map_or_else(String::new, |f| f.to_uppercase().collect::<String>() + c.as_str())
        }
        _ => word.to_string(),
    }
}

/// Random tagged sentence as (surface, tag symbol) pairs.
pub fn random_sentence<R: Rng>(rng: &mut R) -> Vec<(String, &'static str)> {
    let len = rng.gen_range(0..14);
    (0..len)
        .map(|_| {
            let w = match rng.gen_range(0..10) {
                0..=4 => WORDS.choose(rng).unwrap(),
                5 | 6 => NEGATORS.choose(rng).unwrap(),
                7 => PUNCT.choose(rng).unwrap(),
                _ => FILLER.choose(rng).unwrap(),
            };
            (random_case(rng, w), *TAGS.choose(rng).unwrap())
        })
        .collect()
}

pub fn to_tokens(sentence: &[(String, &str)]) -> Vec<Token> {
    sentence
        .iter()
        .map(|(w, t)| Token::tagged(w, t.parse::<PosTag>().unwrap()))
        .collect()
}

fn constraint_accepts(constraint: &str, tag: &str) -> bool {
    match constraint {
        "*" => true,
        "adj" => ["JJ", "JJR", "JJS"].contains(&tag),
        "adv" => ["RB", "RBR", "RBS"].contains(&tag),
        "verb" => ["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"].contains(&tag),
        "noun" => ["NN", "NNS", "NNP", "NNPS"].contains(&tag),
        "intj" => tag == "UH",
        exact => exact == tag,
    }
}

fn specificity(constraint: &str) -> u8 {
    match constraint {
        "*" => 0,
        "adj" | "adv" | "verb" | "noun" | "intj" => 1,
        _ => 2,
    }
}

fn noun_or_pronoun(tag: &str) -> bool {
    ["NN", "NNS", "NNP", "NNPS", "PRP", "PRP$", "WP", "WP$"].contains(&tag)
}

/// Brute-force sentence judgment: (is_sentiment, signed score in millionths,
/// per-hit (token index, negated polarity is positive)).
pub fn oracle_judge(
    sentence: &[(String, &str)],
    entries: &[OracleEntry],
    pos_filter: bool,
) -> (bool, i64, Vec<(usize, bool)>) {
    let mut total = 0i64;
    let mut hits = Vec::new();
    for (i, (surface, tag)) in sentence.iter().enumerate() {
        if pos_filter && noun_or_pronoun(tag) {
            continue;
        }
        let word = surface.to_lowercase();
        let mut best: Option<&OracleEntry> = None;
        for e in entries {
            let accepts = e.term == word && constraint_accepts(&e.constraint, tag);
            if accepts && best.is_none_or(|b| specificity(&e.constraint) > specificity(&b.constraint)) {
                best = Some(e);
            }
        }
        let Some(e) = best else { continue };
        let mut positive = e.positive;
        for back in 1..=3 {
            if back > i {
                break;
            }
            let prev = &sentence[i - back].0;
            if prev.chars().all(|c| ".,;:!?".contains(c)) {
                break;
            }
            if NEGATORS.contains(&prev.to_lowercase().as_str()) {
                positive = !positive;
                break;
            }
        }
        total += if positive { e.micros } else { -e.micros };
        hits.push((i, positive));
    }
    (!hits.is_empty(), total, hits)
}

pub fn sign_label(score: i64) -> &'static str {
    match score.signum() {
        1 => "Positive",
        -1 => "Negative",
        _ => "Neutral",
    }
}

pub fn review(id: &str, reviewer: &str, product: &str, rating: u8) -> Review {
    let line = format!(
        r#"{{"review_id":"{id}","reviewer_id":"{reviewer}","product_model":"{product}","timestamp":"2018-10-01T12:00:00Z","rating":{rating},"category":"Mobiles","text":""}}"#
    );
    parse_reviews_str(&line, IngestMode::Strict).unwrap().reviews()[0].clone()
}

pub fn tagged_review(review: Review, sentences: &[Vec<(String, &str)>]) -> TaggedReview {
    let sentences = sentences
        .iter()
        .enumerate()
        .map(|(index, s)| {
            let text = s.iter().map(|(w, _)| w.as_str()).collect::<Vec<_>>().join(" ");
            TaggedSentenceRecord {
                sentence: Sentence {
                    index,
                    span: Span::new(0, text.len()),
                    text,
                },
                tokens: to_tokens(s),
            }
        })
        .collect();
    TaggedReview { review, sentences }
}

const NOUNS: [&str; 6] = ["battery", "screen", "life", "camera", "charger", "price"];
const OPINION: [(&str, &str); 6] = [
    ("good", "JJ"),
    ("bad", "JJ"),
    ("great", "JJ"),
    ("poor", "JJ"),
    ("love", "VBP"),
    ("hate", "VBP"),
];
const OTHER: [(&str, &str); 5] = [("the", "DT"), ("is", "VBZ"), ("and", "CC"), ("not", "RB"), (".", ".")];

pub fn mini_lexicon() -> Lexicon {
    parse_lexicon(
        "good\tpositive\t0.6\t*\nbad\tnegative\t0.7\t*\ngreat\tpositive\t0.9\tadj\npoor\tnegative\t0.5\t*\nlove\tpositive\t1.0\tverb\nhate\tnegative\t1.0\tverb\n",
        "mini",
    )
    .unwrap()
}

/// A small random corpus over a few products, classified with `mini_lexicon`.
pub fn random_corpus<R: Rng>(rng: &mut R) -> Vec<AnalyzedReview> {
    let lexicon = mini_lexicon();
    let products = ["P-A", "P-B", "P-C"];
    let n = rng.gen_range(1..12);
    (0..n)
        .map(|i| {
            let r = review(
                &format!("R{i}"),
                &format!("U{}", rng.gen_range(0..5)),
                products.choose(rng).unwrap(),
                rng.gen_range(1..=5),
            );
            let sentences: Vec<Vec<(String, &str)>> = (0..rng.gen_range(0..5))
                .map(|_| {
                    (0..rng.gen_range(1..9))
                        .map(|_| {
                            let (w, t) = match rng.gen_range(0..3) {
                                0 => (*NOUNS.choose(rng).unwrap(), *["NN", "NNS"].choose(rng).unwrap()),
                                1 => *OPINION.choose(rng).unwrap(),
                                _ => *OTHER.choose(rng).unwrap(),
                            };
                            (w.to_string(), t)
                        })
                        .collect()
                })
                .collect();
            classify_tagged(tagged_review(r, &sentences), &lexicon, JudgeOptions::default())
        })
        .collect()
}

/// Recount of opinion units per product: one per (sentiment sentence,
/// feature) pair where the feature's words occur as consecutive noun tokens.
pub fn oracle_unit_counts(corpus: &[AnalyzedReview], features: &[String]) -> std::collections::BTreeMap<String, usize> {
    let mut counts = std::collections::BTreeMap::new();
    for r in corpus {
        let entry = counts.entry(r.review.product_model.clone()).or_insert(0);
        for (s, v) in r.sentences.iter().zip(&r.verdict.sentences) {
            if !v.hits.is_empty() {
                let words: Vec<(String, bool)> = s
                    .tokens
                    .iter()
                    .map(|t| {
                        (
                            t.surface.to_lowercase(),
                            t.tag.is_some_and(|g| g.symbol().starts_with("NN")),
                        )
                    })
                    .collect();
                for f in features {
                    let parts: Vec<&str> = f.split(' ').collect();
                    let found = words
                        .windows(parts.len())
                        .any(|w| w.iter().zip(&parts).all(|((word, noun), p)| *noun && word == p));
                    if found {
                        *entry += 1;
                    }
                }
            }
        }
    }
    counts
}
