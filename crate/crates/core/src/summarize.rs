//! Feature-based opinion summaries.
//!
//! Features are noun unigrams and adjacent noun-noun bigrams ("battery life")
//! that occur in at least `min_support` sentiment sentences, or a fixed list
//! supplied by the user. Each mention of a feature in a sentiment sentence
//! takes the polarity of the nearest sentiment hit by token distance, with
//! ties going to the leftmost hit. Mentions in non-sentiment sentences count
//! as neutral.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::analysis::AnalyzedReview;
use crate::classify::SentenceVerdict;
use crate::corpus::{Polarity, Review};
use crate::textproc::Token;

pub const DEFAULT_MIN_SUPPORT: usize = 3;
pub const MAX_EXAMPLES: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feature {
    pub term: String,
    /// Number of sentiment sentences mentioning the term.
    pub support: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SourceRef {
    pub review_id: String,
    pub product_model: String,
    pub sentence_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpinionUnit {
    pub holder: String,
    pub object: String,
    pub polarity: Polarity,
    pub source: SourceRef,
    pub sentence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeutralMention {
    pub object: String,
    pub source: SourceRef,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureSummary {
    pub feature: String,
    pub positive: usize,
    pub negative: usize,
    pub neutral: usize,
    pub positive_examples: Vec<String>,
    pub negative_examples: Vec<String>,
}

impl FeatureSummary {
    pub fn opinions(&self) -> usize {
        self.positive + self.negative
    }
}

fn is_noun(t: &Token) -> bool {
    t.tag.is_some_and(|tag| tag.is_noun())
}

/// Noun unigrams and noun-noun bigrams of a sentence.
pub fn noun_terms(tokens: &[Token]) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for (i, t) in tokens.iter().enumerate() {
        if !is_noun(t) {
            continue;
        }
        out.insert(t.normalized.clone());
        if let Some(next) = tokens.get(i + 1).filter(|n| is_noun(n)) {
            out.insert(format!("{} {}", t.normalized, next.normalized));
        }
    }
    out
}

/// Token ranges where `term` occurs as a run of noun-tagged tokens.
fn occurrences(tokens: &[Token], term: &str) -> Vec<(usize, usize)> {
    let parts: Vec<&str> = term.split(' ').collect();
    if parts.is_empty() || tokens.len() < parts.len() {
        return Vec::new();
    }
    (0..=tokens.len() - parts.len())
        .filter(|&s| {
            parts
                .iter()
                .enumerate()
                .all(|(k, p)| tokens[s + k].normalized == *p && is_noun(&tokens[s + k]))
        })
        .map(|s| (s, s + parts.len()))
        .collect()
}

fn distance(index: usize, (start, end): (usize, usize)) -> usize {
    if index < start {
        start - index
    } else if index >= end {
        index + 1 - end
    } else {
        0
    }
}

/// Mines frequent noun features from sentiment sentences.
pub fn extract_features(corpus: &[AnalyzedReview], min_support: usize) -> Vec<Feature> {
    let mut support: BTreeMap<String, usize> = BTreeMap::new();
    for r in corpus {
        for (s, v) in r.sentences.iter().zip(&r.verdict.sentences) {
            if v.is_sentiment {
                for term in noun_terms(&s.tokens) {
                    *support.entry(term).or_default() += 1;
                }
            }
        }
    }
    let mut features: Vec<Feature> = support
        .into_iter()
        .filter(|&(_, n)| n >= min_support.max(1))
        .map(|(term, support)| Feature { term, support })
        .collect();
    sort_features(&mut features);
    features
}

fn sort_features(features: &mut [Feature]) {
    features.sort_by(|a, b| b.support.cmp(&a.support).then_with(|| a.term.cmp(&b.term)));
}

/// Support counts for a fixed feature list; no threshold is applied.
pub fn score_features(corpus: &[AnalyzedReview], terms: &[String]) -> Vec<Feature> {
    let mut unique: Vec<String> = Vec::new();
    let mut seen = HashSet::new();
    for t in terms {
        let t = normalize_feature(t);
        if !t.is_empty() && seen.insert(t.clone()) {
            unique.push(t);
        }
    }
    let mut features: Vec<Feature> = unique
        .into_iter()
        .map(|term| {
            let support = corpus
                .iter()
                .flat_map(|r| r.sentences.iter().zip(&r.verdict.sentences))
                .filter(|(s, v)| v.is_sentiment && !occurrences(&s.tokens, &term).is_empty())
                .count();
            Feature { term, support }
        })
        .collect();
    sort_features(&mut features);
    features
}

fn normalize_feature(term: &str) -> String {
    term.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase()
}

/// Parses a feature list file: one term per line, `#` comments.
pub fn parse_feature_list(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(normalize_feature)
        .collect()
}

/// Opinion units for one sentiment sentence.
pub fn associate_opinions(
    verdict: &SentenceVerdict,
    tokens: &[Token],
    sentence_text: &str,
    features: &[Feature],
    review: &Review,
) -> Vec<OpinionUnit> {
    if !verdict.is_sentiment {
        return Vec::new();
    }
    let mut units = Vec::new();
    for feature in features {
        let occ = occurrences(tokens, &feature.term);
        if occ.is_empty() {
            continue;
        }
        let nearest = verdict
            .hits
            .iter()
            .min_by_key(|h| {
                let d = occ
                    .iter()
                    .map(|&o| distance(h.token_index, o))
                    .min()
                    .unwrap_or(usize::MAX);
                (d, h.token_index)
            })
            .expect("sentiment sentences have hits");
        units.push(OpinionUnit {
            holder: review.reviewer_id.clone(),
            object: feature.term.clone(),
            polarity: nearest.effective_polarity,
            source: SourceRef {
                review_id: review.review_id.clone(),
                product_model: review.product_model.clone(),
                sentence_index: verdict.sentence_index,
            },
            sentence: sentence_text.to_string(),
        });
    }
    units
}

/// Features mentioned in a non-sentiment sentence.
pub fn neutral_mentions(
    verdict: &SentenceVerdict,
    tokens: &[Token],
    features: &[Feature],
    review: &Review,
) -> Vec<NeutralMention> {
    if verdict.is_sentiment {
        return Vec::new();
    }
    features
        .iter()
        .filter(|f| !occurrences(tokens, &f.term).is_empty())
        .map(|f| NeutralMention {
            object: f.term.clone(),
            source: SourceRef {
                review_id: review.review_id.clone(),
                product_model: review.product_model.clone(),
                sentence_index: verdict.sentence_index,
            },
        })
        .collect()
}

/// Opinion units and neutral mentions across a corpus, in corpus order.
pub fn collect_mentions(corpus: &[AnalyzedReview], features: &[Feature]) -> (Vec<OpinionUnit>, Vec<NeutralMention>) {
    let mut units = Vec::new();
    let mut neutral = Vec::new();
    for r in corpus {
        for (s, v) in r.sentences.iter().zip(&r.verdict.sentences) {
            units.extend(associate_opinions(v, &s.tokens, &s.sentence.text, features, &r.review));
            neutral.extend(neutral_mentions(v, &s.tokens, features, &r.review));
        }
    }
    (units, neutral)
}

/// Per-feature counts for one product. Inputs are expected in corpus order;
/// examples are the earliest sentences on each side.
pub fn summarize_product(
    product_model: &str,
    units: &[OpinionUnit],
    neutral: &[NeutralMention],
) -> Vec<FeatureSummary> {
    let mut by_feature: BTreeMap<&str, FeatureSummary> = BTreeMap::new();
    let blank = |term: &str| FeatureSummary {
        feature: term.to_string(),
        positive: 0,
        negative: 0,
        neutral: 0,
        positive_examples: Vec::new(),
        negative_examples: Vec::new(),
    };
    for u in units.iter().filter(|u| u.source.product_model == product_model) {
        let entry = by_feature.entry(u.object.as_str()).or_insert_with(|| blank(&u.object));
        let (count, examples) = match u.polarity {
            Polarity::Positive => (&mut entry.positive, &mut entry.positive_examples),
            Polarity::Negative => (&mut entry.negative, &mut entry.negative_examples),
            Polarity::Neutral => continue,
        };
        *count += 1;
        if examples.len() < MAX_EXAMPLES && !examples.contains(&u.sentence) {
            examples.push(u.sentence.clone());
        }
    }
    for n in neutral.iter().filter(|n| n.source.product_model == product_model) {
        by_feature
            .entry(n.object.as_str())
            .or_insert_with(|| blank(&n.object))
            .neutral += 1;
    }
    let mut out: Vec<FeatureSummary> = by_feature.into_values().collect();
    out.sort_by(|a, b| b.opinions().cmp(&a.opinions()).then_with(|| a.feature.cmp(&b.feature)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSummary {
    pub product_model: String,
    pub reviews: usize,
    pub opinion_units: usize,
    pub features: Vec<FeatureSummary>,
}

/// Summaries for every product (sorted by model name) or one named product.
pub fn summarize_corpus(corpus: &[AnalyzedReview], features: &[Feature], product: Option<&str>) -> Vec<ProductSummary> {
    let (units, neutral) = collect_mentions(corpus, features);
    let products: BTreeSet<&str> = match product {
        Some(p) => std::iter::once(p).collect(),
        None => corpus.iter().map(|r| r.review.product_model.as_str()).collect(),
    };
    products
        .into_iter()
        .map(|p| ProductSummary {
            product_model: p.to_string(),
            reviews: corpus.iter().filter(|r| r.review.product_model == p).count(),
            opinion_units: units.iter().filter(|u| u.source.product_model == p).count(),
            features: summarize_product(p, &units, &neutral),
        })
        .collect()
}

/// Compact fixed-width table of one product summary.
pub fn render_table(summary: &ProductSummary) -> String {
    let width = summary
        .features
        .iter()
        .map(|f| f.feature.chars().count())
        .chain(std::iter::once("feature".len()))
        .max()
        .unwrap_or(7);
    let mut out = format!(
        "{} ({} reviews, {} opinions)\n{:<width$}  {:>5}  {:>5}  {:>5}\n",
        summary.product_model, summary.reviews, summary.opinion_units, "feature", "pos", "neg", "neu"
    );
    for f in &summary.features {
        out.push_str(&format!(
            "{:<width$}  {:>5}  {:>5}  {:>5}\n",
            f.feature, f.positive, f.negative, f.neutral
        ));
    }
    out
}
