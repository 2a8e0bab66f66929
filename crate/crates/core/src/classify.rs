//! Sentence and review polarity.
//!
//! A sentence is a sentiment sentence when it holds at least one lexicon hit
//! after part-of-speech filtering. Its score is the sum of signed hit
//! strengths after negation; a review's score is the sum of its sentence
//! scores. Labels follow the sign of the score, with zero meaning Neutral.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::corpus::{Polarity, Review};
use crate::lexicon::{apply_negation, find_hits, Lexicon, SentimentHit, Strength};
use crate::textproc::Token;

/// Exact signed score in millionths of a strength unit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "f64", try_from = "f64")]
pub struct Score(i64);

impl Score {
    pub const ZERO: Score = Score(0);

    pub fn from_micros(micros: i64) -> Score {
        Score(micros)
    }

    pub fn micros(self) -> i64 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / Strength::SCALE as f64
    }

    pub fn label(self) -> Polarity {
        match self.0.signum() {
            1 => Polarity::Positive,
            -1 => Polarity::Negative,
            _ => Polarity::Neutral,
        }
    }
}

impl Add for Score {
    type Output = Score;

    fn add(self, rhs: Score) -> Score {
        Score(self.0 + rhs.0)
    }
}

impl Sum for Score {
    fn sum<I: Iterator<Item = Score>>(iter: I) -> Score {
        iter.fold(Score::ZERO, Add::add)
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = Strength::SCALE as i64;
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        let frac = abs % scale as u64;
        let int = abs / scale as u64;
        if frac == 0 {
            write!(f, "{sign}{int}.0")
        } else {
            write!(f, "{sign}{int}.{}", format!("{frac:06}").trim_end_matches('0'))
        }
    }
}

impl From<Score> for f64 {
    fn from(s: Score) -> f64 {
        s.value()
    }
}

impl TryFrom<f64> for Score {
    type Error = String;

    fn try_from(v: f64) -> Result<Self, Self::Error> {
        if v.is_finite() {
            Ok(Score((v * Strength::SCALE as f64).round() as i64))
        } else {
            Err(format!("score {v} is not finite"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpinionKind {
    Direct,
    Comparative,
}

impl fmt::Display for OpinionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpinionKind::Direct => "Direct",
            OpinionKind::Comparative => "Comparative",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceVerdict {
    pub sentence_index: usize,
    pub is_sentiment: bool,
    pub hits: Vec<SentimentHit>,
    pub score: Score,
    pub label: Polarity,
    pub kind: OpinionKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JudgeOptions {
    /// Drop noun and pronoun tokens before lexicon lookup.
    pub pos_filter: bool,
}

impl Default for JudgeOptions {
    fn default() -> Self {
        JudgeOptions { pos_filter: true }
    }
}

/// Judges one tagged sentence.
pub fn judge_sentence(
    sentence_index: usize,
    tokens: &[Token],
    lexicon: &Lexicon,
    options: JudgeOptions,
) -> SentenceVerdict {
    let raw = find_hits(lexicon, tokens, options.pos_filter);
    let hits = apply_negation(tokens, &raw);
    let score = Score(hits.iter().map(SentimentHit::signed_micros).sum());
    SentenceVerdict {
        sentence_index,
        is_sentiment: !hits.is_empty(),
        label: score.label(),
        score,
        hits,
        kind: classify_kind(tokens),
    }
}

/// Comparative when the sentence has a comparative or superlative tag, or "than".
pub fn classify_kind(tokens: &[Token]) -> OpinionKind {
    let comparative = tokens
        .iter()
        .any(|t| t.normalized == "than" || t.tag.is_some_and(|tag| tag.is_comparative()));
    if comparative {
        OpinionKind::Comparative
    } else {
        OpinionKind::Direct
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReviewVerdict {
    pub review_id: String,
    pub sentences: Vec<SentenceVerdict>,
    pub aggregate: Score,
    pub predicted: Polarity,
    pub ground_truth: Polarity,
}

pub fn classify_review(verdicts: Vec<SentenceVerdict>, review: &Review) -> ReviewVerdict {
    let aggregate: Score = verdicts.iter().map(|v| v.score).sum();
    ReviewVerdict {
        review_id: review.review_id.clone(),
        sentences: verdicts,
        aggregate,
        predicted: aggregate.label(),
        ground_truth: review.ground_truth(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_reviews_str, IngestMode};
    use crate::lexicon::parse_lexicon;
    use crate::postag::PosTag::{self, *};

    fn tagged(words: &[(&str, PosTag)]) -> Vec<Token> {
        words.iter().map(|&(w, t)| Token::tagged(w, t)).collect()
    }

    fn seed_lexicon() -> Lexicon {
        parse_lexicon(include_str!("../data/lexicon.tsv"), "lexicon.tsv").unwrap()
    }

    fn verdict(score_micros: i64) -> SentenceVerdict {
        let score = Score(score_micros);
        SentenceVerdict {
            sentence_index: 0,
            is_sentiment: score_micros != 0,
            hits: Vec::new(),
            score,
            label: score.label(),
            kind: OpinionKind::Direct,
        }
    }

    fn review(rating: u8) -> Review {
        let line = format!(
            r#"{{"review_id":"R9","reviewer_id":"A","product_model":"P","timestamp":"2018-09-01T00:00:00Z","rating":{rating},"category":"Mobiles","text":""}}"#
        );
        parse_reviews_str(&line, IngestMode::Strict).unwrap().reviews()[0].clone()
    }

    #[test]
    fn battery_backup_is_negative_direct() {
        let tokens = tagged(&[
            ("Battery", NN),
            ("backup", NN),
            ("of", IN),
            ("this", DT),
            ("mobile", NN),
            ("is", VBZ),
            ("too", RB),
            ("bad", JJ),
            (".", Period),
        ]);
        let v = judge_sentence(0, &tokens, &seed_lexicon(), JudgeOptions::default());
        assert!(v.is_sentiment);
        assert_eq!(v.label, Polarity::Negative);
        assert_eq!(v.kind, OpinionKind::Direct);
        assert_eq!(v.hits.len(), 1);
        assert_eq!(v.hits[0].token_index, 7);
    }

    #[test]
    fn no_lexicon_word_is_neutral() {
        let tokens = tagged(&[
            ("The", DT),
            ("box", NN),
            ("contains", VBZ),
            ("a", DT),
            ("charger", NN),
            (".", Period),
        ]);
        let v = judge_sentence(0, &tokens, &seed_lexicon(), JudgeOptions::default());
        assert!(!v.is_sentiment);
        assert_eq!(v.label, Polarity::Neutral);
        assert_eq!(v.score, Score::ZERO);
    }

    #[test]
    fn verb_love_is_positive_noun_love_is_filtered() {
        let lex = seed_lexicon();
        let verb = tagged(&[("I", PRP), ("love", VBP), ("it", PRP), (".", Period)]);
        assert_eq!(
            judge_sentence(0, &verb, &lex, JudgeOptions::default()).label,
            Polarity::Positive
        );
        let noun = tagged(&[("The", DT), ("love", NN), ("of", IN), ("music", NN)]);
        let filtered = judge_sentence(0, &noun, &lex, JudgeOptions::default());
        assert!(!filtered.is_sentiment);
        let unfiltered = judge_sentence(0, &noun, &lex, JudgeOptions { pos_filter: false });
        assert_eq!(unfiltered.label, Polarity::Positive);
    }

    #[test]
    fn comparative_kind() {
        let t = tagged(&[("better", JJR), ("than", IN), ("my", PRPS), ("old", JJ), ("phone", NN)]);
        assert_eq!(classify_kind(&t), OpinionKind::Comparative);
        assert_eq!(classify_kind(&tagged(&[("than", IN)])), OpinionKind::Comparative);
        assert_eq!(classify_kind(&tagged(&[("most", RBS)])), OpinionKind::Comparative);
        assert_eq!(classify_kind(&[]), OpinionKind::Direct);
    }

    #[test]
    fn review_aggregation() {
        let r = review(5);
        let v = classify_review(vec![verdict(1_000_000), verdict(500_000), verdict(-1_000_000)], &r);
        assert_eq!(v.aggregate, Score(500_000));
        assert_eq!(v.predicted, Polarity::Positive);
        assert_eq!(v.ground_truth, Polarity::Positive);
        assert_eq!(classify_review(vec![], &r).predicted, Polarity::Neutral);
        let tie = classify_review(vec![verdict(1_000_000), verdict(-1_000_000)], &review(2));
        assert_eq!(tie.predicted, Polarity::Neutral);
        assert_eq!(tie.ground_truth, Polarity::Negative);
    }

    #[test]
    fn score_display() {
        assert_eq!(Score(500_000).to_string(), "0.5");
        assert_eq!(Score(-1_250_000).to_string(), "-1.25");
        assert_eq!(Score(0).to_string(), "0.0");
        assert_eq!(Score(-300_000).to_string(), "-0.3");
    }
}
