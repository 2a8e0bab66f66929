//! Sentiment lexicon: loading, part-of-speech filtered lookup and negation.
//!
//! Lexicon files are UTF-8 TSV, one tab-separated entry per line:
//!
//! ```text
//! # term    polarity    strength    pos_constraint
//! bad     negative    0.8         *
//! love    positive    1.0         verb
//! ```
//!
//! `strength` is a decimal in (0, 1] with at most six fractional digits and is
//! held exactly as an integer count of millionths, so sentence scores are
//! exact sums. `pos_constraint` is `*`, one of `adj`, `adv`, `verb`, `noun`,
//! `intj`, or a single Penn tag such as `JJ`.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::corpus::Polarity;
use crate::postag::{PosTag, TagClass};
use crate::textproc::Token;

/// Tokens that flip the polarity of a following sentiment word.
pub const NEGATORS: [&str; 5] = ["not", "n't", "n\u{2019}t", "never", "no"];

/// How many tokens back a negator may sit and still apply.
pub const NEGATION_WINDOW: usize = 3;

/// Exact sentiment strength in millionths, within `1..=1_000_000`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "f64", try_from = "f64")]
pub struct Strength(u32);

impl Strength {
    pub const SCALE: u32 = 1_000_000;
    pub const MAX: Strength = Strength(Self::SCALE);

    pub fn from_micros(micros: u32) -> Option<Strength> {
        (1..=Self::SCALE).contains(&micros).then_some(Strength(micros))
    }

    pub fn micros(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / Self::SCALE as f64
    }
}

impl FromStr for Strength {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("strength {s:?} is not a decimal in (0, 1]");
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if (int.is_empty() && frac.is_empty())
            || !int.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        if frac.len() > 6 {
            return Err(format!("strength {s:?} has more than six decimal places"));
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac_micros: u64 = format!("{frac:0<6}").parse().map_err(|_| bad())?;
        let micros = int
            .checked_mul(Self::SCALE as u64)
            .and_then(|v| v.checked_add(frac_micros))
            .ok_or_else(bad)?;
        u32::try_from(micros)
            .ok()
            .and_then(Strength::from_micros)
            .ok_or_else(bad)
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / Self::SCALE;
        let frac = self.0 % Self::SCALE;
        if frac == 0 {
            write!(f, "{int}.0")
        } else {
            let digits = format!("{frac:06}");
            write!(f, "{int}.{}", digits.trim_end_matches('0'))
        }
    }
}

impl From<Strength> for f64 {
    fn from(s: Strength) -> f64 {
        s.value()
    }
}

impl TryFrom<f64> for Strength {
    type Error = String;

    fn try_from(v: f64) -> Result<Self, Self::Error> {
        let micros = (v * Self::SCALE as f64).round();
        if micros >= 1.0 && micros <= Self::SCALE as f64 {
            Ok(Strength(micros as u32))
        } else {
            Err(format!("strength {v} outside (0, 1]"))
        }
    }
}

/// Part-of-speech restriction on a lexicon entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PosConstraint {
    Any,
    Adjective,
    Adverb,
    Verb,
    Noun,
    Interjection,
    Tag(PosTag),
}

impl PosConstraint {
    pub fn matches(self, tag: PosTag) -> bool {
        match self {
            PosConstraint::Any => true,
            PosConstraint::Adjective => tag.is_adjective(),
            PosConstraint::Adverb => tag.is_adverb(),
            PosConstraint::Verb => tag.is_verb(),
            PosConstraint::Noun => tag.is_noun(),
            PosConstraint::Interjection => tag == PosTag::UH,
            PosConstraint::Tag(t) => t == tag,
        }
    }

    /// More specific constraints win when several entries match a token.
    fn specificity(self) -> u8 {
        match self {
            PosConstraint::Any => 0,
            PosConstraint::Tag(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for PosConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosConstraint::Any => f.write_str("*"),
            PosConstraint::Adjective => f.write_str("adj"),
            PosConstraint::Adverb => f.write_str("adv"),
            PosConstraint::Verb => f.write_str("verb"),
            PosConstraint::Noun => f.write_str("noun"),
            PosConstraint::Interjection => f.write_str("intj"),
            PosConstraint::Tag(t) => write!(f, "{t}"),
        }
    }
}

impl From<PosConstraint> for String {
    fn from(c: PosConstraint) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for PosConstraint {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl FromStr for PosConstraint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "*" | "" => PosConstraint::Any,
            "adj" => PosConstraint::Adjective,
            "adv" => PosConstraint::Adverb,
            "verb" => PosConstraint::Verb,
            "noun" => PosConstraint::Noun,
            "intj" => PosConstraint::Interjection,
            other => PosConstraint::Tag(other.parse().map_err(|_| format!("unknown pos constraint {other:?}"))?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub term: String,
    pub polarity: Polarity,
    pub strength: Strength,
    pub pos_constraint: PosConstraint,
}

impl LexiconEntry {
    pub fn new(
        term: &str,
        polarity: Polarity,
        strength: Strength,
        pos_constraint: PosConstraint,
    ) -> Result<LexiconEntry, String> {
        if term.is_empty() || term.chars().any(char::is_whitespace) {
            return Err(format!("term {term:?} must be a single non-empty token"));
        }
        if term.to_lowercase() != term {
            return Err(format!("term {term:?} must be lowercase"));
        }
        if polarity == Polarity::Neutral {
            return Err(format!("term {term:?}: lexicon entries cannot be neutral"));
        }
        Ok(LexiconEntry {
            term: term.to_string(),
            polarity,
            strength,
            pos_constraint,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{file}: line {line}: {message}")]
    Invalid { file: String, line: usize, message: String },
    #[error("{file}: duplicate entry {term:?} ({constraint}) on lines {first} and {second}")]
    Duplicate {
        file: String,
        term: String,
        constraint: PosConstraint,
        first: usize,
        second: usize,
    },
    #[error("reading lexicon {path}: {error}")]
    Io { path: String, error: std::io::Error },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    index: HashMap<String, Vec<usize>>,
    provenance: Provenance,
    warnings: Vec<String>,
}

impl Lexicon {
    /// Builds a lexicon from already-validated entries.
    pub fn from_entries(entries: Vec<LexiconEntry>, source: &str) -> Result<Lexicon, LexiconError> {
        let text: String = entries
            .iter()
            .map(|e| {
                format!(
                    "{}\t{}\t{}\t{}\n",
                    e.term,
                    polarity_word(e.polarity),
                    e.strength,
                    e.pos_constraint
                )
            })
            .collect();
        let lines: Vec<usize> = (1..=entries.len()).collect();
        Self::build(entries, &lines, source, &text)
    }

    fn build(entries: Vec<LexiconEntry>, lines: &[usize], source: &str, text: &str) -> Result<Lexicon, LexiconError> {
        let mut index: HashMap<String, Vec<usize>> = HashMap::new();
        let mut seen: HashMap<(&str, PosConstraint), usize> = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if let Some(&first) = seen.get(&(e.term.as_str(), e.pos_constraint)) {
                return Err(LexiconError::Duplicate {
                    file: source.to_string(),
                    term: e.term.clone(),
                    constraint: e.pos_constraint,
                    first: lines[first],
                    second: lines[i],
                });
            }
            seen.insert((e.term.as_str(), e.pos_constraint), i);
            index.entry(e.term.clone()).or_default().push(i);
        }
        let warnings = if entries.is_empty() {
            vec![format!("{source}: lexicon is empty")]
        } else {
            Vec::new()
        };
        Ok(Lexicon {
            entries,
            index,
            provenance: Provenance {
                source: source.to_string(),
                sha256: hex::encode(Sha256::digest(text.as_bytes())),
            },
            warnings,
        })
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Finds the entry for a tagged token.
    ///
    /// With `pos_filter` on, nouns and pronouns never match. Untagged tokens
    /// never match. When several entries for the term accept the tag, the
    /// most specific constraint wins.
    pub fn lookup(&self, token: &Token, pos_filter: bool) -> Option<&LexiconEntry> {
        let tag = token.tag?;
        if pos_filter && matches!(tag.class(), TagClass::Noun | TagClass::Pronoun) {
            return None;
        }
        self.index
            .get(&token.normalized)?
            .iter()
            .map(|&i| &self.entries[i])
            .filter(|e| e.pos_constraint.matches(tag))
            .max_by_key(|e| (e.pos_constraint.specificity(), std::cmp::Reverse(e.pos_constraint)))
    }
}

fn polarity_word(p: Polarity) -> &'static str {
    match p {
        Polarity::Positive => "positive",
        Polarity::Negative => "negative",
        Polarity::Neutral => "neutral",
    }
}

/// Parses lexicon TSV text; `source` names it in errors and provenance.
pub fn parse_lexicon(text: &str, source: &str) -> Result<Lexicon, LexiconError> {
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let invalid = |message: String| LexiconError::Invalid {
            file: source.to_string(),
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(invalid(format!(
                "expected 4 tab-separated fields, found {}",
                fields.len()
            )));
        }
        let polarity = match fields[1].trim().to_ascii_lowercase().as_str() {
            "positive" => Polarity::Positive,
            "negative" => Polarity::Negative,
            other => return Err(invalid(format!("polarity must be positive or negative, got {other:?}"))),
        };
        let strength: Strength = fields[2].parse().map_err(invalid)?;
        let constraint: PosConstraint = fields[3].parse().map_err(invalid)?;
        let entry = LexiconEntry::new(fields[0].trim(), polarity, strength, constraint).map_err(invalid)?;
        entries.push(entry);
        lines.push(line_no);
    }
    Lexicon::build(entries, &lines, source, text)
}

pub fn load_lexicon(path: &Path) -> Result<Lexicon, LexiconError> {
    let text = std::fs::read_to_string(path).map_err(|error| LexiconError::Io {
        path: path.display().to_string(),
        error,
    })?;
    parse_lexicon(&text, &path.display().to_string())
}

/// One sentiment word occurrence in a sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentimentHit {
    pub token_index: usize,
    pub entry: LexiconEntry,
    pub effective_polarity: Polarity,
    pub effective_strength: Strength,
}

impl SentimentHit {
    pub fn new(token_index: usize, entry: &LexiconEntry) -> SentimentHit {
        SentimentHit {
            token_index,
            effective_polarity: entry.polarity,
            effective_strength: entry.strength,
            entry: entry.clone(),
        }
    }

    /// Signed strength in millionths.
    pub fn signed_micros(&self) -> i64 {
        let s = self.effective_strength.micros() as i64;
        match self.effective_polarity {
            Polarity::Positive => s,
            Polarity::Negative => -s,
            Polarity::Neutral => 0,
        }
    }

    pub fn is_negated(&self) -> bool {
        self.effective_polarity != self.entry.polarity
    }
}

/// Looks up every token of a sentence.
pub fn find_hits(lexicon: &Lexicon, tokens: &[Token], pos_filter: bool) -> Vec<SentimentHit> {
    tokens
        .iter()
        .enumerate()
        .filter_map(|(i, t)| lexicon.lookup(t, pos_filter).map(|e| SentimentHit::new(i, e)))
        .collect()
}

fn is_negator(token: &Token) -> bool {
    NEGATORS.contains(&token.normalized.as_str())
}

fn is_clause_break(token: &Token) -> bool {
    token
        .surface
        .chars()
        .all(|c| matches!(c, '.' | ',' | ';' | ':' | '!' | '?'))
}

/// Flips the polarity of each hit preceded within [`NEGATION_WINDOW`] tokens
/// by a negator, unless punctuation intervenes. Applying it twice restores
/// the input.
pub fn apply_negation(tokens: &[Token], hits: &[SentimentHit]) -> Vec<SentimentHit> {
    hits.iter()
        .map(|hit| {
            let i = hit.token_index;
            let negated = (i.saturating_sub(NEGATION_WINDOW)..i)
                .rev()
                .map(|j| &tokens[j])
                .take_while(|t| !is_clause_break(t))
                .any(is_negator);
            let mut out = hit.clone();
            if negated {
                out.effective_polarity = out.effective_polarity.flipped();
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textproc::tokenize_str;

    fn lex(text: &str) -> Lexicon {
        parse_lexicon(text, "test").unwrap()
    }

    fn tagged(words: &[(&str, PosTag)]) -> Vec<Token> {
        words.iter().map(|&(w, t)| Token::tagged(w, t)).collect()
    }

    #[test]
    fn parses_entry_line() {
        let l = lex("bad\tnegative\t1.0\t*\n");
        assert_eq!(
            l.entries()[0],
            LexiconEntry {
                term: "bad".into(),
                polarity: Polarity::Negative,
                strength: Strength::MAX,
                pos_constraint: PosConstraint::Any,
            }
        );
        assert_eq!(l.provenance().source, "test");
        assert_eq!(l.provenance().sha256.len(), 64);
    }

    #[test]
    fn duplicate_cites_both_lines() {
        let err = parse_lexicon(
            "# c\nbad\tnegative\t1.0\t*\ngood\tpositive\t1\t*\nbad\tnegative\t0.5\t*\n",
            "x",
        )
        .unwrap_err();
        match err {
            LexiconError::Duplicate {
                first, second, term, ..
            } => {
                assert_eq!((first, second, term.as_str()), (2, 4, "bad"));
            }
            other => panic!("unexpected {other}"),
        }
        // Same term under a different constraint is a distinct key.
        assert_eq!(lex("love\tpositive\t1\tverb\nlove\tpositive\t1\tnoun\n").len(), 2);
    }

    #[test]
    fn rejects_bad_fields() {
        for bad in [
            "bad\tneutral\t1.0\t*",
            "bad\tnegative\t0\t*",
            "bad\tnegative\t1.5\t*",
            "bad\tnegative\tabc\t*",
            "bad\tnegative\t0.1234567\t*",
            "bad\tnegative\t1.0",
            "Bad\tnegative\t1.0\t*",
            "bad\tnegative\t1.0\tXX",
        ] {
            assert!(
                matches!(parse_lexicon(bad, "x"), Err(LexiconError::Invalid { line: 1, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn empty_file_warns() {
        let l = lex("# nothing here\n");
        assert!(l.is_empty());
        assert_eq!(l.warnings().len(), 1);
    }

    #[test]
    fn strength_is_exact() {
        assert_eq!("0.75".parse::<Strength>().unwrap().micros(), 750_000);
        assert_eq!(".5".parse::<Strength>().unwrap().micros(), 500_000);
        assert_eq!("0.000001".parse::<Strength>().unwrap().micros(), 1);
        assert_eq!("0.75".parse::<Strength>().unwrap().to_string(), "0.75");
        assert_eq!(Strength::MAX.to_string(), "1.0");
        assert!(".".parse::<Strength>().is_err());
    }

    #[test]
    fn lookup_applies_filters() {
        let l = lex("bad\tnegative\t1\t*\nlove\tpositive\t1\t*\nfast\tpositive\t0.5\tadj\n");
        let t = tagged(&[
            ("bad", PosTag::JJ),
            ("love", PosTag::NN),
            ("fast", PosTag::RB),
            ("fast", PosTag::JJ),
            ("Bad", PosTag::JJ),
        ]);
        assert_eq!(l.lookup(&t[0], true).unwrap().term, "bad");
        assert!(l.lookup(&t[1], true).is_none());
        assert!(l.lookup(&t[1], false).is_some());
        assert!(l.lookup(&t[2], true).is_none());
        assert!(l.lookup(&t[3], true).is_some());
        assert_eq!(l.lookup(&t[4], true), l.lookup(&t[0], true));
        let untagged = Token::new("bad", crate::textproc::Span::new(0, 3));
        assert!(l.lookup(&untagged, false).is_none());
    }

    #[test]
    fn most_specific_constraint_wins() {
        let l = lex("improved\tpositive\t0.4\tverb\nimproved\tpositive\t0.8\tadj\nworks\tpositive\t0.2\tVBZ\nworks\tpositive\t0.1\tverb\n");
        let t = tagged(&[
            ("improved", PosTag::VBD),
            ("improved", PosTag::JJ),
            ("works", PosTag::VBZ),
            ("works", PosTag::VBP),
        ]);
        assert_eq!(l.lookup(&t[0], true).unwrap().strength.to_string(), "0.4");
        assert_eq!(l.lookup(&t[1], true).unwrap().strength.to_string(), "0.8");
        assert_eq!(l.lookup(&t[2], true).unwrap().strength.to_string(), "0.2");
        assert_eq!(l.lookup(&t[3], true).unwrap().strength.to_string(), "0.1");
    }

    fn negated_polarities(text: &str) -> Vec<Polarity> {
        let l = lex("good\tpositive\t1\t*\n");
        let tokens: Vec<Token> = tokenize_str(text)
            .into_iter()
            .map(|mut t| {
                t.tag = Some(PosTag::JJ);
                t
            })
            .collect();
        apply_negation(&tokens, &find_hits(&l, &tokens, true))
            .iter()
            .map(|h| h.effective_polarity)
            .collect()
    }

    #[test]
    fn negation_window() {
        assert_eq!(negated_polarities("not good"), [Polarity::Negative]);
        assert_eq!(negated_polarities("good"), [Polarity::Positive]);
        assert_eq!(negated_polarities("not at all that good"), [Polarity::Positive]);
        assert_eq!(negated_polarities("never really that good"), [Polarity::Negative]);
        assert_eq!(negated_polarities("isn't good"), [Polarity::Negative]);
        assert_eq!(negated_polarities("not bad, good"), [Polarity::Positive]);
        assert_eq!(negated_polarities("good , not"), [Polarity::Positive]);
    }

    #[test]
    fn negation_is_an_involution() {
        let l = lex("good\tpositive\t1\t*\nbad\tnegative\t0.5\t*\n");
        let tokens = tagged(&[
            ("not", PosTag::RB),
            ("good", PosTag::JJ),
            ("and", PosTag::CC),
            ("bad", PosTag::JJ),
            ("no", PosTag::DT),
            ("good", PosTag::JJ),
        ]);
        let hits = find_hits(&l, &tokens, true);
        let once = apply_negation(&tokens, &hits);
        assert!(once[0].is_negated() && once[1].is_negated() && once[2].is_negated());
        assert_eq!(apply_negation(&tokens, &once), hits);
    }
}
