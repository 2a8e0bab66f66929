//! Treebank files: one sentence per line, space-separated `surface_TAG` pairs.
//!
//! The pair is split at its last underscore, so surfaces may contain `_` while
//! tags never do. Blank lines and lines starting with `#` are ignored.

use sha2::{Digest, Sha256};

use super::{PosTag, TaggerError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedSentence {
    tokens: Vec<(String, PosTag)>,
}

impl TaggedSentence {
    pub fn new(tokens: Vec<(String, PosTag)>) -> Result<TaggedSentence, TaggerError> {
        if tokens.is_empty() {
            return Err(TaggerError::EmptySentence);
        }
        if let Some((w, _)) = tokens
            .iter()
            .find(|(w, _)| w.is_empty() || w.contains(char::is_whitespace))
        {
            return Err(TaggerError::BadSurface(w.clone()));
        }
        Ok(TaggedSentence { tokens })
    }

    pub fn tokens(&self) -> &[(String, PosTag)] {
        &self.tokens
    }

    pub fn words(&self) -> Vec<&str> {
        self.tokens.iter().map(|(w, _)| w.as_str()).collect()
    }

    pub fn tags(&self) -> Vec<PosTag> {
        self.tokens.iter().map(|&(_, t)| t).collect()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn to_line(&self) -> String {
        self.tokens
            .iter()
            .map(|(w, t)| format!("{w}_{t}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn parse_treebank(text: &str) -> Result<Vec<TaggedSentence>, TaggerError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        for pair in trimmed.split_whitespace() {
            let (word, tag) = pair
                .rsplit_once('_')
                .filter(|(w, t)| !w.is_empty() && !t.is_empty())
                .ok_or_else(|| TaggerError::MalformedPair {
                    line: line_no,
                    pair: pair.to_string(),
                })?;
            let tag = tag.parse::<PosTag>().map_err(|e| TaggerError::UnknownTag {
                line: Some(line_no),
                tag: e.0,
            })?;
            tokens.push((word.to_string(), tag));
        }
        out.push(TaggedSentence::new(tokens)?);
    }
    Ok(out)
}

pub fn write_treebank(sentences: &[TaggedSentence]) -> String {
    let mut out = String::new();
    for s in sentences {
        out.push_str(&s.to_line());
        out.push('\n');
    }
    out
}

/// Fixed 90/10 split: every tenth sentence (index 9, 19, ...) is held out.
pub fn split_heldout(sentences: &[TaggedSentence]) -> (Vec<TaggedSentence>, Vec<TaggedSentence>) {
    let (held, train): (Vec<_>, Vec<_>) = sentences.iter().cloned().enumerate().partition(|(i, _)| i % 10 == 9);
    (
        train.into_iter().map(|(_, s)| s).collect(),
        held.into_iter().map(|(_, s)| s).collect(),
    )
}

/// SHA-256 over the canonical serialization of the sentences.
pub fn corpus_hash(sentences: &[TaggedSentence]) -> String {
    hex::encode(Sha256::digest(write_treebank(sentences).as_bytes()))
}
