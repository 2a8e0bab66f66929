//! Sentence segmentation and tokenization.
//!
//! Offsets are byte offsets into UTF-8 text, so `&text[span.range()]` always
//! recovers the original substring.
//!
//! Segmentation splits after a run of `.`, `!` or `?` when the run is followed
//! by whitespace and an uppercase letter, or by the end of the text. A lone
//! `.` after a single letter ("J. Smith", "U.S. Army") is not a boundary.
//! Decimal points are never followed by whitespace, so "5.99" stays intact.
//!
//! Tokenization splits on whitespace, peels leading and trailing punctuation
//! into their own tokens (a run of one repeated character such as `...` stays
//! together), and splits contractions Penn-Treebank style: `don't` becomes
//! `do` + `n't`, `it's` becomes `it` + `'s`, `cannot` becomes `can` + `not`.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::postag::PosTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn range(self) -> Range<usize> {
        self.start..self.end
    }

    pub fn len(self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(self) -> bool {
        self.start == self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    /// Ordinal within the review.
    pub index: usize,
    pub text: String,
    /// Location of `text` within the review text.
    pub span: Span,
}

/// A token with its normalized form and (once tagged) its part of speech.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub normalized: String,
    /// Location of `surface` within the sentence text.
    pub span: Span,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<PosTag>,
}

impl Token {
    pub fn new(surface: &str, span: Span) -> Token {
        Token {
            surface: surface.to_string(),
            normalized: normalize(surface),
            span,
            tag: None,
        }
    }

    /// Builds an already-tagged token; used by tests and treebank conversion.
    pub fn tagged(surface: &str, tag: PosTag) -> Token {
        Token {
            tag: Some(tag),
            ..Token::new(surface, Span::new(0, surface.len()))
        }
    }
}

pub fn normalize(surface: &str) -> String {
    surface.to_lowercase()
}

const TERMINATORS: [char; 3] = ['.', '!', '?'];

pub fn segment_sentences(text: &str) -> Vec<Sentence> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut boundaries = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (_, c) = chars[i];
        if !TERMINATORS.contains(&c) {
            i += 1;
            continue;
        }
        let run_start = i;
        while i < chars.len() && TERMINATORS.contains(&chars[i].1) {
            i += 1;
        }
        let run_end_byte = chars.get(i).map_or(text.len(), |&(b, _)| b);
        if is_boundary(&chars, run_start, i) {
            boundaries.push(run_end_byte);
        }
    }

    let mut sentences = Vec::new();
    let mut start = 0;
    for end in boundaries.into_iter().chain(std::iter::once(text.len())) {
        if let Some(span) = trimmed_span(text, start, end) {
            sentences.push(Sentence {
                index: sentences.len(),
                text: text[span.range()].to_string(),
                span,
            });
        }
        start = end;
    }
    sentences
}

fn is_boundary(chars: &[(usize, char)], run_start: usize, run_end: usize) -> bool {
    let mut k = run_end;
    if k < chars.len() && !chars[k].1.is_whitespace() {
        return false;
    }
    while k < chars.len() && chars[k].1.is_whitespace() {
        k += 1;
    }
    if k < chars.len() && !chars[k].1.is_uppercase() {
        return false;
    }
    if k == chars.len() {
        return true;
    }
    // Single-letter abbreviation: one '.' after a letter that starts a word.
    let single_dot = run_end - run_start == 1 && chars[run_start].1 == '.';
    if single_dot && run_start >= 1 && chars[run_start - 1].1.is_alphabetic() {
        let before = run_start.checked_sub(2).map(|j| chars[j].1);
        if before.is_none_or(|b| b.is_whitespace() || b == '.') {
            return false;
        }
    }
    true
}

fn trimmed_span(text: &str, start: usize, end: usize) -> Option<Span> {
    let slice = &text[start..end];
    let lead = slice.len() - slice.trim_start().len();
    let trimmed = slice.trim();
    if trimmed.is_empty() {
        None
    } else {
        Some(Span::new(start + lead, start + lead + trimmed.len()))
    }
}

fn is_punct(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '\u{2018}'
                | '\u{2019}'
                | '\u{201C}'
                | '\u{201D}'
                | '\u{2026}'
                | '\u{2013}'
                | '\u{2014}'
                | '\u{00AB}'
                | '\u{00BB}'
                | '\u{00A1}'
                | '\u{00BF}'
        )
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

pub fn tokenize(sentence: &Sentence) -> Vec<Token> {
    tokenize_str(&sentence.text)
}

/// Tokenizes a string; spans are relative to `text`.
pub fn tokenize_str(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut chunk_start = None;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (c.is_whitespace(), chunk_start) {
            (true, Some(s)) => {
                split_chunk(text, s, i, &mut tokens);
                chunk_start = None;
            }
            (false, None) => chunk_start = Some(i),
            _ => {}
        }
    }
    tokens
}

fn split_chunk(text: &str, start: usize, end: usize, out: &mut Vec<Token>) {
    let chunk = &text[start..end];
    let mut lo = 0;
    let mut hi = chunk.len();

    // Leading punctuation runs.
    let mut leading = Vec::new();
    while let Some(c) = chunk[lo..hi].chars().next() {
        if !is_punct(c) {
            break;
        }
        let run: usize = chunk[lo..hi].chars().take_while(|&d| d == c).map(char::len_utf8).sum();
        leading.push(Span::new(start + lo, start + lo + run));
        lo += run;
    }

    // Trailing punctuation runs, collected right to left.
    let mut trailing = Vec::new();
    while let Some(c) = chunk[lo..hi].chars().next_back() {
        if !is_punct(c) {
            break;
        }
        let run: usize = chunk[lo..hi]
            .chars()
            .rev()
            .take_while(|&d| d == c)
            .map(char::len_utf8)
            .sum();
        trailing.push(Span::new(start + hi - run, start + hi));
        hi -= run;
    }

    for span in leading {
        out.push(Token::new(&text[span.range()], span));
    }
    if lo < hi {
        for span in split_contraction(&chunk[lo..hi], start + lo) {
            out.push(Token::new(&text[span.range()], span));
        }
    }
    for span in trailing.into_iter().rev() {
        out.push(Token::new(&text[span.range()], span));
    }
}

const CLITICS: [&str; 6] = ["s", "re", "ve", "ll", "d", "m"];

fn split_contraction(word: &str, offset: usize) -> Vec<Span> {
    let whole = vec![Span::new(offset, offset + word.len())];
    let lower = word.to_lowercase();
    if lower.len() != word.len() {
        // Case folding changed byte lengths; offsets would not line up.
        return whole;
    }
    if lower == "cannot" {
        return vec![Span::new(offset, offset + 3), Span::new(offset + 3, offset + 6)];
    }
    for negation in ["n't", "n\u{2019}t"] {
        if lower.ends_with(negation) && lower.len() > negation.len() {
            let cut = word.len() - negation.len();
            return vec![
                Span::new(offset, offset + cut),
                Span::new(offset + cut, offset + word.len()),
            ];
        }
    }
    if let Some((pos, c)) = word.char_indices().rev().find(|&(_, c)| is_apostrophe(c)) {
        let suffix = &lower[pos + c.len_utf8()..];
        if pos > 0 && CLITICS.contains(&suffix) {
            return vec![
                Span::new(offset, offset + pos),
                Span::new(offset + pos, offset + word.len()),
            ];
        }
    }
    whole
}
