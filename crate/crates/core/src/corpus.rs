//! Review records, JSON-lines ingestion and corpus statistics.
//!
//! A review file holds one JSON object per line:
//!
//! ```text
//! {"review_id":"R0001","reviewer_id":"A8UA0XBFEMRK5W","product_model":"MOTO-G6","timestamp":"2018-08-22T04:06:22Z","rating":5,"category":"Mobiles","text":"I love it."}
//! ```
//!
//! Blank lines and lines whose first non-space character is `#` are skipped.
//! `review_id` is optional and defaults to `line-<n>`; unknown keys are ignored.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

/// Product category. Parsing is case-insensitive on the canonical names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Category {
    Mobiles,
    Computers,
    FlashDrives,
    Electronics,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::Mobiles,
        Category::Computers,
        Category::FlashDrives,
        Category::Electronics,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Mobiles => "Mobiles",
            Category::Computers => "Computers",
            Category::FlashDrives => "FlashDrives",
            Category::Electronics => "Electronics",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| FieldError::UnknownCategory(s.to_string()))
    }
}

/// Three-way sentiment label, ordered `Negative < Neutral < Positive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Polarity {
    Negative,
    Neutral,
    Positive,
}

impl Polarity {
    pub const ALL: [Polarity; 3] = [Polarity::Negative, Polarity::Neutral, Polarity::Positive];

    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Negative => "Negative",
            Polarity::Neutral => "Neutral",
            Polarity::Positive => "Positive",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Swaps Positive and Negative; Neutral is its own opposite.
    pub fn flipped(self) -> Polarity {
        match self {
            Polarity::Negative => Polarity::Positive,
            Polarity::Neutral => Polarity::Neutral,
            Polarity::Positive => Polarity::Negative,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Polarity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polarity::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown polarity {s:?}"))
    }
}

/// Star rating on the 1..=5 scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Rating(u8);

impl Rating {
    pub fn new(stars: i64) -> Result<Rating, CorpusError> {
        if (1..=5).contains(&stars) {
            Ok(Rating(stars as u8))
        } else {
            Err(CorpusError::RatingOutOfRange(stars))
        }
    }

    pub fn stars(self) -> u8 {
        self.0
    }

    pub fn polarity(self) -> Polarity {
        match self.0 {
            1 | 2 => Polarity::Negative,
            3 => Polarity::Neutral,
            _ => Polarity::Positive,
        }
    }
}

impl TryFrom<i64> for Rating {
    type Error = CorpusError;

    fn try_from(value: i64) -> Result<Self, Self::Error> {
        Rating::new(value)
    }
}

impl From<Rating> for i64 {
    fn from(r: Rating) -> i64 {
        r.0 as i64
    }
}

/// Maps star ratings to ground-truth polarity: 1-2 Negative, 3 Neutral, 4-5 Positive.
pub fn rating_to_polarity(stars: i64) -> Result<Polarity, CorpusError> {
    Rating::new(stars).map(Rating::polarity)
}

/// One customer review.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Review {
    pub review_id: String,
    pub reviewer_id: String,
    pub product_model: String,
    #[serde(with = "timestamp_format")]
    pub timestamp: DateTime<Utc>,
    pub rating: Rating,
    pub category: Category,
    pub text: String,
}

impl Review {
    pub fn ground_truth(&self) -> Polarity {
        self.rating.polarity()
    }
}

mod timestamp_format {
    use chrono::{DateTime, SecondsFormat, Utc};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(ts: &DateTime<Utc>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&ts.to_rfc3339_opts(SecondsFormat::AutoSi, true))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DateTime<Utc>, D::Error> {
        let raw = String::deserialize(d)?;
        super::parse_timestamp(&raw).map_err(serde::de::Error::custom)
    }
}

fn parse_timestamp(raw: &str) -> Result<DateTime<Utc>, FieldError> {
    DateTime::parse_from_rfc3339(raw.trim())
        .map(|t| t.with_timezone(&Utc))
        .map_err(|_| FieldError::BadTimestamp(raw.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("missing")]
    Missing,
    #[error("expected {0}")]
    WrongType(&'static str),
    #[error("empty")]
    Empty,
    #[error("{0} is outside 1..=5")]
    OutOfRange(i64),
    #[error("bad timestamp {0:?}")]
    BadTimestamp(String),
    #[error("unknown category {0:?}")]
    UnknownCategory(String),
}

/// A rejected input line. `field` is `None` when the line is not a JSON object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct LineError {
    pub line: usize,
    pub field: Option<&'static str>,
    pub message: String,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Some(field) => write!(f, "line {}: {}: {}", self.line, field, self.message),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Line(#[from] LineError),
    #[error("rating {0} is outside the 1..=5 star scale")]
    RatingOutOfRange(i64),
    #[error("reading reviews: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum IngestMode {
    /// Fail on the first invalid line.
    #[default]
    Strict,
    /// Skip invalid lines and record them in [`Corpus::rejected`].
    Lenient,
}

/// Per-category counts plus distinct reviewer and product counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub total: usize,
    pub mobiles: usize,
    pub computers: usize,
    pub flash_drives: usize,
    pub electronics: usize,
    pub distinct_reviewers: usize,
    pub distinct_products: usize,
}

impl Manifest {
    pub fn count(&self, category: Category) -> usize {
        match category {
            Category::Mobiles => self.mobiles,
            Category::Computers => self.computers,
            Category::FlashDrives => self.flash_drives,
            Category::Electronics => self.electronics,
        }
    }

    /// `category,count` CSV with one row per category in canonical order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("category,count\n");
        for c in Category::ALL {
            out.push_str(&format!("{},{}\n", c, self.count(c)));
        }
        out
    }

    /// Parses the body written by [`Manifest::to_csv`]. Comment lines are skipped.
    /// Only the category counts are recovered.
    pub fn category_counts_from_csv(text: &str) -> Result<[usize; 4], String> {
        let mut counts = [None; 4];
        let mut rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        match rows.next() {
            Some("category,count") => {}
            other => return Err(format!("bad manifest header {other:?}")),
        }
        for row in rows {
            let (name, count) = row.split_once(',').ok_or_else(|| format!("bad manifest row {row:?}"))?;
            let cat: Category = name.parse().map_err(|e: FieldError| e.to_string())?;
            let n = count
                .trim()
                .parse::<usize>()
                .map_err(|e| format!("bad count in {row:?}: {e}"))?;
            if counts[cat.index()].replace(n).is_some() {
                return Err(format!("duplicate manifest row for {cat}"));
            }
        }
        let mut out = [0; 4];
        for c in Category::ALL {
            out[c.index()] = counts[c.index()].ok_or_else(|| format!("manifest lacks {c}"))?;
        }
        Ok(out)
    }
}

/// Corpus statistics. Category counts always sum to `reviews.len()`.
pub fn corpus_stats(reviews: &[Review]) -> Manifest {
    let mut per = [0usize; 4];
    let mut reviewers = BTreeSet::new();
    let mut products = BTreeSet::new();
    for r in reviews {
        per[r.category.index()] += 1;
        reviewers.insert(r.reviewer_id.as_str());
        products.insert(r.product_model.as_str());
    }
    Manifest {
        total: reviews.len(),
        mobiles: per[0],
        computers: per[1],
        flash_drives: per[2],
        electronics: per[3],
        distinct_reviewers: reviewers.len(),
        distinct_products: products.len(),
    }
}

/// An ordered, validated set of reviews.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    reviews: Vec<Review>,
    lines: Vec<usize>,
    manifest: Manifest,
    rejected: Vec<LineError>,
}

impl Corpus {
    pub fn from_reviews(reviews: Vec<Review>) -> Corpus {
        let lines = (1..=reviews.len()).collect();
        let manifest = corpus_stats(&reviews);
        Corpus {
            reviews,
            lines,
            manifest,
            rejected: Vec::new(),
        }
    }

    pub fn reviews(&self) -> &[Review] {
        &self.reviews
    }

    pub fn manifest(&self) -> &Manifest {
        &self.manifest
    }

    /// Lines skipped in lenient mode.
    pub fn rejected(&self) -> &[LineError] {
        &self.rejected
    }

    /// Input line number the `i`-th review was read from.
    pub fn line_of(&self, i: usize) -> Option<usize> {
        self.lines.get(i).copied()
    }

    pub fn len(&self) -> usize {
        self.reviews.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reviews.is_empty()
    }
}

/// Reads a JSON-lines review stream, preserving input order.
pub fn parse_reviews<R: BufRead>(reader: R, mode: IngestMode) -> Result<Corpus, CorpusError> {
    let mut reviews = Vec::new();
    let mut lines = Vec::new();
    let mut rejected = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match parse_review_line(trimmed, line_no) {
            Ok(review) => {
                reviews.push(review);
                lines.push(line_no);
            }
            Err(e) if mode == IngestMode::Lenient => rejected.push(e),
            Err(e) => return Err(e.into()),
        }
    }
    let manifest = corpus_stats(&reviews);
    Ok(Corpus {
        reviews,
        lines,
        manifest,
        rejected,
    })
}

pub fn parse_reviews_str(text: &str, mode: IngestMode) -> Result<Corpus, CorpusError> {
    parse_reviews(text.as_bytes(), mode)
}

fn parse_review_line(line: &str, line_no: usize) -> Result<Review, LineError> {
    let err = |field: Option<&'static str>, message: String| LineError {
        line: line_no,
        field,
        message,
    };
    let value: Value = serde_json::from_str(line).map_err(|e| err(None, format!("malformed record: {e}")))?;
    let Value::Object(obj) = value else {
        return Err(err(None, "record is not a JSON object".into()));
    };
    let field_err = |field: &'static str, e: FieldError| err(Some(field), e.to_string());

    let review_id = match obj.get("review_id") {
        None | Some(Value::Null) => format!("line-{line_no}"),
        Some(_) => required_str(&obj, "review_id").map_err(|e| field_err("review_id", e))?,
    };
    let reviewer_id = required_str(&obj, "reviewer_id").map_err(|e| field_err("reviewer_id", e))?;
    let product_model = required_str(&obj, "product_model").map_err(|e| field_err("product_model", e))?;
    let timestamp = match obj.get("timestamp") {
        None | Some(Value::Null) => Err(FieldError::Missing),
        Some(Value::String(s)) => parse_timestamp(s),
        Some(_) => Err(FieldError::WrongType("string")),
    }
    .map_err(|e| field_err("timestamp", e))?;
    let rating = match obj.get("rating") {
        None | Some(Value::Null) => Err(FieldError::Missing),
        Some(Value::Number(n)) => match n.as_i64() {
            Some(stars) if (1..=5).contains(&stars) => Ok(Rating(stars as u8)),
            Some(stars) => Err(FieldError::OutOfRange(stars)),
            None => Err(FieldError::WrongType("integer")),
        },
        Some(_) => Err(FieldError::WrongType("integer")),
    }
    .map_err(|e| field_err("rating", e))?;
    let category = match obj.get("category") {
        None | Some(Value::Null) => Err(FieldError::Missing),
        Some(Value::String(s)) => s.parse::<Category>(),
        Some(_) => Err(FieldError::WrongType("string")),
    }
    .map_err(|e| field_err("category", e))?;
    let text = match obj.get("text") {
        None | Some(Value::Null) => Err(FieldError::Missing),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(FieldError::WrongType("string")),
    }
    .map_err(|e| field_err("text", e))?;

    Ok(Review {
        review_id,
        reviewer_id,
        product_model,
        timestamp,
        rating,
        category,
        text,
    })
}

fn required_str(obj: &Map<String, Value>, key: &str) -> Result<String, FieldError> {
    match obj.get(key) {
        None | Some(Value::Null) => Err(FieldError::Missing),
        Some(Value::String(s)) if s.trim().is_empty() => Err(FieldError::Empty),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(FieldError::WrongType("string")),
    }
}

/// Writes reviews in the same JSON-lines format [`parse_reviews`] reads.
pub fn write_reviews<W: Write>(reviews: &[Review], mut out: W) -> io::Result<()> {
    for r in reviews {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn reviews_to_string(reviews: &[Review]) -> String {
    let mut buf = Vec::new();
    write_reviews(reviews, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Canonical timestamp rendering used in every artifact.
pub fn format_timestamp(ts: &DateTime<Utc>) -> String {
    ts.to_rfc3339_opts(SecondsFormat::AutoSi, true)
}
