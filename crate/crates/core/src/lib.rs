//! Lexicon-based opinion mining for product reviews: ingestion, sentence
//! segmentation and tokenization, part-of-speech tagging, polarity
//! classification, feature summaries and evaluation against star ratings.

pub mod analysis;
pub mod bundled;
pub mod classify;
pub mod corpus;
pub mod evaluate;
pub mod lexicon;
pub mod pipeline;
pub mod postag;
pub mod summarize;
pub mod textproc;
