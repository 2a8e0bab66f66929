//! Per-review analysis records shared by the tagging, classification and
//! summarization stages.

use serde::{Deserialize, Serialize};

use crate::classify::{classify_review, judge_sentence, JudgeOptions, ReviewVerdict};
use crate::corpus::Review;
use crate::lexicon::Lexicon;
use crate::postag::TaggerModel;
use crate::textproc::{segment_sentences, tokenize, Sentence, Token};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedSentenceRecord {
    #[serde(flatten)]
    pub sentence: Sentence,
    pub tokens: Vec<Token>,
}

/// A review after segmentation, tokenization and tagging.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedReview {
    pub review: Review,
    pub sentences: Vec<TaggedSentenceRecord>,
}

/// A tagged review together with its classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzedReview {
    pub review: Review,
    pub sentences: Vec<TaggedSentenceRecord>,
    pub verdict: ReviewVerdict,
}

pub fn tag_review(review: &Review, model: &TaggerModel) -> TaggedReview {
    let sentences = segment_sentences(&review.text)
        .into_iter()
        .map(|sentence| {
            let mut tokens = tokenize(&sentence);
            model.tag(&mut tokens);
            TaggedSentenceRecord { sentence, tokens }
        })
        .collect();
    TaggedReview {
        review: review.clone(),
        sentences,
    }
}

pub fn classify_tagged(tagged: TaggedReview, lexicon: &Lexicon, options: JudgeOptions) -> AnalyzedReview {
    let verdicts = tagged
        .sentences
        .iter()
        .map(|s| judge_sentence(s.sentence.index, &s.tokens, lexicon, options))
        .collect();
    let verdict = classify_review(verdicts, &tagged.review);
    AnalyzedReview {
        review: tagged.review,
        sentences: tagged.sentences,
        verdict,
    }
}
