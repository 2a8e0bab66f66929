use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::features;
use super::treebank::{corpus_hash, TaggedSentence};
use super::{PosTag, TaggerError};
use crate::textproc::Token;

pub const MODEL_FORMAT: &str = "opinion-forge-tagger";
pub const MODEL_VERSION: u32 = 1;

/// Words seen at least this often with one dominant tag skip the perceptron.
const TAGDICT_MIN_FREQ: usize = 20;
const TAGDICT_MIN_RATIO: f64 = 0.97;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingMeta {
    pub epochs: u32,
    pub seed: u64,
    pub corpus_hash: String,
    pub sentences: usize,
    pub tokens: usize,
}

/// A trained greedy averaged-perceptron tagger. Immutable once built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaggerModel {
    format: String,
    version: u32,
    meta: TrainingMeta,
    classes: BTreeSet<PosTag>,
    tagdict: BTreeMap<String, PosTag>,
    weights: BTreeMap<String, BTreeMap<PosTag, f64>>,
}

#[derive(Debug, Clone, Copy, Default)]
struct Param {
    weight: f64,
    total: f64,
    stamp: u64,
}

struct Perceptron {
    classes: Vec<PosTag>,
    params: HashMap<String, HashMap<PosTag, Param>>,
    instances: u64,
}

impl Perceptron {
    fn predict(&self, feats: &[String]) -> PosTag {
        let mut scores = [0.0f64; PosTag::COUNT];
        for f in feats {
            if let Some(per_tag) = self.params.get(f) {
                for (tag, p) in per_tag {
                    scores[tag.index()] += p.weight;
                }
            }
        }
        argmax(&self.classes, &scores)
    }

    fn update(&mut self, truth: PosTag, guess: PosTag, feats: &[String]) {
        self.instances += 1;
        if truth == guess {
            return;
        }
        let now = self.instances;
        for f in feats {
            let per_tag = self.params.entry(f.clone()).or_default();
            for (tag, delta) in [(truth, 1.0), (guess, -1.0)] {
                let p = per_tag.entry(tag).or_default();
                p.total += (now - p.stamp) as f64 * p.weight;
                p.stamp = now;
                p.weight += delta;
            }
        }
    }

    fn averaged(self) -> BTreeMap<String, BTreeMap<PosTag, f64>> {
        let n = self.instances.max(1) as f64;
        let mut out = BTreeMap::new();
        for (feat, per_tag) in self.params {
            let mut kept = BTreeMap::new();
            for (tag, p) in per_tag {
                let total = p.total + (self.instances - p.stamp) as f64 * p.weight;
                let avg = total / n;
                if avg != 0.0 {
                    kept.insert(tag, avg);
                }
            }
            if !kept.is_empty() {
                out.insert(feat, kept);
            }
        }
        out
    }
}

/// Highest score among `classes`, first class wins ties. Falls back to `NN`
/// when `classes` is empty.
fn argmax(classes: &[PosTag], scores: &[f64; PosTag::COUNT]) -> PosTag {
    let mut best: Option<(PosTag, f64)> = None;
    for &c in classes {
        let s = scores[c.index()];
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((c, s));
        }
    }
    best.map_or(PosTag::NN, |(c, _)| c)
}

fn build_tagdict(sentences: &[TaggedSentence]) -> BTreeMap<String, PosTag> {
    let mut counts: BTreeMap<String, BTreeMap<PosTag, usize>> = BTreeMap::new();
    for s in sentences {
        for (w, t) in s.tokens() {
            *counts.entry(w.to_lowercase()).or_default().entry(*t).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .filter_map(|(w, tags)| {
            let n: usize = tags.values().sum();
            // BTreeMap iteration keeps the tie-break deterministic.
            let (&tag, &top) = tags.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))?;
            (n >= TAGDICT_MIN_FREQ && top as f64 / n as f64 >= TAGDICT_MIN_RATIO).then_some((w, tag))
        })
        .collect()
}

/// Trains a tagger. The result depends only on `(treebank, epochs, seed)`.
pub fn train_tagger(treebank: &[TaggedSentence], epochs: u32, seed: u64) -> Result<TaggerModel, TaggerError> {
    if treebank.is_empty() {
        return Err(TaggerError::EmptyTreebank);
    }
    if epochs == 0 {
        return Err(TaggerError::ZeroEpochs);
    }
    let tagdict = build_tagdict(treebank);
    let classes: BTreeSet<PosTag> = treebank.iter().flat_map(|s| s.tags()).collect();
    let mut model = Perceptron {
        classes: classes.iter().copied().collect(),
        params: HashMap::new(),
        instances: 0,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..treebank.len()).collect();
    for _ in 0..epochs {
        order.shuffle(&mut rng);
        for &idx in &order {
            let sentence = &treebank[idx];
            let words = sentence.words();
            let ctx = features::context(&words);
            let (mut prev, mut prev2) = (None, None);
            for (i, &(ref word, truth)) in sentence.tokens().iter().enumerate() {
                let guess = match tagdict.get(&word.to_lowercase()) {
                    Some(&t) => t,
                    None => {
                        let feats = features::extract(i, &words, &ctx, prev, prev2);
                        let guess = model.predict(&feats);
                        model.update(truth, guess, &feats);
                        guess
                    }
                };
                prev2 = prev;
                prev = Some(guess);
            }
        }
    }

    Ok(TaggerModel {
        format: MODEL_FORMAT.to_string(),
        version: MODEL_VERSION,
        meta: TrainingMeta {
            epochs,
            seed,
            corpus_hash: corpus_hash(treebank),
            sentences: treebank.len(),
            tokens: treebank.iter().map(TaggedSentence::len).sum(),
        },
        classes,
        tagdict,
        weights: model.averaged(),
    })
}

impl TaggerModel {
    pub fn meta(&self) -> &TrainingMeta {
        &self.meta
    }

    pub fn classes(&self) -> impl Iterator<Item = PosTag> + '_ {
        self.classes.iter().copied()
    }

    pub fn tagdict_len(&self) -> usize {
        self.tagdict.len()
    }

    pub fn feature_count(&self) -> usize {
        self.weights.len()
    }

    fn predict(&self, feats: &[String], surface: &str) -> PosTag {
        let mut scores = [0.0f64; PosTag::COUNT];
        let mut any = false;
        for f in feats {
            if let Some(per_tag) = self.weights.get(f) {
                for (tag, w) in per_tag {
                    scores[tag.index()] += w;
                    any |= *w != 0.0;
                }
            }
        }
        if !any {
            return if surface.chars().next().is_some_and(char::is_uppercase) {
                PosTag::NNP
            } else {
                PosTag::NN
            };
        }
        let classes: Vec<PosTag> = self.classes.iter().copied().collect();
        argmax(&classes, &scores)
    }

    /// Tags a sequence of words greedily left to right.
    pub fn tag_words(&self, words: &[&str]) -> Vec<PosTag> {
        let ctx = features::context(words);
        let mut out = Vec::with_capacity(words.len());
        let (mut prev, mut prev2) = (None, None);
        for (i, word) in words.iter().enumerate() {
            let tag = match self.tagdict.get(&ctx[i + 2]) {
                Some(&t) => t,
                None => self.predict(&features::extract(i, words, &ctx, prev, prev2), word),
            };
            out.push(tag);
            prev2 = prev;
            prev = Some(tag);
        }
        out
    }

    /// Fills in the tag of every token of one sentence.
    pub fn tag(&self, tokens: &mut [Token]) {
        let words: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        let tags = self.tag_words(&words);
        for (t, tag) in tokens.iter_mut().zip(tags) {
            t.tag = Some(tag);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<TaggerModel, TaggerError> {
        #[derive(Deserialize)]
        struct Header {
            format: String,
            version: u32,
        }
        let header: Header = serde_json::from_str(text).map_err(|e| TaggerError::BadModel(e.to_string()))?;
        if header.format != MODEL_FORMAT {
            return Err(TaggerError::BadModel(format!("unexpected format {:?}", header.format)));
        }
        if header.version != MODEL_VERSION {
            return Err(TaggerError::VersionMismatch {
                found: header.version,
                expected: MODEL_VERSION,
            });
        }
        serde_json::from_str(text).map_err(|e| TaggerError::BadModel(e.to_string()))
    }

    /// SHA-256 of the serialized model.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaggerScore {
    pub correct: usize,
    pub total: usize,
}

impl TaggerScore {
    pub fn accuracy(&self) -> f64 {
        self.correct as f64 / self.total as f64
    }
}

/// Token-level accuracy of `model` on `heldout`.
pub fn evaluate_tagger(model: &TaggerModel, heldout: &[TaggedSentence]) -> Result<f64, TaggerError> {
    score_tagger(model, heldout).map(|s| s.accuracy())
}

pub fn score_tagger(model: &TaggerModel, heldout: &[TaggedSentence]) -> Result<TaggerScore, TaggerError> {
    if heldout.is_empty() {
        return Err(TaggerError::EmptyHeldout);
    }
    let mut score = TaggerScore { correct: 0, total: 0 };
    for s in heldout {
        let predicted = model.tag_words(&s.words());
        score.total += s.len();
        score.correct += predicted.iter().zip(s.tags()).filter(|(p, g)| **p == *g).count();
    }
    Ok(score)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::postag::treebank::parse_treebank;

    fn tb(text: &str) -> Vec<TaggedSentence> {
        parse_treebank(text).unwrap()
    }

    #[test]
    fn empty_treebank_is_an_error() {
        assert!(matches!(train_tagger(&[], 5, 42), Err(TaggerError::EmptyTreebank)));
        let one = tb("good_JJ\n");
        assert!(matches!(train_tagger(&one, 0, 42), Err(TaggerError::ZeroEpochs)));
    }

    #[test]
    fn single_sentence_beats_majority_baseline() {
        let sentence = tb("The_DT fan_NN is_VBZ too_RB loud_JJ and_CC the_DT case_NN is_VBZ cheap_JJ ._.\n");
        // Majority-tag baseline by counting: each word gets its most frequent tag.
        let mut counts: BTreeMap<&str, BTreeMap<PosTag, usize>> = BTreeMap::new();
        for (w, t) in sentence[0].tokens() {
            *counts.entry(w.as_str()).or_default().entry(*t).or_default() += 1;
        }
        let baseline_correct = sentence[0]
            .tokens()
            .iter()
            .filter(|(w, t)| counts[w.as_str()].iter().max_by_key(|(_, n)| **n).map(|(t, _)| *t) == Some(*t))
            .count();
        let model = train_tagger(&sentence, 5, 42).unwrap();
        let score = score_tagger(&model, &sentence).unwrap();
        assert!(score.correct >= baseline_correct, "{score:?} vs {baseline_correct}");
    }

    #[test]
    fn unknown_words_fall_back_to_noun_tags() {
        let model = train_tagger(&tb("ok_UH\n"), 1, 0).unwrap();
        // No weights survive a single error-free pass, so every word falls back.
        assert_eq!(model.feature_count(), 0);
        assert_eq!(model.tag_words(&["Zorbix", "gadget"]), [PosTag::NNP, PosTag::NN]);
    }

    #[test]
    fn model_tags_only_seen_classes() {
        let data = tb("I_PRP like_VBP it_PRP ._.\nIt_PRP is_VBZ good_JJ ._.\n");
        let model = train_tagger(&data, 3, 7).unwrap();
        let classes: BTreeSet<_> = model.classes().collect();
        for t in model.tag_words(&["Something", "else", "entirely", "!"]) {
            assert!(classes.contains(&t));
        }
    }

    #[test]
    fn version_mismatch_is_rejected() {
        let model = train_tagger(&tb("I_PRP like_VBP it_PRP ._.\n"), 2, 1).unwrap();
        let json = model.to_json().replace("\"version\":1", "\"version\":99");
        assert!(matches!(
            TaggerModel::from_json(&json),
            Err(TaggerError::VersionMismatch { found: 99, expected: 1 })
        ));
        assert!(TaggerModel::from_json("{}").is_err());
    }

    #[test]
    fn evaluation_counts() {
        let data = tb("I_PRP like_VBP it_PRP ._.\n");
        let model = train_tagger(&data, 5, 1).unwrap();
        assert!(matches!(evaluate_tagger(&model, &[]), Err(TaggerError::EmptyHeldout)));
        // Gold = the model's own output gives accuracy 1.
        let own: Vec<(String, PosTag)> = ["We", "like", "cables"]
            .iter()
            .zip(model.tag_words(&["We", "like", "cables"]))
            .map(|(w, t)| (w.to_string(), t))
            .collect();
        let own = vec![TaggedSentence::new(own).unwrap()];
        assert_eq!(evaluate_tagger(&model, &own).unwrap(), 1.0);
        // A gold tag the model never predicts gives accuracy 0.
        let wrong = vec![TaggedSentence::new(vec![("like".into(), PosTag::SYM)]).unwrap()];
        assert_eq!(evaluate_tagger(&model, &wrong).unwrap(), 0.0);
    }
}
