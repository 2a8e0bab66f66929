mod common;

use opinion_forge::bundled;
use opinion_forge::classify::{classify_review, judge_sentence, JudgeOptions, OpinionKind, Score, SentenceVerdict};
use opinion_forge::corpus::{parse_reviews_str, reviews_to_string, IngestMode, Polarity};
use opinion_forge::evaluate::confusion_matrix;
use opinion_forge::lexicon::{apply_negation, find_hits};
use opinion_forge::postag::PosTag;
use opinion_forge::summarize::{collect_mentions, extract_features};
use opinion_forge::textproc::Token;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn polarity() -> impl Strategy<Value = Polarity> {
    prop_oneof![
        Just(Polarity::Negative),
        Just(Polarity::Neutral),
        Just(Polarity::Positive)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn judgment_matches_linear_scan(seed in any::<u64>(), pos_filter in any::<bool>()) {
        let mut r = rng(seed);
        let entries = common::random_entries(&mut r, 1, 1_000_000);
        let lexicon = common::build_lexicon(&entries);
        let sentence = common::random_sentence(&mut r);
        let v = judge_sentence(0, &common::to_tokens(&sentence), &lexicon, JudgeOptions { pos_filter });
        let (is_sentiment, score, hits) = common::oracle_judge(&sentence, &entries, pos_filter);
        prop_assert_eq!(v.is_sentiment, is_sentiment);
        prop_assert_eq!(v.score.micros(), score);
        let got: Vec<(usize, bool)> = v.hits.iter().map(|h| (h.token_index, h.effective_polarity == Polarity::Positive)).collect();
        prop_assert_eq!(got, hits);
    }

    #[test]
    fn verdict_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let entries = common::random_entries(&mut r, 1, 1_000_000);
        let lexicon = common::build_lexicon(&entries);
        let v = judge_sentence(0, &common::to_tokens(&common::random_sentence(&mut r)), &lexicon, JudgeOptions::default());
        prop_assert_eq!(v.is_sentiment, !v.hits.is_empty());
        prop_assert_eq!(v.label == Polarity::Neutral, v.score == Score::ZERO);
        prop_assert_eq!(v.label == Polarity::Positive, v.score.micros() > 0);
        if !v.is_sentiment {
            prop_assert_eq!(v.score, Score::ZERO);
        }
        for h in &v.hits {
            prop_assert_ne!(h.effective_polarity, Polarity::Neutral);
        }
    }

    #[test]
    fn negation_is_an_involution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lexicon = common::build_lexicon(&common::random_entries(&mut r, 1, 1_000_000));
        let tokens = common::to_tokens(&common::random_sentence(&mut r));
        let raw = find_hits(&lexicon, &tokens, false);
        let once = apply_negation(&tokens, &raw);
        prop_assert_eq!(apply_negation(&tokens, &once), raw);
    }

    #[test]
    fn filtered_lookup_skips_nouns_and_pronouns(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lexicon = common::build_lexicon(&common::random_entries(&mut r, 1, 1_000_000));
        let word = *common::WORDS.choose(&mut r).unwrap();
        for tag in [PosTag::NN, PosTag::NNS, PosTag::NNP, PosTag::NNPS, PosTag::PRP, PosTag::PRPS, PosTag::WP, PosTag::WPS] {
            prop_assert!(lexicon.lookup(&Token::tagged(word, tag), true).is_none());
        }
    }

    #[test]
    fn lookup_ignores_case(seed in any::<u64>(), tag_index in 0..PosTag::COUNT, filter in any::<bool>()) {
        let mut r = rng(seed);
        let lexicon = common::build_lexicon(&common::random_entries(&mut r, 1, 1_000_000));
        let word = *common::WORDS.choose(&mut r).unwrap();
        let tag = PosTag::from_index(tag_index).unwrap();
        let upper = word.to_uppercase();
        prop_assert_eq!(
            lexicon.lookup(&Token::tagged(word, tag), filter),
            lexicon.lookup(&Token::tagged(&upper, tag), filter)
        );
    }

    #[test]
    fn positive_sentences_never_lower_a_review(scores in prop::collection::vec(-2_000_000i64..2_000_000, 0..8), extra in 1i64..2_000_000) {
        let review = common::review("R", "U", "P", 4);
        let verdict = |micros: i64| {
            let score = Score::from_micros(micros);
            SentenceVerdict { sentence_index: 0, is_sentiment: micros != 0, hits: Vec::new(), score, label: score.label(), kind: OpinionKind::Direct }
        };
        let base: Vec<_> = scores.iter().map(|&s| verdict(s)).collect();
        let before = classify_review(base.clone(), &review).predicted;
        let mut more = base;
        more.push(verdict(extra));
        let after = classify_review(more, &review).predicted;
        prop_assert!(after >= before);
    }

    #[test]
    fn confusion_matrix_ignores_order(pairs in prop::collection::vec((polarity(), polarity()), 0..200), seed in any::<u64>()) {
        let mut shuffled = pairs.clone();
        shuffled.shuffle(&mut rng(seed));
        let m = confusion_matrix(pairs.iter().copied());
        prop_assert_eq!(m, confusion_matrix(shuffled));
        prop_assert_eq!(m.total(), pairs.len() as u64);
        for g in Polarity::ALL {
            for p in Polarity::ALL {
                prop_assert_eq!(m.get(g, p), pairs.iter().filter(|&&x| x == (g, p)).count() as u64);
            }
        }
    }

    #[test]
    fn features_stable_under_review_order(seed in any::<u64>(), min_support in 1usize..4) {
        let mut r = rng(seed);
        let corpus = common::random_corpus(&mut r);
        let mut shuffled = corpus.clone();
        shuffled.shuffle(&mut r);
        prop_assert_eq!(extract_features(&corpus, min_support), extract_features(&shuffled, min_support));
    }

    #[test]
    fn units_point_at_sentiment_sentences(seed in any::<u64>()) {
        let mut r = rng(seed);
        let corpus = common::random_corpus(&mut r);
        let features = extract_features(&corpus, 1);
        let (units, neutral) = collect_mentions(&corpus, &features);
        for u in &units {
            let review = corpus.iter().find(|a| a.review.review_id == u.source.review_id).unwrap();
            prop_assert!(review.verdict.sentences[u.source.sentence_index].is_sentiment);
            prop_assert_eq!(&u.holder, &review.review.reviewer_id);
            prop_assert_ne!(u.polarity, Polarity::Neutral);
        }
        for n in &neutral {
            let review = corpus.iter().find(|a| a.review.review_id == n.source.review_id).unwrap();
            prop_assert!(!review.verdict.sentences[n.source.sentence_index].is_sentiment);
        }
        for f in &features {
            prop_assert!(f.support >= 1);
        }
    }

    #[test]
    fn tagger_output_is_total_and_deterministic(words in prop::collection::vec("[A-Za-z]{1,8}|[.,!?]", 0..20)) {
        let refs: Vec<&str> = words.iter().map(String::as_str).collect();
        let tags = bundled::model().tag_words(&refs);
        prop_assert_eq!(tags.len(), refs.len());
        prop_assert_eq!(tags, bundled::model().tag_words(&refs));
    }
}

#[test]
fn bundled_corpus_roundtrips() {
    let corpus = parse_reviews_str(bundled::REVIEWS_JSONL, IngestMode::Strict).unwrap();
    let again = parse_reviews_str(&reviews_to_string(corpus.reviews()), IngestMode::Strict).unwrap();
    assert_eq!(corpus.reviews(), again.reviews());
    assert_eq!(corpus.len(), 500);
}
