use std::time::Instant;

use opinion_forge::bundled;
use opinion_forge::postag::{evaluate_tagger, split_heldout, train_tagger, PosTag, TaggerModel};

#[test]
fn bundled_split_accuracy() {
    let start = Instant::now();
    let (train, heldout) = split_heldout(&bundled::treebank());
    let model = train_tagger(&train, 5, 42).unwrap();
    let acc = evaluate_tagger(&model, &heldout).unwrap();
    eprintln!("held-out accuracy {acc:.4} in {:?}", start.elapsed());
    assert!(acc >= 0.85, "accuracy {acc}");
}

#[test]
fn improved_depends_on_context() {
    let m = bundled::model();
    assert_eq!(m.tag_words(&["they", "improved", "the", "battery"])[1], PosTag::VBD);
    assert_eq!(m.tag_words(&["the", "improved", "battery"])[1], PosTag::JJ);
}

#[test]
fn training_is_deterministic() {
    let (train, _) = split_heldout(&bundled::treebank());
    let a = train_tagger(&train, 2, 7).unwrap();
    let b = train_tagger(&train, 2, 7).unwrap();
    assert_eq!(a.hash(), b.hash());
    let c = train_tagger(&train, 2, 8).unwrap();
    assert_ne!(a.to_json(), c.to_json());
}

#[test]
fn model_round_trips_through_json() {
    let m = bundled::model();
    let back = TaggerModel::from_json(&m.to_json()).unwrap();
    assert_eq!(back.hash(), m.hash());
    let words = ["the", "screen", "is", "bright", "and", "sharp", "."];
    assert_eq!(back.tag_words(&words), m.tag_words(&words));
}

#[test]
fn version_mismatch_is_rejected() {
    let json = bundled::model()
        .to_json()
        .replacen("\"version\":1", "\"version\":99", 1);
    assert!(TaggerModel::from_json(&json).is_err());
}
