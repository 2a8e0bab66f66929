use super::PosTag;

pub(crate) const START: [&str; 2] = ["-START-", "-START2-"];
pub(crate) const END: [&str; 2] = ["-END-", "-END2-"];

/// Lowercased words of a sentence padded with two boundary markers per side.
pub(crate) fn context(words: &[&str]) -> Vec<String> {
    START
        .iter()
        .map(|s| s.to_string())
        .chain(words.iter().map(|w| w.to_lowercase()))
        .chain(END.iter().map(|s| s.to_string()))
        .collect()
}

fn prefix(word: &str, n: usize) -> &str {
    match word.char_indices().nth(n) {
        Some((i, _)) => &word[..i],
        None => word,
    }
}

fn suffix(word: &str, n: usize) -> &str {
    let count = word.chars().count();
    if count <= n {
        return word;
    }
    let (i, _) = word.char_indices().nth(count - n).expect("index within word");
    &word[i..]
}

fn tag_name(tag: Option<PosTag>, fallback: &str) -> String {
    tag.map_or_else(|| fallback.to_string(), |t| t.symbol().to_string())
}

/// Feature strings for the token at `i` (an index into `surfaces`).
/// `ctx` is the padded lowercase context from [`context`].
pub(crate) fn extract(
    i: usize,
    surfaces: &[&str],
    ctx: &[String],
    prev: Option<PosTag>,
    prev2: Option<PosTag>,
) -> Vec<String> {
    let surface = surfaces[i];
    let c = i + 2;
    let word = &ctx[c];
    let t1 = tag_name(prev, START[0]);
    let t2 = tag_name(prev2, START[1]);

    let mut f = Vec::with_capacity(28);
    f.push("bias".to_string());
    f.push(format!("w={word}"));
    for n in 1..=3 {
        f.push(format!("p{n}={}", prefix(word, n)));
        f.push(format!("s{n}={}", suffix(word, n)));
    }
    f.push(format!("t-1={t1}"));
    f.push(format!("t-2={t2}"));
    f.push(format!("t-1,t-2={t1},{t2}"));
    f.push(format!("t-1,w={t1},{word}"));
    f.push(format!("w-1={}", ctx[c - 1]));
    f.push(format!("s3-1={}", suffix(&ctx[c - 1], 3)));
    f.push(format!("w-2={}", ctx[c - 2]));
    f.push(format!("w+1={}", ctx[c + 1]));
    f.push(format!("s3+1={}", suffix(&ctx[c + 1], 3)));
    f.push(format!("w+2={}", ctx[c + 2]));

    let first = surface.chars().next();
    if first.is_some_and(char::is_uppercase) {
        f.push(if i == 0 { "cap,first" } else { "cap" }.to_string());
        if surface.chars().all(|ch| !ch.is_lowercase()) && surface.chars().count() > 1 {
            f.push("allcaps".to_string());
        }
    }
    if surface.chars().any(|ch| ch.is_ascii_digit()) {
        f.push("digit".to_string());
    }
    if surface.contains('-') {
        f.push("hyphen".to_string());
    }
    f
}
