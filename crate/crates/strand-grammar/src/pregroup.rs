//! Pregroup parsing: which planar cup patterns reduce a string of word
//! types to the sentence object.
//!
//! Adjoints cancel in pairs, so a grammatical string splits as a reducible
//! span, the surviving sentence object, and another reducible span; cups
//! over the survivor would not be planar. Spans are checked by dynamic
//! programming over subspans and the matchings enumerated up to a cap.

use std::collections::BTreeMap;

use strand_core::{BBox, Diagram, Error, Ob, Ty};

use crate::lexicon::Dictionary;

/// All distinct parses of `words`, at most `cap` of them. A parse is the
/// tensor of the word states followed by one cup per cancelled pair,
/// applied leftmost-innermost; its codomain is the bare sentence type.
/// Ungrammatical input gives an empty list, a word outside the dictionary
/// an error.
pub fn parse(dict: &Dictionary, words: &[&str], cap: usize) -> Result<Vec<Diagram>, Error> {
    if cap == 0 {
        return Ok(Vec::new());
    }
    let mut readings = Vec::with_capacity(words.len());
    for w in words {
        let tys = dict.types(w).ok_or_else(|| Error::UnknownWord(w.to_string()))?;
        readings.push(tys.iter().cloned().collect::<Vec<Ty>>());
    }
    let mut out: Vec<Diagram> = Vec::new();
    let mut choice = vec![0usize; words.len()];
    loop {
        let picked: Vec<&Ty> = choice.iter().zip(&readings).map(|(&c, r)| &r[c]).collect();
        parses_of(words, &picked, &dict.sentence, cap, &mut out)?;
        if out.len() >= cap || !advance(&mut choice, &readings) {
            return Ok(out);
        }
    }
}

/// Odometer over the per-word readings; false once all combinations are
/// spent.
fn advance(choice: &mut [usize], readings: &[Vec<Ty>]) -> bool {
    for (c, r) in choice.iter_mut().zip(readings).rev() {
        *c += 1;
        if *c < r.len() {
            return true;
        }
        *c = 0;
    }
    false
}

fn parses_of(
    words: &[&str],
    picked: &[&Ty],
    sentence: &Ob,
    cap: usize,
    out: &mut Vec<Diagram>,
) -> Result<(), Error> {
    let flat: Vec<Ob> = picked.iter().flat_map(|t| t.iter().cloned()).collect();
    let mut memo = BTreeMap::new();
    for k in 0..flat.len() {
        if &flat[k] != sentence {
            continue;
        }
        let left = matchings(&flat, 0, k, cap, &mut memo);
        if left.is_empty() {
            continue;
        }
        let right = matchings(&flat, k + 1, flat.len(), cap, &mut memo);
        for l in &left {
            for r in &right {
                let pairs: Vec<(usize, usize)> = l.iter().chain(r).copied().collect();
                let d = build(words, picked, &flat, &pairs)?;
                if !out.contains(&d) {
                    out.push(d);
                }
                if out.len() >= cap {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// True when a cup may join these two objects side by side.
fn cancels(a: &Ob, b: &Ob) -> bool {
    *a == b.l()
}

/// Non-crossing perfect matchings of `flat[i..j]` by cancelling pairs, at
/// most `cap` of them per span. Position `i` must pair with some `k` at odd
/// distance splitting the span in two.
fn matchings(
    flat: &[Ob],
    i: usize,
    j: usize,
    cap: usize,
    memo: &mut BTreeMap<(usize, usize), Vec<Vec<(usize, usize)>>>,
) -> Vec<Vec<(usize, usize)>> {
    if i == j {
        return vec![vec![]];
    }
    if (j - i) % 2 == 1 {
        return vec![];
    }
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let mut found = Vec::new();
    'outer: for k in (i + 1..j).step_by(2) {
        if !cancels(&flat[i], &flat[k]) {
            continue;
        }
        for inner in matchings(flat, i + 1, k, cap, memo) {
            for rest in matchings(flat, k + 1, j, cap, memo) {
                let mut m = Vec::with_capacity(1 + inner.len() + rest.len());
                m.push((i, k));
                m.extend_from_slice(&inner);
                m.extend_from_slice(&rest);
                found.push(m);
                if found.len() >= cap {
                    break 'outer;
                }
            }
        }
    }
    memo.insert((i, j), found.clone());
    found
}

/// The diagram for one matching: word states side by side, then cups,
/// always contracting the leftmost pair that has become adjacent.
fn build(
    words: &[&str],
    picked: &[&Ty],
    flat: &[Ob],
    pairs: &[(usize, usize)],
) -> Result<Diagram, Error> {
    let mut d = Diagram::id(Ty::unit());
    for (w, t) in words.iter().zip(picked) {
        d = d.tensor(&Diagram::from_box(BBox::word(*w, Ty::unit(), (*t).clone())));
    }
    let mut alive: Vec<usize> = (0..flat.len()).collect();
    let mut cur: Vec<Ob> = flat.to_vec();
    let mut todo: Vec<(usize, usize)> = pairs.to_vec();
    todo.sort();
    while !todo.is_empty() {
        let at = todo
            .iter()
            .position(|&(a, b)| {
                alive.iter().position(|&p| p == a).and_then(|ia| alive.get(ia + 1)).copied()
                    == Some(b)
            })
            .expect("a non-crossing matching always has an adjacent pair");
        let (a, _) = todo.remove(at);
        let off = alive.iter().position(|&p| p == a).unwrap();
        let cup = BBox::cup(cur[off].clone(), cur[off + 1].clone())?;
        let layer = Diagram::id(Ty(cur[..off].to_vec()))
            .tensor(&Diagram::from_box(cup))
            .tensor(&Diagram::id(Ty(cur[off + 2..].to_vec())));
        d = d.then(&layer)?;
        alive.drain(off..off + 2);
        cur.drain(off..off + 2);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::parse_ty;
    use strand_core::BoxKind;

    fn toy() -> Dictionary {
        let mut d = Dictionary::new("s");
        d.push("Alice", parse_ty("n").unwrap());
        d.push("Bob", parse_ty("n").unwrap());
        d.push("loves", parse_ty("n.r@s@n.l").unwrap());
        d.push("who", parse_ty("n.r@n@s.l@n").unwrap());
        d
    }

    #[test]
    fn transitive_sentence_has_one_parse() {
        let dict = toy();
        let parses = parse(&dict, &["Alice", "loves", "Bob"], 16).unwrap();
        assert_eq!(parses.len(), 1);
        let p = &parses[0];
        assert_eq!(p.dom(), Ty::unit());
        assert_eq!(p.cod(), Ty::one(Ob::basic("s")));
        let cups =
            p.layers().iter().filter(|l| matches!(l.bx.kind, BoxKind::Cup)).count();
        assert_eq!(cups, 2);
    }

    #[test]
    fn word_salad_has_no_parse() {
        let dict = toy();
        assert!(parse(&dict, &["Alice", "Bob"], 16).unwrap().is_empty());
        assert!(parse(&dict, &["loves", "Alice", "Bob"], 16).unwrap().is_empty());
        assert!(parse(&dict, &[], 16).unwrap().is_empty());
    }

    #[test]
    fn unknown_words_are_reported() {
        let dict = toy();
        match parse(&dict, &["Alice", "hates", "Bob"], 16) {
            Err(Error::UnknownWord(w)) => assert_eq!(w, "hates"),
            other => panic!("expected unknown word, got {:?}", other),
        }
    }

    #[test]
    fn relative_pronouns_parse_inside_a_sentence() {
        let dict = toy();
        let parses = parse(&dict, &["Alice", "who", "loves", "Bob"], 16).unwrap();
        assert!(parses.is_empty(), "noun phrase, not a sentence");
        let mut with_np = toy();
        with_np.push("sleeps", parse_ty("n.r@s").unwrap());
        let parses = parse(&with_np, &["Alice", "who", "loves", "Bob", "sleeps"], 16).unwrap();
        assert_eq!(parses.len(), 1);
        assert_eq!(parses[0].cod(), Ty::one(Ob::basic("s")));
    }

    #[test]
    fn ambiguous_readings_multiply_parses() {
        let mut dict = Dictionary::new("s");
        dict.push("fish", parse_ty("n").unwrap());
        dict.push("fish", parse_ty("n.r@s").unwrap());
        let parses = parse(&dict, &["fish", "fish"], 16).unwrap();
        assert_eq!(parses.len(), 1);
        let capped = parse(&dict, &["fish", "fish"], 0).unwrap();
        assert!(capped.is_empty());
    }

    #[test]
    fn the_cap_bounds_the_parse_count() {
        let mut dict = Dictionary::new("s");
        dict.push("a", parse_ty("n").unwrap());
        dict.push("a", parse_ty("m").unwrap());
        dict.push("b", parse_ty("n.r@s").unwrap());
        dict.push("b", parse_ty("m.r@s").unwrap());
        // two readings each, two of the four combinations reduce
        assert_eq!(parse(&dict, &["a", "b"], 16).unwrap().len(), 2);
        assert_eq!(parse(&dict, &["a", "b"], 1).unwrap().len(), 1);
    }
}
