//! Dictionaries mapping words to pregroup types, read from tab-separated
//! text.

use std::collections::{BTreeMap, BTreeSet};

use strand_core::{Error, Ob, Ty};

/// A pregroup lexicon: each word carries one or more types, plus the
/// distinguished sentence object that a parse must reduce to.
#[derive(Clone, Debug, PartialEq)]
pub struct Dictionary {
    pub entries: BTreeMap<String, BTreeSet<Ty>>,
    pub sentence: Ob,
}

impl Dictionary {
    pub fn new(sentence: &str) -> Self {
        Dictionary { entries: BTreeMap::new(), sentence: Ob::basic(sentence) }
    }

    /// Adds one type for `word`; repeated calls accumulate readings.
    pub fn push(&mut self, word: &str, ty: Ty) {
        self.entries.entry(word.to_string()).or_default().insert(ty);
    }

    pub fn types(&self, word: &str) -> Option<&BTreeSet<Ty>> {
        self.entries.get(word)
    }

    /// Reads the tab-separated format:
    ///
    /// ```text
    /// # comment
    /// !s s
    /// Alice<TAB>n
    /// loves<TAB>n.r@s@n.l
    /// ```
    ///
    /// One `!s` header names the sentence object; every other non-blank,
    /// non-comment line is `word<TAB>type`. Repeated words accumulate
    /// readings.
    pub fn read(src: &str) -> Result<Self, Error> {
        let mut sentence: Option<Ob> = None;
        let mut entries: BTreeMap<String, BTreeSet<Ty>> = BTreeMap::new();
        for (no, raw) in src.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("!s") {
                let name = rest.trim();
                let ty = parse_ty(name)
                    .map_err(|_| bad(no, "sentence declaration needs a basic type"))?;
                if ty.len() != 1 || ty[0].winding() != 0 {
                    return Err(bad(no, "sentence type must be a single basic object"));
                }
                if sentence.replace(ty[0].clone()).is_some() {
                    return Err(bad(no, "repeated !s declaration"));
                }
                continue;
            }
            let mut fields = line.split('\t');
            let (word, ty) = match (fields.next(), fields.next(), fields.next()) {
                (Some(w), Some(t), None) => (w.trim(), t.trim()),
                _ => return Err(bad(no, "expected word<TAB>type")),
            };
            if word.is_empty() || word.starts_with('!') {
                return Err(bad(no, "bad word"));
            }
            let ty = parse_ty(ty).map_err(|e| bad(no, &e.to_string()))?;
            entries.entry(word.to_string()).or_default().insert(ty);
        }
        let sentence =
            sentence.ok_or_else(|| Error::BadLexicon("missing !s declaration".to_string()))?;
        Ok(Dictionary { entries, sentence })
    }
}

fn bad(line: usize, msg: &str) -> Error {
    Error::BadLexicon(format!("line {}: {}", line + 1, msg))
}

/// Parses `n.r@s@n.l` style types: basic names joined by `@`, each carrying
/// zero or more `.l` / `.r` adjoint suffixes.
pub fn parse_ty(src: &str) -> Result<Ty, Error> {
    let src = src.trim();
    if src.is_empty() {
        return Err(Error::BadLexicon("empty type".to_string()));
    }
    let mut obs = Vec::new();
    for token in src.split('@') {
        let mut parts = token.trim().split('.');
        let name = parts.next().unwrap_or("").trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::BadLexicon(format!("bad object name in {:?}", token)));
        }
        let mut ob = Ob::basic(name);
        for suffix in parts {
            ob = match suffix.trim() {
                "l" => ob.l(),
                "r" => ob.r(),
                other => {
                    return Err(Error::BadLexicon(format!("bad adjoint suffix {:?}", other)))
                }
            };
        }
        obs.push(ob);
    }
    Ok(Ty(obs))
}
