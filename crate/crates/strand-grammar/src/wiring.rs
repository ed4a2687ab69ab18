//! Rewrites the word states of a parse into wirings over a signature of
//! plain boxes, so that cups feed actual box ports instead of opaque
//! lexical blobs.
//!
//! A word whose type looks like a head with its dependents, all right
//! adjoints before a single plain object and all left adjoints after it,
//! becomes a box from the dependents to the head, bent into place by caps.
//! Anything else falls back to one box per wire, transposed as often as
//! the winding demands.

use std::collections::BTreeMap;

use strand_core::functor::{Functor, SyntaxCat};
use strand_core::{rigid, BBox, BoxKind, Diagram, Error, Ob, Ty};

/// Wiring for types of the shape `a_k.r .. a_1.r  y  c_1.l .. c_m.l`: caps
/// bend the dependents `a_1 .. a_k, c_1 .. c_m` into a box onto the head
/// `y`. None when the type is not of that shape.
pub fn dependency_wiring(name: &str, t: &Ty) -> Option<Diagram> {
    if t.iter().any(|o| matches!(o, Ob::Exp { .. })) {
        return None;
    }
    let head = t.iter().position(|o| o.winding() == 0)?;
    let deps_ok = t.iter().take(head).all(|o| o.winding() == 1)
        && t.iter().skip(head + 1).all(|o| o.winding() == -1);
    if !deps_ok {
        return None;
    }
    let prefix = t.slice(0..head);
    let suffix = t.slice(head + 1..t.len());
    let a = prefix.l();
    let c = suffix.r();
    let bx = BBox::plain(name, a.tensor(&c), Ty::one(t[head].clone()));
    let bent = rigid::caps(&prefix, &a)
        .expect("left adjoints cap against their source")
        .tensor(&rigid::caps(&c, &suffix).expect("right adjoints cap against their source"));
    let place = Diagram::id(prefix)
        .tensor(&Diagram::from_box(bx))
        .tensor(&Diagram::id(suffix));
    Some(bent.then(&place).expect("caps end where the box row starts"))
}

/// One box per wire: winding zero keeps a plain state or effect, others
/// recurse through a cap or cup on the unwinding adjoint. Multi-wire types
/// number their boxes `name_0, name_1, ..`.
pub fn trivial_wiring(name: &str, t: &Ty) -> Diagram {
    match t.len() {
        0 => Diagram::from_box(BBox::plain(name, Ty::unit(), Ty::unit())),
        1 => state(name, &t[0]),
        _ => {
            let mut d = Diagram::id(Ty::unit());
            for (i, o) in t.iter().enumerate() {
                d = d.tensor(&state(&format!("{}_{}", name, i), o));
            }
            d
        }
    }
}

/// `1 -> o`, unwinding one adjoint per step.
fn state(name: &str, o: &Ob) -> Diagram {
    let z = o.winding();
    if z == 0 {
        return Diagram::from_box(BBox::plain(name, Ty::unit(), Ty::one(o.clone())));
    }
    let ok = "adjacent windings cap against each other";
    if z < 0 {
        let b = o.r();
        Diagram::from_box(BBox::cap(b.clone(), o.clone()).expect(ok))
            .then(&effect(name, &b).tensor(&Diagram::id(Ty::one(o.clone()))))
            .expect(ok)
    } else {
        let b = o.l();
        Diagram::from_box(BBox::cap(o.clone(), b.clone()).expect(ok))
            .then(&Diagram::id(Ty::one(o.clone())).tensor(&effect(name, &b)))
            .expect(ok)
    }
}

/// `o -> 1`, mirror of [`state`].
fn effect(name: &str, o: &Ob) -> Diagram {
    let z = o.winding();
    if z == 0 {
        return Diagram::from_box(BBox::plain(name, Ty::one(o.clone()), Ty::unit()));
    }
    let ok = "adjacent windings cup against each other";
    if z < 0 {
        let b = o.r();
        Diagram::id(Ty::one(o.clone()))
            .tensor(&state(name, &b))
            .then(&Diagram::from_box(BBox::cup(o.clone(), b.clone()).expect(ok)))
            .expect(ok)
    } else {
        let b = o.l();
        state(name, &b)
            .tensor(&Diagram::id(Ty::one(o.clone())))
            .then(&Diagram::from_box(BBox::cup(b.clone(), o.clone()).expect(ok)))
            .expect(ok)
    }
}

/// Dependency wiring when the type allows it, one box per wire otherwise.
pub fn wire_word(name: &str, t: &Ty) -> Diagram {
    dependency_wiring(name, t).unwrap_or_else(|| trivial_wiring(name, t))
}

/// Replaces every word state in `parse` by its wiring; `overrides` gives
/// hand-made wirings for words the default treatment would flatten. The
/// rest of the diagram passes through unchanged.
pub fn wiring(parse: &Diagram, overrides: &BTreeMap<String, Diagram>) -> Result<Diagram, Error> {
    let cat = SyntaxCat;
    let ob = |o: &Ob| Ok(Ty::one(o.clone()));
    let ar = |b: &BBox| match &b.kind {
        BoxKind::Word { name, .. } => {
            if let Some(img) = overrides.get(name) {
                if img.dom() != b.dom || img.cod() != b.cod {
                    return Err(Error::TypeMismatch(
                        format!("{} -> {}", img.dom(), img.cod()),
                        format!("{} -> {}", b.dom, b.cod),
                    ));
                }
                Ok(img.clone())
            } else if b.dom.is_empty() {
                Ok(wire_word(name, &b.cod))
            } else {
                Ok(Diagram::from_box(b.clone()))
            }
        }
        _ => Ok(Diagram::from_box(b.clone())),
    };
    Functor { cat: &cat, ob: &ob, ar: &ar }.map(parse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::parse_ty;
    use crate::pregroup;

    fn plains(d: &Diagram) -> Vec<String> {
        d.layers()
            .iter()
            .filter_map(|l| match &l.bx.kind {
                BoxKind::Plain { name, .. } => Some(name.clone()),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn transitive_verbs_get_a_two_port_box() {
        let t = parse_ty("n.r@s@n.l").unwrap();
        let d = dependency_wiring("loves", &t).unwrap();
        assert_eq!(d.dom(), Ty::unit());
        assert_eq!(d.cod(), t);
        let kinds: Vec<_> = d.layers().iter().map(|l| &l.bx.kind).collect();
        assert!(matches!(kinds[0], BoxKind::Cap));
        assert!(matches!(kinds[1], BoxKind::Cap));
        let bx = &d.layers()[2].bx;
        assert_eq!(bx.dom, parse_ty("n@n").unwrap());
        assert_eq!(bx.cod, parse_ty("s").unwrap());
    }

    #[test]
    fn nouns_are_their_own_wiring() {
        let t = parse_ty("n").unwrap();
        let d = dependency_wiring("Alice", &t).unwrap();
        assert_eq!(d.layers().len(), 1);
        assert_eq!(d.cod(), t);
    }

    #[test]
    fn two_heads_defeat_the_dependency_shape() {
        assert!(dependency_wiring("who", &parse_ty("n.r@n@s.l@n").unwrap()).is_none());
        assert!(dependency_wiring("whom", &parse_ty("n.r@n@n.l.l@s.l").unwrap()).is_none());
        assert!(dependency_wiring("loves", &parse_ty("n.r@s@n.l").unwrap()).is_some());
    }

    #[test]
    fn fallback_wiring_typechecks_any_winding() {
        for src in ["n.r@n@s.l@n", "n.r@n@n.l.l@s.l", "n.l.l.l", "s"] {
            let t = parse_ty(src).unwrap();
            let d = trivial_wiring("w", &t);
            assert_eq!(d.dom(), Ty::unit(), "{}", src);
            assert_eq!(d.cod(), t, "{}", src);
            assert_eq!(plains(&d).len(), t.len(), "one named box per wire in {}", src);
        }
    }

    #[test]
    fn a_wired_sentence_normalizes_to_nouns_feeding_the_verb() {
        let mut dict = crate::lexicon::Dictionary::new("s");
        dict.push("Alice", parse_ty("n").unwrap());
        dict.push("Bob", parse_ty("n").unwrap());
        dict.push("loves", parse_ty("n.r@s@n.l").unwrap());
        let parses = pregroup::parse(&dict, &["Alice", "loves", "Bob"], 16).unwrap();
        let wired = wiring(&parses[0], &BTreeMap::new()).unwrap();
        let got = rigid::normal_form(&wired, true).unwrap();

        let n = parse_ty("n").unwrap();
        let verb = BBox::plain("loves", parse_ty("n@n").unwrap(), parse_ty("s").unwrap());
        let expected = Diagram::from_box(BBox::plain("Alice", Ty::unit(), n.clone()))
            .tensor(&Diagram::from_box(BBox::plain("Bob", Ty::unit(), n)))
            .then(&Diagram::from_box(verb))
            .unwrap();
        assert_eq!(got, rigid::normal_form(&expected, true).unwrap());
    }

    #[test]
    fn overrides_must_match_the_word_type() {
        let mut dict = crate::lexicon::Dictionary::new("s");
        dict.push("Alice", parse_ty("n").unwrap());
        dict.push("sleeps", parse_ty("n.r@s").unwrap());
        let parses = pregroup::parse(&dict, &["Alice", "sleeps"], 16).unwrap();
        let mut over = BTreeMap::new();
        over.insert(
            "Alice".to_string(),
            Diagram::from_box(BBox::plain("alice", Ty::unit(), parse_ty("s").unwrap())),
        );
        assert!(matches!(
            wiring(&parses[0], &over),
            Err(Error::TypeMismatch(_, _))
        ));
        over.insert(
            "Alice".to_string(),
            Diagram::from_box(BBox::plain("alice", Ty::unit(), parse_ty("n").unwrap())),
        );
        let wired = wiring(&parses[0], &over).unwrap();
        assert!(plains(&wired).contains(&"alice".to_string()));
    }
}
