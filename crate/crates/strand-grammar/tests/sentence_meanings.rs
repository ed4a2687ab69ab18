//! The worked sentences end to end: distributional score, quantum reading,
//! and the snake-removed relative pronoun phrase.

use std::collections::BTreeMap;

use strand_core::{rigid, BBox, Diagram, Ob, Ty};
use strand_grammar::lexicon::parse_ty;
use strand_grammar::{pregroup, wiring, CircuitModel, Dictionary, TensorModel};
use strand_quantum::gates::{bra, cx, h, ket, qubit, sqrt2, x};
use strand_quantum::{all_zeros_probability, is_pure, mixed_eval, pure_eval, scalar_factor};
use strand_tensor::Tensor;

fn toy() -> Dictionary {
    let mut d = Dictionary::new("s");
    d.push("Alice", parse_ty("n").unwrap());
    d.push("Bob", parse_ty("n").unwrap());
    d.push("loves", parse_ty("n.r@s@n.l").unwrap());
    d.push("who", parse_ty("n.r@n@s.l@n").unwrap());
    d
}

fn word_box(dict: &Dictionary, w: &str) -> BBox {
    let t = dict.types(w).unwrap().iter().next().unwrap().clone();
    BBox::word(w, Ty::unit(), t)
}

fn boxes(parts: &[BBox]) -> Diagram {
    let mut d = Diagram::from_box(parts[0].clone());
    for b in &parts[1..] {
        d = d.tensor(&Diagram::from_box(b.clone()));
    }
    d
}

#[test]
fn alice_loves_bob_scores_one_exactly() {
    let dict = toy();
    let parses = pregroup::parse(&dict, &["Alice", "loves", "Bob"], 16).unwrap();
    assert_eq!(parses.len(), 1);

    let mut m = TensorModel::<f64>::new();
    m.dims.insert("n".to_string(), 2);
    m.dims.insert("s".to_string(), 1);
    let alice = Tensor::new(vec![1.0, 0.0], vec![], vec![2]).unwrap();
    let bob = Tensor::new(vec![0.0, 1.0], vec![], vec![2]).unwrap();
    let loves = Tensor::new(vec![0.0, 1.0, 1.0, 0.0], vec![], vec![2, 1, 2]).unwrap();
    m.images.insert(word_box(&dict, "Alice"), alice.clone());
    m.images.insert(word_box(&dict, "loves"), loves);
    m.images.insert(word_box(&dict, "Bob"), bob);

    let got = m.eval(&parses[0]).unwrap();
    assert_eq!(got, Tensor::new(vec![1.0], vec![], vec![1]).unwrap());

    // Bob pointing at Alice's vector breaks the sentence.
    m.images.insert(word_box(&dict, "Bob"), alice);
    let scrambled = m.eval(&parses[0]).unwrap();
    assert_eq!(scrambled, Tensor::new(vec![0.0], vec![], vec![1]).unwrap());
}

/// The verb state used in the worked quantum reading.
fn loves_state() -> Diagram {
    Diagram::from_box(ket(&[0, 0]))
        .then(&boxes(&[h(), sqrt2(), x()]))
        .unwrap()
        .then(&Diagram::from_box(cx()))
        .unwrap()
}

fn sentence_model(dict: &Dictionary) -> CircuitModel {
    let mut g = CircuitModel::new();
    g.qubits.insert("n".to_string(), 1);
    g.qubits.insert("s".to_string(), 0);
    g.images.insert(word_box(dict, "Alice"), Diagram::from_box(ket(&[0])));
    g.images.insert(word_box(dict, "Bob"), Diagram::from_box(ket(&[1])));
    g.images.insert(word_box(dict, "loves"), loves_state());
    g
}

#[test]
fn alice_loves_bob_reads_out_once_in_eight_shots() {
    let dict = toy();
    let parses = pregroup::parse(&dict, &["Alice", "loves", "Bob"], 16).unwrap();
    let circuit = sentence_model(&dict).compile(&parses[0]).unwrap();

    // one scalar from the verb, one from each of the two compiled cups
    let factor = scalar_factor(&circuit);
    assert!((factor - 8.0).abs() < 1e-9, "factor {}", factor);

    let p = all_zeros_probability(&circuit, &BTreeMap::new()).unwrap();
    let measured = p / factor;
    assert!((measured * 8.0 - 1.0).abs() < 1e-9, "measured {}", measured);
}

#[test]
fn interchanged_parses_compile_to_the_same_channel() {
    let dict = toy();
    let parses = pregroup::parse(&dict, &["Alice", "loves", "Bob"], 16).unwrap();
    let g = sentence_model(&dict);
    let empty = BTreeMap::new();
    let reference = mixed_eval(&g.compile(&parses[0]).unwrap(), &empty).unwrap();

    let mut variants = 0usize;
    for i in 0..parses[0].layers().len() - 1 {
        for flag in [true, false] {
            let Ok(moved) = parses[0].interchange(i, flag) else { continue };
            for j in 0..moved.layers().len() - 1 {
                let Ok(again) = moved.interchange(j, flag) else { continue };
                let channel = mixed_eval(&g.compile(&again).unwrap(), &empty).unwrap();
                assert!(channel.allclose(&reference, 1e-9));
                variants += 1;
            }
        }
    }
    assert!(variants > 4, "only {} interchanged variants", variants);
}

/// The hand-made factorization of the subject relative pronoun: copy the
/// noun, feed one copy to the verb, keep the other.
fn who_factorization() -> Diagram {
    let n = Ob::basic("n");
    let s = Ob::basic("s");
    let xw = Ob::basic("x");
    let who1 = BBox::plain("who_1", Ty::one(n.clone()), Ty(vec![xw.clone(), n.clone()]));
    let who2 = BBox::plain("who_2", Ty(vec![xw.clone(), s.clone()]), Ty::one(n.clone()));
    Diagram::from_box(BBox::cap(n.r(), n.clone()).unwrap())
        .then(&Diagram::id(Ty::one(n.r())).tensor(&Diagram::from_box(who1)))
        .unwrap()
        .then(
            &Diagram::id(Ty(vec![n.r(), xw]))
                .tensor(&Diagram::from_box(BBox::cap(s.clone(), s.l()).unwrap()))
                .tensor(&Diagram::id(Ty::one(n.clone()))),
        )
        .unwrap()
        .then(
            &Diagram::id(Ty::one(n.r()))
                .tensor(&Diagram::from_box(who2))
                .tensor(&Diagram::id(Ty(vec![s.l(), n]))),
        )
        .unwrap()
}

/// Widest cut of the diagram, in wires.
fn width(d: &Diagram) -> usize {
    let mut w = d.dom().len();
    for layer in d.layers() {
        let cut = layer.left.len() + layer.bx.dom.len().max(layer.bx.cod.len())
            + layer.right.len();
        w = w.max(cut);
    }
    w
}

#[test]
fn the_pronoun_factorization_shrinks_the_circuit_without_changing_it() {
    let dict = toy();
    let n = Ob::basic("n");
    let s = Ob::basic("s");
    let row = boxes(&[
        word_box(&dict, "Alice"),
        word_box(&dict, "who"),
        word_box(&dict, "loves"),
        word_box(&dict, "Bob"),
    ]);
    let cup = |a: &Ob, b: &Ob| Diagram::from_box(BBox::cup(a.clone(), b.clone()).unwrap());
    let first = cup(&n, &n.r())
        .tensor(&Diagram::id(Ty(vec![n.clone(), s.l()])))
        .tensor(&cup(&n, &n.r()))
        .tensor(&Diagram::id(Ty::one(s.clone())))
        .tensor(&cup(&n.l(), &n));
    let second = Diagram::id(Ty::one(n.clone())).tensor(&cup(&s.l(), &s));
    let phrase = row.then(&first).unwrap().then(&second).unwrap();
    assert_eq!(phrase.cod(), Ty::one(n.clone()));

    let mut over = BTreeMap::new();
    over.insert("who".to_string(), who_factorization());
    let wired = wiring::wiring(&phrase, &over).unwrap();
    let simplified = rigid::normal_form(&wired, true).unwrap();

    let mut g = CircuitModel::new();
    g.qubits.insert("n".to_string(), 1);
    g.qubits.insert("s".to_string(), 0);
    g.qubits.insert("x".to_string(), 1);
    g.images.insert(
        BBox::plain("Alice", Ty::unit(), Ty::one(n.clone())),
        Diagram::from_box(ket(&[0])),
    );
    g.images.insert(
        BBox::plain("Bob", Ty::unit(), Ty::one(n.clone())),
        Diagram::from_box(ket(&[1])),
    );
    g.images.insert(
        BBox::plain("loves", Ty(vec![n.clone(), n.clone()]), Ty::one(s.clone())),
        Diagram::from_box(cx())
            .then(&boxes(&[h(), sqrt2(), x()]))
            .unwrap()
            .then(&Diagram::from_box(bra(&[0, 0])))
            .unwrap(),
    );
    g.images.insert(
        BBox::plain("who_1", Ty::one(n.clone()), Ty(vec![Ob::basic("x"), n.clone()])),
        boxes(&[h(), sqrt2(), ket(&[0])]).then(&Diagram::from_box(cx())).unwrap(),
    );
    g.images.insert(
        BBox::plain("who_2", Ty(vec![Ob::basic("x"), s]), Ty::one(n)),
        Diagram::id(qubit()),
    );

    let direct = g.compile(&wired).unwrap();
    let small = g.compile(&simplified).unwrap();
    // The wide circuit is only tractable as an amplitude vector; doubling
    // it into a channel is exactly what the simplification avoids.
    let empty = BTreeMap::new();
    let lhs = pure_eval(&direct, &empty).unwrap();
    let rhs = pure_eval(&small, &empty).unwrap();
    assert!(lhs.allclose(&rhs, 1e-9));
    assert!(is_pure(&small));
    let channel = mixed_eval(&small, &empty).unwrap();
    assert_eq!(channel.inside.data.len(), 4);
    assert!(
        width(&small) < width(&direct),
        "snake removal narrows the circuit: {} vs {}",
        width(&small),
        width(&direct)
    );
    assert!(width(&small) <= 3, "width {}", width(&small));
}
