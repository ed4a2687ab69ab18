//! Random-circuit checks: the tensor-contraction evaluator against a
//! hand-rolled statevector simulator, doubling functoriality, causality of
//! the gateset, and the pure/mixed bridge.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use strand_core::{AffineExpr, BBox, Cplx, Diagram};
use strand_quantum::gates::{bra, cx, h, ket, qubit, rx, rz, x, y, z};
use strand_quantum::{is_pure, mixed_eval, pure_eval, Channel};
use strand_tensor::Rig;

#[derive(Clone, Copy, Debug)]
enum Op {
    X(usize),
    Y(usize),
    Z(usize),
    H(usize),
    Cx(usize),
    Rz(usize, f64),
    Rx(usize, f64),
    Swap(usize),
}

/// Random ops on `wires` qubits; two-wire ops act on adjacent pairs.
fn random_ops(rng: &mut ChaCha8Rng, wires: usize, depth: usize) -> Vec<Op> {
    (0..depth)
        .map(|_| {
            let w = rng.gen_range(0..wires);
            let pair = if wires > 1 { rng.gen_range(0..wires - 1) } else { 0 };
            match rng.gen_range(0..if wires > 1 { 8 } else { 6 }) {
                0 => Op::X(w),
                1 => Op::Y(w),
                2 => Op::Z(w),
                3 => Op::H(w),
                4 => Op::Rz(w, rng.gen_range(-1.0..1.0)),
                5 => Op::Rx(w, rng.gen_range(-1.0..1.0)),
                6 => Op::Cx(pair),
                _ => Op::Swap(pair),
            }
        })
        .collect()
}

fn diagram_of(ops: &[Op], wires: usize) -> Diagram {
    let mut d = Diagram::id(qubit().pow(wires));
    for op in ops {
        let (bx, off) = match *op {
            Op::X(w) => (x(), w),
            Op::Y(w) => (y(), w),
            Op::Z(w) => (z(), w),
            Op::H(w) => (h(), w),
            Op::Cx(w) => (cx(), w),
            Op::Rz(w, phi) => (rz(AffineExpr::constant(phi)), w),
            Op::Rx(w, phi) => (rx(AffineExpr::constant(phi)), w),
            Op::Swap(w) => (BBox::swap(strand_core::Ob::Qudit(2), strand_core::Ob::Qudit(2)), w),
        };
        let k = bx.dom.len();
        let layer = Diagram::id(qubit().pow(off))
            .tensor(&Diagram::from_box(bx))
            .tensor(&Diagram::id(qubit().pow(wires - off - k)));
        d = d.then(&layer).unwrap();
    }
    d
}

/// Flat statevector simulator; wire 0 is the most significant bit.
struct Sim {
    wires: usize,
    state: Vec<Cplx>,
}

impl Sim {
    fn zeros(wires: usize) -> Sim {
        let mut state = vec![Cplx::zero(); 1 << wires];
        state[0] = Cplx::one();
        Sim { wires, state }
    }

    /// States are row vectors, arrays indexed input-then-output, so a gate
    /// acts by new[j] = sum_i old[i] * m[i][j].
    fn unary(&mut self, w: usize, m: [[Cplx; 2]; 2]) {
        let stride = 1 << (self.wires - 1 - w);
        for i in 0..self.state.len() {
            if i & stride == 0 {
                let (a, b) = (self.state[i], self.state[i | stride]);
                self.state[i] = m[0][0] * a + m[1][0] * b;
                self.state[i | stride] = m[0][1] * a + m[1][1] * b;
            }
        }
    }

    fn apply(&mut self, op: Op) {
        let o = Cplx::zero();
        let l = Cplx::one();
        match op {
            Op::X(w) => self.unary(w, [[o, l], [l, o]]),
            Op::Y(w) => self.unary(w, [[o, Cplx::new(0.0, -1.0)], [Cplx::new(0.0, 1.0), o]]),
            Op::Z(w) => self.unary(w, [[l, o], [o, Cplx::real(-1.0)]]),
            Op::H(w) => {
                let r = Cplx::real(1.0 / 2.0_f64.sqrt());
                self.unary(w, [[r, r], [r, -r]]);
            }
            Op::Rz(w, phi) => {
                let t = std::f64::consts::PI * phi;
                self.unary(w, [[Cplx::new(t.cos(), -t.sin()), o], [o, Cplx::new(t.cos(), t.sin())]]);
            }
            Op::Rx(w, phi) => {
                // H·Rz(φ)·H = [[cos πφ, -i sin πφ], [-i sin πφ, cos πφ]].
                let t = std::f64::consts::PI * phi;
                let (c, s) = (Cplx::real(t.cos()), Cplx::new(0.0, -t.sin()));
                self.unary(w, [[c, s], [s, c]]);
            }
            Op::Cx(w) => {
                let (hi, lo) = (1 << (self.wires - 1 - w), 1 << (self.wires - 2 - w));
                for i in 0..self.state.len() {
                    if i & hi != 0 && i & lo == 0 {
                        self.state.swap(i, i | lo);
                    }
                }
            }
            Op::Swap(w) => {
                let (hi, lo) = (1 << (self.wires - 1 - w), 1 << (self.wires - 2 - w));
                for i in 0..self.state.len() {
                    if i & hi != 0 && i & lo == 0 {
                        self.state.swap(i, (i & !hi) | lo);
                    }
                }
            }
        }
    }
}

fn no_vars() -> BTreeMap<String, f64> {
    BTreeMap::new()
}

#[test]
fn tensor_contraction_matches_a_statevector_simulator() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let wires = rng.gen_range(1..=3);
        let depth = rng.gen_range(1..=6);
        let ops = random_ops(&mut rng, wires, depth);
        let circuit = Diagram::from_box(ket(&vec![0; wires])).then(&diagram_of(&ops, wires)).unwrap();
        let t = pure_eval(&circuit, &no_vars()).unwrap();
        let mut sim = Sim::zeros(wires);
        for &op in &ops {
            sim.apply(op);
        }
        assert_eq!(t.data.len(), sim.state.len());
        for (got, want) in t.data.iter().zip(&sim.state) {
            assert!(got.close(want, 1e-9), "{got:?} vs {want:?}");
        }
    }
}

#[test]
fn doubling_is_functorial() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..25 {
        let f = diagram_of(&random_ops(&mut rng, 2, 4), 2);
        let g = diagram_of(&random_ops(&mut rng, 2, 4), 2);
        let tf = pure_eval(&f, &no_vars()).unwrap();
        let tg = pure_eval(&g, &no_vars()).unwrap();
        let lhs = Channel::double(&tf.then(&tg).unwrap());
        let rhs = Channel::double(&tf).then(&Channel::double(&tg)).unwrap();
        assert!(lhs.allclose(&rhs, 1e-9));
    }
}

#[test]
fn the_gateset_is_causal_except_effects_and_mixed_scalars() {
    let causal: Vec<(&str, Diagram)> = vec![
        ("X", Diagram::from_box(x())),
        ("Y", Diagram::from_box(y())),
        ("Z", Diagram::from_box(z())),
        ("H", Diagram::from_box(h())),
        ("CX", Diagram::from_box(cx())),
        ("Rz", Diagram::from_box(rz(AffineExpr::constant(0.37)))),
        ("Rx", Diagram::from_box(rx(AffineExpr::constant(-0.2)))),
        ("Ket(0)", Diagram::from_box(ket(&[0]))),
        ("Ket(1)", Diagram::from_box(ket(&[1]))),
        ("Ket(0,1)", Diagram::from_box(ket(&[0, 1]))),
        ("Measure", Diagram::from_box(BBox::measure(2))),
        ("Encode", Diagram::from_box(BBox::encode(2))),
        ("Discard", Diagram::from_box(BBox::discard(qubit()))),
    ];
    for (name, d) in causal {
        let ch = mixed_eval(&d, &no_vars()).unwrap();
        assert!(ch.is_causal(1e-9), "{name} should be causal");
    }
    let bra0 = mixed_eval(&Diagram::from_box(bra(&[0])), &no_vars()).unwrap();
    assert!(!bra0.is_causal(1e-9), "post-selection signals to the past");
    let neg = mixed_eval(
        &Diagram::from_box(BBox::scalar(Cplx::real(-1.0), false)),
        &no_vars(),
    )
    .unwrap();
    assert!(!neg.is_causal(1e-9));
}

#[test]
fn mixed_evaluation_doubles_pure_circuits() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for round in 0..100 {
        let wires = rng.gen_range(1..=3);
        let depth = rng.gen_range(1..=6);
        let mut d = diagram_of(&random_ops(&mut rng, wires, depth), wires);
        if round % 2 == 0 {
            d = Diagram::from_box(ket(&vec![0; wires])).then(&d).unwrap();
        }
        assert!(is_pure(&d));
        let lhs = mixed_eval(&d, &no_vars()).unwrap();
        let rhs = Channel::double(&pure_eval(&d, &no_vars()).unwrap());
        assert!(lhs.allclose(&rhs, 1e-9));
    }
}

#[test]
fn snake_removal_spares_qubits_without_changing_the_channel() {
    // A sentence-shaped circuit: state ⊗ state, one cup contracting the
    // middle pair, versus its yanked form.
    let left = Diagram::from_box(ket(&[0]))
        .then(&Diagram::from_box(h()))
        .unwrap();
    let pair = strand_quantum::qubit_caps(&qubit(), &qubit()).unwrap();
    let wide = left
        .tensor(&pair)
        .then(&strand_quantum::qubit_cups(&qubit(), &qubit()).unwrap().tensor(&Diagram::id(qubit())))
        .unwrap();
    let expect = pure_eval(&left, &no_vars()).unwrap();
    let got = pure_eval(&wide, &no_vars()).unwrap();
    assert!(got.allclose(&expect, 1e-9));
}
