//! Circuit evaluation: pure circuits as complex tensors, mixed circuits as
//! channels on doubled wires.

use crate::channel::Channel;
use crate::cq::{c, q, CQ};
use crate::gates::{cx, gate_image, h, ket, qubit, sqrt2};
use std::collections::BTreeMap;
use strand_core::functor::{Cat, Functor, SyntaxCat};
use strand_core::{BBox, BoxKind, Cplx, Diagram, Error, Ob, Ty};
use strand_tensor::{Tensor, TensorCat};

/// No measurements, discards or mixed scalars, and only quantum wires on
/// the boundary.
pub fn is_pure(d: &Diagram) -> bool {
    let pure_box = |b: &BBox| {
        !matches!(
            b.kind,
            BoxKind::Measure { .. }
                | BoxKind::Encode { .. }
                | BoxKind::Discard
                | BoxKind::MixedState
                | BoxKind::Scalar { pure: false, .. }
        )
    };
    d.layers().iter().all(|l| pure_box(&l.bx))
        && d.dom().iter().chain(d.cod().iter()).all(|ob| matches!(ob, Ob::Qudit(_)))
}

fn qudit_dims(ob: &Ob) -> Result<Vec<usize>, Error> {
    match ob {
        Ob::Qudit(n) => Ok(vec![*n]),
        other => Err(Error::Unsupported(if matches!(other, Ob::Digit(_)) {
            "classical wires have no pure evaluation"
        } else {
            "circuit wires are digits and qudits"
        })),
    }
}

pub fn pure_eval(
    d: &Diagram,
    assignment: &BTreeMap<String, f64>,
) -> Result<Tensor<Cplx>, Error> {
    if !is_pure(d) {
        return Err(Error::Unsupported("mixed circuits have no pure evaluation"));
    }
    let cat = TensorCat::<Cplx>::new();
    let ar = |b: &BBox| gate_image(b, assignment);
    Functor { cat: &cat, ob: &qudit_dims, ar: &ar }.map(d)
}

fn cq_of_ob(ob: &Ob) -> Result<CQ, Error> {
    match ob {
        Ob::Qudit(n) => Ok(q(&[*n])),
        Ob::Digit(n) => Ok(c(&[*n])),
        _ => Err(Error::Unsupported("circuit wires are digits and qudits")),
    }
}

fn cq_of_ty(ty: &Ty) -> Result<CQ, Error> {
    let mut acc = CQ::unit();
    for ob in ty.iter() {
        acc = acc.tensor(&cq_of_ob(ob)?);
    }
    Ok(acc)
}

/// The channel category as a functor target.
pub struct ChannelCat;

impl Cat for ChannelCat {
    type Ob = CQ;
    type Arr = Channel;

    fn unit_ob(&self) -> CQ {
        CQ::unit()
    }

    fn tensor_ob(&self, x: &CQ, y: &CQ) -> CQ {
        x.tensor(y)
    }

    fn id(&self, x: &CQ) -> Channel {
        Channel::id(x)
    }

    fn then(&self, f: &Channel, g: &Channel) -> Result<Channel, Error> {
        f.then(g)
    }

    fn tensor(&self, f: &Channel, g: &Channel) -> Result<Channel, Error> {
        Ok(f.tensor(g))
    }

    fn dagger(&self, f: &Channel) -> Result<Channel, Error> {
        Ok(f.dagger())
    }

    fn add(&self, f: &Channel, g: &Channel) -> Result<Channel, Error> {
        f.add(g)
    }

    fn zero(&self, dom: &CQ, cod: &CQ) -> Result<Channel, Error> {
        Ok(Channel::zero(dom.clone(), cod.clone()))
    }

    fn left_ob(&self, x: &CQ) -> Result<CQ, Error> {
        Ok(x.clone())
    }

    fn right_ob(&self, x: &CQ) -> Result<CQ, Error> {
        Ok(x.clone())
    }

    fn cups(&self, x: &CQ, y: &CQ) -> Result<Channel, Error> {
        Channel::cups(x, y)
    }

    fn caps(&self, x: &CQ, y: &CQ) -> Result<Channel, Error> {
        Channel::caps(x, y)
    }

    fn braid(&self, x: &CQ, y: &CQ) -> Result<Channel, Error> {
        Ok(Channel::swap(x, y))
    }

    fn spider(&self, a: usize, b: usize, x: &CQ, phase: Option<f64>) -> Result<Channel, Error> {
        match (x.classical.as_slice(), x.quantum.as_slice()) {
            ([n], []) => {
                let s = Tensor::<Cplx>::spider(a, b, *n, phase)?;
                Channel::new(s, c(&vec![*n; a]), c(&vec![*n; b]))
            }
            ([], [n]) => Ok(Channel::double(&Tensor::<Cplx>::spider(a, b, *n, phase)?)),
            _ => Err(Error::Unsupported("spiders on compound wires")),
        }
    }

    fn copy(&self, x: &CQ, n: usize) -> Result<Channel, Error> {
        if !x.quantum.is_empty() {
            return Err(Error::Unsupported("quantum wires cannot be copied"));
        }
        Ok(Channel::single(&Tensor::copy(&x.classical, n)))
    }

    fn bubble(&self, inside: &Channel, tag: &str, dom: &CQ, cod: &CQ) -> Result<Channel, Error> {
        let data = inside.inside.bubble(tag)?.data;
        Channel::new(Tensor::new(data, dom.downgrade(), cod.downgrade())?, dom.clone(), cod.clone())
    }
}

pub fn mixed_eval(d: &Diagram, assignment: &BTreeMap<String, f64>) -> Result<Channel, Error> {
    let cat = ChannelCat;
    let ar = |b: &BBox| match &b.kind {
        BoxKind::Measure { dim } => Ok(Channel::measure(&[*dim])),
        BoxKind::Encode { dim } => Ok(Channel::encode(&[*dim])),
        BoxKind::Discard => Ok(Channel::discard(&cq_of_ty(&b.dom)?)),
        BoxKind::MixedState => Ok(Channel::mixed_state(&cq_of_ty(&b.cod)?)),
        BoxKind::Scalar { value, pure: false } => {
            Channel::new(Tensor::scalar(*value), CQ::unit(), CQ::unit())
        }
        _ => Ok(Channel::double(&gate_image(b, assignment)?)),
    };
    Functor { cat: &cat, ob: &|ob: &Ob| cq_of_ob(ob), ar: &ar }.map(d)
}

/// Bell state with unit entries: √2 · CX · (H ⊗ id) · |00⟩.
fn bell_pair() -> Diagram {
    let prep = Diagram::from_box(sqrt2()).tensor(&Diagram::from_box(ket(&[0, 0])));
    prep.then(&Diagram::from_box(h()).tensor(&Diagram::id(qubit())))
        .and_then(|d| d.then(&Diagram::from_box(cx())))
        .expect("bell pair is well typed")
}

fn all_qubits(ty: &Ty) -> bool {
    ty.iter().all(|ob| matches!(ob, Ob::Qudit(2)))
}

/// State preparing one Bell pair per wire of x, nested so the w-th wire of
/// x ends up entangled with the (n-1-w)-th wire of y.
pub fn qubit_caps(x: &Ty, y: &Ty) -> Result<Diagram, Error> {
    if !all_qubits(x) || !all_qubits(y) || x.len() != y.len() {
        return Err(Error::TypeMismatch(x.to_string(), y.to_string()));
    }
    let n = x.len();
    if n == 0 {
        return Ok(Diagram::id(Ty::unit()));
    }
    let inner = qubit_caps(&x.slice(1..n), &y.slice(0..n - 1))?;
    bell_pair().then(
        &Diagram::id(qubit()).tensor(&inner).tensor(&Diagram::id(qubit())),
    )
}

/// Post-selected Bell effect on each nested pair; the dagger of the caps.
pub fn qubit_cups(x: &Ty, y: &Ty) -> Result<Diagram, Error> {
    Ok(qubit_caps(x, y)?.dagger())
}

/// Circuits as a functor target: the syntax category, except that bent
/// wires become Bell preparations and post-selected Bell effects.
pub struct CircuitCat;

impl Cat for CircuitCat {
    type Ob = Ty;
    type Arr = Diagram;

    fn unit_ob(&self) -> Ty {
        Ty::unit()
    }
    fn tensor_ob(&self, x: &Ty, y: &Ty) -> Ty {
        x.tensor(y)
    }
    fn id(&self, x: &Ty) -> Diagram {
        Diagram::id(x.clone())
    }
    fn then(&self, f: &Diagram, g: &Diagram) -> Result<Diagram, Error> {
        f.then(g)
    }
    fn tensor(&self, f: &Diagram, g: &Diagram) -> Result<Diagram, Error> {
        Ok(f.tensor(g))
    }
    fn dagger(&self, f: &Diagram) -> Result<Diagram, Error> {
        Ok(f.dagger())
    }
    fn left_ob(&self, x: &Ty) -> Result<Ty, Error> {
        Ok(x.l())
    }
    fn right_ob(&self, x: &Ty) -> Result<Ty, Error> {
        Ok(x.r())
    }
    fn cups(&self, x: &Ty, y: &Ty) -> Result<Diagram, Error> {
        qubit_cups(x, y)
    }
    fn caps(&self, x: &Ty, y: &Ty) -> Result<Diagram, Error> {
        qubit_caps(x, y)
    }
    fn braid(&self, x: &Ty, y: &Ty) -> Result<Diagram, Error> {
        SyntaxCat.braid(x, y)
    }
    fn spider(&self, a: usize, b: usize, x: &Ty, phase: Option<f64>) -> Result<Diagram, Error> {
        SyntaxCat.spider(a, b, x, phase)
    }
    fn bubble(&self, inside: &Diagram, tag: &str, dom: &Ty, cod: &Ty) -> Result<Diagram, Error> {
        SyntaxCat.bubble(inside, tag, dom, cod)
    }
}

/// Product of the squared magnitudes of the scalar boxes: the bookkeeping
/// factor a shot-based run cannot execute and multiplies back in afterwards.
pub fn scalar_factor(d: &Diagram) -> f64 {
    d.layers()
        .iter()
        .map(|l| match &l.bx.kind {
            BoxKind::Sqrt { value } => value.get() * value.get(),
            BoxKind::Scalar { value, pure: true } => value.norm_sqr(),
            _ => 1.0,
        })
        .product()
}

/// Probability that every readout of the closed circuit comes up zero,
/// squared scalars included; divide by `scalar_factor` for the frequency a
/// device would report.
pub fn all_zeros_probability(
    d: &Diagram,
    assignment: &BTreeMap<String, f64>,
) -> Result<f64, Error> {
    if !d.dom().is_empty() {
        return Err(Error::TypeMismatch("state".into(), d.dom().to_string()));
    }
    let ch = mixed_eval(d, assignment)?;
    Ok(ch.inside.data[0].re.get())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{bit, bra, x as gate_x};
    use strand_tensor::Rig;

    fn no_vars() -> BTreeMap<String, f64> {
        BTreeMap::new()
    }

    #[test]
    fn bell_test_distribution_is_half_half() {
        let prep = Diagram::from_box(ket(&[0, 0]))
            .then(&Diagram::from_box(h()).tensor(&Diagram::id(qubit())))
            .unwrap()
            .then(&Diagram::from_box(cx()))
            .unwrap();
        let circuit = prep
            .then(&Diagram::from_box(BBox::measure(2)).tensor(&Diagram::from_box(BBox::measure(2))))
            .unwrap();
        let ch = mixed_eval(&circuit, &no_vars()).unwrap();
        assert_eq!(ch.dom, CQ::unit());
        assert_eq!(ch.cod, c(&[2, 2]));
        let expect = [0.5, 0.0, 0.0, 0.5];
        for (got, want) in ch.inside.data.iter().zip(expect) {
            assert!(got.close(&Cplx::real(want), 1e-12), "{got:?} vs {want}");
        }
    }

    #[test]
    fn born_rule_gives_half() {
        let c = Diagram::from_box(ket(&[0]))
            .then(&Diagram::from_box(h()))
            .unwrap()
            .then(&Diagram::from_box(bra(&[0])))
            .unwrap();
        let amp = pure_eval(&c, &no_vars()).unwrap();
        let p = amp.squared_amplitude();
        assert!((p.data[0] - 0.5).abs() < 1e-12);
        let ch = mixed_eval(&c, &no_vars()).unwrap();
        assert!(ch.inside.data[0].close(&Cplx::real(0.5), 1e-12));
    }

    #[test]
    fn bell_state_has_unit_entries() {
        let cap = qubit_caps(&qubit(), &qubit()).unwrap();
        let t = pure_eval(&cap, &no_vars()).unwrap();
        let expect = [1.0, 0.0, 0.0, 1.0];
        for (got, want) in t.data.iter().zip(expect) {
            assert!(got.close(&Cplx::real(want), 1e-12));
        }
    }

    #[test]
    fn teleportation_snake_is_the_identity() {
        let q1 = qubit();
        let cap = qubit_caps(&q1, &q1).unwrap();
        let cup = qubit_cups(&q1, &q1).unwrap();
        let d = cap
            .tensor(&Diagram::id(q1.clone()))
            .then(&Diagram::id(q1.clone()).tensor(&cup))
            .unwrap();
        let t = pure_eval(&d, &no_vars()).unwrap();
        assert!(t.allclose(&Tensor::id(&[2]), 1e-9));

        // Two nested pairs telegraph a two-qubit identity.
        let q2 = qubit().pow(2);
        let wide = qubit_caps(&q2, &q2)
            .unwrap()
            .tensor(&Diagram::id(q2.clone()))
            .then(&Diagram::id(q2.clone()).tensor(&qubit_cups(&q2, &q2).unwrap()))
            .unwrap();
        let t2 = pure_eval(&wide, &no_vars()).unwrap();
        assert!(t2.allclose(&Tensor::id(&[2, 2]), 1e-9));
    }

    #[test]
    fn purity_is_a_syntactic_check() {
        let pure = Diagram::from_box(ket(&[0])).then(&Diagram::from_box(gate_x())).unwrap();
        assert!(is_pure(&pure));
        let mixed = pure.then(&Diagram::from_box(BBox::measure(2))).unwrap();
        assert!(!is_pure(&mixed));
        assert!(matches!(pure_eval(&mixed, &no_vars()), Err(Error::Unsupported(_))));
        // A classical boundary wire spoils purity even without boxes.
        assert!(!is_pure(&Diagram::id(bit())));
    }

    #[test]
    fn mixed_scalars_break_causality() {
        let s = Diagram::from_box(BBox::scalar(Cplx::real(-1.0), false));
        let ch = mixed_eval(&s, &no_vars()).unwrap();
        assert!(!ch.is_causal(1e-9));
        let pure_s = Diagram::from_box(BBox::scalar(Cplx::real(-1.0), true));
        assert!(mixed_eval(&pure_s, &no_vars()).unwrap().is_causal(1e-9));
    }

    #[test]
    fn readout_probability_counts_scalars() {
        let plus = Diagram::from_box(ket(&[0])).then(&Diagram::from_box(h())).unwrap();
        let p = all_zeros_probability(&plus, &no_vars()).unwrap();
        assert!((p - 0.5).abs() < 1e-12);
        assert_eq!(scalar_factor(&plus), 1.0);

        let scaled = Diagram::from_box(sqrt2()).tensor(&plus);
        let p = all_zeros_probability(&scaled, &no_vars()).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
        assert!((scalar_factor(&scaled) - 2.0).abs() < 1e-12);

        let open = Diagram::id(qubit());
        assert!(all_zeros_probability(&open, &no_vars()).is_err());
    }

    #[test]
    fn circuit_target_bends_wires_into_bell_pairs() {
        // A snake over one basic type compiles to the teleportation circuit
        // and still evaluates to the identity channel.
        let x = Ty::one(Ob::basic("x"));
        let cap = Diagram::from_box(BBox::cap(x[0].r(), x[0].clone()).unwrap());
        let cup = Diagram::from_box(BBox::cup(x[0].clone(), x[0].r()).unwrap());
        let snake = Diagram::id(x.clone())
            .tensor(&cap)
            .then(&cup.tensor(&Diagram::id(x.clone())))
            .unwrap();
        let to_qubit = |ob: &Ob| match ob {
            Ob::Basic { .. } => Ok(Ty::one(Ob::Qudit(2))),
            other => Err(Error::UnknownBox(other.to_string())),
        };
        let no_words = |b: &BBox| Err(Error::UnknownBox(b.label()));
        let circuit =
            Functor { cat: &CircuitCat, ob: &to_qubit, ar: &no_words }.map(&snake).unwrap();
        let ch = mixed_eval(&circuit, &no_vars()).unwrap();
        assert!(ch.allclose(&Channel::id(&q(&[2])), 1e-9));
    }
}
