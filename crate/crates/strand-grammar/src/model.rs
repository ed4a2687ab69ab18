//! Meaning assignments: functors sending grammar diagrams to tensors or to
//! circuits, keyed on the exact boxes they interpret.

use std::collections::BTreeMap;

use strand_core::functor::Functor;
use strand_core::{BBox, Diagram, Error, Ob};
use strand_quantum::gates::qubit;
use strand_quantum::CircuitCat;
use strand_tensor::{Rig, Tensor, TensorCat};

/// Distributional model: every basic object carries a dimension, every
/// interpreted box a tensor.
#[derive(Clone, Debug, Default)]
pub struct TensorModel<R: Rig> {
    pub dims: BTreeMap<String, usize>,
    pub images: BTreeMap<BBox, Tensor<R>>,
}

impl<R: Rig> TensorModel<R> {
    pub fn new() -> Self {
        TensorModel { dims: BTreeMap::new(), images: BTreeMap::new() }
    }

    pub fn eval(&self, d: &Diagram) -> Result<Tensor<R>, Error> {
        let cat = TensorCat::<R>::new();
        let ob = |o: &Ob| match o {
            Ob::Basic { name, .. } => self
                .dims
                .get(name)
                .map(|&d| vec![d])
                .ok_or_else(|| Error::UnknownBox(format!("no dimension for {}", name))),
            other => Err(Error::UnknownBox(other.to_string())),
        };
        let ar = |b: &BBox| {
            self.images.get(b).cloned().ok_or_else(|| Error::UnknownBox(b.label()))
        };
        Functor { cat: &cat, ob: &ob, ar: &ar }.map(d)
    }
}

/// Circuit model: every basic object carries a qubit count, every
/// interpreted box a circuit. Cups and caps become Bell effects and Bell
/// states on the way through.
#[derive(Clone, Debug, Default)]
pub struct CircuitModel {
    pub qubits: BTreeMap<String, usize>,
    pub images: BTreeMap<BBox, Diagram>,
}

impl CircuitModel {
    pub fn new() -> Self {
        CircuitModel { qubits: BTreeMap::new(), images: BTreeMap::new() }
    }

    pub fn compile(&self, d: &Diagram) -> Result<Diagram, Error> {
        let cat = CircuitCat;
        let ob = |o: &Ob| match o {
            Ob::Basic { name, .. } => self
                .qubits
                .get(name)
                .map(|&k| qubit().pow(k))
                .ok_or_else(|| Error::UnknownBox(format!("no qubit count for {}", name))),
            other => Err(Error::UnknownBox(other.to_string())),
        };
        let ar = |b: &BBox| {
            self.images.get(b).cloned().ok_or_else(|| Error::UnknownBox(b.label()))
        };
        Functor { cat: &cat, ob: &ob, ar: &ar }.map(d)
    }
}
