//! Classical-quantum maps: complex tensors on doubled quantum axes.
//!
//! The conjugate copy of a quantum wire sits at the same offset in the
//! second quantum block, never reversed; discarding pairs the two copies
//! wire by wire, which makes exactly the isometries causal.

use crate::cq::{c, q, CQ};
use strand_core::{Cplx, Error};
use strand_tensor::{product, Rig, Tensor};

#[derive(Clone, Debug, PartialEq)]
pub struct Channel {
    pub inside: Tensor<Cplx>,
    pub dom: CQ,
    pub cod: CQ,
}

/// Phaseless spider over a dimension list: all copies of the multi-index
/// agree.  Flattening commutes with the diagonal, so the data is the
/// single-dimension spider over the product.
fn spider_list(a: usize, b: usize, dims: &[usize]) -> Tensor<Cplx> {
    let flat = Tensor::<Cplx>::spider(a, b, product(dims), None).unwrap();
    let side = |k: usize| (0..k).flat_map(|_| dims.iter().copied()).collect();
    Tensor { dom: side(a), cod: side(b), data: flat.data }
}

/// Wire-by-wire trace: ⟨i|j⟩ summed over the doubled block.
fn trace_effect(dims: &[usize]) -> Tensor<Cplx> {
    let p = product(dims);
    Tensor {
        dom: [dims, dims].concat(),
        cod: vec![],
        data: Tensor::<Cplx>::id(&[p]).data,
    }
}

/// Axis order placing the blocks of x.downgrade() ++ y.downgrade() at
/// their positions in (x ⊗ y).downgrade().
fn interleave(x: &CQ, y: &CQ) -> Vec<usize> {
    let (ca, qa) = (x.classical.len(), x.quantum.len());
    let (cb, qb) = (y.classical.len(), y.quantum.len());
    let base_y = ca + 2 * qa;
    let mut order = Vec::with_capacity(base_y + cb + 2 * qb);
    order.extend(0..ca);
    order.extend(base_y..base_y + cb);
    order.extend(ca..ca + qa);
    order.extend(base_y + cb..base_y + cb + qb);
    order.extend(ca + qa..ca + 2 * qa);
    order.extend(base_y + cb + qb..base_y + cb + 2 * qb);
    order
}

impl Channel {
    pub fn new(inside: Tensor<Cplx>, dom: CQ, cod: CQ) -> Result<Self, Error> {
        if inside.dom != dom.downgrade() || inside.cod != cod.downgrade() {
            return Err(Error::TypeMismatch(
                format!("{:?} -> {:?}", dom.downgrade(), cod.downgrade()),
                format!("{:?} -> {:?}", inside.dom, inside.cod),
            ));
        }
        Ok(Channel { inside, dom, cod })
    }

    pub fn id(x: &CQ) -> Self {
        Channel { inside: Tensor::id(&x.downgrade()), dom: x.clone(), cod: x.clone() }
    }

    pub fn then(&self, other: &Self) -> Result<Self, Error> {
        if self.cod != other.dom {
            return Err(Error::TypeMismatch(
                format!("{:?}", self.cod),
                format!("{:?}", other.dom),
            ));
        }
        let inside = self.inside.then(&other.inside)?;
        Ok(Channel { inside, dom: self.dom.clone(), cod: other.cod.clone() })
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let dom = self.dom.tensor(&other.dom);
        let cod = self.cod.tensor(&other.cod);
        let inside = self
            .inside
            .tensor(&other.inside)
            .permuted(&interleave(&self.dom, &other.dom), &interleave(&self.cod, &other.cod))
            .expect("interleave is a permutation");
        Channel { inside, dom, cod }
    }

    pub fn dagger(&self) -> Self {
        Channel { inside: self.inside.dagger(), dom: self.cod.clone(), cod: self.dom.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if (&self.dom, &self.cod) != (&other.dom, &other.cod) {
            return Err(Error::TypeMismatch(
                format!("{:?} -> {:?}", self.dom, self.cod),
                format!("{:?} -> {:?}", other.dom, other.cod),
            ));
        }
        Ok(Channel { inside: self.inside.add(&other.inside)?, ..self.clone() })
    }

    pub fn zero(dom: CQ, cod: CQ) -> Self {
        Channel { inside: Tensor::zero(dom.downgrade(), cod.downgrade()), dom, cod }
    }

    /// Pure map as a channel: tensor with the entrywise conjugate.
    pub fn double(f: &Tensor<Cplx>) -> Self {
        let inside = f.tensor(&f.map(|z| z.conj()));
        Channel { inside, dom: q(&f.dom), cod: q(&f.cod) }
    }

    /// Stochastic map on classical wires, complexified as is.
    pub fn single(f: &Tensor<f64>) -> Self {
        let inside = Tensor {
            dom: f.dom.clone(),
            cod: f.cod.clone(),
            data: f.data.iter().map(|&x| Cplx::real(x)).collect(),
        };
        Channel { inside, dom: c(&f.dom), cod: c(&f.cod) }
    }

    pub fn measure(dims: &[usize]) -> Self {
        Channel { inside: spider_list(2, 1, dims), dom: q(dims), cod: c(dims) }
    }

    pub fn encode(dims: &[usize]) -> Self {
        Channel { inside: spider_list(1, 2, dims), dom: c(dims), cod: q(dims) }
    }

    pub fn discard(x: &CQ) -> Self {
        let inside = spider_list(1, 0, &x.classical).tensor(&trace_effect(&x.quantum));
        Channel { inside, dom: x.clone(), cod: CQ::unit() }
    }

    pub fn mixed_state(x: &CQ) -> Self {
        Self::discard(x).dagger()
    }

    pub fn swap(x: &CQ, y: &CQ) -> Self {
        Self::single(&Tensor::swap(&x.classical, &y.classical))
            .tensor(&Self::double(&Tensor::swap(&x.quantum, &y.quantum)))
    }

    pub fn cups(x: &CQ, y: &CQ) -> Result<Self, Error> {
        Ok(Self::single(&Tensor::cups(&x.classical, &y.classical)?)
            .tensor(&Self::double(&Tensor::cups(&x.quantum, &y.quantum)?)))
    }

    pub fn caps(x: &CQ, y: &CQ) -> Result<Self, Error> {
        Ok(Self::cups(x, y)?.dagger())
    }

    pub fn allclose(&self, other: &Self, tol: f64) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.inside.allclose(&other.inside, tol)
    }

    /// Discarding the output is the same as discarding the input: the
    /// future cannot signal to the past.
    pub fn is_causal(&self, tol: f64) -> bool {
        let lhs = self.then(&Self::discard(&self.cod)).expect("cod matches");
        lhs.allclose(&Self::discard(&self.dom), tol)
    }
}
