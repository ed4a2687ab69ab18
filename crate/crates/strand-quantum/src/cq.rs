//! Classical-quantum systems: a dimension list per kind of wire.

/// A quantum wire of dimension n carries an n×n density matrix, so it
/// contributes two axes to the underlying tensor; a classical wire one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CQ {
    pub classical: Vec<usize>,
    pub quantum: Vec<usize>,
}

pub fn c(dims: &[usize]) -> CQ {
    CQ { classical: dims.to_vec(), quantum: vec![] }
}

pub fn q(dims: &[usize]) -> CQ {
    CQ { classical: vec![], quantum: dims.to_vec() }
}

impl CQ {
    pub fn unit() -> CQ {
        CQ::default()
    }

    pub fn tensor(&self, other: &CQ) -> CQ {
        CQ {
            classical: [self.classical.as_slice(), other.classical.as_slice()].concat(),
            quantum: [self.quantum.as_slice(), other.quantum.as_slice()].concat(),
        }
    }

    /// Axes of the underlying tensor: classical wires once, then the
    /// quantum list twice over.
    pub fn downgrade(&self) -> Vec<usize> {
        [self.classical.as_slice(), self.quantum.as_slice(), self.quantum.as_slice()].concat()
    }
}
