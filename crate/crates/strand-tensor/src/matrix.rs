//! Dense matrices over a rig: the flat carrier below tensors.

use crate::rig::Rig;
use strand_core::Error;

/// Row-major dom×cod matrix.  `data[i * cod + j]` is the entry at row i,
/// column j; an arrow dom -> cod composes by summing over the shared index.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R: Rig> {
    pub dom: usize,
    pub cod: usize,
    pub data: Vec<R>,
}

fn shape_err(expected: impl std::fmt::Display, got: impl std::fmt::Display) -> Error {
    Error::TypeMismatch(expected.to_string(), got.to_string())
}

impl<R: Rig> Matrix<R> {
    pub fn new(data: Vec<R>, dom: usize, cod: usize) -> Result<Self, Error> {
        if data.len() != dom * cod {
            return Err(shape_err(dom * cod, data.len()));
        }
        Ok(Matrix { dom, cod, data })
    }

    pub fn id(n: usize) -> Self {
        let mut data = vec![R::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = R::one();
        }
        Matrix { dom: n, cod: n, data }
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        Matrix { dom, cod, data: vec![R::zero(); dom * cod] }
    }

    pub fn scalar(value: R) -> Self {
        Matrix { dom: 1, cod: 1, data: vec![value] }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cod + j]
    }

    pub fn then(&self, other: &Self) -> Result<Self, Error> {
        if self.cod != other.dom {
            return Err(shape_err(self.cod, other.dom));
        }
        let mut data = vec![R::zero(); self.dom * other.cod];
        for i in 0..self.dom {
            for j in 0..self.cod {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.cod {
                    let t = a.mul(other.get(j, k));
                    data[i * other.cod + k] = data[i * other.cod + k].add(&t);
                }
            }
        }
        Ok(Matrix { dom: self.dom, cod: other.cod, data })
    }

    /// Kronecker product; row index is (i of self, i of other) with self
    /// major, likewise for columns.
    pub fn kron(&self, other: &Self) -> Self {
        let dom = self.dom * other.dom;
        let cod = self.cod * other.cod;
        let mut data = Vec::with_capacity(dom * cod);
        for i in 0..self.dom {
            for j in 0..other.dom {
                for k in 0..self.cod {
                    for l in 0..other.cod {
                        data.push(self.get(i, k).mul(other.get(j, l)));
                    }
                }
            }
        }
        Matrix { dom, cod, data }
    }

    /// Block-diagonal direct sum.
    pub fn dsum(&self, other: &Self) -> Self {
        let dom = self.dom + other.dom;
        let cod = self.cod + other.cod;
        let mut data = vec![R::zero(); dom * cod];
        for i in 0..self.dom {
            for j in 0..self.cod {
                data[i * cod + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dom {
            for j in 0..other.cod {
                data[(self.dom + i) * cod + (self.cod + j)] = other.get(i, j).clone();
            }
        }
        Matrix { dom, cod, data }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cod {
            for i in 0..self.dom {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { dom: self.cod, cod: self.dom, data }
    }

    pub fn dagger(&self) -> Self {
        self.map(|x| x.conj()).transpose()
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if (self.dom, self.cod) != (other.dom, other.cod) {
            return Err(shape_err(
                format!("{}x{}", self.dom, self.cod),
                format!("{}x{}", other.dom, other.cod),
            ));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { dom: self.dom, cod: self.cod, data })
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Matrix { dom: self.dom, cod: self.cod, data: self.data.iter().map(f).collect() }
    }

    pub fn allclose(&self, other: &Self, tol: f64) -> bool {
        (self.dom, self.cod) == (other.dom, other.cod)
            && self.data.iter().zip(&other.data).all(|(a, b)| a.close(b, tol))
    }
}
