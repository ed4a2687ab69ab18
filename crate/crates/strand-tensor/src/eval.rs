//! Tensor semantics as a functor target: diagrams evaluate to tensors,
//! paths evaluate to matrices.

use crate::matrix::Matrix;
use crate::rig::Rig;
use crate::tensor::{product, Tensor};
use std::marker::PhantomData;
use strand_core::cat::PathTarget;
use strand_core::functor::Cat;
use strand_core::Error;

/// Target category with dimension lists as objects and tensors as arrows.
pub struct TensorCat<R: Rig> {
    _rig: PhantomData<R>,
}

impl<R: Rig> TensorCat<R> {
    pub fn new() -> Self {
        TensorCat { _rig: PhantomData }
    }
}

impl<R: Rig> Default for TensorCat<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Rig> Cat for TensorCat<R> {
    type Ob = Vec<usize>;
    type Arr = Tensor<R>;

    fn unit_ob(&self) -> Vec<usize> {
        vec![]
    }
    fn tensor_ob(&self, x: &Vec<usize>, y: &Vec<usize>) -> Vec<usize> {
        [x.as_slice(), y.as_slice()].concat()
    }
    fn id(&self, x: &Vec<usize>) -> Tensor<R> {
        Tensor::id(x)
    }
    fn then(&self, f: &Tensor<R>, g: &Tensor<R>) -> Result<Tensor<R>, Error> {
        f.then(g)
    }
    fn tensor(&self, f: &Tensor<R>, g: &Tensor<R>) -> Result<Tensor<R>, Error> {
        Ok(f.tensor(g))
    }
    fn dagger(&self, f: &Tensor<R>) -> Result<Tensor<R>, Error> {
        Ok(f.dagger())
    }
    fn add(&self, f: &Tensor<R>, g: &Tensor<R>) -> Result<Tensor<R>, Error> {
        f.add(g)
    }
    fn zero(&self, dom: &Vec<usize>, cod: &Vec<usize>) -> Result<Tensor<R>, Error> {
        Ok(Tensor::zero(dom.clone(), cod.clone()))
    }
    /// Adjoints are list reversal, so both sides of a cup carry the same
    /// dimensions in opposite order.
    fn left_ob(&self, x: &Vec<usize>) -> Result<Vec<usize>, Error> {
        Ok(x.iter().rev().copied().collect())
    }
    fn right_ob(&self, x: &Vec<usize>) -> Result<Vec<usize>, Error> {
        Ok(x.iter().rev().copied().collect())
    }
    fn cups(&self, x: &Vec<usize>, y: &Vec<usize>) -> Result<Tensor<R>, Error> {
        Tensor::cups(x, y)
    }
    fn caps(&self, x: &Vec<usize>, y: &Vec<usize>) -> Result<Tensor<R>, Error> {
        Tensor::caps(x, y)
    }
    fn braid(&self, x: &Vec<usize>, y: &Vec<usize>) -> Result<Tensor<R>, Error> {
        Ok(Tensor::swap(x, y))
    }
    fn spider(
        &self,
        a: usize,
        b: usize,
        x: &Vec<usize>,
        phase: Option<f64>,
    ) -> Result<Tensor<R>, Error> {
        if x.len() != 1 {
            return Err(Error::Unsupported("spiders on compound dimensions"));
        }
        Tensor::spider(a, b, x[0], phase)
    }
    fn copy(&self, x: &Vec<usize>, n: usize) -> Result<Tensor<R>, Error> {
        Ok(Tensor::copy(x, n))
    }
    fn bubble(
        &self,
        inside: &Tensor<R>,
        tag: &str,
        dom: &Vec<usize>,
        cod: &Vec<usize>,
    ) -> Result<Tensor<R>, Error> {
        let t = inside.bubble(tag)?;
        // Bubbles may re-type their boundary; entries stay put.
        Tensor::new(t.data, dom.clone(), cod.clone())
    }

    /// Contracts one layer directly instead of materializing id ⊗ f ⊗ id,
    /// which is quadratically larger on wide diagrams.
    fn apply_layer(
        &self,
        acc: &Tensor<R>,
        left: &Vec<usize>,
        f: &Tensor<R>,
        right: &Vec<usize>,
    ) -> Result<Tensor<R>, Error> {
        let (pl, pr) = (product(left), product(right));
        let (pfd, pfc) = (product(&f.dom), product(&f.cod));
        let pd = product(&acc.dom);
        let in_cols = pl * pfd * pr;
        if product(&acc.cod) != in_cols {
            return Err(Error::TypeMismatch(in_cols.to_string(), product(&acc.cod).to_string()));
        }
        let out_cols = pl * pfc * pr;
        let mut data = vec![R::zero(); pd * out_cols];
        for d in 0..pd {
            for l in 0..pl {
                for m in 0..pfd {
                    for r in 0..pr {
                        let a = &acc.data[d * in_cols + (l * pfd + m) * pr + r];
                        if a.is_zero() {
                            continue;
                        }
                        for mp in 0..pfc {
                            let fv = &f.data[m * pfc + mp];
                            if fv.is_zero() {
                                continue;
                            }
                            let idx = d * out_cols + (l * pfc + mp) * pr + r;
                            data[idx] = data[idx].add(&a.mul(fv));
                        }
                    }
                }
            }
        }
        let cod = [left.as_slice(), f.cod.as_slice(), right.as_slice()].concat();
        Ok(Tensor { dom: acc.dom.clone(), cod, data })
    }
}

/// Plain matrices as a path-functor target.
pub struct MatCat<R: Rig> {
    _rig: PhantomData<R>,
}

impl<R: Rig> MatCat<R> {
    pub fn new() -> Self {
        MatCat { _rig: PhantomData }
    }
}

impl<R: Rig> PathTarget for MatCat<R> {
    type Ob = usize;
    type Arr = Matrix<R>;

    fn id(&self, x: &usize) -> Matrix<R> {
        Matrix::id(*x)
    }
    fn then(&self, f: &Matrix<R>, g: &Matrix<R>) -> Result<Matrix<R>, Error> {
        f.then(g)
    }
    fn dagger(&self, f: &Matrix<R>) -> Result<Matrix<R>, Error> {
        Ok(f.dagger())
    }
    fn zero(&self, dom: &usize, cod: &usize) -> Result<Matrix<R>, Error> {
        Ok(Matrix::zero(*dom, *cod))
    }
    fn add(&self, f: &Matrix<R>, g: &Matrix<R>) -> Result<Matrix<R>, Error> {
        f.add(g)
    }
    fn bubble(&self, inside: &Matrix<R>, tag: &str) -> Result<Matrix<R>, Error> {
        inside.data.iter().map(|x| x.bubble(tag)).collect::<Result<Vec<_>, _>>().map(|data| {
            Matrix { dom: inside.dom, cod: inside.cod, data }
        })
    }
}
