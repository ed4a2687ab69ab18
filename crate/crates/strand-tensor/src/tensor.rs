//! Tensors: matrices whose sides carry a list of dimensions, one per wire.

use crate::matrix::Matrix;
use crate::rig::Rig;
use strand_core::Error;

pub fn product(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Σ_{j<k} base^j: the flat index of (i, i, ..., i) is i times this.
fn repunit(base: usize, k: usize) -> usize {
    (0..k).map(|j| base.pow(j as u32)).sum()
}

/// Arrow of the tensor category: dom and cod are dimension lists, data is
/// the row-major product(dom) × product(cod) matrix, dom major.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<R: Rig> {
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
    pub data: Vec<R>,
}

impl<R: Rig> Tensor<R> {
    pub fn new(data: Vec<R>, dom: Vec<usize>, cod: Vec<usize>) -> Result<Self, Error> {
        if data.len() != product(&dom) * product(&cod) {
            return Err(Error::TypeMismatch(
                (product(&dom) * product(&cod)).to_string(),
                data.len().to_string(),
            ));
        }
        Ok(Tensor { dom, cod, data })
    }

    pub fn downgrade(&self) -> Matrix<R> {
        Matrix { dom: product(&self.dom), cod: product(&self.cod), data: self.data.clone() }
    }

    pub fn from_matrix(m: Matrix<R>, dom: Vec<usize>, cod: Vec<usize>) -> Result<Self, Error> {
        if m.dom != product(&dom) || m.cod != product(&cod) {
            return Err(Error::TypeMismatch(
                format!("{}x{}", product(&dom), product(&cod)),
                format!("{}x{}", m.dom, m.cod),
            ));
        }
        Ok(Tensor { dom, cod, data: m.data })
    }

    pub fn id(dims: &[usize]) -> Self {
        let m = Matrix::id(product(dims));
        Tensor { dom: dims.to_vec(), cod: dims.to_vec(), data: m.data }
    }

    pub fn scalar(value: R) -> Self {
        Tensor { dom: vec![], cod: vec![], data: vec![value] }
    }

    pub fn zero(dom: Vec<usize>, cod: Vec<usize>) -> Self {
        let data = vec![R::zero(); product(&dom) * product(&cod)];
        Tensor { dom, cod, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * product(&self.cod) + j]
    }

    pub fn then(&self, other: &Self) -> Result<Self, Error> {
        if product(&self.cod) != product(&other.dom) {
            return Err(Error::TypeMismatch(
                format!("{:?}", self.cod),
                format!("{:?}", other.dom),
            ));
        }
        let m = self.downgrade().then(&other.downgrade())?;
        Ok(Tensor { dom: self.dom.clone(), cod: other.cod.clone(), data: m.data })
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let m = self.downgrade().kron(&other.downgrade());
        let dom = [self.dom.as_slice(), other.dom.as_slice()].concat();
        let cod = [self.cod.as_slice(), other.cod.as_slice()].concat();
        Tensor { dom, cod, data: m.data }
    }

    pub fn dagger(&self) -> Self {
        let m = self.downgrade().dagger();
        Tensor { dom: self.cod.clone(), cod: self.dom.clone(), data: m.data }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if (&self.dom, &self.cod) != (&other.dom, &other.cod) {
            return Err(Error::TypeMismatch(
                format!("{:?} -> {:?}", self.dom, self.cod),
                format!("{:?} -> {:?}", other.dom, other.cod),
            ));
        }
        let m = self.downgrade().add(&other.downgrade())?;
        Ok(Tensor { dom: self.dom.clone(), cod: self.cod.clone(), data: m.data })
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Tensor { dom: self.dom.clone(), cod: self.cod.clone(), data: self.data.iter().map(&f).collect() }
    }

    /// Registered elementwise bubble by tag.
    pub fn bubble(&self, tag: &str) -> Result<Self, Error> {
        let data = self.data.iter().map(|x| x.bubble(tag)).collect::<Result<_, _>>()?;
        Ok(Tensor { dom: self.dom.clone(), cod: self.cod.clone(), data })
    }

    pub fn allclose(&self, other: &Self, tol: f64) -> bool {
        product(&self.dom) == product(&other.dom)
            && product(&self.cod) == product(&other.cod)
            && self.data.iter().zip(&other.data).all(|(a, b)| a.close(b, tol))
    }

    /// Permutation exchanging the first len(x) wires with the rest.
    pub fn swap(x: &[usize], y: &[usize]) -> Self {
        let (px, py) = (product(x), product(y));
        let mut data = vec![R::zero(); px * py * py * px];
        for i in 0..px {
            for j in 0..py {
                data[(i * py + j) * (py * px) + (j * px + i)] = R::one();
            }
        }
        let dom = [x, y].concat();
        let cod = [y, x].concat();
        Tensor { dom, cod, data }
    }

    /// Effect pairing wire w of x with wire n-1-w of y; y must be x reversed.
    pub fn cups(x: &[usize], y: &[usize]) -> Result<Self, Error> {
        let rev: Vec<usize> = x.iter().rev().copied().collect();
        if y != rev {
            return Err(Error::TypeMismatch(format!("{rev:?}"), format!("{y:?}")));
        }
        let px = product(x);
        let mut data = vec![R::zero(); px * px];
        for flat in 0..px {
            // Digits of flat over x, recomposed in reverse over y.
            let mut digits = Vec::with_capacity(x.len());
            let mut rest = flat;
            for &d in x.iter().rev() {
                digits.push(rest % d);
                rest /= d;
            }
            // digits[w] is now the (n-1-w)-th digit of flat, which is
            // exactly the w-th digit of the partner index over y.
            let partner = digits.iter().zip(y).fold(0, |acc, (digit, d)| acc * d + digit);
            data[flat * px + partner] = R::one();
        }
        Ok(Tensor { dom: [x, y].concat(), cod: vec![], data })
    }

    pub fn caps(x: &[usize], y: &[usize]) -> Result<Self, Error> {
        let cup = Self::cups(x, y)?;
        Ok(Tensor { dom: vec![], cod: cup.dom, data: cup.data })
    }

    /// Σ_k φ_k |k..k⟩⟨k..k| with a legs in, b legs out, each of dimension n.
    /// φ_k = e^{i·k·phase}; no phase means all ones; (0,0) legs give Σ_k φ_k.
    pub fn spider(a: usize, b: usize, n: usize, phase: Option<f64>) -> Result<Self, Error> {
        let phi = |k: usize| match phase {
            None => Ok(R::one()),
            Some(p) => R::from_phase(p * k as f64),
        };
        if a == 0 && b == 0 {
            let mut total = R::zero();
            for k in 0..n {
                total = total.add(&phi(k)?);
            }
            return Ok(Self::scalar(total));
        }
        let (pa, pb) = (n.pow(a as u32), n.pow(b as u32));
        let mut data = vec![R::zero(); pa * pb];
        for k in 0..n {
            data[k * repunit(n, a) * pb + k * repunit(n, b)] = phi(k)?;
        }
        Ok(Tensor { dom: vec![n; a], cod: vec![n; b], data })
    }

    /// Reorders wires: position k of the result reads old axis order[k].
    /// Each order must be a permutation of its side's axes.
    pub fn permuted(&self, dom_order: &[usize], cod_order: &[usize]) -> Result<Self, Error> {
        let check = |order: &[usize], n: usize| -> Result<(), Error> {
            let mut seen = vec![false; n];
            if order.len() != n {
                return Err(Error::TypeMismatch(n.to_string(), order.len().to_string()));
            }
            for &a in order {
                if a >= n || seen[a] {
                    return Err(Error::OutOfRange(a));
                }
                seen[a] = true;
            }
            Ok(())
        };
        check(dom_order, self.dom.len())?;
        check(cod_order, self.cod.len())?;
        let dom: Vec<usize> = dom_order.iter().map(|&a| self.dom[a]).collect();
        let cod: Vec<usize> = cod_order.iter().map(|&a| self.cod[a]).collect();
        let decode = |mut flat: usize, dims: &[usize]| -> Vec<usize> {
            let mut multi = vec![0; dims.len()];
            for (w, &d) in dims.iter().enumerate().rev() {
                multi[w] = flat % d;
                flat /= d;
            }
            multi
        };
        let encode = |multi: &[usize], dims: &[usize]| -> usize {
            multi.iter().zip(dims).fold(0, |acc, (&m, &d)| acc * d + m)
        };
        let (pd, pc) = (product(&dom), product(&cod));
        let mut data = vec![R::zero(); pd * pc];
        for i in 0..pd {
            let mi = decode(i, &dom);
            let mut old_i = vec![0; self.dom.len()];
            for (k, &a) in dom_order.iter().enumerate() {
                old_i[a] = mi[k];
            }
            let oi = encode(&old_i, &self.dom);
            for j in 0..pc {
                let mj = decode(j, &cod);
                let mut old_j = vec![0; self.cod.len()];
                for (k, &a) in cod_order.iter().enumerate() {
                    old_j[a] = mj[k];
                }
                data[i * pc + j] = self.data[oi * product(&self.cod) + encode(&old_j, &self.cod)]
                    .clone();
            }
        }
        Ok(Tensor { dom, cod, data })
    }

    /// Cartesian copy: every output group repeats the input.
    pub fn copy(dims: &[usize], copies: usize) -> Self {
        let p = product(dims);
        let pc = p.pow(copies as u32);
        let mut data = vec![R::zero(); p * pc];
        for i in 0..p {
            data[i * pc + i * repunit(p, copies)] = R::one();
        }
        let mut cod = Vec::new();
        for _ in 0..copies {
            cod.extend_from_slice(dims);
        }
        Tensor { dom: dims.to_vec(), cod, data }
    }
}

impl Tensor<strand_core::Cplx> {
    /// The rig-changing Born rule: entrywise |x|², complex to real.
    pub fn squared_amplitude(&self) -> Tensor<f64> {
        Tensor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            data: self.data.iter().map(|z| z.norm_sqr()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use strand_core::Cplx;

    #[test]
    fn cups_pair_reversed_wires() {
        let cup = Tensor::<f64>::cups(&[2], &[2]).unwrap();
        assert_eq!(cup.data, vec![1.0, 0.0, 0.0, 1.0]);
        assert_eq!(cup.dom, vec![2, 2]);
        assert!(cup.cod.is_empty());
        assert!(Tensor::<f64>::cups(&[2, 3], &[2, 3]).is_err());
        // Mixed dimensions: wire w of x meets wire n-1-w of y.
        let wide = Tensor::<i64>::cups(&[2, 3], &[3, 2]).unwrap();
        for i in 0..2 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..2 {
                        let flat = ((i * 3 + j) * 3 + k) * 2 + l;
                        let expect = (i == l && j == k) as i64;
                        assert_eq!(wide.data[flat], expect, "at {i}{j}{k}{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn snake_contracts_to_identity() {
        let cap = Tensor::<f64>::caps(&[2], &[2]).unwrap();
        let cup = Tensor::<f64>::cups(&[2], &[2]).unwrap();
        let id = Tensor::<f64>::id(&[2]);
        let left = cap.tensor(&id).then(&id.tensor(&cup)).unwrap();
        assert!(left.allclose(&id, 1e-12));
        let right = id.tensor(&cap).then(&cup.tensor(&id)).unwrap();
        assert!(right.allclose(&id, 1e-12));
    }

    #[test]
    fn spiders_are_phased_diagonals() {
        let s = Tensor::<f64>::spider(1, 2, 2, None).unwrap();
        assert_eq!(s.dom, vec![2]);
        assert_eq!(s.cod, vec![2, 2]);
        let mut expect = vec![0.0; 8];
        expect[0] = 1.0; // (0) -> (0,0)
        expect[7] = 1.0; // (1) -> (1,1)
        assert_eq!(s.data, expect);

        let circle = Tensor::<f64>::spider(0, 0, 2, None).unwrap();
        assert_eq!(circle.data, vec![2.0]);

        let phased = Tensor::<Cplx>::spider(1, 1, 2, Some(std::f64::consts::PI)).unwrap();
        assert!(phased.data[0].close(&Cplx::one(), 1e-12));
        assert!(phased.data[3].close(&Cplx::real(-1.0), 1e-12));
        assert!(Tensor::<f64>::spider(1, 1, 2, Some(0.3)).is_err());
    }

    #[test]
    fn spider_with_one_leg_each_way_is_identity() {
        for n in 1..4 {
            let s = Tensor::<i64>::spider(1, 1, n, None).unwrap();
            assert_eq!(s, Tensor::id(&[n]));
        }
    }

    #[test]
    fn swap_squares_to_identity() {
        let s = Tensor::<f64>::swap(&[2], &[3]);
        let back = Tensor::<f64>::swap(&[3], &[2]);
        let round = s.then(&back).unwrap();
        assert!(round.allclose(&Tensor::id(&[2, 3]), 1e-12));
    }

    #[test]
    fn permuted_reorders_wires() {
        let t = Tensor::new((0..6).collect(), vec![2, 3], vec![]).unwrap();
        let p = t.permuted(&[1, 0], &[]).unwrap();
        assert_eq!(p.dom, vec![3, 2]);
        assert_eq!(p.data, vec![0, 3, 1, 4, 2, 5]);
        // Reordering the identity's outputs is the swap.
        let id = Tensor::<i64>::id(&[2, 3]);
        let via_perm = id.permuted(&[0, 1], &[1, 0]).unwrap();
        assert_eq!(via_perm, Tensor::swap(&[2], &[3]));
        assert!(t.permuted(&[0, 0], &[]).is_err());
        assert!(t.permuted(&[0], &[]).is_err());
    }

    #[test]
    fn copy_is_the_diagonal() {
        let c = Tensor::<i64>::copy(&[2], 2);
        assert_eq!(c.cod, vec![2, 2]);
        let mut expect = vec![0i64; 8];
        expect[0] = 1;
        expect[7] = 1;
        assert_eq!(c.data, expect);
        // Copying zero times is the all-ones effect (discarding).
        let del = Tensor::<i64>::copy(&[3], 0);
        assert_eq!(del.data, vec![1, 1, 1]);
    }

    #[test]
    fn born_rule_changes_rig() {
        let r = 1.0 / 2.0f64.sqrt();
        let v = Tensor::new(vec![Cplx::real(r), Cplx::new(0.0, -r)], vec![], vec![2]).unwrap();
        let p = v.squared_amplitude();
        assert!(p.allclose(&Tensor::new(vec![0.5, 0.5], vec![], vec![2]).unwrap(), 1e-12));
    }
}
