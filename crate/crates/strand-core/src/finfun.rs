//! Finite functions indexed backwards: a map from codomain indices to
//! domain indices.  Composition reads right to left through the tables,
//! tensor is the product of index ranges.  This is the home of classical
//! post-processing, where `copy` projects a tuple onto one component.

use crate::functor::Cat;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinFun {
    pub dom: usize,
    pub cod: usize,
    /// `table[j]` is the domain index feeding codomain index `j`.
    pub table: Vec<usize>,
}

impl FinFun {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self, Error> {
        if table.len() != cod {
            return Err(Error::OutOfRange(table.len()));
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= dom) {
            return Err(Error::OutOfRange(bad));
        }
        Ok(FinFun { dom, cod, table })
    }

    pub fn id(n: usize) -> Self {
        FinFun { dom: n, cod: n, table: (0..n).collect() }
    }

    pub fn then(&self, other: &FinFun) -> Result<FinFun, Error> {
        if self.cod != other.dom {
            return Err(Error::TypeMismatch(self.cod.to_string(), other.dom.to_string()));
        }
        let table = other.table.iter().map(|&j| self.table[j]).collect();
        Ok(FinFun { dom: self.dom, cod: other.cod, table })
    }

    pub fn tensor(&self, other: &FinFun) -> FinFun {
        let mut table = Vec::with_capacity(self.cod * other.cod);
        for i in 0..self.cod {
            for j in 0..other.cod {
                table.push(self.table[i] * other.dom + other.table[j]);
            }
        }
        FinFun { dom: self.dom * other.dom, cod: self.cod * other.cod, table }
    }

    pub fn swap(m: usize, n: usize) -> FinFun {
        let mut table = Vec::with_capacity(m * n);
        for jb in 0..n {
            for ja in 0..m {
                table.push(ja * n + jb);
            }
        }
        FinFun { dom: m * n, cod: n * m, table }
    }

    /// Diagonal projection: every copy reads off the same residue.
    pub fn copy(x: usize, copies: usize) -> FinFun {
        let cod = x.pow(copies as u32);
        FinFun { dom: x, cod, table: (0..cod).map(|j| j % x).collect() }
    }

    pub fn apply(&self, j: usize) -> Result<usize, Error> {
        self.table.get(j).copied().ok_or(Error::OutOfRange(j))
    }
}

/// Finite functions as a functor target.
pub struct DictCat;

impl Cat for DictCat {
    type Ob = usize;
    type Arr = FinFun;

    fn unit_ob(&self) -> usize {
        1
    }
    fn tensor_ob(&self, x: &usize, y: &usize) -> usize {
        x * y
    }
    fn id(&self, x: &usize) -> FinFun {
        FinFun::id(*x)
    }
    fn then(&self, f: &FinFun, g: &FinFun) -> Result<FinFun, Error> {
        f.then(g)
    }
    fn tensor(&self, f: &FinFun, g: &FinFun) -> Result<FinFun, Error> {
        Ok(f.tensor(g))
    }
    fn braid(&self, x: &usize, y: &usize) -> Result<FinFun, Error> {
        Ok(FinFun::swap(*x, *y))
    }
    fn copy(&self, x: &usize, n: usize) -> Result<FinFun, Error> {
        Ok(FinFun::copy(*x, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxes::BBox;
    use crate::diagram::Diagram;
    use crate::functor::Functor;
    use crate::ty::{Ob, Ty};

    #[test]
    fn tables_validate() {
        assert!(FinFun::new(2, 3, vec![0, 1, 1]).is_ok());
        assert!(FinFun::new(2, 3, vec![0, 1]).is_err());
        assert!(FinFun::new(2, 3, vec![0, 2, 1]).is_err());
    }

    #[test]
    fn composition_reads_backwards() {
        let f = FinFun::new(3, 2, vec![2, 0]).unwrap();
        let g = FinFun::new(2, 2, vec![1, 0]).unwrap();
        let fg = f.then(&g).unwrap();
        assert_eq!(fg.table, vec![0, 2]);
        assert!(g.then(&FinFun::id(3)).is_err());
        assert_eq!(f.then(&FinFun::id(2)).unwrap(), f);
        assert_eq!(FinFun::id(3).then(&f).unwrap(), f);
    }

    #[test]
    fn swap_is_involutive() {
        let s = FinFun::swap(2, 3);
        assert_eq!(s.then(&FinFun::swap(3, 2)).unwrap(), FinFun::id(6));
    }

    #[test]
    fn copy_projects_residues() {
        let c = FinFun::copy(2, 2);
        assert_eq!(c.table, vec![0, 1, 0, 1]);
        // Coassociativity.
        let left = FinFun::copy(2, 2).then(&FinFun::copy(2, 2).tensor(&FinFun::id(2))).unwrap();
        let right = FinFun::copy(2, 2).then(&FinFun::id(2).tensor(&FinFun::copy(2, 2))).unwrap();
        assert_eq!(left, FinFun::copy(2, 3));
        assert_eq!(right, FinFun::copy(2, 3));
        // Copying then dropping all but one output is the identity.
        assert_eq!(FinFun::copy(2, 1), FinFun::id(2));
    }

    #[test]
    fn functors_compose() {
        // One functor renames objects, the second lands in finite functions;
        // mapping through both agrees with the composite assignment.
        let x = Ty::one(Ob::basic("x"));
        let d = Diagram::from_box(BBox::plain("f", x.clone(), x.clone()))
            .tensor(&Diagram::id(x.clone()))
            .then(&crate::symmetric::swap(&x, &x))
            .unwrap();

        let cat = DictCat;
        let table = FinFun::new(2, 2, vec![1, 0]).unwrap();
        let table2 = table.clone();
        let direct = Functor {
            cat: &cat,
            ob: &move |_: &Ob| Ok(2usize),
            ar: &move |_: &BBox| Ok(table.clone()),
        };
        let expected = table2
            .tensor(&FinFun::id(2))
            .then(&FinFun::swap(2, 2))
            .unwrap();
        assert_eq!(direct.map(&d).unwrap(), expected);
    }
}
