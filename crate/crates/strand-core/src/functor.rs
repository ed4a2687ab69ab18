//! Functors out of the free category.
//!
//! A target category implements [`Cat`]; structural boxes (cups, braids,
//! spiders, evaluations, ...) are interpreted by the target's hooks, while
//! generator-like boxes (named boxes, gates, states) go through the
//! functor's `ar` map.  Daggered boxes evaluate generically as the dagger
//! of the undaggered image, and winding numbers as iterated adjoints of the
//! base object's image.

use crate::boxes::{BBox, BoxKind};
use crate::diagram::{Diagram, Sum};
use crate::rigid;
use crate::symmetric;
use crate::ty::{ExpKind, Ob, Ty};
use crate::Error;

pub trait Cat {
    type Ob: Clone + std::fmt::Debug;
    type Arr: Clone;

    fn unit_ob(&self) -> Self::Ob;
    fn tensor_ob(&self, x: &Self::Ob, y: &Self::Ob) -> Self::Ob;
    fn id(&self, x: &Self::Ob) -> Self::Arr;
    fn then(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr, Error>;
    fn tensor(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr, Error>;

    fn dagger(&self, _f: &Self::Arr) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("dagger"))
    }
    fn add(&self, _f: &Self::Arr, _g: &Self::Arr) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("sums"))
    }
    fn zero(&self, _dom: &Self::Ob, _cod: &Self::Ob) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("sums"))
    }
    fn left_ob(&self, _x: &Self::Ob) -> Result<Self::Ob, Error> {
        Err(Error::Unsupported("adjoints"))
    }
    fn right_ob(&self, _x: &Self::Ob) -> Result<Self::Ob, Error> {
        Err(Error::Unsupported("adjoints"))
    }
    fn over_ob(&self, _base: &Self::Ob, _exp: &Self::Ob) -> Result<Self::Ob, Error> {
        Err(Error::Unsupported("exponentials"))
    }
    fn under_ob(&self, _exp: &Self::Ob, _base: &Self::Ob) -> Result<Self::Ob, Error> {
        Err(Error::Unsupported("exponentials"))
    }
    fn sym_exp_ob(&self, _base: &Self::Ob, _exp: &Self::Ob) -> Result<Self::Ob, Error> {
        Err(Error::Unsupported("exponentials"))
    }
    fn cups(&self, _x: &Self::Ob, _y: &Self::Ob) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("cups"))
    }
    fn caps(&self, _x: &Self::Ob, _y: &Self::Ob) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("caps"))
    }
    fn braid(&self, _x: &Self::Ob, _y: &Self::Ob) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("braids"))
    }
    fn spider(
        &self,
        _a: usize,
        _b: usize,
        _x: &Self::Ob,
        _phase: Option<f64>,
    ) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("spiders"))
    }
    fn copy(&self, _x: &Self::Ob, _n: usize) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("copies"))
    }
    fn merge(&self, x: &Self::Ob, n: usize) -> Result<Self::Arr, Error> {
        self.dagger(&self.copy(x, n)?)
    }
    fn bubble(
        &self,
        _inside: &Self::Arr,
        _tag: &str,
        _dom: &Self::Ob,
        _cod: &Self::Ob,
    ) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("bubbles"))
    }
    fn ev(&self, _base: &Self::Ob, _exp: &Self::Ob, _left: bool) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("evaluation"))
    }
    fn curry(&self, _f: &Self::Arr, _exp: &Self::Ob, _left: bool) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("currying"))
    }

    /// One layer of a diagram applied to an accumulated arrow.  Targets with
    /// a cheaper route than materializing `id ⊗ f ⊗ id` override this.
    fn apply_layer(
        &self,
        acc: &Self::Arr,
        left: &Self::Ob,
        f: &Self::Arr,
        right: &Self::Ob,
    ) -> Result<Self::Arr, Error> {
        let layer = self.tensor(&self.tensor(&self.id(left), f)?, &self.id(right))?;
        self.then(acc, &layer)
    }
}

pub struct Functor<'a, C: Cat> {
    pub cat: &'a C,
    /// Image of basic objects (winding zero, no exponentials).
    pub ob: &'a dyn Fn(&Ob) -> Result<C::Ob, Error>,
    /// Image of generator-like boxes; never sees daggered boxes.
    pub ar: &'a dyn Fn(&BBox) -> Result<C::Arr, Error>,
}

impl<'a, C: Cat> Functor<'a, C> {
    pub fn map_ob(&self, ob: &Ob) -> Result<C::Ob, Error> {
        match ob {
            Ob::Basic { z, .. } if *z != 0 => {
                let mut img = (self.ob)(&ob.unwound())?;
                for _ in 0..z.abs() {
                    img = if *z < 0 { self.cat.left_ob(&img)? } else { self.cat.right_ob(&img)? };
                }
                Ok(img)
            }
            Ob::Exp { base, exponent, kind } => {
                let b = self.map_ty(base)?;
                let e = self.map_ty(exponent)?;
                match kind {
                    ExpKind::Over => self.cat.over_ob(&b, &e),
                    ExpKind::Under => self.cat.under_ob(&e, &b),
                    ExpKind::Sym => self.cat.sym_exp_ob(&b, &e),
                }
            }
            _ => (self.ob)(ob),
        }
    }

    pub fn map_ty(&self, ty: &Ty) -> Result<C::Ob, Error> {
        let mut acc = self.cat.unit_ob();
        for ob in ty.iter() {
            acc = self.cat.tensor_ob(&acc, &self.map_ob(ob)?);
        }
        Ok(acc)
    }

    pub fn map_box(&self, b: &BBox) -> Result<C::Arr, Error> {
        if b.is_dagger() {
            return self.cat.dagger(&self.map_box(&b.dagger())?);
        }
        match &b.kind {
            BoxKind::Cup => {
                self.cat.cups(&self.map_ob(&b.dom[0])?, &self.map_ob(&b.dom[1])?)
            }
            BoxKind::Cap => {
                self.cat.caps(&self.map_ob(&b.cod[0])?, &self.map_ob(&b.cod[1])?)
            }
            BoxKind::Braid { .. } | BoxKind::Swap => {
                self.cat.braid(&self.map_ob(&b.dom[0])?, &self.map_ob(&b.dom[1])?)
            }
            BoxKind::Spider { legs_in, legs_out, ob, phase } => self.cat.spider(
                *legs_in,
                *legs_out,
                &self.map_ob(ob)?,
                phase.map(|p| p.get()),
            ),
            BoxKind::Copy { copies } => self.cat.copy(&self.map_ob(&b.dom[0])?, *copies),
            BoxKind::Merge { copies } => self.cat.merge(&self.map_ob(&b.cod[0])?, *copies),
            BoxKind::Bubble { inside, tag } => {
                let img = self.map_sum(inside)?;
                self.cat.bubble(&img, tag, &self.map_ty(&b.dom)?, &self.map_ty(&b.cod)?)
            }
            BoxKind::Ev { .. } => {
                let exp = b
                    .dom
                    .iter()
                    .find(|ob| matches!(ob, Ob::Exp { .. }))
                    .ok_or_else(|| Error::UnknownBox(b.label()))?;
                let Ob::Exp { base, exponent, kind } = exp else { unreachable!() };
                self.cat.ev(
                    &self.map_ty(base)?,
                    &self.map_ty(exponent)?,
                    matches!(kind, ExpKind::Under),
                )
            }
            BoxKind::Curry { inside, left, .. } => {
                let Some(Ob::Exp { exponent, .. }) = b.cod.first() else {
                    return Err(Error::UnknownBox(b.label()));
                };
                let f = self.map(inside)?;
                self.cat.curry(&f, &self.map_ty(exponent)?, *left)
            }
            _ => (self.ar)(b),
        }
    }

    pub fn map(&self, d: &Diagram) -> Result<C::Arr, Error> {
        let mut acc = self.cat.id(&self.map_ty(&d.dom())?);
        for layer in d.layers() {
            let f = self.map_box(&layer.bx)?;
            let left = self.map_ty(&layer.left)?;
            let right = self.map_ty(&layer.right)?;
            acc = self.cat.apply_layer(&acc, &left, &f, &right)?;
        }
        Ok(acc)
    }

    pub fn map_sum(&self, s: &Sum) -> Result<C::Arr, Error> {
        let mut acc: Option<C::Arr> = None;
        for term in &s.terms {
            let img = self.map(term)?;
            acc = Some(match acc {
                None => img,
                Some(a) => self.cat.add(&a, &img)?,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => self.cat.zero(&self.map_ty(&s.dom)?, &self.map_ty(&s.cod)?),
        }
    }
}

/// The syntax itself as a target: functors into `SyntaxCat` rename objects
/// and boxes while preserving all structure.  Braids symmetrize to swaps,
/// exponentials realize as adjoints (`b << e` becomes `b @ e.l`).
pub struct SyntaxCat;

impl Cat for SyntaxCat {
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
    fn over_ob(&self, base: &Ty, exp: &Ty) -> Result<Ty, Error> {
        Ok(base.tensor(&exp.l()))
    }
    fn under_ob(&self, exp: &Ty, base: &Ty) -> Result<Ty, Error> {
        Ok(exp.r().tensor(base))
    }
    fn cups(&self, x: &Ty, y: &Ty) -> Result<Diagram, Error> {
        rigid::cups(x, y)
    }
    fn caps(&self, x: &Ty, y: &Ty) -> Result<Diagram, Error> {
        rigid::caps(x, y)
    }
    fn braid(&self, x: &Ty, y: &Ty) -> Result<Diagram, Error> {
        Ok(symmetric::swap(x, y))
    }
    fn spider(&self, a: usize, b: usize, x: &Ty, phase: Option<f64>) -> Result<Diagram, Error> {
        Ok(symmetric::spiders(a, b, x, phase.map(crate::num::Real)))
    }
    fn copy(&self, x: &Ty, n: usize) -> Result<Diagram, Error> {
        Ok(symmetric::copies(x, n))
    }
    fn merge(&self, x: &Ty, n: usize) -> Result<Diagram, Error> {
        Ok(symmetric::merges(x, n))
    }
    fn bubble(&self, inside: &Diagram, tag: &str, _dom: &Ty, _cod: &Ty) -> Result<Diagram, Error> {
        Ok(Diagram::from_box(BBox::bubble(Sum::from(inside.clone()), tag)))
    }
    fn ev(&self, base: &Ty, exp: &Ty, left: bool) -> Result<Diagram, Error> {
        if left {
            Ok(rigid::cups(exp, &exp.r())?.tensor(&Diagram::id(base.clone())))
        } else {
            Ok(Diagram::id(base.clone()).tensor(&rigid::cups(&exp.l(), exp)?))
        }
    }
    fn curry(&self, f: &Diagram, exp: &Ty, left: bool) -> Result<Diagram, Error> {
        let dlen = f.dom().len();
        let n = exp.len();
        if n > dlen {
            return Err(Error::OutOfRange(n));
        }
        if left {
            let rest = f.dom().slice(n..dlen);
            rigid::caps(&exp.r(), exp)?
                .tensor(&Diagram::id(rest))
                .then(&Diagram::id(exp.r()).tensor(f))
        } else {
            let rest = f.dom().slice(0..dlen - n);
            Diagram::id(rest.clone())
                .tensor(&rigid::caps(exp, &exp.l())?)
                .then(&f.tensor(&Diagram::id(exp.l())))
        }
    }
}
