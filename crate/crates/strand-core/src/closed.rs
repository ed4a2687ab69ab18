//! Function types on top of the monoidal kernel: `over` and `under`
//! exponentials, evaluation, currying, and the translation that expands
//! every exponential into left and right adjoints so the rigid machinery
//! can take over.

use crate::boxes::{BBox, BoxKind};
use crate::diagram::Diagram;
use crate::functor::{Functor, SyntaxCat};
use crate::ty::{ExpKind, Ob, Ty};
use crate::Error;

/// `base << exponent`: takes `exponent` on the right.
pub fn over(base: Ty, exponent: Ty) -> Ty {
    Ty::one(Ob::Exp { base, exponent, kind: ExpKind::Over })
}

/// `exponent >> base`: takes `exponent` on the left.
pub fn under(exponent: Ty, base: Ty) -> Ty {
    Ty::one(Ob::Exp { base, exponent, kind: ExpKind::Under })
}

pub fn ev(exp: &Ob) -> Result<Diagram, Error> {
    Ok(Diagram::from_box(BBox::ev(exp)?))
}

pub fn curry(inside: Diagram, n: usize, left: bool) -> Result<Diagram, Error> {
    Ok(Diagram::from_box(BBox::curry(inside, n, left)?))
}

/// Undo a curry by feeding the function wire to an evaluation box.
pub fn uncurry(d: &Diagram, left: bool) -> Result<Diagram, Error> {
    let cod = d.cod();
    if cod.len() != 1 {
        return Err(Error::TypeMismatch("single exponential".into(), cod.to_string()));
    }
    let exp = &cod[0];
    match exp {
        Ob::Exp { exponent, kind, .. } => {
            let want = if left { ExpKind::Under } else { ExpKind::Over };
            if *kind != want && *kind != ExpKind::Sym {
                return Err(Error::TypeMismatch(format!("{want:?} exponential"), exp.to_string()));
            }
            let fed = if left {
                Diagram::id(exponent.clone()).tensor(d)
            } else {
                d.tensor(&Diagram::id(exponent.clone()))
            };
            fed.then(&ev(exp)?)
        }
        _ => Err(Error::TypeMismatch("exponential".into(), exp.to_string())),
    }
}

/// Lift a value of type `x` to a function consuming an `x`-expecting map.
/// With `left`, the result is `(y << x) >> y`, otherwise `y << (x >> y)`.
pub fn type_raise(x: &Ty, y: &Ty, left: bool) -> Result<Diagram, Error> {
    if left {
        let f = over(y.clone(), x.clone());
        curry(uncurry(&Diagram::id(f), false)?, 1, true)
    } else {
        let f = under(x.clone(), y.clone());
        curry(uncurry(&Diagram::id(f), true)?, 1, false)
    }
}

fn realize_ob(ob: &Ob) -> Result<Ty, Error> {
    match ob {
        Ob::Exp { base, exponent, kind } => {
            let b = realize_ty(base)?;
            let e = realize_ty(exponent)?;
            match kind {
                ExpKind::Over => Ok(b.tensor(&e.l())),
                ExpKind::Under => Ok(e.r().tensor(&b)),
                ExpKind::Sym => Err(Error::Unsupported("symmetric exponentials have no adjoint form")),
            }
        }
        other => Ok(Ty::one(other.clone())),
    }
}

/// Expand every exponential into adjoints: `b << e` becomes `b @ e.l`
/// and `e >> b` becomes `e.r @ b`.
pub fn realize_ty(t: &Ty) -> Result<Ty, Error> {
    let mut out = Ty::unit();
    for ob in t.iter() {
        out = out.tensor(&realize_ob(ob)?);
    }
    Ok(out)
}

/// Rewrite a diagram with function types as a rigid diagram: exponentials
/// expand to adjoints, evaluation becomes cups, currying becomes caps.
pub fn to_rigid(d: &Diagram) -> Result<Diagram, Error> {
    fn ob(o: &Ob) -> Result<Ty, Error> {
        realize_ob(o)
    }
    fn ar(b: &BBox) -> Result<Diagram, Error> {
        let kind = match &b.kind {
            BoxKind::Plain { name, dagger } => BoxKind::Plain { name: name.clone(), dagger: *dagger },
            BoxKind::Word { name, dagger } => BoxKind::Word { name: name.clone(), dagger: *dagger },
            other => other.clone(),
        };
        Ok(Diagram::from_box(BBox {
            dom: realize_ty(&b.dom)?,
            cod: realize_ty(&b.cod)?,
            kind,
        }))
    }
    let cat = SyntaxCat;
    let f = Functor { cat: &cat, ob: &ob, ar: &ar };
    f.map(d)
}
