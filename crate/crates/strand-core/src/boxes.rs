//! Generating boxes.
//!
//! Every box is a value of [`BBox`]: a domain, a codomain and a [`BoxKind`].
//! Structural boxes (cups, swaps, spiders, ...) are first-class kinds rather
//! than named generators so that rewriting and evaluation can dispatch on
//! them without string matching.  Daggers are a flag where the kind is
//! direction-sensitive and a kind swap where it has a canonical partner.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::diagram::{Diagram, Sum};
use crate::expr::AffineExpr;
use crate::num::{Cplx, Real};
use crate::ty::{ExpKind, Ob, Ty};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Z,
    X,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoxKind {
    Plain { name: String, dagger: bool },
    /// Lexical entry; behaves like `Plain` but wiring functors key on it.
    Word { name: String, dagger: bool },
    Cup,
    Cap,
    Braid { dagger: bool },
    Swap,
    Spider { legs_in: usize, legs_out: usize, ob: Ob, phase: Option<Real> },
    Copy { copies: usize },
    Merge { copies: usize },
    Gate { name: String, array: Vec<Cplx>, dagger: bool },
    Rot { axis: Axis, phase: AffineExpr, dagger: bool },
    KetBra { digits: Vec<usize>, base: usize, bra: bool },
    Measure { dim: usize },
    Encode { dim: usize },
    Discard,
    MixedState,
    Sqrt { value: Real },
    Scalar { value: Cplx, pure: bool },
    Bubble { inside: Arc<Sum>, tag: String },
    Ev { dagger: bool },
    Curry { inside: Arc<Diagram>, curried: usize, left: bool, dagger: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BBox {
    pub dom: Ty,
    pub cod: Ty,
    pub kind: BoxKind,
}

impl BBox {
    pub fn plain(name: impl Into<String>, dom: Ty, cod: Ty) -> Self {
        BBox { dom, cod, kind: BoxKind::Plain { name: name.into(), dagger: false } }
    }

    pub fn word(name: impl Into<String>, dom: Ty, cod: Ty) -> Self {
        BBox { dom, cod, kind: BoxKind::Word { name: name.into(), dagger: false } }
    }

    /// Bent wire with both ends pointing up; `x` must be left adjoint to `y`.
    pub fn cup(x: Ob, y: Ob) -> Result<Self, Error> {
        if x != y.l() {
            return Err(Error::TypeMismatch(x.to_string(), format!("{}.l", y)));
        }
        Ok(BBox { dom: Ty(vec![x, y]), cod: Ty::unit(), kind: BoxKind::Cup })
    }

    /// Bent wire with both ends pointing down; `y` must be left adjoint to `x`.
    pub fn cap(x: Ob, y: Ob) -> Result<Self, Error> {
        if x.l() != y {
            return Err(Error::TypeMismatch(format!("{}.l", x), y.to_string()));
        }
        Ok(BBox { dom: Ty::unit(), cod: Ty(vec![x, y]), kind: BoxKind::Cap })
    }

    pub fn braid(x: Ob, y: Ob) -> Self {
        BBox {
            dom: Ty(vec![x.clone(), y.clone()]),
            cod: Ty(vec![y, x]),
            kind: BoxKind::Braid { dagger: false },
        }
    }

    pub fn swap(x: Ob, y: Ob) -> Self {
        BBox { dom: Ty(vec![x.clone(), y.clone()]), cod: Ty(vec![y, x]), kind: BoxKind::Swap }
    }

    pub fn spider(legs_in: usize, legs_out: usize, ob: Ob, phase: Option<Real>) -> Self {
        BBox {
            dom: Ty::one(ob.clone()).pow(legs_in),
            cod: Ty::one(ob.clone()).pow(legs_out),
            kind: BoxKind::Spider { legs_in, legs_out, ob, phase },
        }
    }

    pub fn copy(ob: Ob, copies: usize) -> Self {
        BBox {
            dom: Ty::one(ob.clone()),
            cod: Ty::one(ob).pow(copies),
            kind: BoxKind::Copy { copies },
        }
    }

    pub fn merge(ob: Ob, copies: usize) -> Self {
        BBox {
            dom: Ty::one(ob.clone()).pow(copies),
            cod: Ty::one(ob),
            kind: BoxKind::Merge { copies },
        }
    }

    pub fn gate(name: impl Into<String>, dom: Ty, cod: Ty, array: Vec<Cplx>) -> Result<Self, Error> {
        let b = BBox { dom, cod, kind: BoxKind::Gate { name: name.into(), array, dagger: false } };
        b.validate()?;
        Ok(b)
    }

    pub fn rot(axis: Axis, phase: AffineExpr) -> Self {
        let q = Ty::one(Ob::Qudit(2));
        BBox { dom: q.clone(), cod: q, kind: BoxKind::Rot { axis, phase, dagger: false } }
    }

    pub fn ket(digits: Vec<usize>, base: usize) -> Result<Self, Error> {
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::OutOfRange(d));
        }
        let cod = Ty::one(Ob::Qudit(base)).pow(digits.len());
        Ok(BBox { dom: Ty::unit(), cod, kind: BoxKind::KetBra { digits, base, bra: false } })
    }

    pub fn bra(digits: Vec<usize>, base: usize) -> Result<Self, Error> {
        Ok(Self::ket(digits, base)?.dagger())
    }

    pub fn measure(dim: usize) -> Self {
        BBox {
            dom: Ty::one(Ob::Qudit(dim)),
            cod: Ty::one(Ob::Digit(dim)),
            kind: BoxKind::Measure { dim },
        }
    }

    pub fn encode(dim: usize) -> Self {
        BBox {
            dom: Ty::one(Ob::Digit(dim)),
            cod: Ty::one(Ob::Qudit(dim)),
            kind: BoxKind::Encode { dim },
        }
    }

    pub fn discard(ty: Ty) -> Self {
        BBox { dom: ty, cod: Ty::unit(), kind: BoxKind::Discard }
    }

    pub fn mixed_state(ty: Ty) -> Self {
        BBox { dom: Ty::unit(), cod: ty, kind: BoxKind::MixedState }
    }

    pub fn sqrt(value: f64) -> Self {
        BBox { dom: Ty::unit(), cod: Ty::unit(), kind: BoxKind::Sqrt { value: Real(value) } }
    }

    pub fn scalar(value: Cplx, pure: bool) -> Self {
        BBox { dom: Ty::unit(), cod: Ty::unit(), kind: BoxKind::Scalar { value, pure } }
    }

    pub fn bubble(inside: Sum, tag: impl Into<String>) -> Self {
        BBox {
            dom: inside.dom.clone(),
            cod: inside.cod.clone(),
            kind: BoxKind::Bubble { inside: Arc::new(inside), tag: tag.into() },
        }
    }

    /// Applies a function object to its argument.  The argument side is read
    /// off the exponential's kind.
    pub fn ev(exp: &Ob) -> Result<Self, Error> {
        match exp {
            Ob::Exp { base, exponent, kind } => {
                let f = Ty::one(exp.clone());
                let (dom, cod) = match kind {
                    ExpKind::Over | ExpKind::Sym => (f.tensor(exponent), base.clone()),
                    ExpKind::Under => (exponent.tensor(&f), base.clone()),
                };
                Ok(BBox { dom, cod, kind: BoxKind::Ev { dagger: false } })
            }
            _ => Err(Error::TypeMismatch(exp.to_string(), "an exponential object".into())),
        }
    }

    /// Abstracts the last `curried` inputs (first, when `left`) of a diagram
    /// into a function object.
    pub fn curry(inside: Diagram, curried: usize, left: bool) -> Result<Self, Error> {
        let dlen = inside.dom().len();
        if curried > dlen {
            return Err(Error::OutOfRange(curried));
        }
        let (dom, exp) = if left {
            (
                inside.dom().slice(curried..dlen),
                Ob::Exp {
                    base: inside.cod(),
                    exponent: inside.dom().slice(0..curried),
                    kind: ExpKind::Under,
                },
            )
        } else {
            (
                inside.dom().slice(0..dlen - curried),
                Ob::Exp {
                    base: inside.cod(),
                    exponent: inside.dom().slice(dlen - curried..dlen),
                    kind: ExpKind::Over,
                },
            )
        };
        Ok(BBox {
            dom,
            cod: Ty::one(exp),
            kind: BoxKind::Curry { inside: Arc::new(inside), curried, left, dagger: false },
        })
    }

    pub fn is_dagger(&self) -> bool {
        match &self.kind {
            BoxKind::Plain { dagger, .. }
            | BoxKind::Word { dagger, .. }
            | BoxKind::Braid { dagger }
            | BoxKind::Gate { dagger, .. }
            | BoxKind::Rot { dagger, .. }
            | BoxKind::Ev { dagger }
            | BoxKind::Curry { dagger, .. } => *dagger,
            BoxKind::KetBra { bra, .. } => *bra,
            _ => false,
        }
    }

    pub fn dagger(&self) -> BBox {
        let kind = match &self.kind {
            BoxKind::Plain { name, dagger } => {
                BoxKind::Plain { name: name.clone(), dagger: !dagger }
            }
            BoxKind::Word { name, dagger } => {
                BoxKind::Word { name: name.clone(), dagger: !dagger }
            }
            BoxKind::Cup => BoxKind::Cap,
            BoxKind::Cap => BoxKind::Cup,
            BoxKind::Braid { dagger } => BoxKind::Braid { dagger: !dagger },
            BoxKind::Swap => BoxKind::Swap,
            BoxKind::Spider { legs_in, legs_out, ob, phase } => BoxKind::Spider {
                legs_in: *legs_out,
                legs_out: *legs_in,
                ob: ob.clone(),
                phase: phase.map(|p| -p),
            },
            BoxKind::Copy { copies } => BoxKind::Merge { copies: *copies },
            BoxKind::Merge { copies } => BoxKind::Copy { copies: *copies },
            BoxKind::Gate { name, array, dagger } => {
                BoxKind::Gate { name: name.clone(), array: array.clone(), dagger: !dagger }
            }
            BoxKind::Rot { axis, phase, dagger } => {
                BoxKind::Rot { axis: *axis, phase: phase.clone(), dagger: !dagger }
            }
            BoxKind::KetBra { digits, base, bra } => {
                BoxKind::KetBra { digits: digits.clone(), base: *base, bra: !bra }
            }
            BoxKind::Measure { dim } => BoxKind::Encode { dim: *dim },
            BoxKind::Encode { dim } => BoxKind::Measure { dim: *dim },
            BoxKind::Discard => BoxKind::MixedState,
            BoxKind::MixedState => BoxKind::Discard,
            BoxKind::Sqrt { value } => BoxKind::Sqrt { value: *value },
            BoxKind::Scalar { value, pure } => {
                BoxKind::Scalar { value: value.conj(), pure: *pure }
            }
            BoxKind::Bubble { inside, tag } => BoxKind::Bubble {
                inside: Arc::new(inside.dagger()),
                tag: tag.clone(),
            },
            BoxKind::Ev { dagger } => BoxKind::Ev { dagger: !dagger },
            BoxKind::Curry { inside, curried, left, dagger } => BoxKind::Curry {
                inside: inside.clone(),
                curried: *curried,
                left: *left,
                dagger: !dagger,
            },
        };
        BBox { dom: self.cod.clone(), cod: self.dom.clone(), kind }
    }

    /// Variables the box depends on, through phases and nested diagrams.
    pub fn free_vars(&self) -> BTreeSet<String> {
        match &self.kind {
            BoxKind::Rot { phase, .. } => phase.vars().map(str::to_string).collect(),
            BoxKind::Bubble { inside, .. } => {
                inside.terms.iter().flat_map(|d| d.free_vars()).collect()
            }
            BoxKind::Curry { inside, .. } => inside.free_vars(),
            _ => BTreeSet::new(),
        }
    }

    /// Checks the kind's constraints against the stored types.  Used when
    /// boxes arrive from serialized form rather than from the constructors.
    pub fn validate(&self) -> Result<(), Error> {
        if self.is_dagger() {
            return self.dagger().validate();
        }
        let bad = || Error::TypeMismatch(self.dom.to_string(), self.cod.to_string());
        match &self.kind {
            BoxKind::Plain { .. } | BoxKind::Word { .. } => Ok(()),
            BoxKind::Cup => {
                if self.dom.len() == 2 && self.cod.is_empty() && self.dom[0] == self.dom[1].l() {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Cap => {
                if self.cod.len() == 2 && self.dom.is_empty() && self.cod[0].l() == self.cod[1] {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Braid { .. } | BoxKind::Swap => {
                if self.dom.len() == 2
                    && self.cod.len() == 2
                    && self.cod[0] == self.dom[1]
                    && self.cod[1] == self.dom[0]
                {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Spider { legs_in, legs_out, ob, .. } => {
                let t = Ty::one(ob.clone());
                if self.dom == t.pow(*legs_in) && self.cod == t.pow(*legs_out) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Copy { copies } => {
                if self.dom.len() == 1 && self.cod == self.dom.pow(*copies) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Merge { copies } => {
                if self.cod.len() == 1 && self.dom == self.cod.pow(*copies) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Gate { array, .. } => {
                let dims = |t: &Ty| -> Option<usize> {
                    t.iter()
                        .map(|ob| match ob {
                            Ob::Qudit(n) | Ob::Digit(n) => Some(*n),
                            _ => None,
                        })
                        .product()
                };
                match (dims(&self.dom), dims(&self.cod)) {
                    (Some(d), Some(c)) if d * c == array.len() => Ok(()),
                    _ => Err(bad()),
                }
            }
            BoxKind::Rot { .. } => {
                let q = Ty::one(Ob::Qudit(2));
                if self.dom == q && self.cod == q {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::KetBra { digits, base, .. } => {
                if digits.iter().any(|d| d >= base) {
                    return Err(Error::OutOfRange(*digits.iter().max().unwrap()));
                }
                let t = Ty::one(Ob::Qudit(*base)).pow(digits.len());
                if self.dom.is_empty() && self.cod == t {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Measure { dim } => {
                if self.dom == Ty::one(Ob::Qudit(*dim)) && self.cod == Ty::one(Ob::Digit(*dim)) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Encode { dim } => {
                if self.dom == Ty::one(Ob::Digit(*dim)) && self.cod == Ty::one(Ob::Qudit(*dim)) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Discard => {
                let value_only = self
                    .dom
                    .iter()
                    .all(|ob| matches!(ob, Ob::Qudit(_) | Ob::Digit(_)));
                if value_only && self.cod.is_empty() {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::MixedState => unreachable!("mixed state validates through its dagger"),
            BoxKind::Sqrt { .. } | BoxKind::Scalar { .. } => {
                if self.dom.is_empty() && self.cod.is_empty() {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Bubble { inside, .. } => {
                if inside.dom == self.dom && inside.cod == self.cod {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Ev { .. } => {
                let exp = self
                    .dom
                    .first()
                    .filter(|ob| matches!(ob, Ob::Exp { kind: ExpKind::Over | ExpKind::Sym, .. }))
                    .or_else(|| {
                        self.dom
                            .last()
                            .filter(|ob| matches!(ob, Ob::Exp { kind: ExpKind::Under, .. }))
                    })
                    .cloned()
                    .ok_or_else(bad)?;
                let expect = BBox::ev(&exp)?;
                if expect.dom == self.dom && expect.cod == self.cod {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            BoxKind::Curry { inside, curried, left, .. } => {
                let expect = BBox::curry((**inside).clone(), *curried, *left)?;
                if expect.dom == self.dom && expect.cod == self.cod {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
        }
    }

    /// Short label for rendering.
    pub fn label(&self) -> String {
        let dag = |name: &str, d: bool| if d { format!("{name}†") } else { name.to_string() };
        match &self.kind {
            BoxKind::Plain { name, dagger } | BoxKind::Word { name, dagger } => {
                dag(name, *dagger)
            }
            BoxKind::Cup => "cup".into(),
            BoxKind::Cap => "cap".into(),
            BoxKind::Braid { dagger } => dag("braid", *dagger),
            BoxKind::Swap => "swap".into(),
            BoxKind::Spider { legs_in, legs_out, phase, .. } => match phase {
                Some(p) => format!("spider({legs_in},{legs_out};{p})"),
                None => format!("spider({legs_in},{legs_out})"),
            },
            BoxKind::Copy { .. } => "copy".into(),
            BoxKind::Merge { .. } => "merge".into(),
            BoxKind::Gate { name, dagger, .. } => dag(name, *dagger),
            BoxKind::Rot { axis, phase, dagger } => {
                let base = match axis {
                    Axis::Z => format!("Rz({phase})"),
                    Axis::X => format!("Rx({phase})"),
                };
                dag(&base, *dagger)
            }
            BoxKind::KetBra { digits, bra, .. } => {
                let ds: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
                if *bra {
                    format!("Bra({})", ds.join(","))
                } else {
                    format!("Ket({})", ds.join(","))
                }
            }
            BoxKind::Measure { .. } => "measure".into(),
            BoxKind::Encode { .. } => "encode".into(),
            BoxKind::Discard => "discard".into(),
            BoxKind::MixedState => "mix".into(),
            BoxKind::Sqrt { value } => format!("sqrt({value})"),
            BoxKind::Scalar { value, .. } => format!("{value}"),
            BoxKind::Bubble { tag, .. } => tag.clone(),
            BoxKind::Ev { dagger } => dag("ev", *dagger),
            BoxKind::Curry { dagger, .. } => dag("curry", *dagger),
        }
    }
}

impl fmt::Display for BBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.label(), self.dom, self.cod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cup_requires_adjoint_pair() {
        let n = Ob::basic("n");
        assert!(BBox::cup(n.clone(), n.r()).is_ok());
        assert!(BBox::cup(n.l(), n.clone()).is_ok());
        assert!(BBox::cup(n.clone(), n.clone()).is_err());
        assert!(BBox::cup(n.clone(), n.l()).is_err());
        // Self-dual objects pair with themselves.
        assert!(BBox::cup(Ob::Qudit(2), Ob::Qudit(2)).is_ok());
    }

    #[test]
    fn cap_requires_adjoint_pair() {
        let n = Ob::basic("n");
        assert!(BBox::cap(n.r(), n.clone()).is_ok());
        assert!(BBox::cap(n.clone(), n.l()).is_ok());
        assert!(BBox::cap(n.clone(), n.r()).is_err());
    }

    #[test]
    fn dagger_is_involutive() {
        let x = Ty::one(Ob::basic("x"));
        let f = BBox::plain("f", x.clone(), x.clone().tensor(&x));
        assert!(f.dagger().is_dagger());
        assert_eq!(f.dagger().dagger(), f);
        assert_eq!(f.dagger().dom, f.cod);

        let cup = BBox::cup(Ob::basic("n"), Ob::basic("n").r()).unwrap();
        assert_eq!(cup.dagger().kind, BoxKind::Cap);
        assert_eq!(cup.dagger().dagger(), cup);

        let s = BBox::spider(1, 2, Ob::Qudit(2), Some(Real(0.25)));
        let sd = s.dagger();
        assert_eq!(
            sd.kind,
            BoxKind::Spider { legs_in: 2, legs_out: 1, ob: Ob::Qudit(2), phase: Some(Real(-0.25)) }
        );
        assert_eq!(sd.dagger(), s);
    }

    #[test]
    fn ket_digits_in_range() {
        assert!(BBox::ket(vec![0, 1], 2).is_ok());
        assert!(matches!(BBox::ket(vec![2], 2), Err(Error::OutOfRange(2))));
        assert_eq!(BBox::bra(vec![0], 2).unwrap().dom, Ty::one(Ob::Qudit(2)));
    }

    #[test]
    fn validate_catches_corrupt_boxes() {
        let n = Ob::basic("n");
        let mut cup = BBox::cup(n.clone(), n.r()).unwrap();
        assert!(cup.validate().is_ok());
        cup.dom = Ty(vec![n.clone(), n.clone()]);
        assert!(cup.validate().is_err());

        let mut sw = BBox::swap(n.clone(), n.l());
        assert!(sw.validate().is_ok());
        sw.cod = sw.dom.clone();
        assert!(sw.validate().is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(BBox::sqrt(2.0).label(), "sqrt(2)");
        assert_eq!(
            BBox::rot(Axis::Z, AffineExpr::var("t")).dagger().label(),
            "Rz(t)†"
        );
        assert_eq!(BBox::ket(vec![0, 1], 2).unwrap().label(), "Ket(0,1)");
    }
}
