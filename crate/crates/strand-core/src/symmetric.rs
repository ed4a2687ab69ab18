//! Braids, swaps and their coherence.
//!
//! Braids of composite types decompose one crossing at a time (the hexagon
//! recursion), spiders and copies of composite types interleave with swaps.
//! `naturality` slides a box through a braid; it is the rewriting step for
//! braided categories, where the interchanger alone is too weak.

use crate::boxes::{BBox, BoxKind};
use crate::diagram::{Diagram, Layer, Match};
use crate::num::Real;
use crate::ty::{Ob, Ty};
use crate::Error;

/// Crossing factory: braid boxes keep track of which strand is on top,
/// swap boxes do not.
pub type CrossFactory<'a> = &'a dyn Fn(&Ob, &Ob) -> BBox;

pub fn braid_factory(a: &Ob, b: &Ob) -> BBox {
    BBox::braid(a.clone(), b.clone())
}

pub fn swap_factory(a: &Ob, b: &Ob) -> BBox {
    BBox::swap(a.clone(), b.clone())
}

/// Crossing of composite types, one generating crossing per pair of objects.
pub fn hexagon(x: &Ty, y: &Ty, factory: CrossFactory) -> Diagram {
    if x.is_empty() {
        return Diagram::id(y.clone());
    }
    if y.is_empty() {
        return Diagram::id(x.clone());
    }
    if x.len() == 1 && y.len() == 1 {
        return Diagram::from_box(factory(&x[0], &y[0]));
    }
    let ok = "hexagon recursion is well-typed";
    if x.len() == 1 {
        let head = y.slice(0..1);
        let tail = y.slice(1..y.len());
        hexagon(x, &head, factory)
            .tensor(&Diagram::id(tail.clone()))
            .then(&Diagram::id(head).tensor(&hexagon(x, &tail, factory)))
            .expect(ok)
    } else {
        let head = x.slice(0..1);
        let tail = x.slice(1..x.len());
        Diagram::id(head.clone())
            .tensor(&hexagon(&tail, y, factory))
            .then(&hexagon(&head, y, factory).tensor(&Diagram::id(tail)))
            .expect(ok)
    }
}

pub fn braid(x: &Ty, y: &Ty) -> Diagram {
    hexagon(x, y, &braid_factory)
}

pub fn swap(x: &Ty, y: &Ty) -> Diagram {
    hexagon(x, y, &swap_factory)
}

/// Fan a type out `n` ways using a per-object leaf box, interleaving the
/// copies with swaps.
fn fan(x: &Ty, n: usize, leaf: &dyn Fn(&Ob, usize) -> BBox) -> Diagram {
    if x.is_empty() {
        return Diagram::id(Ty::unit());
    }
    if x.len() == 1 {
        return Diagram::from_box(leaf(&x[0], n));
    }
    let ok = "fan recursion is well-typed";
    match n {
        1 => Diagram::id(x.clone()),
        0 => x
            .iter()
            .fold(Diagram::id(Ty::unit()), |acc, ob| {
                acc.tensor(&Diagram::from_box(leaf(ob, 0)))
            }),
        2 => {
            let head = x.slice(0..1);
            let tail = x.slice(1..x.len());
            let top = fan(&head, 2, leaf).tensor(&fan(&tail, 2, leaf));
            let mid = Diagram::id(head.clone())
                .tensor(&swap(&head, &tail))
                .tensor(&Diagram::id(tail));
            top.then(&mid).expect(ok)
        }
        _ => {
            let two = fan(x, 2, leaf);
            fan(x, n - 1, leaf)
                .then(&two.tensor(&Diagram::id(x.pow(n - 2))))
                .expect(ok)
        }
    }
}

/// Spider with `a` inputs and `b` outputs on every object of `x`.  The
/// composite case interleaves single-object spiders; a phase is pushed onto
/// one-in one-out spiders in the middle.
pub fn spiders(a: usize, b: usize, x: &Ty, phase: Option<Real>) -> Diagram {
    if x.len() == 1 {
        return Diagram::from_box(BBox::spider(a, b, x[0].clone(), phase));
    }
    if x.is_empty() {
        return Diagram::id(Ty::unit());
    }
    let ok = "spider coherence is well-typed";
    if let Some(p) = phase {
        let middle = x.iter().fold(Diagram::id(Ty::unit()), |acc, ob| {
            acc.tensor(&Diagram::from_box(BBox::spider(1, 1, ob.clone(), Some(p))))
        });
        return spiders(a, 1, x, None)
            .then(&middle)
            .expect(ok)
            .then(&spiders(1, b, x, None))
            .expect(ok);
    }
    let leaf = |ob: &Ob, k: usize| BBox::spider(1, k, ob.clone(), None);
    match (a, b) {
        (1, _) => fan(x, b, &leaf),
        (_, 1) => fan(x, a, &leaf).dagger(),
        _ => spiders(a, 1, x, None).then(&spiders(1, b, x, None)).expect(ok),
    }
}

/// Natural comonoid: one `Copy` box per object, interleaved with swaps.
pub fn copies(x: &Ty, n: usize) -> Diagram {
    fan(x, n, &|ob: &Ob, k: usize| BBox::copy(ob.clone(), k))
}

pub fn merges(x: &Ty, n: usize) -> Diagram {
    copies(x, n).dagger()
}

/// Slides the box of layer `i` through a crossing with the wire just left
/// (or right) of it; `down` says whether the crossing is below the box.
pub fn naturality(
    d: &Diagram,
    i: usize,
    left: bool,
    down: bool,
    factory: CrossFactory,
) -> Result<Diagram, Error> {
    let layer = d.layers().get(i).cloned().ok_or(Error::OutOfRange(i))?;
    let b = layer.bx.clone();
    let bd = Diagram::from_box(b.clone());
    let (x, ctx_l, ctx_r) = if left {
        let n = layer.left.len();
        if n == 0 {
            return Err(Error::NoMatch);
        }
        (Ty::one(layer.left[n - 1].clone()), layer.left.slice(0..n - 1), layer.right.clone())
    } else {
        if layer.right.is_empty() {
            return Err(Error::NoMatch);
        }
        (
            Ty::one(layer.right[0].clone()),
            layer.left.clone(),
            layer.right.slice(1..layer.right.len()),
        )
    };
    let ok = "naturality templates are well-typed";
    let idx = Diagram::id(x.clone());
    let sig = |p: &Ty, q: &Ty| hexagon(p, q, factory);
    let (src, tgt) = match (left, down) {
        (true, true) => (
            idx.tensor(&bd).then(&sig(&x, &b.cod)).expect(ok),
            sig(&x, &b.dom).then(&bd.tensor(&idx)).expect(ok),
        ),
        (false, true) => (
            bd.tensor(&idx).then(&sig(&b.cod, &x)).expect(ok),
            sig(&b.dom, &x).then(&idx.tensor(&bd)).expect(ok),
        ),
        (true, false) => (
            sig(&b.dom, &x).then(&idx.tensor(&bd)).expect(ok),
            bd.tensor(&idx).then(&sig(&b.cod, &x)).expect(ok),
        ),
        (false, false) => (
            sig(&x, &b.dom).then(&bd.tensor(&idx)).expect(ok),
            idx.tensor(&bd).then(&sig(&x, &b.cod)).expect(ok),
        ),
    };
    let start = if down {
        i
    } else {
        (i + 1).checked_sub(src.len()).ok_or(Error::NoMatch)?
    };
    if start + src.len() > d.len() {
        return Err(Error::NoMatch);
    }
    for (j, pl) in src.layers().iter().enumerate() {
        let expected = Layer {
            left: ctx_l.tensor(&pl.left),
            bx: pl.bx.clone(),
            right: pl.right.tensor(&ctx_r),
        };
        if d.layers()[start + j] != expected {
            return Err(Error::NoMatch);
        }
    }
    d.subs(&src, &tgt, &Match { start, left: ctx_l, right: ctx_r })
}

/// Cancels adjacent crossings that are each other's dagger.
pub fn simplify(d: &Diagram) -> Diagram {
    let mut d = d.clone();
    'outer: loop {
        for i in 0..d.len().saturating_sub(1) {
            let a = &d.layers()[i];
            let b = &d.layers()[i + 1];
            let crossing = matches!(a.bx.kind, BoxKind::Braid { .. } | BoxKind::Swap);
            if crossing && a.offset() == b.offset() && b.bx == a.bx.dagger() {
                let steps = d
                    .layers()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i && *j != i + 1)
                    .map(|(_, l)| (l.bx.clone(), l.offset()))
                    .collect();
                d = Diagram::decode(&crate::diagram::Encoding { dom: d.dom(), steps })
                    .expect("cancelling an inverse pair preserves typing");
                continue 'outer;
            }
        }
        return d;
    }
}
