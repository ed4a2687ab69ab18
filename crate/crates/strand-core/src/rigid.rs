//! Adjoints: nested cups and caps, transposes and snake removal.
//!
//! `cups(x, y)` bends the wires of `x` onto those of `y` from the outside
//! in, so the first object of `x` pairs with the last of `y`.  Snake removal
//! finds a cap whose leg feeds a cup, slides every box out of the way and
//! deletes the pair; iterating this and then taking the interchanger normal
//! form yields a canonical representative up to yanking.

use crate::boxes::{BBox, BoxKind};
use crate::diagram::Diagram;
use crate::ty::{Ob, Ty};
use crate::Error;

/// Builds one bent wire; used to swap in circuit-level cups and caps.
pub type PairFactory<'a> = &'a dyn Fn(&Ob, &Ob) -> Result<Diagram, Error>;

/// Nested cups `x @ y -> 1` from any single-pair factory.
pub fn nested_cups(x: &Ty, y: &Ty, factory: PairFactory) -> Result<Diagram, Error> {
    if x.len() != y.len() {
        return Err(Error::TypeMismatch(x.to_string(), y.to_string()));
    }
    if x.is_empty() {
        return Ok(Diagram::id(Ty::unit()));
    }
    let last = y.len() - 1;
    let inner = nested_cups(&x.slice(1..x.len()), &y.slice(0..last), factory)?;
    let outer = factory(&x[0], &y[last])?;
    Diagram::id(x.slice(0..1))
        .tensor(&inner)
        .tensor(&Diagram::id(y.slice(last..y.len())))
        .then(&outer)
}

/// Nested caps `1 -> x @ y`, mirror image of [`nested_cups`].
pub fn nested_caps(x: &Ty, y: &Ty, factory: PairFactory) -> Result<Diagram, Error> {
    if x.len() != y.len() {
        return Err(Error::TypeMismatch(x.to_string(), y.to_string()));
    }
    if x.is_empty() {
        return Ok(Diagram::id(Ty::unit()));
    }
    let last = y.len() - 1;
    let inner = nested_caps(&x.slice(1..x.len()), &y.slice(0..last), factory)?;
    let outer = factory(&x[0], &y[last])?;
    outer.then(
        &Diagram::id(x.slice(0..1))
            .tensor(&inner)
            .tensor(&Diagram::id(y.slice(last..y.len()))),
    )
}

pub fn cups(x: &Ty, y: &Ty) -> Result<Diagram, Error> {
    nested_cups(x, y, &|a, b| BBox::cup(a.clone(), b.clone()).map(Diagram::from_box))
}

pub fn caps(x: &Ty, y: &Ty) -> Result<Diagram, Error> {
    nested_caps(x, y, &|a, b| BBox::cap(a.clone(), b.clone()).map(Diagram::from_box))
}

/// Rotates a diagram by half a turn around the vertical axis, using left
/// adjoints (`cod.l -> dom.l`) or right adjoints (`cod.r -> dom.r`).
pub fn transpose(d: &Diagram, left: bool) -> Diagram {
    let ok = "transposition wires are adjoint pairs by construction";
    if left {
        let dl = d.dom().l();
        let cl = d.cod().l();
        Diagram::id(cl.clone())
            .tensor(&caps(&d.dom(), &dl).expect(ok))
            .then(&Diagram::id(cl).tensor(d).tensor(&Diagram::id(dl.clone())))
            .expect(ok)
            .then(&cups(&d.cod().l(), &d.cod()).expect(ok).tensor(&Diagram::id(dl)))
            .expect(ok)
    } else {
        let dr = d.dom().r();
        let cr = d.cod().r();
        caps(&dr, &d.dom())
            .expect(ok)
            .tensor(&Diagram::id(cr.clone()))
            .then(&Diagram::id(dr.clone()).tensor(d).tensor(&Diagram::id(cr)))
            .expect(ok)
            .then(&Diagram::id(dr).tensor(&cups(&d.cod(), &d.cod().r()).expect(ok)))
            .expect(ok)
    }
}

/// Where the codomain wire `wire` of layer `start` is consumed: the layer
/// index (or `len` if it reaches the bottom) plus the layers passed on each
/// side of the wire.
fn follow_wire(d: &Diagram, start: usize, mut wire: usize) -> (usize, Vec<usize>, Vec<usize>) {
    let mut left_obs = Vec::new();
    let mut right_obs = Vec::new();
    for i in start + 1..d.len() {
        let layer = &d.layers()[i];
        let off = layer.offset();
        let bd = layer.bx.dom.len();
        if off <= wire && wire < off + bd {
            return (i, left_obs, right_obs);
        }
        if off + bd <= wire {
            wire = wire - bd + layer.bx.cod.len();
            left_obs.push(i);
        } else {
            right_obs.push(i);
        }
    }
    (d.len(), left_obs, right_obs)
}

/// A yankable zigzag: the cap layer and the cup layer it bends into.
struct Snake {
    cap: usize,
    cup: usize,
}

fn find_snakes(d: &Diagram) -> Vec<Snake> {
    let mut out = Vec::new();
    for cap in 0..d.len() {
        if d.layers()[cap].bx.kind != BoxKind::Cap {
            continue;
        }
        let off = d.layers()[cap].offset();
        for (left, wire) in [(true, off), (false, off + 1)] {
            let (cup, _, _) = follow_wire(d, cap, wire);
            if cup == d.len() || d.layers()[cup].bx.kind != BoxKind::Cup {
                continue;
            }
            // Recompute the wire's landing position to pick the right slot:
            // a left snake enters the cup's second input, a right snake the
            // first.  Anything else (e.g. a circle) is not yankable.
            let landing = {
                let mut w = wire;
                for i in cap + 1..cup {
                    let layer = &d.layers()[i];
                    if layer.offset() + layer.bx.dom.len() <= w {
                        w = w - layer.bx.dom.len() + layer.bx.cod.len();
                    }
                }
                w
            };
            let cup_off = d.layers()[cup].offset();
            let hit = if left { cup_off + 1 == landing } else { cup_off == landing };
            if hit {
                out.push(Snake { cap, cup });
            }
        }
    }
    out
}

/// Wire identities from the cap's row down to the cup's: what each layer
/// consumes and produces, so connectivity is set intersection.
fn band_wires(d: &Diagram, cap: usize, cup: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let width = d.layers()[cap].dom().len();
    let mut boundary: Vec<usize> = (0..width).collect();
    let mut next = width;
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for layer in &d.layers()[cap..=cup] {
        let off = layer.offset();
        let bd = layer.bx.dom.len();
        let produced: Vec<usize> = (next..next + layer.bx.cod.len()).collect();
        next += layer.bx.cod.len();
        let consumed: Vec<usize> = boundary.splice(off..off + bd, produced.iter().copied()).collect();
        ins.push(consumed);
        outs.push(produced);
    }
    (ins, outs)
}

/// Clears the band between cap and cup with interchanges, then deletes
/// both.  Band layers feeding the cup exit above the cap, the rest exit
/// below the cup.  A layer hanging from the cap's own legs while feeding
/// the cup makes the snake a circle, which yanking would break, so the
/// caller gets an error and tries another snake.
fn unsnake(d: &Diagram, snake: Snake) -> Result<Diagram, Error> {
    let Snake { mut cap, mut cup } = snake;
    let mut d = d.clone();
    while cup > cap + 1 {
        let (ins, outs) = band_wires(&d, cap, cup);
        let n = cup - cap + 1;
        let touches = |i: usize, j: usize| outs[i].iter().any(|w| ins[j].contains(w));
        let mut anc = vec![false; n];
        anc[n - 1] = true;
        for i in (1..n - 1).rev() {
            anc[i] = (i + 1..n).any(|j| anc[j] && touches(i, j));
        }
        let mut desc = vec![false; n];
        desc[0] = true;
        for i in 1..n - 1 {
            desc[i] = (0..i).any(|j| desc[j] && touches(j, i));
        }
        if (1..n - 1).any(|i| anc[i] && desc[i]) {
            return Err(Error::Connected(cap));
        }
        if let Some(rel) = (1..n - 1).rev().find(|&i| !anc[i]) {
            // Bottommost layer not feeding the cup: everything between it
            // and the cup does feed the cup, hence cannot touch it.
            for m in cap + rel..cup {
                d = d.interchange(m, false)?;
            }
            cup -= 1;
        } else {
            // Only cup ancestors remain; none of them hangs from the cap.
            d = d.interchange(cap, false)?;
            cap += 1;
        }
    }
    debug_assert_eq!(d.layers()[cap].dom(), d.layers()[cup].cod());
    let mut steps: Vec<(BBox, usize)> = Vec::new();
    for (i, layer) in d.layers().iter().enumerate() {
        if i != cap && i != cup {
            steps.push((layer.bx.clone(), layer.offset()));
        }
    }
    Ok(Diagram::decode(&crate::diagram::Encoding { dom: d.dom(), steps })
        .expect("deleting a yanked snake preserves typing"))
}

/// Deletes every snake.  Circles are left in place.  Nested snakes block
/// their enclosing ones, so each round applies the first snake that clears;
/// yanking the inner pair always unblocks the outer.
pub fn snake_removal(d: &Diagram) -> Diagram {
    let mut d = d.clone();
    loop {
        let mut progressed = false;
        for snake in find_snakes(&d) {
            if let Ok(next) = unsnake(&d, snake) {
                d = next;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return d;
        }
    }
}

/// Snake removal followed by the interchanger normal form.
pub fn normal_form(d: &Diagram, left: bool) -> Result<Diagram, Error> {
    snake_removal(d).normal_form(left)
}
