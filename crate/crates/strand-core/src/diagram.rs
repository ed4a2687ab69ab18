//! Diagrams as lists of layers.
//!
//! A layer is a box with identity wires on each side.  Composition is list
//! concatenation, tensor whiskers the right diagram under the left one, so
//! every diagram is a sequence of generic layers.  The interchanger moves a
//! box past its neighbour when no wire connects them; its fixed point is the
//! normal form used for equality up to the exchange law.

use std::collections::HashSet;
use std::fmt;

use crate::boxes::BBox;
use crate::ty::{Ob, Ty};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Layer {
    pub left: Ty,
    pub bx: BBox,
    pub right: Ty,
}

impl Layer {
    pub fn dom(&self) -> Ty {
        self.left.tensor(&self.bx.dom).tensor(&self.right)
    }

    pub fn cod(&self) -> Ty {
        self.left.tensor(&self.bx.cod).tensor(&self.right)
    }

    pub fn offset(&self) -> usize {
        self.left.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    dom: Ty,
    layers: Vec<Layer>,
}

/// A diagram serialized as its domain plus one `(box, offset)` pair per
/// layer, in order.  This is the exchange format and the layout input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Encoding {
    pub dom: Ty,
    pub steps: Vec<(BBox, usize)>,
}

/// One occurrence of a pattern inside a bigger diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Match {
    /// Index of the first matched layer.
    pub start: usize,
    /// Wires to the left of the whole occurrence.
    pub left: Ty,
    /// Wires to the right of the whole occurrence.
    pub right: Ty,
}

impl Diagram {
    pub fn id(dom: Ty) -> Self {
        Diagram { dom, layers: Vec::new() }
    }

    pub fn from_box(bx: BBox) -> Self {
        let dom = bx.dom.clone();
        Diagram { dom, layers: vec![Layer { left: Ty::unit(), bx, right: Ty::unit() }] }
    }

    pub fn dom(&self) -> Ty {
        self.dom.clone()
    }

    pub fn cod(&self) -> Ty {
        match self.layers.last() {
            Some(layer) => layer.cod(),
            None => self.dom.clone(),
        }
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn boxes(&self) -> impl Iterator<Item = &BBox> {
        self.layers.iter().map(|l| &l.bx)
    }

    pub fn offsets(&self) -> Vec<usize> {
        self.layers.iter().map(Layer::offset).collect()
    }

    pub fn then(&self, other: &Diagram) -> Result<Diagram, Error> {
        self.cod().expect_eq(&other.dom)?;
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Ok(Diagram { dom: self.dom.clone(), layers })
    }

    /// Horizontal composition, left diagram first.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let mut layers: Vec<Layer> = self
            .layers
            .iter()
            .map(|l| Layer {
                left: l.left.clone(),
                bx: l.bx.clone(),
                right: l.right.tensor(&other.dom),
            })
            .collect();
        let cod = self.cod();
        layers.extend(other.layers.iter().map(|l| Layer {
            left: cod.tensor(&l.left),
            bx: l.bx.clone(),
            right: l.right.clone(),
        }));
        Diagram { dom: self.dom.tensor(&other.dom), layers }
    }

    pub fn dagger(&self) -> Diagram {
        let layers: Vec<Layer> = self
            .layers
            .iter()
            .rev()
            .map(|l| Layer { left: l.left.clone(), bx: l.bx.dagger(), right: l.right.clone() })
            .collect();
        Diagram { dom: self.cod(), layers }
    }

    pub fn free_vars(&self) -> std::collections::BTreeSet<String> {
        self.boxes().flat_map(|b| b.free_vars()).collect()
    }

    /// Swaps the boxes of layers `i` and `i + 1` when no wire connects them.
    /// `prefer_left` only breaks the tie where both directions are legal,
    /// which happens between scalars sitting at the same offset.
    pub fn interchange(&self, i: usize, prefer_left: bool) -> Result<Diagram, Error> {
        if i + 1 >= self.layers.len() {
            return Err(Error::OutOfRange(i));
        }
        let l0 = &self.layers[i];
        let l1 = &self.layers[i + 1];
        let o0 = l0.offset();
        let o1 = l1.offset();
        let can_left = o1 + l1.bx.dom.len() <= o0;
        let can_right = o1 >= o0 + l0.bx.cod.len();
        let go_left = match (can_left, can_right) {
            (true, true) => prefer_left,
            (true, false) => true,
            (false, true) => false,
            (false, false) => return Err(Error::Connected(i)),
        };
        let mut layers = self.layers.clone();
        if go_left {
            // The second box's inputs lie inside the first layer's left wires.
            let a0 = &l0.left;
            let first = Layer {
                left: a0.slice(0..o1),
                bx: l1.bx.clone(),
                right: a0
                    .slice(o1 + l1.bx.dom.len()..a0.len())
                    .tensor(&l0.bx.dom)
                    .tensor(&l0.right),
            };
            let second = Layer {
                left: a0
                    .slice(0..o1)
                    .tensor(&l1.bx.cod)
                    .tensor(&a0.slice(o1 + l1.bx.dom.len()..a0.len())),
                bx: l0.bx.clone(),
                right: l0.right.clone(),
            };
            layers[i] = first;
            layers[i + 1] = second;
        } else {
            // The second box's inputs lie inside the first layer's right wires.
            let c0 = &l0.right;
            let j = o1 - o0 - l0.bx.cod.len();
            let first = Layer {
                left: l0.left.tensor(&l0.bx.dom).tensor(&c0.slice(0..j)),
                bx: l1.bx.clone(),
                right: c0.slice(j + l1.bx.dom.len()..c0.len()),
            };
            let second = Layer {
                left: l0.left.clone(),
                bx: l0.bx.clone(),
                right: c0
                    .slice(0..j)
                    .tensor(&l1.bx.cod)
                    .tensor(&c0.slice(j + l1.bx.dom.len()..c0.len())),
            };
            layers[i] = first;
            layers[i + 1] = second;
        }
        Ok(Diagram { dom: self.dom.clone(), layers })
    }

    /// Interchanger fixed point.  With `left` false, boxes move as far up
    /// and to the left as they can; with `left` true, up and to the right.
    /// Diagrams containing floating scalars never reach a fixed point and
    /// report themselves as disconnected.
    pub fn normal_form(&self, left: bool) -> Result<Diagram, Error> {
        let mut current = self.clone();
        let mut seen: HashSet<Diagram> = HashSet::new();
        seen.insert(current.clone());
        loop {
            let mut hit = None;
            for i in 0..current.layers.len().saturating_sub(1) {
                let o0 = current.layers[i].offset();
                let o1 = current.layers[i + 1].offset();
                let trigger = if left {
                    o1 >= o0 + current.layers[i].bx.cod.len()
                } else {
                    o0 >= o1 + current.layers[i + 1].bx.dom.len()
                };
                if trigger {
                    hit = Some(i);
                    break;
                }
            }
            let Some(i) = hit else { return Ok(current) };
            current = current.interchange(i, !left)?;
            if !seen.insert(current.clone()) {
                return Err(Error::Disconnected);
            }
        }
    }

    pub fn encode(&self) -> Encoding {
        Encoding {
            dom: self.dom.clone(),
            steps: self.layers.iter().map(|l| (l.bx.clone(), l.offset())).collect(),
        }
    }

    /// Rebuilds a diagram from its encoding, checking every step.
    pub fn decode(enc: &Encoding) -> Result<Diagram, Error> {
        let mut layers = Vec::with_capacity(enc.steps.len());
        let mut frontier = enc.dom.clone();
        for (step, (bx, offset)) in enc.steps.iter().enumerate() {
            let need = bx.dom.len();
            if offset + need > frontier.len() {
                return Err(Error::IllTyped(step));
            }
            if frontier.slice(*offset..offset + need) != bx.dom {
                return Err(Error::IllTyped(step));
            }
            let layer = Layer {
                left: frontier.slice(0..*offset),
                bx: bx.clone(),
                right: frontier.slice(offset + need..frontier.len()),
            };
            frontier = layer.cod();
            layers.push(layer);
        }
        Ok(Diagram { dom: enc.dom.clone(), layers })
    }

    /// All occurrences of `pattern` as a contiguous block of layers with a
    /// uniform context on each side.  Empty patterns match nowhere.
    pub fn matches(&self, pattern: &Diagram) -> Vec<Match> {
        let plen = pattern.layers.len();
        let mut found = Vec::new();
        if plen == 0 || plen > self.layers.len() {
            return found;
        }
        'starts: for s in 0..=self.layers.len() - plen {
            let sl0 = &self.layers[s];
            let pl0 = &pattern.layers[0];
            if sl0.left.len() < pl0.left.len() || sl0.right.len() < pl0.right.len() {
                continue;
            }
            let lcut = sl0.left.len() - pl0.left.len();
            let rcut = pl0.right.len();
            let left = sl0.left.slice(0..lcut);
            let right = sl0.right.slice(rcut..sl0.right.len());
            for j in 0..plen {
                let sl = &self.layers[s + j];
                let pl = &pattern.layers[j];
                if sl.bx != pl.bx
                    || sl.left != left.tensor(&pl.left)
                    || sl.right != pl.right.tensor(&right)
                {
                    continue 'starts;
                }
            }
            found.push(Match { start: s, left, right });
        }
        found
    }

    /// Replaces the occurrence `m` of `pattern` by `replacement`, which must
    /// have the same domain and codomain as the pattern.
    pub fn subs(
        &self,
        pattern: &Diagram,
        replacement: &Diagram,
        m: &Match,
    ) -> Result<Diagram, Error> {
        pattern.dom.expect_eq(&replacement.dom)?;
        pattern.cod().expect_eq(&replacement.cod())?;
        let plen = pattern.layers.len();
        if m.start + plen > self.layers.len() {
            return Err(Error::OutOfRange(m.start));
        }
        let mut layers = self.layers[..m.start].to_vec();
        layers.extend(replacement.layers.iter().map(|l| Layer {
            left: m.left.tensor(&l.left),
            bx: l.bx.clone(),
            right: l.right.tensor(&m.right),
        }));
        layers.extend_from_slice(&self.layers[m.start + plen..]);
        Ok(Diagram { dom: self.dom.clone(), layers })
    }
}

impl From<BBox> for Diagram {
    fn from(bx: BBox) -> Diagram {
        Diagram::from_box(bx)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "id({})", self.dom);
        }
        for (i, l) in self.layers.iter().enumerate() {
            if i > 0 {
                write!(f, " >> ")?;
            }
            write!(f, "{}[{}]", l.bx.label(), l.offset())?;
        }
        Ok(())
    }
}

/// Formal sum of parallel diagrams.  Terms are kept sorted, so sums compare
/// as bags.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sum {
    pub dom: Ty,
    pub cod: Ty,
    pub terms: Vec<Diagram>,
}

impl Sum {
    pub fn zero(dom: Ty, cod: Ty) -> Self {
        Sum { dom, cod, terms: Vec::new() }
    }

    pub fn new(dom: Ty, cod: Ty, mut terms: Vec<Diagram>) -> Result<Self, Error> {
        for t in &terms {
            t.dom().expect_eq(&dom)?;
            t.cod().expect_eq(&cod)?;
        }
        terms.sort();
        Ok(Sum { dom, cod, terms })
    }

    pub fn add(&self, other: &Sum) -> Result<Sum, Error> {
        self.dom.expect_eq(&other.dom)?;
        self.cod.expect_eq(&other.cod)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        terms.sort();
        Ok(Sum { dom: self.dom.clone(), cod: self.cod.clone(), terms })
    }

    pub fn then(&self, other: &Sum) -> Result<Sum, Error> {
        self.cod.expect_eq(&other.dom)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for f in &self.terms {
            for g in &other.terms {
                terms.push(f.then(g)?);
            }
        }
        terms.sort();
        Ok(Sum { dom: self.dom.clone(), cod: other.cod.clone(), terms })
    }

    pub fn tensor(&self, other: &Sum) -> Sum {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for f in &self.terms {
            for g in &other.terms {
                terms.push(f.tensor(g));
            }
        }
        terms.sort();
        Sum {
            dom: self.dom.tensor(&other.dom),
            cod: self.cod.tensor(&other.cod),
            terms,
        }
    }

    pub fn dagger(&self) -> Sum {
        let mut terms: Vec<Diagram> = self.terms.iter().map(Diagram::dagger).collect();
        terms.sort();
        Sum { dom: self.cod.clone(), cod: self.dom.clone(), terms }
    }
}

impl From<Diagram> for Sum {
    fn from(d: Diagram) -> Sum {
        Sum { dom: d.dom(), cod: d.cod(), terms: vec![d] }
    }
}

/// Worst case for the interchanger: `n` nested folds that must all slide
/// past each other to reach normal form.
pub fn spiral(n: usize) -> Diagram {
    let x = Ty::one(Ob::basic("x"));
    let unit = BBox::plain("unit", Ty::unit(), x.clone());
    let counit = BBox::plain("counit", x.clone(), Ty::unit());
    let cup = BBox::plain("cup", x.pow(2), Ty::unit());
    let cap = BBox::plain("cap", Ty::unit(), x.pow(2));
    let mut d = Diagram::from_box(unit);
    for i in 0..n {
        let layer = Diagram::id(x.pow(i))
            .tensor(&Diagram::from_box(cap.clone()))
            .tensor(&Diagram::id(x.pow(i + 1)));
        d = d.then(&layer).unwrap();
    }
    let middle = Diagram::id(x.pow(n))
        .tensor(&Diagram::from_box(counit))
        .tensor(&Diagram::id(x.pow(n)));
    d = d.then(&middle).unwrap();
    for i in 0..n {
        let layer = Diagram::id(x.pow(n - i - 1))
            .tensor(&Diagram::from_box(cup.clone()))
            .tensor(&Diagram::id(x.pow(n - i - 1)));
        d = d.then(&layer).unwrap();
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basics() -> (Ty, Ty, Ty, Ty) {
        (
            Ty::one(Ob::basic("x")),
            Ty::one(Ob::basic("y")),
            Ty::one(Ob::basic("z")),
            Ty::one(Ob::basic("w")),
        )
    }

    #[test]
    fn then_checks_types() {
        let (x, y, z, _) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", y.clone(), z.clone()));
        let fg = f.then(&g).unwrap();
        assert_eq!(fg.dom(), x);
        assert_eq!(fg.cod(), z);
        assert!(matches!(g.then(&f), Err(Error::TypeMismatch(_, _))));
    }

    #[test]
    fn tensor_is_left_biased() {
        let (x, y, z, w) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", z.clone(), w.clone()));
        let fg = f.tensor(&g);
        assert_eq!(fg.offsets(), vec![0, 1]);
        assert_eq!(fg.dom(), x.tensor(&z));
        assert_eq!(fg.cod(), y.tensor(&w));
    }

    #[test]
    fn interchange_swaps_parallel_boxes() {
        let (x, y, z, w) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", z.clone(), w.clone()));
        let fg = f.tensor(&g);
        let swapped = fg.interchange(0, false).unwrap();
        assert_eq!(swapped.offsets(), vec![1, 0]);
        assert_eq!(swapped.dom(), fg.dom());
        assert_eq!(swapped.cod(), fg.cod());
        // Moving back recovers the original.
        assert_eq!(swapped.interchange(0, false).unwrap(), fg);
    }

    #[test]
    fn interchange_rejects_connected_boxes() {
        let (x, y, z, _) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", y.clone(), z.clone()));
        let fg = f.then(&g).unwrap();
        assert!(matches!(fg.interchange(0, false), Err(Error::Connected(0))));
    }

    #[test]
    fn normal_form_moves_boxes_up_left() {
        let (x, y, z, w) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", z.clone(), w.clone()));
        let fg = f.tensor(&g);
        let gf_first = fg.interchange(0, false).unwrap();
        assert_eq!(gf_first.normal_form(false).unwrap(), fg);
        assert_eq!(fg.normal_form(false).unwrap(), fg);
        // The right-biased normal form is the other representative.
        assert_eq!(fg.normal_form(true).unwrap(), gf_first);
    }

    #[test]
    fn floating_scalars_are_disconnected() {
        let s = Diagram::from_box(BBox::plain("s", Ty::unit(), Ty::unit()));
        let ss = s.tensor(&s);
        assert!(matches!(ss.normal_form(false), Err(Error::Disconnected)));
    }

    #[test]
    fn dagger_reverses() {
        let (x, y, z, _) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", y.clone(), z.clone()));
        let fg = f.then(&g).unwrap();
        let rev = fg.dagger();
        assert_eq!(rev.dom(), z);
        assert_eq!(rev.cod(), x);
        assert_eq!(rev.dagger(), fg);
    }

    #[test]
    fn encode_decode_roundtrip() {
        let d = spiral(3);
        let enc = d.encode();
        assert_eq!(Diagram::decode(&enc).unwrap(), d);
    }

    #[test]
    fn decode_rejects_bad_offsets() {
        let (x, y, _, _) = basics();
        let f = BBox::plain("f", x.clone(), y.clone());
        let enc = Encoding { dom: x.clone(), steps: vec![(f.clone(), 1)] };
        assert!(matches!(Diagram::decode(&enc), Err(Error::IllTyped(0))));
        let enc = Encoding { dom: y.clone(), steps: vec![(f, 0)] };
        assert!(matches!(Diagram::decode(&enc), Err(Error::IllTyped(0))));
    }

    #[test]
    fn matches_and_subs() {
        let (x, y, z, w) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", z.clone(), w.clone()));
        let big = Diagram::id(x.clone()).tensor(&g).tensor(&f.clone().tensor(&g));
        // big = g[1] >> f[2] >> g[3] with x left of the first g.
        let hits = big.matches(&g);
        assert_eq!(hits.len(), 2);
        assert_eq!(hits[0].left, x);
        assert_eq!(hits[1].left, x.tensor(&w).tensor(&y));

        let g2 = Diagram::from_box(BBox::plain("g2", z.clone(), w.clone()));
        let replaced = big.subs(&g, &g2, &hits[0]).unwrap();
        assert_eq!(replaced.matches(&g).len(), 1);
        assert_eq!(replaced.matches(&g2).len(), 1);
        assert_eq!(replaced.dom(), big.dom());
        assert_eq!(replaced.cod(), big.cod());

        // Replacement must preserve the boundary.
        let h = Diagram::from_box(BBox::plain("h", z.clone(), z.clone()));
        assert!(big.subs(&g, &h, &hits[0]).is_err());
    }

    #[test]
    fn spiral_shape() {
        let d = spiral(4);
        assert_eq!(d.dom(), Ty::unit());
        assert_eq!(d.cod(), Ty::unit());
        assert_eq!(d.len(), 2 * 4 + 2);
    }

    #[test]
    fn sums_are_bags() {
        let (x, y, _, _) = basics();
        let f = Diagram::from_box(BBox::plain("f", x.clone(), y.clone()));
        let g = Diagram::from_box(BBox::plain("g", x.clone(), y.clone()));
        let s1 = Sum::new(x.clone(), y.clone(), vec![f.clone(), g.clone()]).unwrap();
        let s2 = Sum::new(x.clone(), y.clone(), vec![g, f]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.dagger().dagger(), s1);
        let z = Sum::zero(x.clone(), y.clone());
        assert_eq!(s1.add(&z).unwrap(), s1);
        // Composing with the empty sum annihilates.
        let zz = Sum::zero(y.clone(), x.clone());
        assert_eq!(s1.then(&zz).unwrap().terms.len(), 0);
    }
}
