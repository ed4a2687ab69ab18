//! Graph-shaped diagrams: boxes plus spiders plus a wiring from ports to
//! spiders.  Ports are ordered as diagram-dom, then each box's dom and cod
//! in box order, then diagram-cod.  Composition glues boundaries by a
//! pushout (union-find quotient), so the interchanger is always defined
//! and symmetric-category equality becomes graph comparison.
//!
//! Wire types are taken literally: every port's object must equal its
//! spider's type, so this carrier covers symmetric diagrams over self-dual
//! objects, not wound rigid wires.

use crate::boxes::{BBox, BoxKind};
use crate::diagram::Diagram;
use crate::ty::{Ob, Ty};
use crate::Error;

#[derive(Clone, Debug)]
pub struct HDiagram {
    pub dom: Ty,
    pub cod: Ty,
    pub boxes: Vec<BBox>,
    pub spider_types: Vec<Ob>,
    /// One spider index per port, in the fixed port order.
    pub wires: Vec<usize>,
}

/// Spider injections of a composition: old index to new index, one map
/// per side.  They agree on the glued boundary and jointly cover the
/// quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PortRef {
    Dom(usize),
    BDom(usize, usize),
    BCod(usize, usize),
    Cod(usize),
}

#[derive(Clone, Debug)]
struct View {
    dom_w: Vec<usize>,
    box_w: Vec<(Vec<usize>, Vec<usize>)>,
    cod_w: Vec<usize>,
}

fn set(v: &mut View, r: PortRef, s: usize) {
    match r {
        PortRef::Dom(j) => v.dom_w[j] = s,
        PortRef::BDom(i, k) => v.box_w[i].0[k] = s,
        PortRef::BCod(i, k) => v.box_w[i].1[k] = s,
        PortRef::Cod(j) => v.cod_w[j] = s,
    }
}

fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

impl HDiagram {
    fn assemble(dom: Ty, cod: Ty, boxes: Vec<BBox>, spider_types: Vec<Ob>, v: View) -> HDiagram {
        let mut wires = v.dom_w;
        for (d, c) in v.box_w {
            wires.extend(d);
            wires.extend(c);
        }
        wires.extend(v.cod_w);
        let h = HDiagram { dom, cod, boxes, spider_types, wires };
        debug_assert!(h.validate().is_ok(), "assembled an ill-typed hypergraph");
        h
    }

    fn view(&self) -> View {
        let mut it = self.wires.iter().copied();
        let dom_w = (&mut it).take(self.dom.len()).collect();
        let box_w = self
            .boxes
            .iter()
            .map(|b| ((&mut it).take(b.dom.len()).collect(), (&mut it).take(b.cod.len()).collect()))
            .collect();
        let cod_w = it.collect();
        View { dom_w, box_w, cod_w }
    }

    fn port_obs(&self) -> Vec<Ob> {
        let mut v: Vec<Ob> = self.dom.iter().cloned().collect();
        for b in &self.boxes {
            v.extend(b.dom.iter().cloned());
            v.extend(b.cod.iter().cloned());
        }
        v.extend(self.cod.iter().cloned());
        v
    }

    pub fn validate(&self) -> Result<(), Error> {
        let obs = self.port_obs();
        if obs.len() != self.wires.len() {
            return Err(Error::IllTyped(self.wires.len()));
        }
        for (p, (ob, &w)) in obs.iter().zip(&self.wires).enumerate() {
            let t = self.spider_types.get(w).ok_or(Error::OutOfRange(w))?;
            if ob != t {
                return Err(Error::IllTyped(p));
            }
        }
        Ok(())
    }

    /// Source ports feed a spider (diagram dom, box cod); sink ports drain
    /// it (box dom, diagram cod).  Collected in port order.
    fn occurrences(&self, v: &View) -> Vec<(Vec<PortRef>, Vec<PortRef>)> {
        let mut occ = vec![(Vec::new(), Vec::new()); self.spider_types.len()];
        for (j, &s) in v.dom_w.iter().enumerate() {
            occ[s].0.push(PortRef::Dom(j));
        }
        for (i, (d, c)) in v.box_w.iter().enumerate() {
            for (k, &s) in d.iter().enumerate() {
                occ[s].1.push(PortRef::BDom(i, k));
            }
            for (k, &s) in c.iter().enumerate() {
                occ[s].0.push(PortRef::BCod(i, k));
            }
        }
        for (j, &s) in v.cod_w.iter().enumerate() {
            occ[s].1.push(PortRef::Cod(j));
        }
        occ
    }

    pub fn hid(ty: Ty) -> HDiagram {
        let n = ty.len();
        let spider_types = ty.iter().cloned().collect();
        let wires = (0..n).chain(0..n).collect();
        HDiagram { dom: ty.clone(), cod: ty, boxes: Vec::new(), spider_types, wires }
    }

    pub fn from_box(b: BBox) -> HDiagram {
        let d = b.dom.len();
        let c = b.cod.len();
        let mut spider_types: Vec<Ob> = b.dom.iter().cloned().collect();
        spider_types.extend(b.cod.iter().cloned());
        let wires = (0..d).chain(0..d).chain(d..d + c).chain(d..d + c).collect();
        HDiagram { dom: b.dom.clone(), cod: b.cod.clone(), boxes: vec![b], spider_types, wires }
    }

    pub fn hswap(x: &Ty, y: &Ty) -> HDiagram {
        let m = x.len();
        let n = y.len();
        let mut spider_types: Vec<Ob> = x.iter().cloned().collect();
        spider_types.extend(y.iter().cloned());
        let wires = (0..m + n).chain(m..m + n).chain(0..m).collect();
        HDiagram { dom: x.tensor(y), cod: y.tensor(x), boxes: Vec::new(), spider_types, wires }
    }

    pub fn hspiders(a: usize, b: usize, ty: &Ty) -> HDiagram {
        let t = ty.len();
        let mut wires = Vec::with_capacity(t * (a + b));
        for _ in 0..a {
            wires.extend(0..t);
        }
        for _ in 0..b {
            wires.extend(0..t);
        }
        HDiagram {
            dom: ty.pow(a),
            cod: ty.pow(b),
            boxes: Vec::new(),
            spider_types: ty.iter().cloned().collect(),
            wires,
        }
    }

    /// `y` must be `x` reversed: wire `i` pairs with wire `2n-1-i`.
    pub fn hcups(x: &Ty, y: &Ty) -> Result<HDiagram, Error> {
        let n = x.len();
        if y.len() != n || (0..n).any(|i| y[n - 1 - i] != x[i]) {
            return Err(Error::TypeMismatch(x.to_string(), y.to_string()));
        }
        let wires = (0..n).chain((0..n).rev()).collect();
        Ok(HDiagram {
            dom: x.tensor(y),
            cod: Ty::unit(),
            boxes: Vec::new(),
            spider_types: x.iter().cloned().collect(),
            wires,
        })
    }

    pub fn hcaps(x: &Ty, y: &Ty) -> Result<HDiagram, Error> {
        let up = Self::hcups(x, y)?;
        Ok(HDiagram { dom: Ty::unit(), cod: x.tensor(y), ..up })
    }

    pub fn hcompose(&self, other: &HDiagram) -> Result<HDiagram, Error> {
        self.hcompose_with(other).map(|(h, _)| h)
    }

    pub fn hcompose_with(&self, other: &HDiagram) -> Result<(HDiagram, Pushout), Error> {
        self.cod.expect_eq(&other.dom)?;
        let n1 = self.spider_types.len();
        let n2 = other.spider_types.len();
        let vf = self.view();
        let vg = other.view();
        let mut parent: Vec<usize> = (0..n1 + n2).collect();
        for (&a, &b) in vf.cod_w.iter().zip(&vg.dom_w) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b + n1));
            parent[ra] = rb;
        }

        let mut newid = vec![usize::MAX; n1 + n2];
        let mut types: Vec<Ob> = Vec::new();
        fn touch(
            parent: &mut Vec<usize>,
            newid: &mut [usize],
            types: &mut Vec<Ob>,
            raw: usize,
            ty: &Ob,
        ) -> usize {
            let r = find(parent, raw);
            if newid[r] == usize::MAX {
                newid[r] = types.len();
                types.push(ty.clone());
            }
            newid[r]
        }

        let mut dom_w = Vec::with_capacity(vf.dom_w.len());
        for &s in &vf.dom_w {
            dom_w.push(touch(&mut parent, &mut newid, &mut types, s, &self.spider_types[s]));
        }
        let mut box_w = Vec::with_capacity(vf.box_w.len() + vg.box_w.len());
        for (d, c) in &vf.box_w {
            let d2 = d.iter().map(|&s| touch(&mut parent, &mut newid, &mut types, s, &self.spider_types[s])).collect();
            let c2 = c.iter().map(|&s| touch(&mut parent, &mut newid, &mut types, s, &self.spider_types[s])).collect();
            box_w.push((d2, c2));
        }
        for (d, c) in &vg.box_w {
            let d2 = d.iter().map(|&s| touch(&mut parent, &mut newid, &mut types, s + n1, &other.spider_types[s])).collect();
            let c2 = c.iter().map(|&s| touch(&mut parent, &mut newid, &mut types, s + n1, &other.spider_types[s])).collect();
            box_w.push((d2, c2));
        }
        let mut cod_w = Vec::with_capacity(vg.cod_w.len());
        for &s in &vg.cod_w {
            cod_w.push(touch(&mut parent, &mut newid, &mut types, s + n1, &other.spider_types[s]));
        }
        // Classes with no surviving port (closed loops) still get a spider.
        for s in 0..n1 {
            touch(&mut parent, &mut newid, &mut types, s, &self.spider_types[s]);
        }
        for s in 0..n2 {
            touch(&mut parent, &mut newid, &mut types, s + n1, &other.spider_types[s]);
        }

        let left = (0..n1).map(|s| newid[find(&mut parent, s)]).collect();
        let right = (0..n2).map(|s| newid[find(&mut parent, s + n1)]).collect();

        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().cloned());
        let h = Self::assemble(
            self.dom.clone(),
            other.cod.clone(),
            boxes,
            types,
            View { dom_w, box_w, cod_w },
        );
        Ok((h, Pushout { left, right }))
    }

    pub fn htensor(&self, other: &HDiagram) -> HDiagram {
        let n1 = self.spider_types.len();
        let vf = self.view();
        let vg = other.view();
        let mut dom_w = vf.dom_w;
        dom_w.extend(vg.dom_w.iter().map(|s| s + n1));
        let mut box_w = vf.box_w;
        box_w.extend(
            vg.box_w
                .iter()
                .map(|(d, c)| {
                    (d.iter().map(|s| s + n1).collect(), c.iter().map(|s| s + n1).collect())
                }),
        );
        let mut cod_w = vf.cod_w;
        cod_w.extend(vg.cod_w.iter().map(|s| s + n1));
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().cloned());
        let mut spider_types = self.spider_types.clone();
        spider_types.extend(other.spider_types.iter().cloned());
        Self::assemble(
            self.dom.tensor(&other.dom),
            self.cod.tensor(&other.cod),
            boxes,
            spider_types,
            View { dom_w, box_w, cod_w },
        )
    }

    /// Every spider touches zero or two ports.
    pub fn is_bijective(&self) -> bool {
        let occ = self.occurrences(&self.view());
        occ.iter().all(|(src, snk)| matches!(src.len() + snk.len(), 0 | 2))
    }

    /// Every spider has exactly one source and one sink.
    pub fn is_monogamous(&self) -> bool {
        let occ = self.occurrences(&self.view());
        occ.iter().all(|(src, snk)| src.len() == 1 && snk.len() == 1)
    }

    /// Monogamous and every wire flows forward in box order.
    pub fn is_progressive(&self) -> bool {
        let v = self.view();
        let occ = self.occurrences(&v);
        if !occ.iter().all(|(src, snk)| src.len() == 1 && snk.len() == 1) {
            return false;
        }
        occ.iter().all(|(src, snk)| match (src[0], snk[0]) {
            (PortRef::BCod(i, _), PortRef::BDom(j, _)) => i < j,
            _ => true,
        })
    }

    /// Explode every spider with an unexpected port count into an explicit
    /// spider box wired through fresh two-port spiders.
    pub fn make_bijective(&self) -> HDiagram {
        let mut v = self.view();
        let mut boxes = self.boxes.clone();
        let mut types = self.spider_types.clone();
        let mut dropped = vec![false; types.len()];
        let occ = self.occurrences(&v);
        for (s, (sources, sinks)) in occ.iter().enumerate() {
            let total = sources.len() + sinks.len();
            if total == 0 || total == 2 {
                continue;
            }
            let t = self.spider_types[s].clone();
            let bi = boxes.len();
            boxes.push(BBox::spider(sources.len(), sinks.len(), t.clone(), None));
            v.box_w.push((vec![0; sources.len()], vec![0; sinks.len()]));
            for (k, r) in sources.iter().enumerate() {
                let fresh = types.len();
                types.push(t.clone());
                set(&mut v, *r, fresh);
                v.box_w[bi].0[k] = fresh;
            }
            for (k, r) in sinks.iter().enumerate() {
                let fresh = types.len();
                types.push(t.clone());
                set(&mut v, *r, fresh);
                v.box_w[bi].1[k] = fresh;
            }
            dropped[s] = true;
        }
        let types = compact(types, &dropped, &mut v);
        Self::assemble(self.dom.clone(), self.cod.clone(), boxes, types, v)
    }

    /// On top of bijectivity, orient every two-port spider: cup-like pairs
    /// of sources meet in a merging spider box, cap-like pairs of sinks are
    /// fed by a splitting one, and closed spiders become a split-merge pair
    /// (a circle).
    pub fn make_monogamous(&self) -> HDiagram {
        let h = self.make_bijective();
        let mut v = h.view();
        let mut boxes = h.boxes.clone();
        let mut types = h.spider_types.clone();
        let mut dropped = vec![false; types.len()];
        let occ = h.occurrences(&v);
        for (s, (sources, sinks)) in occ.iter().enumerate() {
            let t = h.spider_types[s].clone();
            match (sources.len(), sinks.len()) {
                (1, 1) => {}
                (2, 0) => {
                    let bi = boxes.len();
                    boxes.push(BBox::spider(2, 0, t.clone(), None));
                    v.box_w.push((vec![0, 0], vec![]));
                    for (k, r) in sources.iter().enumerate() {
                        let fresh = types.len();
                        types.push(t.clone());
                        set(&mut v, *r, fresh);
                        v.box_w[bi].0[k] = fresh;
                    }
                    dropped[s] = true;
                }
                (0, 2) => {
                    let bi = boxes.len();
                    boxes.push(BBox::spider(0, 2, t.clone(), None));
                    v.box_w.push((vec![], vec![0, 0]));
                    for (k, r) in sinks.iter().enumerate() {
                        let fresh = types.len();
                        types.push(t.clone());
                        set(&mut v, *r, fresh);
                        v.box_w[bi].1[k] = fresh;
                    }
                    dropped[s] = true;
                }
                (0, 0) => {
                    let split = boxes.len();
                    boxes.push(BBox::spider(0, 2, t.clone(), None));
                    let merge = boxes.len();
                    boxes.push(BBox::spider(2, 0, t.clone(), None));
                    let f0 = types.len();
                    types.push(t.clone());
                    let f1 = types.len();
                    types.push(t.clone());
                    v.box_w.push((vec![], vec![f0, f1]));
                    debug_assert_eq!(v.box_w.len() - 1, split);
                    v.box_w.push((vec![f0, f1], vec![]));
                    debug_assert_eq!(v.box_w.len() - 1, merge);
                    dropped[s] = true;
                }
                _ => unreachable!("make_bijective left a wide spider"),
            }
        }
        let types = compact(types, &dropped, &mut v);
        Self::assemble(h.dom.clone(), h.cod.clone(), boxes, types, v)
    }

    /// Break every backward wire by bending it around the whole diagram:
    /// a splitting spider box up front and a merging one at the back.
    pub fn make_progressive(&self) -> HDiagram {
        let h = self.make_monogamous();
        let mut v = h.view();
        let occ = h.occurrences(&v);
        let mut backward = Vec::new();
        for (s, (sources, sinks)) in occ.iter().enumerate() {
            if let (PortRef::BCod(i, ki), PortRef::BDom(j, kj)) = (sources[0], sinks[0]) {
                if j <= i {
                    backward.push((s, (i, ki), (j, kj)));
                }
            }
        }
        if backward.is_empty() {
            return h;
        }
        let n_caps = backward.len();
        let mut types = h.spider_types.clone();
        let mut dropped = vec![false; types.len()];
        let mut cap_w: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut cup_w: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut cap_boxes = Vec::new();
        let mut cup_boxes = Vec::new();
        for &(s, (i, ki), (j, kj)) in &backward {
            let t = h.spider_types[s].clone();
            let s1 = types.len();
            types.push(t.clone());
            let s2 = types.len();
            types.push(t.clone());
            let s3 = types.len();
            types.push(t.clone());
            cap_boxes.push(BBox::spider(0, 2, t.clone(), None));
            cap_w.push((vec![], vec![s1, s3]));
            cup_boxes.push(BBox::spider(2, 0, t.clone(), None));
            cup_w.push((vec![s2, s3], vec![]));
            v.box_w[j].0[kj] = s1;
            v.box_w[i].1[ki] = s2;
            dropped[s] = true;
        }
        let mut boxes = cap_boxes;
        boxes.extend(h.boxes.iter().cloned());
        boxes.extend(cup_boxes);
        let mut box_w = cap_w;
        box_w.append(&mut v.box_w);
        box_w.extend(cup_w);
        let mut v = View { dom_w: v.dom_w, box_w, cod_w: v.cod_w };
        let types = compact(types, &dropped, &mut v);
        let out = Self::assemble(h.dom.clone(), h.cod.clone(), boxes, types, v);
        debug_assert!(out.is_progressive());
        debug_assert_eq!(n_caps, backward.len());
        out
    }

    /// Flatten to a layered diagram: boxes in list order, wires routed by
    /// adjacent swaps, then a final permutation onto the codomain.
    pub fn downgrade(&self) -> Result<Diagram, Error> {
        let h = self.make_progressive();
        let v = h.view();
        let mut frontier: Vec<usize> = v.dom_w.clone();
        let mut acc = Diagram::id(h.dom.clone());
        let ob_at = |h: &HDiagram, frontier: &[usize], i: usize| h.spider_types[frontier[i]].clone();
        let ty_of = |h: &HDiagram, frontier: &[usize]| -> Ty {
            frontier.iter().map(|&s| h.spider_types[s].clone()).collect()
        };
        fn emit_swap(
            acc: &mut Diagram,
            frontier: &mut [usize],
            h: &HDiagram,
            m: usize,
        ) -> Result<(), Error> {
            let a = h.spider_types[frontier[m]].clone();
            let b = h.spider_types[frontier[m + 1]].clone();
            let left: Ty = frontier[..m].iter().map(|&s| h.spider_types[s].clone()).collect();
            let right: Ty = frontier[m + 2..].iter().map(|&s| h.spider_types[s].clone()).collect();
            *acc = acc.then(
                &Diagram::id(left)
                    .tensor(&Diagram::from_box(BBox::swap(a, b)))
                    .tensor(&Diagram::id(right)),
            )?;
            frontier.swap(m, m + 1);
            Ok(())
        }

        for (bi, b) in h.boxes.iter().enumerate() {
            let needed = &v.box_w[bi].0;
            let o = if needed.is_empty() {
                frontier.len()
            } else {
                let mut o = usize::MAX;
                for s in needed {
                    let p = frontier.iter().position(|x| x == s).ok_or(Error::Disconnected)?;
                    o = o.min(p);
                }
                for (j, s) in needed.iter().enumerate() {
                    let mut p = frontier.iter().position(|x| x == s).ok_or(Error::Disconnected)?;
                    debug_assert!(p >= o + j);
                    while p > o + j {
                        emit_swap(&mut acc, &mut frontier, &h, p - 1)?;
                        p -= 1;
                    }
                }
                o
            };
            let left = ty_of(&h, &frontier[..o]);
            let right = ty_of(&h, &frontier[o + needed.len()..]);
            let _ = ob_at;
            acc = acc.then(
                &Diagram::id(left)
                    .tensor(&Diagram::from_box(b.clone()))
                    .tensor(&Diagram::id(right)),
            )?;
            frontier.splice(o..o + needed.len(), v.box_w[bi].1.iter().cloned());
        }
        for (j, s) in v.cod_w.iter().enumerate() {
            let mut p = frontier.iter().position(|x| x == s).ok_or(Error::Disconnected)?;
            debug_assert!(p >= j);
            while p > j {
                emit_swap(&mut acc, &mut frontier, &h, p - 1)?;
                p -= 1;
            }
        }
        if frontier.len() != v.cod_w.len() {
            return Err(Error::Disconnected);
        }
        debug_assert_eq!(acc.cod(), h.cod);
        Ok(acc)
    }

    /// Exchange two adjacent boxes.  Unlike the layered interchanger this
    /// never fails on connectivity: the wiring is order-independent.
    pub fn interchange_h(&self, i: usize) -> Result<HDiagram, Error> {
        if i + 1 >= self.boxes.len() {
            return Err(Error::OutOfRange(i));
        }
        let mut v = self.view();
        v.box_w.swap(i, i + 1);
        let mut boxes = self.boxes.clone();
        boxes.swap(i, i + 1);
        Ok(Self::assemble(self.dom.clone(), self.cod.clone(), boxes, self.spider_types.clone(), v))
    }

    /// Deterministic representative: boxes rescheduled by wiring-aware keys,
    /// spiders renumbered by first port occurrence, closed spiders last.
    pub fn canonical(&self) -> HDiagram {
        let v = self.view();
        let n = self.spider_types.len();
        let mut rank: Vec<Option<usize>> = vec![None; n];
        let mut next = 0usize;
        fn assign(rank: &mut [Option<usize>], next: &mut usize, s: usize) {
            if rank[s].is_none() {
                rank[s] = Some(*next);
                *next += 1;
            }
        }
        for &s in &v.dom_w {
            assign(&mut rank, &mut next, s);
        }
        let mut cod_pos: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, &s) in v.cod_w.iter().enumerate() {
            cod_pos[s].push(j);
        }

        type Pk = (u8, usize, Vec<usize>);
        let pk = |rank: &[Option<usize>], cod_pos: &[Vec<usize>], s: usize| -> Pk {
            match rank[s] {
                Some(r) => (0, r, Vec::new()),
                None if !cod_pos[s].is_empty() => (1, 0, cod_pos[s].clone()),
                None => (2, 0, Vec::new()),
            }
        };

        let mut remaining: Vec<usize> = (0..self.boxes.len()).collect();
        let mut order = Vec::with_capacity(self.boxes.len());
        while !remaining.is_empty() {
            let ready: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&bi| v.box_w[bi].0.iter().all(|&s| rank[s].is_some()))
                .collect();
            let pool = if ready.is_empty() { remaining.clone() } else { ready };
            let best = pool
                .into_iter()
                .min_by_key(|&bi| {
                    let dom_k: Vec<Pk> = v.box_w[bi].0.iter().map(|&s| pk(&rank, &cod_pos, s)).collect();
                    let cod_k: Vec<Pk> = v.box_w[bi].1.iter().map(|&s| pk(&rank, &cod_pos, s)).collect();
                    (
                        dom_k,
                        self.boxes[bi].label(),
                        self.boxes[bi].dom.to_string(),
                        self.boxes[bi].cod.to_string(),
                        cod_k,
                        bi,
                    )
                })
                .expect("pool is nonempty");
            order.push(best);
            remaining.retain(|&bi| bi != best);
            for &s in &v.box_w[best].0 {
                assign(&mut rank, &mut next, s);
            }
            for &s in &v.box_w[best].1 {
                assign(&mut rank, &mut next, s);
            }
        }
        for &s in &v.cod_w {
            assign(&mut rank, &mut next, s);
        }
        let mut circles: Vec<usize> = (0..n).filter(|&s| rank[s].is_none()).collect();
        circles.sort_by_key(|&s| (self.spider_types[s].to_string(), s));
        for s in circles {
            assign(&mut rank, &mut next, s);
        }

        let mut spider_types = vec![self.spider_types[0].clone(); n];
        for s in 0..n {
            spider_types[rank[s].expect("all spiders ranked")] = self.spider_types[s].clone();
        }
        let boxes = order.iter().map(|&bi| self.boxes[bi].clone()).collect();
        let relabel = |s: usize| rank[s].expect("all spiders ranked");
        let dom_w = v.dom_w.iter().map(|&s| relabel(s)).collect();
        let box_w = order
            .iter()
            .map(|&bi| {
                (
                    v.box_w[bi].0.iter().map(|&s| relabel(s)).collect(),
                    v.box_w[bi].1.iter().map(|&s| relabel(s)).collect(),
                )
            })
            .collect();
        let cod_w = v.cod_w.iter().map(|&s| relabel(s)).collect();
        Self::assemble(
            self.dom.clone(),
            self.cod.clone(),
            boxes,
            spider_types,
            View { dom_w, box_w, cod_w },
        )
    }
}

fn compact(types: Vec<Ob>, dropped: &[bool], v: &mut View) -> Vec<Ob> {
    let mut remap = vec![usize::MAX; types.len()];
    let mut out = Vec::new();
    for (s, t) in types.into_iter().enumerate() {
        if s < dropped.len() && dropped[s] {
            continue;
        }
        remap[s] = out.len();
        out.push(t);
    }
    for w in v.dom_w.iter_mut() {
        *w = remap[*w];
    }
    for (d, c) in v.box_w.iter_mut() {
        for w in d.iter_mut() {
            *w = remap[*w];
        }
        for w in c.iter_mut() {
            *w = remap[*w];
        }
    }
    for w in v.cod_w.iter_mut() {
        *w = remap[*w];
    }
    out
}

impl PartialEq for HDiagram {
    fn eq(&self, other: &Self) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        a.dom == b.dom
            && a.cod == b.cod
            && a.boxes == b.boxes
            && a.spider_types == b.spider_types
            && a.wires == b.wires
    }
}

/// Reinterpret a layered symmetric diagram as a hypergraph: swaps and
/// unphased spiders melt into the wiring, everything else stays a box.
pub fn cast(d: &Diagram) -> Result<HDiagram, Error> {
    let mut acc = HDiagram::hid(d.dom());
    for layer in d.layers() {
        let atom = cast_box(&layer.bx)?;
        let row = HDiagram::hid(layer.left.clone())
            .htensor(&atom)
            .htensor(&HDiagram::hid(layer.right.clone()));
        acc = acc.hcompose(&row)?;
    }
    Ok(acc)
}

fn cast_box(b: &BBox) -> Result<HDiagram, Error> {
    match &b.kind {
        BoxKind::Swap | BoxKind::Braid { .. } => Ok(HDiagram::hswap(
            &Ty::one(b.dom[0].clone()),
            &Ty::one(b.dom[1].clone()),
        )),
        BoxKind::Spider { phase: Some(_), .. } => {
            Err(Error::Unsupported("phased spiders have no hypergraph form"))
        }
        BoxKind::Spider { legs_in, legs_out, ob, .. } => {
            Ok(HDiagram::hspiders(*legs_in, *legs_out, &Ty::one(ob.clone())))
        }
        BoxKind::Copy { copies } => Ok(HDiagram::hspiders(1, *copies, &Ty::one(b.dom[0].clone()))),
        BoxKind::Merge { copies } => Ok(HDiagram::hspiders(*copies, 1, &Ty::one(b.cod[0].clone()))),
        BoxKind::Cup => {
            if b.dom[0] != b.dom[1] {
                return Err(Error::Unsupported("adjoint wires have no hypergraph form"));
            }
            HDiagram::hcups(&Ty::one(b.dom[0].clone()), &Ty::one(b.dom[1].clone()))
        }
        BoxKind::Cap => {
            if b.cod[0] != b.cod[1] {
                return Err(Error::Unsupported("adjoint wires have no hypergraph form"));
            }
            HDiagram::hcaps(&Ty::one(b.cod[0].clone()), &Ty::one(b.cod[1].clone()))
        }
        BoxKind::Bubble { .. } | BoxKind::Curry { .. } | BoxKind::Ev { .. } => {
            Err(Error::Unsupported("higher-order boxes have no hypergraph form"))
        }
        _ => Ok(HDiagram::from_box(b.clone())),
    }
}
