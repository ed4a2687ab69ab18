//! Plain categories without tensor: arrows are paths of generators, and
//! the whole monoidal tower is built by swapping this composition-only
//! kernel for richer ones.  Kept self-contained so the path algebra can
//! be tested without any notion of width.

use std::sync::Arc;

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathOb {
    pub name: String,
}

impl PathOb {
    pub fn new(name: impl Into<String>) -> Self {
        PathOb { name: name.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub name: String,
    pub dom: PathOb,
    pub cod: PathOb,
    pub dagger: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Gen(Gen),
    Bubble { inside: Arc<PathSum>, tag: String },
}

impl Step {
    fn cod(&self) -> &PathOb {
        match self {
            Step::Gen(g) => &g.cod,
            Step::Bubble { inside, .. } => &inside.cod,
        }
    }

    fn dagger(&self) -> Step {
        match self {
            Step::Gen(g) => Step::Gen(Gen {
                name: g.name.clone(),
                dom: g.cod.clone(),
                cod: g.dom.clone(),
                dagger: !g.dagger,
            }),
            Step::Bubble { inside, tag } => Step::Bubble {
                inside: Arc::new(inside.dagger()),
                tag: tag.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub dom: PathOb,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn id(x: PathOb) -> Self {
        Path { dom: x, steps: Vec::new() }
    }

    pub fn gen(g: Gen) -> Self {
        Path { dom: g.dom.clone(), steps: vec![Step::Gen(g)] }
    }

    pub fn cod(&self) -> &PathOb {
        self.steps.last().map(Step::cod).unwrap_or(&self.dom)
    }

    pub fn then(&self, other: &Path) -> Result<Path, Error> {
        if *self.cod() != other.dom {
            return Err(Error::TypeMismatch(self.cod().name.clone(), other.dom.name.clone()));
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(Path { dom: self.dom.clone(), steps })
    }

    pub fn dagger(&self) -> Path {
        Path {
            dom: self.cod().clone(),
            steps: self.steps.iter().rev().map(Step::dagger).collect(),
        }
    }
}

/// Formal sum of parallel paths; terms are kept sorted so equality is
/// bag equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathSum {
    pub dom: PathOb,
    pub cod: PathOb,
    pub terms: Vec<Path>,
}

impl PathSum {
    pub fn zero(dom: PathOb, cod: PathOb) -> Self {
        PathSum { dom, cod, terms: Vec::new() }
    }

    pub fn new(dom: PathOb, cod: PathOb, mut terms: Vec<Path>) -> Result<Self, Error> {
        for t in &terms {
            if t.dom != dom || *t.cod() != cod {
                return Err(Error::TypeMismatch(
                    format!("{} -> {}", dom.name, cod.name),
                    format!("{} -> {}", t.dom.name, t.cod().name),
                ));
            }
        }
        terms.sort();
        Ok(PathSum { dom, cod, terms })
    }

    pub fn add(&self, other: &PathSum) -> Result<PathSum, Error> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::TypeMismatch(
                format!("{} -> {}", self.dom.name, self.cod.name),
                format!("{} -> {}", other.dom.name, other.cod.name),
            ));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        terms.sort();
        Ok(PathSum { dom: self.dom.clone(), cod: self.cod.clone(), terms })
    }

    pub fn then(&self, other: &PathSum) -> Result<PathSum, Error> {
        if self.cod != other.dom {
            return Err(Error::TypeMismatch(self.cod.name.clone(), other.dom.name.clone()));
        }
        let mut terms = Vec::new();
        for f in &self.terms {
            for g in &other.terms {
                terms.push(f.then(g)?);
            }
        }
        terms.sort();
        Ok(PathSum { dom: self.dom.clone(), cod: other.cod.clone(), terms })
    }

    pub fn dagger(&self) -> PathSum {
        let mut terms: Vec<Path> = self.terms.iter().map(Path::dagger).collect();
        terms.sort();
        PathSum { dom: self.cod.clone(), cod: self.dom.clone(), terms }
    }

    pub fn bubble(self, tag: impl Into<String>) -> Path {
        let dom = self.dom.clone();
        Path { dom, steps: vec![Step::Bubble { inside: Arc::new(self), tag: tag.into() }] }
    }
}

impl From<Path> for PathSum {
    fn from(p: Path) -> Self {
        PathSum { dom: p.dom.clone(), cod: p.cod().clone(), terms: vec![p] }
    }
}

/// Functor out of the free category: an object map, a generator map, and
/// hooks for the structure the target supports.
pub trait PathTarget {
    type Ob: Clone;
    type Arr: Clone;

    fn id(&self, x: &Self::Ob) -> Self::Arr;
    fn then(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr, Error>;
    fn dagger(&self, _f: &Self::Arr) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("dagger"))
    }
    fn zero(&self, _dom: &Self::Ob, _cod: &Self::Ob) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("zero"))
    }
    fn add(&self, _f: &Self::Arr, _g: &Self::Arr) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("add"))
    }
    fn bubble(&self, _inside: &Self::Arr, _tag: &str) -> Result<Self::Arr, Error> {
        Err(Error::Unsupported("bubble"))
    }
}

pub struct PathFunctor<'a, T: PathTarget> {
    pub target: &'a T,
    pub ob: &'a dyn Fn(&PathOb) -> Result<T::Ob, Error>,
    pub gen: &'a dyn Fn(&Gen) -> Result<T::Arr, Error>,
}

impl<'a, T: PathTarget> PathFunctor<'a, T> {
    pub fn map(&self, p: &Path) -> Result<T::Arr, Error> {
        let mut acc = self.target.id(&(self.ob)(&p.dom)?);
        for step in &p.steps {
            let img = match step {
                Step::Gen(g) if g.dagger => {
                    let plain = Gen { dagger: false, dom: g.cod.clone(), cod: g.dom.clone(), name: g.name.clone() };
                    self.target.dagger(&(self.gen)(&plain)?)?
                }
                Step::Gen(g) => (self.gen)(g)?,
                Step::Bubble { inside, tag } => {
                    self.target.bubble(&self.map_sum(inside)?, tag)?
                }
            };
            acc = self.target.then(&acc, &img)?;
        }
        Ok(acc)
    }

    pub fn map_sum(&self, s: &PathSum) -> Result<T::Arr, Error> {
        let mut acc: Option<T::Arr> = None;
        for t in &s.terms {
            let img = self.map(t)?;
            acc = Some(match acc {
                None => img,
                Some(a) => self.target.add(&a, &img)?,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => self.target.zero(&(self.ob)(&s.dom)?, &(self.ob)(&s.cod)?),
        }
    }
}

/// The free category is its own functor target.
pub struct PathCat;

impl PathTarget for PathCat {
    type Ob = PathOb;
    type Arr = PathSum;

    fn id(&self, x: &PathOb) -> PathSum {
        Path::id(x.clone()).into()
    }
    fn then(&self, f: &PathSum, g: &PathSum) -> Result<PathSum, Error> {
        f.then(g)
    }
    fn dagger(&self, f: &PathSum) -> Result<PathSum, Error> {
        Ok(f.dagger())
    }
    fn zero(&self, dom: &PathOb, cod: &PathOb) -> Result<PathSum, Error> {
        Ok(PathSum::zero(dom.clone(), cod.clone()))
    }
    fn add(&self, f: &PathSum, g: &PathSum) -> Result<PathSum, Error> {
        f.add(g)
    }
    fn bubble(&self, inside: &PathSum, tag: &str) -> Result<PathSum, Error> {
        Ok(inside.clone().bubble(tag).into())
    }
}
