//! Objects and types.
//!
//! A type is a finite list of objects.  Objects carry a winding number `z`
//! counting iterated adjoints: `z = -1` is the left adjoint, `z = +1` the
//! right.  Pivotal objects identify left with right, so their winding lives
//! mod 2.  Value objects (digits, qudits) are self dual.

use std::fmt;
use std::ops::Deref;

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpKind {
    /// `base << exponent`: takes the exponent on the right.
    Over,
    /// `exponent >> base`: takes the exponent on the left.
    Under,
    /// Symmetric exponential, no side.
    Sym,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ob {
    Basic { name: String, z: i32, pivotal: bool },
    /// Classical value of the given dimension.
    Digit(usize),
    /// Quantum system of the given dimension.
    Qudit(usize),
    /// Function type; only realized categories can evaluate it.
    Exp { base: Ty, exponent: Ty, kind: ExpKind },
}

impl Ob {
    pub fn basic(name: impl Into<String>) -> Self {
        Ob::Basic { name: name.into(), z: 0, pivotal: false }
    }

    /// A basic object whose left and right adjoints coincide.
    pub fn pivotal(name: impl Into<String>) -> Self {
        Ob::Basic { name: name.into(), z: 0, pivotal: true }
    }

    pub fn l(&self) -> Ob {
        match self {
            Ob::Basic { name, z, pivotal } => {
                let z = if *pivotal { (z + 1).rem_euclid(2) } else { z - 1 };
                Ob::Basic { name: name.clone(), z, pivotal: *pivotal }
            }
            Ob::Digit(_) | Ob::Qudit(_) => self.clone(),
            Ob::Exp { .. } => panic!("exponential objects have no adjoints; realize them first"),
        }
    }

    pub fn r(&self) -> Ob {
        match self {
            Ob::Basic { name, z, pivotal } => {
                let z = if *pivotal { (z + 1).rem_euclid(2) } else { z + 1 };
                Ob::Basic { name: name.clone(), z, pivotal: *pivotal }
            }
            Ob::Digit(_) | Ob::Qudit(_) => self.clone(),
            Ob::Exp { .. } => panic!("exponential objects have no adjoints; realize them first"),
        }
    }

    pub fn winding(&self) -> i32 {
        match self {
            Ob::Basic { z, .. } => *z,
            _ => 0,
        }
    }

    /// Same object with winding reset to zero.
    pub fn unwound(&self) -> Ob {
        match self {
            Ob::Basic { name, pivotal, .. } => {
                Ob::Basic { name: name.clone(), z: 0, pivotal: *pivotal }
            }
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Ob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ob::Basic { name, z, .. } => {
                write!(f, "{name}")?;
                for _ in 0..z.abs() {
                    write!(f, "{}", if *z < 0 { ".l" } else { ".r" })?;
                }
                Ok(())
            }
            Ob::Digit(2) => write!(f, "bit"),
            Ob::Digit(n) => write!(f, "digit({n})"),
            Ob::Qudit(2) => write!(f, "qubit"),
            Ob::Qudit(n) => write!(f, "qudit({n})"),
            Ob::Exp { base, exponent, kind } => match kind {
                ExpKind::Over => write!(f, "({base} << {exponent})"),
                ExpKind::Under => write!(f, "({exponent} >> {base})"),
                ExpKind::Sym => write!(f, "({base} ** {exponent})"),
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ty(pub Vec<Ob>);

impl Ty {
    pub fn unit() -> Self {
        Ty(Vec::new())
    }

    pub fn one(ob: Ob) -> Self {
        Ty(vec![ob])
    }

    pub fn tensor(&self, other: &Ty) -> Ty {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Ty(v)
    }

    pub fn pow(&self, n: usize) -> Ty {
        let mut v = Vec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Ty(v)
    }

    pub fn l(&self) -> Ty {
        Ty(self.0.iter().rev().map(Ob::l).collect())
    }

    pub fn r(&self) -> Ty {
        Ty(self.0.iter().rev().map(Ob::r).collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Ty {
        Ty(self.0[range].to_vec())
    }

    /// Error helper: mismatch between an expected and an actual type.
    pub fn expect_eq(&self, other: &Ty) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::TypeMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl Deref for Ty {
    type Target = [Ob];
    fn deref(&self) -> &[Ob] {
        &self.0
    }
}

impl From<Ob> for Ty {
    fn from(ob: Ob) -> Ty {
        Ty(vec![ob])
    }
}

impl From<&[Ob]> for Ty {
    fn from(obs: &[Ob]) -> Ty {
        Ty(obs.to_vec())
    }
}

impl FromIterator<Ob> for Ty {
    fn from_iter<I: IntoIterator<Item = Ob>>(iter: I) -> Ty {
        Ty(iter.into_iter().collect())
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, ob) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " @ ")?;
            }
            write!(f, "{ob}")?;
        }
        Ok(())
    }
}
