//! Affine expressions over named variables, used as rotation phases.
//!
//! A phase like `2 * theta - 0.25` stays symbolic inside the diagram and is
//! only evaluated once an assignment is supplied.  Affine is enough for the
//! shift rules used by gradients, and keeps differentiation exact.

use std::collections::BTreeMap;
use std::fmt;

use crate::num::Real;
use crate::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineExpr {
    constant: Real,
    /// Variable name to coefficient; zero coefficients are never stored.
    terms: BTreeMap<String, Real>,
}

impl AffineExpr {
    pub fn constant(x: f64) -> Self {
        AffineExpr { constant: Real(x), terms: BTreeMap::new() }
    }

    pub fn var(name: impl Into<String>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(name.into(), Real(1.0));
        AffineExpr { constant: Real(0.0), terms }
    }

    pub fn shift(&self, dx: f64) -> Self {
        let mut out = self.clone();
        out.constant = Real(out.constant.0 + dx);
        out
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = AffineExpr::constant(self.constant.0 * k);
        for (v, c) in &self.terms {
            let kc = c.0 * k;
            if kc != 0.0 {
                out.terms.insert(v.clone(), Real(kc));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant = Real(out.constant.0 + other.constant.0);
        for (v, c) in &other.terms {
            let prev = out.terms.get(v).map_or(0.0, |r| r.0);
            let next = prev + c.0;
            if next == 0.0 {
                out.terms.remove(v);
            } else {
                out.terms.insert(v.clone(), Real(next));
            }
        }
        out
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `var`, zero if absent.
    pub fn coefficient(&self, var: &str) -> f64 {
        self.terms.get(var).map_or(0.0, |r| r.0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(|s| s.as_str())
    }

    pub fn eval(&self, assignment: &BTreeMap<String, f64>) -> Result<f64, Error> {
        let mut acc = self.constant.0;
        for (v, c) in &self.terms {
            let x = assignment
                .get(v)
                .ok_or_else(|| Error::MissingVar(v.clone()))?;
            acc += c.0 * x;
        }
        Ok(acc)
    }
}

impl From<f64> for AffineExpr {
    fn from(x: f64) -> Self {
        AffineExpr::constant(x)
    }
}

impl fmt::Display for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, c) in &self.terms {
            if first {
                if c.0 == 1.0 {
                    write!(f, "{v}")?;
                } else if c.0 == -1.0 {
                    write!(f, "-{v}")?;
                } else {
                    write!(f, "{}{v}", c.0)?;
                }
                first = false;
            } else if c.0 < 0.0 {
                if c.0 == -1.0 {
                    write!(f, " - {v}")?;
                } else {
                    write!(f, " - {}{v}", -c.0)?;
                }
            } else if c.0 == 1.0 {
                write!(f, " + {v}")?;
            } else {
                write!(f, " + {}{v}", c.0)?;
            }
        }
        if first {
            write!(f, "{}", self.constant.0)
        } else if self.constant.0 < 0.0 {
            write!(f, " - {}", -self.constant.0)
        } else if self.constant.0 > 0.0 {
            write!(f, " + {}", self.constant.0)
        } else {
            Ok(())
        }
    }
}
