//! Bit-exact wrappers around floating point scalars.
//!
//! Diagrams carry phases and scalar weights, and diagrams need `Eq`, `Ord`
//! and `Hash` so they can be deduplicated, sorted into sums and used as keys
//! during rewriting.  `f64` supports none of those, so the syntax tree stores
//! [`Real`] instead: comparison is `total_cmp`, hashing is on the raw bits.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An `f64` with total order and bit hashing.
#[derive(Clone, Copy, Debug, Default)]
pub struct Real(pub f64);

impl Real {
    pub fn get(self) -> f64 {
        self.0
    }

    // -0.0 collapses to 0.0 so the two zero bit patterns compare equal.
    fn norm(self) -> f64 {
        if self.0 == 0.0 {
            0.0
        } else {
            self.0
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.norm().total_cmp(&other.norm())
    }
}

impl Hash for Real {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.norm().to_bits().hash(state);
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, rhs: Real) -> Real {
        Real(self.0 + rhs.0)
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, rhs: Real) -> Real {
        Real(self.0 - rhs.0)
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, rhs: Real) -> Real {
        Real(self.0 * rhs.0)
    }
}

impl Div for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        Real(self.0 / rhs.0)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Shortest round-trip form, e.g. "0.5" rather than "0.50000".
        write!(f, "{}", self.0)
    }
}

/// A complex scalar made of two [`Real`]s, so it inherits their derives.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cplx {
    pub re: Real,
    pub im: Real,
}

impl Cplx {
    pub fn new(re: f64, im: f64) -> Self {
        Cplx { re: Real(re), im: Real(im) }
    }

    pub fn real(x: f64) -> Self {
        Cplx::new(x, 0.0)
    }

    pub fn zero() -> Self {
        Cplx::new(0.0, 0.0)
    }

    pub fn one() -> Self {
        Cplx::new(1.0, 0.0)
    }

    pub fn conj(self) -> Self {
        Cplx::new(self.re.0, -self.im.0)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re.0 * self.re.0 + self.im.0 * self.im.0
    }
}

impl Add for Cplx {
    type Output = Cplx;
    fn add(self, rhs: Cplx) -> Cplx {
        Cplx::new(self.re.0 + rhs.re.0, self.im.0 + rhs.im.0)
    }
}

impl Mul for Cplx {
    type Output = Cplx;
    fn mul(self, rhs: Cplx) -> Cplx {
        Cplx::new(
            self.re.0 * rhs.re.0 - self.im.0 * rhs.im.0,
            self.re.0 * rhs.im.0 + self.im.0 * rhs.re.0,
        )
    }
}

impl Neg for Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        Cplx::new(-self.re.0, -self.im.0)
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.0 == 0.0 {
            write!(f, "{}", self.re.0)
        } else if self.re.0 == 0.0 {
            write!(f, "{}i", self.im.0)
        } else if self.im.0 < 0.0 {
            write!(f, "{}{}i", self.re.0, self.im.0)
        } else {
            write!(f, "{}+{}i", self.re.0, self.im.0)
        }
    }
}
