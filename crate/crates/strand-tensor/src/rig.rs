//! Scalar rigs: the element types matrices and tensors range over.

use strand_core::{Cplx, Error};

/// A commutative rig with enough extras for diagram semantics: conjugation
/// (identity except for complex), optional unit-circle phases, and the
/// registered elementwise bubble functions.
pub trait Rig: Clone + PartialEq + std::fmt::Debug {
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// e^{i·angle} when the rig can represent it; phaseless rigs only admit
    /// angle 0.
    fn from_phase(angle: f64) -> Result<Self, Error> {
        if angle == 0.0 {
            Ok(Self::one())
        } else {
            Err(Error::Unsupported("phases need complex scalars"))
        }
    }

    /// Registered elementwise bubble functions, by tag.
    fn bubble(&self, tag: &str) -> Result<Self, Error> {
        let _ = tag;
        Err(Error::UnknownMethod(tag.to_string()))
    }

    /// |x - y| ≤ tol, with exact equality for discrete rigs.
    fn close(&self, other: &Self, tol: f64) -> bool {
        let _ = tol;
        self == other
    }
}

impl Rig for bool {
    const NAME: &'static str = "bool";

    fn zero() -> Self {
        false
    }
    fn one() -> Self {
        true
    }
    fn add(&self, other: &Self) -> Self {
        *self || *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self && *other
    }
    fn bubble(&self, tag: &str) -> Result<Self, Error> {
        match tag {
            "negate" => Ok(!*self),
            _ => Err(Error::UnknownMethod(tag.to_string())),
        }
    }
}

impl Rig for i64 {
    const NAME: &'static str = "int";

    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn bubble(&self, tag: &str) -> Result<Self, Error> {
        match tag {
            "negate" => Ok(-self),
            "relu" => Ok((*self).max(0)),
            _ => Err(Error::UnknownMethod(tag.to_string())),
        }
    }
}

fn logistic(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

impl Rig for f64 {
    const NAME: &'static str = "real";

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn bubble(&self, tag: &str) -> Result<Self, Error> {
        match tag {
            "negate" => Ok(-self),
            "relu" => Ok(self.max(0.0)),
            "logistic" => Ok(logistic(*self)),
            "squared_amplitude" => Ok(self * self),
            _ => Err(Error::UnknownMethod(tag.to_string())),
        }
    }
    fn close(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }
}

impl Rig for Cplx {
    const NAME: &'static str = "complex";

    fn zero() -> Self {
        Cplx::zero()
    }
    fn one() -> Self {
        Cplx::one()
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn conj(&self) -> Self {
        Cplx::conj(*self)
    }
    fn from_phase(angle: f64) -> Result<Self, Error> {
        Ok(Cplx::new(angle.cos(), angle.sin()))
    }
    fn bubble(&self, tag: &str) -> Result<Self, Error> {
        let re = self.re.get();
        match tag {
            "negate" => Ok(-*self),
            // Stays in the complex rig with zero imaginary part; the
            // rig-changing form lives on Tensor directly.
            "squared_amplitude" => Ok(Cplx::real(self.norm_sqr())),
            "relu" => Ok(Cplx::real(re.max(0.0))),
            "logistic" => Ok(Cplx::real(logistic(re))),
            _ => Err(Error::UnknownMethod(tag.to_string())),
        }
    }
    fn close(&self, other: &Self, tol: f64) -> bool {
        (self.re.get() - other.re.get()).abs() <= tol
            && (self.im.get() - other.im.get()).abs() <= tol
    }
}
