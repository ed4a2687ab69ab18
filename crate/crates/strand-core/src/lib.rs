//! Free categories with extra structure: typed string diagrams, their
//! rewriting, and functors into concrete targets.
//!
//! The syntax tree is closed: every generating box is a [`boxes::BoxKind`],
//! every diagram a list of layers over a [`ty::Ty`].  Rewriting (the
//! interchanger, snake removal, braid naturality) and evaluation (the
//! [`functor`] module) both dispatch on that tree.

pub mod boxes;
pub mod cat;
pub mod closed;
pub mod diagram;
pub mod expr;
pub mod finfun;
pub mod functor;
pub mod hypergraph;
pub mod num;
pub mod rigid;
pub mod symmetric;
pub mod ty;

pub use boxes::{Axis, BBox, BoxKind};
pub use diagram::{Diagram, Encoding, Layer, Match, Sum};
pub use expr::AffineExpr;
pub use num::{Cplx, Real};
pub use ty::{ExpKind, Ob, Ty};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("type mismatch: expected {0}, got {1}")]
    TypeMismatch(String, String),
    #[error("boxes at layers {0} and {0}+1 share a wire")]
    Connected(usize),
    #[error("no normal form: the diagram contains floating scalars")]
    Disconnected,
    #[error("ill-typed at step {0}")]
    IllTyped(usize),
    #[error("no matching occurrence")]
    NoMatch,
    #[error("index {0} out of range")]
    OutOfRange(usize),
    #[error("unknown box: {0}")]
    UnknownBox(String),
    #[error("unknown bubble method: {0}")]
    UnknownMethod(String),
    #[error("no value for variable {0}")]
    MissingVar(String),
    #[error("unsupported operation: {0}")]
    Unsupported(&'static str),
    #[error("word not in the dictionary: {0}")]
    UnknownWord(String),
    #[error("ill-formed tree: {0}")]
    IllFormedTree(String),
    #[error("bad lexicon: {0}")]
    BadLexicon(String),
}

impl Error {
    /// Stable machine-readable code, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TypeMismatch(_, _) => "TYPE_MISMATCH",
            Error::Connected(_) => "CONNECTED",
            Error::Disconnected => "DISCONNECTED",
            Error::IllTyped(_) => "ILL_TYPED",
            Error::NoMatch => "NO_MATCH",
            Error::OutOfRange(_) => "OUT_OF_RANGE",
            Error::UnknownBox(_) => "UNKNOWN_BOX",
            Error::UnknownMethod(_) => "UNKNOWN_METHOD",
            Error::MissingVar(_) => "MISSING_VAR",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::UnknownWord(_) => "UNKNOWN_WORD",
            Error::IllFormedTree(_) => "ILL_FORMED_TREE",
            Error::BadLexicon(_) => "BAD_LEXICON",
        }
    }
}
