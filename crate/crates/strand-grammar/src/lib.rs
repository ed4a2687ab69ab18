//! Natural language front end: lexicons, pregroup parsing, constituency
//! trees, wiring parses over box signatures, and tensor or circuit
//! interpretations of the result.

pub mod lexicon;
pub mod model;
pub mod pregroup;
pub mod tree;
pub mod wiring;

pub use lexicon::{parse_ty, Dictionary};
pub use model::{CircuitModel, TensorModel};
pub use tree::from_tree;
pub use wiring::{dependency_wiring, trivial_wiring, wire_word, wiring};
