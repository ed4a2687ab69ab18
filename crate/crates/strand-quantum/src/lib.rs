pub mod channel;
pub mod cq;
pub mod eval;
pub mod gates;

pub use channel::Channel;
pub use cq::{c, q, CQ};
pub use eval::{
    all_zeros_probability, is_pure, mixed_eval, pure_eval, qubit_caps, qubit_cups, scalar_factor,
    ChannelCat, CircuitCat,
};
