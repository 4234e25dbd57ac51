pub mod arith;
pub mod difference;
pub mod error;
pub mod galois;
pub mod groebner;
pub mod lattice;
pub mod laurent;
pub mod pv;
pub mod solve;

pub use error::{PvError, Result};
