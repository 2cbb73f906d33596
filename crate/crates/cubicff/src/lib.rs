//! Genus, ramification and integral bases of cubic function fields over F_q(x).

pub mod algebra;
pub mod cli;
pub mod cubic;
pub mod error;
pub mod forms;
pub mod intbasis;
pub mod pipeline;
pub mod ramgenus;
pub mod ratfunc;
pub mod reduction;
pub mod verify;

pub use error::{Error, Result};
