pub mod arrangement;
pub mod chromatic;
pub mod cli;
pub mod error;
pub mod fundamental;
pub mod graph;
pub mod involution;
pub mod io;
pub mod limits;
pub mod named;
pub mod perm;
pub mod poset;
pub mod sign;
pub mod sqsym;

pub use error::{Error, Result};
pub use limits::Limits;
