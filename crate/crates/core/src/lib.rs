pub mod bivector;
pub mod cli;
pub mod data;
pub mod error;
pub mod goldman;
pub mod maps;
pub mod numeric;
pub mod poly;
pub mod reduce;
pub mod surface;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use poly::{TracePoly, TraceVar};
pub use word::{CyclicWord, Letter, Word};
