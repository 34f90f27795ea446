pub mod cli;
pub mod complexes;
pub mod error;
pub mod exactmath;
pub mod graphs;
pub mod polytopes;
pub mod toric;

pub use error::{Error, Result};
