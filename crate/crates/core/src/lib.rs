pub mod audit;
pub mod constructions;
pub mod edge_ordered;
pub mod error;
pub mod experiment;
pub mod geo;
pub mod io;
pub mod matrix;
pub mod orders;
pub mod regularize;

pub use error::{Error, Result};
