pub mod error;
pub mod exactnum;
pub mod liealg;
pub mod catalog;
pub mod connection;
pub mod matrix;
pub mod solvers;

pub use error::{Error, Result};
