pub mod cli;
pub mod elliptic;
pub mod error;
pub mod field;
pub mod genus2;
pub mod graph;
pub mod richelot;
pub mod spectra;
pub mod walk;

pub use error::{Error, Result};
