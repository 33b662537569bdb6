pub mod acs;
pub mod bench;
pub mod circle;
pub mod cli;
pub mod cover;
pub mod error;
pub mod gen;
pub mod graph;
pub mod interval;
pub mod text;
pub mod useful_cover;

pub use error::{Error, Result};
