pub mod arith;
pub mod cert;
pub mod error;
pub mod exactlin;
pub mod fgmod;
pub mod gallery;
pub mod handle;
pub mod harness;
pub mod json;
pub mod rings;
pub mod spectop;
pub mod symmod;

pub use error::{Error, Result};
