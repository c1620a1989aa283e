pub mod app;
pub mod clinalg;
pub mod config;
pub mod error;
pub mod hw;
pub mod io;
pub mod poly;
pub mod qmat;
pub mod quat;
pub mod sampling;
pub mod trials;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use quat::Quaternion;
