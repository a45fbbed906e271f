pub mod error;
pub mod exterior;
pub mod gstructure;
pub mod hodge;
pub mod linalg;
pub mod quaternionic;
pub mod rep;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
