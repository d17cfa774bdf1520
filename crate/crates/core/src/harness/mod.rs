//! Instance files, the golden catalog, enumeration and theorem batteries.

pub mod battery;
pub mod catalog;
pub mod enumerate;
pub mod instance;

pub use catalog::Catalog;
pub use instance::{Body, Instance};
