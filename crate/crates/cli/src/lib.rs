//! Command-line front end: subcommands, the JSON proof format, proof
//! rendering and the enumeration harness.

pub mod app;
pub mod batch;
pub mod enumerate;
pub mod json;
pub mod render;

pub use app::{run, Outcome};
