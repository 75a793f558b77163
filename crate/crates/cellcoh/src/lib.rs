//! File formats and command-line front end for `cellcoh-core`.

pub mod cli;
pub mod document;

pub use document::{parse_complex, parse_map, serialize_complex, serialize_map, DocumentError};
