//! Exact cellular homology and cohomology of finite CW complexes.
//!
//! A complex is stored combinatorially as cell counts and integer boundary
//! matrices. Groups are computed by Smith normal form over arbitrary-precision
//! integers and reported in invariant-factor form. On top of that sit chain
//! maps, mapping cones, induced and connecting homomorphisms, and executable
//! checks of the Eilenberg–Steenrod axioms.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod abgroups;
pub mod complex;
pub mod error;
pub mod homology;
pub mod intmat;
pub mod maps;
pub mod verify;

pub use abgroups::{AbHom, FgAbGroup};
pub use complex::{CwComplex, EdgePresentation, ValidationReport, Violation};
pub use error::Error;
pub use homology::{GroupWithPresentation, Variant};
pub use intmat::{IntMatrix, SnfResult};
pub use maps::ChainMap;
pub use num_bigint::BigInt;
