//! Face enumeration of simplicial complexes.
//!
//! The crate computes f-, h- and Betti-corrected h-vectors, reduced homology
//! over prime fields and ℚ, Stanley–Reisner ring data, and checks the
//! classical inequalities relating them.

pub mod audit;
pub mod cli;
pub mod classify;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod face_ring;
pub mod field;
pub mod homology;
pub mod invariants;
pub mod linalg;

pub use complex::{FVector, Face, Label, SimplicialComplex};
pub use error::{Error, Result};
pub use field::FieldSpec;
