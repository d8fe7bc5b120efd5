//! Cubic translation-invariant stabilizer codes on Z^3.
//!
//! Binary linear algebra ([`f2`]), Pauli operators ([`pauli`]), the cube
//! geometry and generator catalog ([`cube`], [`code`]), the classification of
//! commutation matrices ([`classify`]), periodic-lattice instances
//! ([`lattice`]), string segments ([`strings`]) and the special properties of
//! the non-CSS code ([`code0`]).

#![no_std]

extern crate alloc;

pub mod classify;
pub mod code0;
pub mod code;
pub mod cube;
pub mod error;
pub mod f2;
pub mod lattice;
pub mod pauli;
pub mod strings;

pub use code::{CubicCode, GeneratorSpec};
pub use f2::{BinaryMatrix, BinaryVector};
pub use pauli::{PauliOperator, Site, SiteOp};
