//! Finite-lattice computations: Möbius functions through bounded-below atom sets,
//! crosscuts, coreless sets and broken circuits; the standard lattice families
//! built from set partitions, shuffles, integer partitions and bracket vectors;
//! and characteristic-polynomial factorization along left-modular chains.

pub mod error;
pub mod lattice;
pub mod families;
pub mod mobius;
pub mod structure;

pub use error::{Error, Result};
pub use lattice::{CoverList, FiniteLattice};
pub use mobius::{AtomOrder, AtomSelector, AtomSet, MobiusVector};
