//! Numerical core for two-particle Dirac bispinor entanglement.
//!
//! A Dirac bispinor is a two-qubit object (intrinsic parity ⊗ spin), so a pair
//! of particles lives on a four-qubit register `(P1, S1, P2, S2)`. This crate
//! builds such states, boosts them with the bispinor representation of a
//! Lorentz boost, and measures entanglement across every bipartition using the
//! partial-transpose negativity.
//!
//! The crate is `no_std` and only needs `alloc`. IO, CLI and file formats live
//! in the companion `bispinor-lab` crate.
#![no_std]
// `!(x > 0.0)` style guards deliberately reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dirac;
mod error;
pub mod measures;
pub mod scenarios;
pub mod superposition;
pub mod tensor;

pub use crate::error::{Error, Result};
pub use crate::tensor::{Complex64, ComplexMatrix, QubitSubset, StateVector};
