//! Exact lattice and polyhedral geometry for cutting-plane experiments.
//!
//! Everything in this crate is computed in exact rational arithmetic: there
//! is no floating point anywhere, no tolerances, and every reported witness
//! (an integer point, a split, a certificate subspace) can be re-verified by
//! direct substitution.
//!
//! The crate is organised bottom-up:
//!
//! * [`rat`] - arbitrary-precision scalars and small parsing/printing helpers,
//! * [`linalg`] - integer linear algebra (Hermite normal form, unimodular
//!   extensions, Diophantine systems),
//! * [`polyhedron`] - rational polyhedra with dual representations converted
//!   by an exact double description kernel,
//! * [`lattice`] - integer point enumeration, integer hulls, lattice width,
//!   relative lattice-freeness,
//! * [`cuts`] - splits, split cuts, budgeted split/CG closures and closure
//!   rank computations,
//! * [`revrank`] - reverse split rank certificates (face + subspace pairs),
//!   the reverse CG comparison, and the mixed-integer rank checks,
//! * [`instances`] - the built-in regression instances used by the test
//!   suite and the command line front end.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `revsplit-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cuts;
mod error;
pub mod instances;
pub mod lattice;
pub mod linalg;
pub mod polyhedron;
pub mod rat;
pub mod revrank;

pub use error::Error;

/// Convenient result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
