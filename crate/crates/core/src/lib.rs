//! Exact recognition, certification and construction of Leonard pairs.
//!
//! Everything runs over ℚ or a prime field GF(p) with exact arithmetic.
//! The layers, bottom up:
//!
//! * [`linalg`]: field elements, matrices, polynomials, subspaces;
//! * [`spectral`]: multiplicity-free tests and primitive idempotents;
//! * [`split`]: vanishing patterns of `E*ᵢ A E*ⱼ`, split decompositions and
//!   their certificates;
//! * [`leonard`]: the Leonard-system predicate, its split and
//!   antiautomorphism characterizations, and parameter arrays;
//! * [`cli`]: the JSON front end behind the `leonard-kit` binary.

pub mod error;
pub mod linalg;
pub mod spectral;
pub mod split;
pub mod leonard;
pub mod cli;

pub use error::{Error, Result};
