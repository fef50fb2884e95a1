//! Exact computer algebra for the higher Capelli identities.
//!
//! The crate is organised bottom-up:
//!
//! - [`symcore`]: permutations, the rational group algebra of `S_k`, Jucys–Murphy elements.
//! - [`young`]: partitions, standard tableaux, contents, Young's seminormal
//!   representation, the matrix elements `Ψ̃_{TT'}` and irreducible characters.
//! - [`weyl`]: polynomial-coefficient differential operators in normal order.
//! - [`ugl`]: the enveloping algebra `U(gl(m))` in PBW form and its map to the Weyl algebra.
//! - [`mattens`]: matrices and tensor products of matrices over a pluggable coefficient algebra.
//! - [`capelli`]: both sides of the higher Capelli identities, proof-step checks,
//!   quantum immanants and verification reports.
//!
//! All arithmetic is exact ([`Q`] is an arbitrary-precision rational).

pub mod capelli;
pub mod error;
pub mod mattens;
pub mod scalar;
pub mod symcore;
pub mod ugl;
pub mod weyl;
pub mod young;

pub use error::{Error, Result};
pub use scalar::Q;
