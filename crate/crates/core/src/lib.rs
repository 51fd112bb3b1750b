//! Quandle homology and virtual knot cocycle invariants.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front end and anything touching the operating system live in the
//! companion `quandle-cli` crate.

#![no_std]

extern crate alloc;

pub mod abgroup;
pub mod alexander;
pub mod chain;
pub mod cocycle;
pub mod connecting;
pub mod error;
pub mod homology;
pub mod int;
pub mod matrix;
pub mod modp;
pub mod poly;
pub mod quandle;
pub mod snf;
pub mod transfer;
pub mod vknot;

pub use abgroup::AbelianGroupDescriptor;
pub use error::{Error, Result};
pub use homology::{Coeffs, Homology};
pub use int::Int;
pub use matrix::{IntMatrix, SparseMatrix};
pub use quandle::{FiniteQuandle, InnerWord, OrbitDecomposition, QuandleHom, Subquandle};
