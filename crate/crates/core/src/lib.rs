//! Arithmetic of an icosahedral Galois representation attached to the
//! elliptic curve E0 over Q(sqrt5), with the supporting number theory.

pub mod arith;
pub mod cli;
pub mod config;
pub mod dirichlet;
pub mod elliptic;
pub mod error;
pub mod icosahedral;
pub mod klein;
pub mod polyfactor;
pub mod qexp;
pub mod ring;

pub use error::{Error, Result};
