//! Exact verification kernels for Galois actions on characters of finite
//! reductive groups: cyclotomic arithmetic, ℓ-adic fixedness, partition and
//! symbol cores, wreath-product character tables, relative Weyl groups and
//! the field-of-values rules for unipotent characters.

pub mod arith;
pub mod cyclotomic;
pub mod error;

pub use error::{Error, Result};
pub mod partitions;
pub mod qpoly;
pub mod ladic;
pub mod symbols;
pub mod group;
pub mod wreath;
pub mod weyl;
pub mod rationality;
pub mod langmap;
pub mod suites;
