//! Exact computation of double Schubert polynomials for the classical
//! Weyl groups.
//!
//! Two independent engines are provided and kept in agreement by the
//! test suite:
//!
//! * [`nilcoxeter`] expands ordered generating-series products in the
//!   nilCoxeter algebra of `S_n`, `W_n`, or the even subgroup, and reads
//!   off coefficients of basis elements;
//! * [`tableaux`] enumerates fillings of skew Young diagrams (bitableaux
//!   in type A, tritableaux in types C and D) and sums their weights.
//!
//! Supporting modules: [`poly`] (sparse polynomials over dyadic
//! rationals), [`weyl`] (signed permutations, words, lengths), and
//! [`shapes`] (k-strict partitions, Grassmannian bijections, strips).
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the
//! command-line front end live in the companion `schubert-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod nilcoxeter;
pub mod poly;
pub mod shapes;
pub mod tableaux;
pub mod weyl;

pub use poly::{Dyadic, Family, Monomial, Polynomial, VariableId};
pub use shapes::{DiagramBox, Partition, ShapeType, TypedShape};
pub use weyl::{Generator, GroupTag, SignedPermutation};
