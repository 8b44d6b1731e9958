//! Exact computation of Macdonald polynomials in finitely many variables,
//! polarized powers of the q-discriminant, Jack limits, Hankel
//! hyperdeterminant coefficients and admissible partitions.
//!
//! Everything is exact: coefficients live in canonical rational functions
//! over the rationals ([`algebra::RatFun`]), and limits are taken by
//! evaluating canonical forms after cancellation.

pub mod admissible;
pub mod algebra;
pub mod error;
pub mod hankel;
pub mod jack;
pub mod macdonald;
pub mod partitions;
pub mod qdisc;
pub mod symbasis;

pub use error::{Error, Result};
pub use partitions::Partition;
