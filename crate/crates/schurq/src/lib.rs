//! Exact combinatorics of strict partitions and Schur's Q-functions.
//!
//! The crate computes, over arbitrary-precision rationals:
//! - bar combinatorics of strict partitions: r-bars, r-bar cores, quotients
//!   and signs, and the (core, quotient) bijection ([`bars`]);
//! - Schur's Q- and P-functions and Schur functions in the power-sum basis,
//!   spin and ordinary character values, basis conversions ([`symfunc`]);
//! - r-reduced Q-functions, the structure coefficients f and h, and certified
//!   linear relations among reduced Q-functions ([`reduced`]).
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod bars;
pub mod cli;
mod linalg;
pub mod partitions;
pub mod reduced;
pub mod symfunc;

pub use partitions::{
    enumerate_odd_partitions, enumerate_partitions, enumerate_strict_partitions, normalize_signed,
    z_factor, Normalized, OddPartition, Partition, StrictPartition,
};
