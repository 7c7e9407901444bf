//! Exact combinatorics behind the generalized Springer correspondence for
//! possibly disconnected reductive groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`] – partitions and the type-specific validity predicates
//!   parameterizing classical nilpotent orbits;
//! * [`orbits`] – nilpotent orbits and their component groups `A(O)`;
//! * [`cuspidal`] – cuspidal local systems, classical cuspidal data on Levi
//!   subgroups, and the exceptional cuspidal support dispatch;
//! * [`rootdata`] – root systems, extended Weyl groups `W° ⋊ π₀`, parabolic
//!   pairs `(X, Ω)`, quasi-Levi subgroups, double cosets and Mackey terms;
//! * [`projrep`] – finite groups, exact character tables, 2-cocycles and the
//!   irreducibles of twisted group algebras;
//! * [`extquot`] – twisted extended quotients of finite group actions;
//! * [`bernstein`] – assembly of the dual Bernstein variety model over a
//!   cuspidal catalog.
//!
//! Everything is exact: integers, permutations and cyclotomic integers.

pub mod bernstein;
pub mod cuspidal;
pub mod cyclotomic;
mod error;
pub mod extquot;
pub mod orbits;
pub mod partitions;
pub mod projrep;
pub mod rootdata;

pub use error::{Error, Result};
