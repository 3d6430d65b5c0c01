//! Exact search and verification toolkit for tilings of oriented graphs by
//! triangle blow-ups `D_{a,b,c}`.
//!
//! The crate provides:
//!
//! - bit-set oriented graphs and degree/tournament predicates ([`digraph`]),
//! - pattern graphs: transitive tournaments, cycle and path powers, the
//!   blow-ups `D_{a,b,c}`, and `K_4` minus an edge ([`patterns`]),
//! - the extremal constructions used as sharpness examples
//!   ([`constructions`]),
//! - the cyclic congruence systems that govern tile-count bookkeeping
//!   ([`congruence`]),
//! - budgeted exact searches: embedding, copy enumeration, transitive
//!   subtournaments, squares of paths and cycles ([`search`]),
//! - maximum and perfect tilings with an exact branch-and-bound solver
//!   ([`tiling`]),
//! - index-vector lattices, robust vectors, transferrals, linking sets and
//!   absorbers ([`lattice`]),
//! - extremal-structure diagnostics ([`extremal`]),
//! - a verification suite bundling the paperwork into named checks
//!   ([`verify`]).
//!
//! All searches are deterministic: identical inputs, seeds and budgets give
//! identical results, independent of thread count.

pub mod bitset;
pub mod cli;
pub mod congruence;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod extremal;
pub mod io;
pub mod lattice;
pub mod patterns;
pub mod search;
pub mod tiling;
pub mod verify;

pub use bitset::VertexSet;
pub use digraph::{DegreeProfile, OrientedGraph, PairStats, Tripartition};
pub use error::{Error, Result};
pub use patterns::{Pattern, Role};
