//! Graded-poset combinatorics around the Rees product.
//!
//! The crate builds finite graded posets (chains, trees, Boolean algebras,
//! cubical and crosspolytope lattices), forms Rees products, and computes
//! Möbius functions by several independent routes: a direct recursion on the
//! poset, a weight calculus on flag f-vectors, closed-form sums, and
//! falling-chain enumeration under an R-labeling.  On top of that it carries
//! the bijective machinery tying falling chains to signed derangements and
//! skew hook diagrams, and an exact integer homology pipeline (order
//! complexes, boundary operators, Smith normal form) used to verify homology
//! ranks and a representation-dimension identity.
//!
//! Everything is `no_std`-compatible (with `alloc`); IO, serialization and
//! the command-line front end live in the companion `rees-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod derange;
pub mod homology;
pub mod labeling;
pub mod num;
pub mod poset;
pub mod rees;
pub mod weights;
pub mod zoo;

pub use poset::{GradedPoset, PosetError, RankSet};
