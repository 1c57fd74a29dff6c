#![forbid(unsafe_code)]

//! Cayley graphs of the symmetric group generated by transposition sets.
//!
//! A set `S` of transpositions of `{1..n}` doubles as a graph `T(S)` on the
//! points `1..n` (the *transposition graph*) and as a generating set for a
//! Cayley graph `Cay(S_n, S)` on all `n!` permutations. The structure of the
//! small graph controls the structure of the big one: `Cay(S_n, S)` and
//! `Cay(S_n, S')` are isomorphic exactly when `T(S)` and `T(S')` are, and
//! `Cay(S_n, S)` is edge-transitive exactly when `T(S)` is (for `n >= 5`).
//!
//! This crate materializes both sides of those equivalences at desk scale:
//!
//! - [`perm`] — exact permutation arithmetic with Lehmer-code ranking, so
//!   permutations double as dense Cayley-graph vertex ids.
//! - [`graph`] — simple graphs plus the symmetry toolkit: automorphism
//!   groups by refinement-and-backtracking, orbit computations, isomorphism
//!   testing, line graphs and Whitney lifts, bipartiteness, and vertex
//!   connectivity by max-flow.
//! - [`tgraph`] — transposition sets, the connectivity criterion for
//!   generating `S_n`, named families, and exhaustive enumeration of small
//!   connected transposition graphs up to isomorphism.
//! - [`cayley`] — materialized Cayley graphs, conjugation isomorphisms, the
//!   group automorphisms fixing `S` setwise, and the stabilizer
//!   decomposition `G_e = L_e ⋊ Aut(S_n, S)`.
//! - [`verify`] — the claim harness: every equivalence is run both through
//!   its cheap `T(S)`-side path and through a brute-force computation on the
//!   `n!`-vertex graph, and the two answers are compared in a replayable
//!   report.

pub mod capacity;
pub mod cayley;
mod error;
pub mod graph;
pub mod perm;
pub mod tgraph;
pub mod verify;

pub use error::{Error, Result};
