//! Analysis of locally ideal connectivity in small undirected graphs.
//!
//! The crate is built around one question: for which vertex pairs does the
//! number of internally disjoint paths between them reach the trivial upper
//! bound `min{deg(u), deg(v)}`, and for which graphs does it reach that bound
//! for *every* pair?  Graphs with the latter property are called *ideally
//! connected* here.
//!
//! The modules:
//!
//! - [`graph`] — the adjacency-set graph type, construction operators
//!   (union, join, complement, induced subgraphs) and the graph6 / edge-list /
//!   DOT text encodings.
//! - [`connectivity`] — the ground-truth oracle: pairwise local connectivity
//!   via vertex-capacitated max-flow, disjoint-path extraction, global and
//!   average connectivity, and fault-tolerant (`m`-fault) sweeps.
//! - [`recognizers`] — certificate-producing recognition of cographs, chordal
//!   graphs, split graphs and threshold graphs.
//! - [`theorems`] — fast ideal-connectedness deciders for cographs (2K2-free
//!   test) and chordal graphs (threshold test), plus the short path
//!   constructions those characterizations make possible.
//! - [`decomposition`] — clique-cut discovery, decomposition into
//!   cut-subgraphs, and structural condition checks that characterize ideal
//!   connectivity in the presence of a clique cut.
//! - [`cliquetree`] — maximal cliques of chordal graphs, clique-tree
//!   construction and verification, and clique-tree universality.
//! - [`generators`] — deterministic fixtures, seeded random generators per
//!   graph class, and exhaustive small-graph enumeration.
//!
//! Everything is exact: no floating point, no randomized algorithms.  The
//! intended scale is "desk sized" graphs (tens of vertices); all algorithms
//! favor being obviously correct and certifiable over asymptotic speed.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON and the command-line front
//! end live in the companion `idealconn-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod combin;

pub mod cliquetree;
pub mod connectivity;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod recognizers;
pub mod theorems;

pub use graph::{Graph, VertexSet};
