//! VC-dimension of graphs with respect to k-connected subgraphs.
//!
//! Given a graph `G` and the family of its k-connected subgraphs, a vertex
//! set `A` is shattered when every subset of `A` appears as the intersection
//! of `A` with the vertex set of a family member. This crate computes the
//! resulting VC-dimension exactly, evaluates the leaf-count and density
//! bounds that sandwich it, and builds the two gadget reductions that make
//! the decision problem NP-complete — with brute-force oracles to
//! cross-validate all of it at small scale.
//!
//! The pieces:
//!
//! - [`graph`]: simple graphs, vertex connectivity (Menger-style flows),
//!   blocks, k-cores, twins, exact planarity, DIMACS/JSON IO.
//! - [`vc`]: trace realizability, the polynomial shattering check, a
//!   brute-force oracle, and exact VC search with symmetry pruning.
//! - [`bounds`]: maximum-leaf spanning trees (exact and greedy) and the
//!   closed-form upper/lower bounds.
//! - [`sat`]: 1-in-3 satisfiability, rectilinear layouts, and the
//!   inconsistent-pair elimination that makes instances monotone.
//! - [`reduce`]: the set-multicover and planar gadget constructions with
//!   witness encoders, decoders and verification harnesses.
//! - [`corpus`]: seeded random graph generators for sweeps.
//!
//! ```
//! use kvc::graph::Graph;
//! use kvc::vc::vc_dimension;
//!
//! let result = vc_dimension(&Graph::complete(5), 2).unwrap();
//! assert_eq!(result.dimension, 3);
//! ```

pub mod bounds;
pub mod corpus;
pub mod graph;
pub mod reduce;
pub mod sat;
pub mod vc;

pub use graph::{Graph, VertexSet};
