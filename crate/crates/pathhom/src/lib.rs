//! Path homology and homotopy for finite digraphs and graphs.
//!
//! The crate computes over finite directed graphs without self-loops:
//!
//! - **Path homology**: chains of allowed paths, the boundary-invariant
//!   complex, Betti numbers over the rationals and invariant factors over the
//!   integers, generator extraction, and the structural decomposition of
//!   two-dimensional cycles ([`homology`]).
//! - **Homotopy**: one-step homotopies of digraph maps, exhaustive and
//!   budgeted homotopy search, deformation retractions and contractibility
//!   reductions, and the chain-homotopy identity behind homotopy invariance
//!   ([`homotopy`]).
//! - **Loop calculus**: based loops as vertex words, the five local word
//!   moves with bounded equivalence search, the signed-edge map into first
//!   homology, and connected components ([`loops`]).
//! - **Undirected graphs**: the double-digraph translation and graph
//!   homology/homotopy on top of it ([`graphs`]).
//! - **Sperner colorings**: the orientation of a colored triangulation,
//!   tricolor-triangle search, and the digraph-map certificates behind it
//!   ([`sperner`]).
//!
//! All arithmetic in the chain pipeline is exact (arbitrary-precision
//! rationals or integers). Every value is immutable after construction and
//! every operation is a pure function, so sharing across threads is safe.
//!
//! The `examples/` directory holds one runnable walk-through per capability;
//! the `pathhom` binary exposes the same operations over `.dg` files.

pub mod chains;
pub mod digraph;
mod exact;
pub mod homology;
pub mod homotopy;
pub mod loops;

pub use chains::{Chain, ChainQ, ChainZ, CoefficientRing, VertexPath};
pub use digraph::{
    cartesian_product, cube_digraph, cycle_digraph, cyclic_cycle, cylinder, interval,
    line_digraph, map_cylinder, simplex_digraph, Digraph, DigraphMap,
};
pub use homology::{homology, HomologyResult, OmegaComplex};
