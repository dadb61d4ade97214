//! Separators for multigraphs embedded in surfaces.
//!
//! The crate works on combinatorial embeddings (signed rotation systems) and
//! provides:
//!
//! * [`embedding`]: face tracing, Euler genus, distance metrics,
//!   sub-embeddings, edge contraction and the SEM1 text format;
//! * [`generators`]: built-in surface triangulations, seeded random growth
//!   and triangulation of arbitrary embeddings;
//! * [`tree_cotree`] and [`decomposition`]: BFS tree, genus edges, dual tree
//!   and the face-bag tree decomposition, with an independent validator;
//! * [`separator`]: the recursive ℓ-edge cut of a tree decomposition, the
//!   ℓ-separator pipeline with self-contained JSON certificates, certificate
//!   verification, simplified configurations and deep vertices;
//! * [`bounds`]: exact degree–diameter bound calculators;
//! * [`constructions`]: the complete-graph-plus-trees lower-bound family;
//! * [`cli`]: the `surfsep` command line.
//!
//! All arithmetic is exact and every operation is deterministic.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod decomposition;
pub mod embedding;
pub mod generators;
pub mod separator;
pub mod tree_cotree;

pub use decomposition::{validate_td, Multigraph, TdReport, Tree, TreeDecomposition};
pub use embedding::{Dart, Edge, EmbeddedMultigraph, EmbeddingError, Flag, Sign};
pub use generators::{base_surface, grow_random, triangulate, GrowthSpec, Strategy, Surface};
