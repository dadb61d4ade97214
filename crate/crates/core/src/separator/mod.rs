//! ℓ-separators of embedded triangulations.
//!
//! [`td_separator`] cuts a tree decomposition into `ℓ+1` heavy pieces.
//! [`separate`] runs the whole pipeline on a triangulation (BFS tree, genus
//! edges, dual tree, face bags, cut) and assembles the separator subgraph
//! `S`: the union over the genus edges and the `ℓ` cut edges `vw` of
//! `T_v ∪ T_w ∪ {vw}`, with pendant paths removed. The result is a
//! [`Certificate`] that [`verify_certificate`] re-checks from the graph alone.

mod certificate;
mod cut;
mod deep;
mod pipeline;
mod simplify;

pub use certificate::{
    interior_threshold, Certificate, CertificateReport, CertificateView, CertifiedFace, Clause,
    ClauseResult,
};
pub use certificate::verify_certificate;
pub use cut::{td_separator, Component, CutError, CutResult};
pub use deep::{deep_vertices, DeepError};
pub use pipeline::{separate, surface_separator, SeparatorConfig, SeparatorError, SeparatorRun};
pub use simplify::{
    simplified_configuration, ConfigInvariants, ContractionOrder, SimplifiedConfiguration,
    SimplifyError,
};
