use thiserror::Error;

use super::certificate::{Certificate, CertificateView};
use crate::embedding::EmbeddedMultigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeepError {
    #[error("face {index} out of range ({faces} faces)")]
    FaceOutOfRange { index: usize, faces: usize },
    #[error("certificate does not match the graph: {0}")]
    InvalidCertificate(String),
}

/// Interior vertices of certificate face `face` whose distance in the graph
/// from the face boundary is at least `⌊k/2⌋`, increasing.
pub fn deep_vertices(
    graph: &EmbeddedMultigraph,
    cert: &Certificate,
    face: usize,
    k: usize,
) -> Result<Vec<usize>, DeepError> {
    if face >= cert.faces.len() {
        return Err(DeepError::FaceOutOfRange {
            index: face,
            faces: cert.faces.len(),
        });
    }
    let view = CertificateView::new(graph, cert).map_err(DeepError::InvalidCertificate)?;
    let boundary: Vec<usize> = cert.faces[face]
        .walk
        .iter()
        .map(|&[dart, _]| graph.origin(crate::embedding::Dart(dart)))
        .collect();
    let dist = graph.distances_from(&boundary);
    let matched = view.match_walks(cert).map_err(DeepError::InvalidCertificate)?;
    let interior = view.interiors(graph).swap_remove(matched[face]);
    Ok(interior
        .into_iter()
        .filter(|&v| dist[v].is_some_and(|d| d >= k / 2))
        .collect())
}
