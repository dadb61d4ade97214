//! Simplified configuration: contract edges at degree-2 vertices until every
//! vertex has degree at least 3. Loops are never contracted, so a facial walk
//! may shrink to a loop but never disappears.

use thiserror::Error;

use crate::embedding::{EmbeddedMultigraph, EmbeddingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplifyError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("vertex {vertex} has degree {degree} < 2")]
    LowDegree { vertex: usize, degree: usize },
    #[error("no vertex of degree at least 3 (the graph is a cycle)")]
    NoBranchVertex,
}

/// Which eligible edge to contract next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ContractionOrder {
    #[default]
    SmallestEdgeFirst,
    LargestEdgeFirst,
}

#[derive(Debug, Clone)]
pub struct SimplifiedConfiguration {
    pub h: EmbeddedMultigraph,
    /// Vertex of the input that each vertex of `h` stands for.
    pub branch_map: Vec<usize>,
}

/// Order-independent shape of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigInvariants {
    pub vertices: usize,
    pub edges: usize,
    pub face_lengths: Vec<usize>,
    pub degrees: Vec<usize>,
}

impl SimplifiedConfiguration {
    pub fn invariants(&self) -> ConfigInvariants {
        let mut face_lengths = self.h.faces().lengths();
        face_lengths.sort_unstable();
        let mut degrees: Vec<usize> = (0..self.h.vertex_count()).map(|v| self.h.degree(v)).collect();
        degrees.sort_unstable();
        ConfigInvariants {
            vertices: self.h.vertex_count(),
            edges: self.h.edge_count(),
            face_lengths,
            degrees,
        }
    }
}

pub fn simplified_configuration(
    s: &EmbeddedMultigraph,
    order: ContractionOrder,
) -> Result<SimplifiedConfiguration, SimplifyError> {
    s.require_connected()?;
    let n = s.vertex_count();
    if let Some(v) = (0..n).find(|&v| s.degree(v) < 2) {
        return Err(SimplifyError::LowDegree {
            vertex: v,
            degree: s.degree(v),
        });
    }
    if (0..n).all(|v| s.degree(v) < 3) {
        return Err(SimplifyError::NoBranchVertex);
    }

    let mut h = s.clone();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let eligible = (0..h.edge_count()).filter(|&e| {
            let edge = h.edge(e);
            !edge.is_loop() && (h.degree(edge.u) == 2 || h.degree(edge.v) == 2)
        });
        let next = match order {
            ContractionOrder::SmallestEdgeFirst => eligible.min(),
            ContractionOrder::LargestEdgeFirst => eligible.max(),
        };
        let Some(e) = next else { break };
        let edge = *h.edge(e);
        let survivor = if h.degree(edge.u) >= h.degree(edge.v) { edge.u } else { edge.v };
        let c = h.contract_edge(e)?;
        let mut next_label = vec![0; c.graph.vertex_count()];
        for (old, &new) in c.vertex_map.iter().enumerate() {
            if old != edge.u && old != edge.v {
                next_label[new] = label[old];
            }
        }
        next_label[c.vertex_map[edge.u]] = label[survivor];
        label = next_label;
        h = c.graph;
    }
    Ok(SimplifiedConfiguration { h, branch_map: label })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{Dart, Edge};

    /// Two poles joined by three paths of length 2, drawn in the plane.
    fn theta() -> EmbeddedMultigraph {
        // vertices: 0 and 1 poles, 2..5 midpoints; edge 2i: 0-(2+i), 2i+1: (2+i)-1
        let mut edges = Vec::new();
        for i in 0..3 {
            edges.push(Edge::plus(0, 2 + i));
            edges.push(Edge::plus(2 + i, 1));
        }
        let rotation = vec![
            vec![Dart(0), Dart(4), Dart(8)],
            vec![Dart(11), Dart(7), Dart(3)],
            vec![Dart(1), Dart(2)],
            vec![Dart(5), Dart(6)],
            vec![Dart(9), Dart(10)],
        ];
        EmbeddedMultigraph::new(5, edges, rotation).unwrap()
    }

    #[test]
    fn theta_reduces_to_three_parallel_edges() {
        let s = theta();
        assert_eq!(s.faces().len(), 3);
        for order in [ContractionOrder::SmallestEdgeFirst, ContractionOrder::LargestEdgeFirst] {
            let cfg = simplified_configuration(&s, order).unwrap();
            let inv = cfg.invariants();
            assert_eq!((inv.vertices, inv.edges), (2, 3));
            assert_eq!(inv.face_lengths, vec![2, 2, 2]);
            let mut branch = cfg.branch_map.clone();
            branch.sort_unstable();
            assert_eq!(branch, vec![0, 1]);
        }
    }

    #[test]
    fn cycles_and_pendants_are_rejected() {
        let cycle =
            EmbeddedMultigraph::from_neighbor_rotations(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(
            simplified_configuration(&cycle, ContractionOrder::default()),
            Err(SimplifyError::NoBranchVertex)
        ));
        let path = EmbeddedMultigraph::from_neighbor_rotations(&[vec![1], vec![0]]).unwrap();
        assert!(matches!(
            simplified_configuration(&path, ContractionOrder::default()),
            Err(SimplifyError::LowDegree { vertex: 0, degree: 1 })
        ));
    }

    #[test]
    fn branch_vertices_keep_their_labels() {
        let g = crate::generators::base_surface(crate::generators::Surface::Sphere);
        let cfg = simplified_configuration(&g, ContractionOrder::default()).unwrap();
        assert_eq!(cfg.h, g);
        assert_eq!(cfg.branch_map, vec![0, 1, 2, 3]);
    }
}
