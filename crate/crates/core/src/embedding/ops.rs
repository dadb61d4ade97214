use super::{Dart, Edge, EmbeddedMultigraph, EmbeddingError};

/// An embedding restricted to a subset of edges, with id maps back to the
/// parent. Edge endpoint order and signs are kept, so a parent flag
/// `(2e + end, side)` on a kept edge corresponds to the child flag with the
/// same end and side.
#[derive(Debug, Clone)]
pub struct SubEmbedding {
    pub graph: EmbeddedMultigraph,
    /// Child vertex -> parent vertex.
    pub vertex_to_parent: Vec<usize>,
    /// Parent vertex -> child vertex, if the vertex survived.
    pub vertex_from_parent: Vec<Option<usize>>,
    /// Child edge -> parent edge.
    pub edge_to_parent: Vec<usize>,
    /// Parent edge -> child edge, if kept.
    pub edge_from_parent: Vec<Option<usize>>,
}

impl SubEmbedding {
    pub fn dart_to_parent(&self, d: Dart) -> Dart {
        Dart::new(self.edge_to_parent[d.edge()], d.end())
    }

    pub fn dart_from_parent(&self, d: Dart) -> Option<Dart> {
        self.edge_from_parent[d.edge()].map(|e| Dart::new(e, d.end()))
    }
}

/// Result of contracting one edge.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: EmbeddedMultigraph,
    /// Old vertex -> new vertex; both endpoints map to the merged vertex.
    pub vertex_map: Vec<usize>,
    /// Old edge -> new edge; the contracted edge maps to `None`.
    pub edge_map: Vec<Option<usize>>,
}

impl EmbeddedMultigraph {
    /// Restricts the rotation system to `keep` edges. Vertices left without
    /// edges are dropped; survivors keep their relative order.
    pub fn induced_subembedding(&self, keep: &[usize]) -> Result<SubEmbedding, EmbeddingError> {
        let m = self.edges.len();
        let mut kept = vec![false; m];
        for &e in keep {
            if e >= m {
                return Err(EmbeddingError::EdgeOutOfRange(e));
            }
            kept[e] = true;
        }
        let mut edge_from_parent = vec![None; m];
        let mut edge_to_parent = Vec::new();
        for e in (0..m).filter(|&e| kept[e]) {
            edge_from_parent[e] = Some(edge_to_parent.len());
            edge_to_parent.push(e);
        }
        let mut vertex_from_parent = vec![None; self.n];
        let mut vertex_to_parent = Vec::new();
        for v in 0..self.n {
            if self.rotation[v].iter().any(|d| kept[d.edge()]) {
                vertex_from_parent[v] = Some(vertex_to_parent.len());
                vertex_to_parent.push(v);
            }
        }
        let edges = edge_to_parent
            .iter()
            .map(|&e| {
                let old = self.edges[e];
                Edge::new(
                    vertex_from_parent[old.u].unwrap(),
                    vertex_from_parent[old.v].unwrap(),
                    old.sign,
                )
            })
            .collect();
        let rotation = vertex_to_parent
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter_map(|d| edge_from_parent[d.edge()].map(|e| Dart::new(e, d.end())))
                    .collect()
            })
            .collect();
        let graph = EmbeddedMultigraph::new(vertex_to_parent.len(), edges, rotation)
            .expect("restriction of a valid rotation system is valid");
        Ok(SubEmbedding {
            graph,
            vertex_to_parent,
            vertex_from_parent,
            edge_to_parent,
            edge_from_parent,
        })
    }

    /// Contracts a non-loop edge, splicing the two rotations at its darts.
    /// The merged vertex takes the smaller id; parallel edges become loops
    /// and no face disappears.
    pub fn contract_edge(&self, e: usize) -> Result<Contraction, EmbeddingError> {
        if e >= self.edges.len() {
            return Err(EmbeddingError::EdgeOutOfRange(e));
        }
        let edge = self.edges[e];
        if edge.is_loop() {
            return Err(EmbeddingError::Loop(e));
        }
        let (keep, gone) = (edge.u.min(edge.v), edge.u.max(edge.v));
        let keep_dart = Dart::new(e, usize::from(edge.u != keep));
        let gone_dart = keep_dart.twin();

        let mut signs: Vec<_> = self.edges.iter().map(|x| x.sign).collect();
        let mut gone_rot: Vec<Dart> = self.rotation[gone].clone();
        if edge.sign == super::Sign::Minus {
            // Flip the local orientation at `gone`; loops there are toggled twice.
            gone_rot.reverse();
            for d in &gone_rot {
                signs[d.edge()] = signs[d.edge()].flipped();
            }
        }

        let after = |rot: &[Dart], d: Dart| -> Vec<Dart> {
            let i = rot.iter().position(|&x| x == d).unwrap();
            (1..rot.len()).map(|k| rot[(i + k) % rot.len()]).collect()
        };
        let mut merged = after(&self.rotation[keep], keep_dart);
        merged.extend(after(&gone_rot, gone_dart));

        let vertex_map: Vec<usize> = (0..self.n)
            .map(|v| match v.cmp(&gone) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => v - 1,
            })
            .collect();
        let edge_map: Vec<Option<usize>> = (0..self.edges.len())
            .map(|x| match x.cmp(&e) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let remap = |d: Dart| Dart::new(edge_map[d.edge()].unwrap(), d.end());

        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != e)
            .map(|(x, old)| Edge::new(vertex_map[old.u], vertex_map[old.v], signs[x]))
            .collect();
        let rotation = (0..self.n)
            .filter(|&v| v != gone)
            .map(|v| {
                let rot = if v == keep { &merged } else { &self.rotation[v] };
                rot.iter().map(|&d| remap(d)).collect()
            })
            .collect();
        let graph = EmbeddedMultigraph::new(self.n - 1, edges, rotation)
            .expect("contraction of a valid rotation system is valid");
        Ok(Contraction {
            graph,
            vertex_map,
            edge_map,
        })
    }
}
