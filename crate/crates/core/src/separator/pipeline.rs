use std::collections::BTreeSet;

use thiserror::Error;

use super::certificate::{interior_threshold, Certificate, CertifiedFace};
use super::cut::{td_separator, CutError, CutResult};
use crate::decomposition::TreeDecomposition;
use crate::embedding::{Dart, EmbeddedMultigraph, EmbeddingError, Flag, SubEmbedding};
use crate::tree_cotree::{bags, bfs_tree, cotree_extra, dual_tree, BfsTree, DualTree, TreeCotreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    TreeCotree(#[from] TreeCotreeError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error("ℓ must be at least 1")]
    EllZero,
    #[error("input is not a loopless triangulation; run triangulate first")]
    NotTriangulation,
    #[error("n = {n} is below (3ℓ+1)((3+2g)r+1) = {required}")]
    TooFewVertices { n: usize, required: usize },
    #[error("internal: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorConfig {
    pub ell: usize,
    /// BFS root; the first center vertex when unset.
    pub root: Option<usize>,
    /// Vertices added by triangulation, excluded from the original counts.
    pub auxiliary: BTreeSet<usize>,
}

impl SeparatorConfig {
    pub fn new(ell: usize) -> Self {
        SeparatorConfig {
            ell,
            root: None,
            auxiliary: BTreeSet::new(),
        }
    }
}

/// Everything the pipeline produced on the way to the certificate.
#[derive(Debug, Clone)]
pub struct SeparatorRun {
    pub certificate: Certificate,
    pub tree: BfsTree,
    pub dual: DualTree,
    pub decomposition: TreeDecomposition,
    pub cut: CutResult,
    /// Induced embedding of `S`; face `i` of the certificate is traced face
    /// `i` here.
    pub separator: SubEmbedding,
    /// `G[Q]` for the component behind each certificate face.
    pub interiors: Vec<Vec<usize>>,
}

pub fn surface_separator(graph: &EmbeddedMultigraph, ell: usize) -> Result<Certificate, SeparatorError> {
    Ok(separate(graph, &SeparatorConfig::new(ell))?.certificate)
}

pub fn separate(graph: &EmbeddedMultigraph, config: &SeparatorConfig) -> Result<SeparatorRun, SeparatorError> {
    let ell = config.ell;
    if ell == 0 {
        return Err(SeparatorError::EllZero);
    }
    graph.require_connected()?;
    if !graph.is_triangulation() {
        return Err(SeparatorError::NotTriangulation);
    }
    let n = graph.vertex_count();
    let g = graph.euler_genus()?;
    let root = match config.root {
        Some(v) => v,
        None => graph.metrics()?.center,
    };
    let tree = bfs_tree(graph, root)?;
    let r = tree.height();
    let required = (3 * ell + 1) * ((3 + 2 * g) * r + 1);
    if n < required {
        return Err(SeparatorError::TooFewVertices { n, required });
    }

    let x = cotree_extra(graph, &tree);
    if x.len() != g {
        return Err(SeparatorError::Internal(format!("|X| = {} but g = {g}", x.len())));
    }
    let dual = dual_tree(graph, &tree, &x)?;
    let decomposition = bags(graph, &tree, &x, &dual);
    let cut = td_separator(&graph.multigraph(), &decomposition, ell)?;
    let l: Vec<usize> = cut.cut.iter().map(|&i| dual.graph_edge[i]).collect();

    let s = separator_edges(graph, &tree, x.iter().chain(&l).copied());
    let separator = graph.induced_subembedding(&s)?;
    let sep_faces = separator.graph.faces();
    if sep_faces.len() != ell + 1 {
        return Err(SeparatorError::Internal(format!(
            "S has {} faces, expected {}",
            sep_faces.len(),
            ell + 1
        )));
    }
    if separator.graph.euler_genus()? != g {
        return Err(SeparatorError::Internal("S is not 2-cell".into()));
    }

    // Faces of S correspond to components of T* − R: every component's
    // graph faces touch exactly one face of S.
    let gf = graph.faces();
    let mut comp_of_face = vec![usize::MAX; gf.len()];
    for (ci, c) in cut.components.iter().enumerate() {
        for &f in &c.nodes {
            comp_of_face[f] = ci;
        }
    }
    let mut face_of_comp: Vec<Option<usize>> = vec![None; cut.components.len()];
    for (child, &parent) in separator.edge_to_parent.iter().enumerate() {
        for side in 0..2 {
            let comp = comp_of_face[gf.face_of(Flag::new(Dart::new(parent, 0), side))];
            let face = sep_faces.face_of(Flag::new(Dart::new(child, 0), side));
            match face_of_comp[comp] {
                None => face_of_comp[comp] = Some(face),
                Some(f) if f == face => {}
                Some(_) => {
                    return Err(SeparatorError::Internal(format!(
                        "component {comp} meets two faces of S"
                    )))
                }
            }
        }
    }
    let mut comp_of_sep_face = vec![usize::MAX; sep_faces.len()];
    for (comp, face) in face_of_comp.iter().enumerate() {
        let face = face.ok_or_else(|| {
            SeparatorError::Internal(format!("component {comp} touches no face of S"))
        })?;
        if comp_of_sep_face[face] != usize::MAX {
            return Err(SeparatorError::Internal(format!("face {face} of S holds two components")));
        }
        comp_of_sep_face[face] = comp;
    }

    let interiors: Vec<Vec<usize>> = comp_of_sep_face
        .iter()
        .map(|&c| cut.components[c].vertices.clone())
        .collect();
    let faces = sep_faces
        .walks
        .iter()
        .zip(&interiors)
        .map(|(walk, inside)| CertifiedFace {
            walk: walk
                .flags
                .iter()
                .map(|f| [separator.dart_to_parent(f.dart()).0, f.side()])
                .collect(),
            interior_count: inside.len(),
            interior_count_original: inside.iter().filter(|v| !config.auxiliary.contains(v)).count(),
        })
        .collect();

    let certificate = Certificate {
        n,
        g,
        r,
        ell,
        separator_edges: s,
        x,
        l,
        faces,
        threshold_num: interior_threshold(n, g, r, ell),
        threshold_den: 2 * ell as u64 + 1,
    };
    Ok(SeparatorRun {
        certificate,
        tree,
        dual,
        decomposition,
        cut,
        separator,
        interiors,
    })
}

/// `⋃ (T_v ∪ T_w ∪ {vw})` over the given edges, with pendant paths removed.
fn separator_edges(
    graph: &EmbeddedMultigraph,
    tree: &BfsTree,
    edges: impl Iterator<Item = usize>,
) -> Vec<usize> {
    let mut s = BTreeSet::new();
    for e in edges {
        let edge = graph.edge(e);
        s.insert(e);
        s.extend(tree.root_path_edges(edge.u));
        s.extend(tree.root_path_edges(edge.v));
    }

    // The union above carries the tree path from the root down to where the
    // cycles meet; strip it so that S has minimum degree 2.
    let mut degree = vec![0usize; graph.vertex_count()];
    for &e in &s {
        let edge = graph.edge(e);
        degree[edge.u] += 1;
        degree[edge.v] += 1;
    }
    let mut stack: Vec<usize> = (0..degree.len()).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if degree[v] != 1 {
            continue;
        }
        let e = graph
            .rotation(v)
            .iter()
            .map(|d| d.edge())
            .find(|e| s.contains(e))
            .expect("degree-1 vertex has an edge in S");
        s.remove(&e);
        let edge = graph.edge(e);
        let w = if edge.u == v { edge.v } else { edge.u };
        degree[v] = 0;
        degree[w] -= 1;
        if degree[w] == 1 {
            stack.push(w);
        }
    }
    s.into_iter().collect()
}
