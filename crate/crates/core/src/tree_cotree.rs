//! BFS tree, genus edges, dual tree and face bags.
//!
//! For a connected 2-cell embedded multigraph `G` with BFS spanning tree `T`,
//! a spanning tree `C*` of the dual restricted to non-tree edges leaves
//! exactly `g` edges `X` over (`g` the Euler genus), and `T ∪ X` has a
//! single face. On a triangulation the dual tree `C*` has maximum degree 3
//! and, with face bags
//!
//! ```text
//! B_f = V(T_x ∪ T_y ∪ T_z) ∪ ⋃_{pq ∈ X} V(T_p ∪ T_q)     (f = xyz)
//! ```
//!
//! where `T_v` is the root path of `v`, forms a tree decomposition of `G`
//! with bags of at most `(3 + 2g) r + 1` vertices (`r` the tree height).

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::decomposition::{Tree, TreeDecomposition};
use crate::embedding::{EmbeddedMultigraph, EmbeddingError, Faces};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeCotreeError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("dual of the non-tree, non-genus edges has {edges} edges on {faces} faces: not a tree")]
    DualNotTree { faces: usize, edges: usize },
}

/// Breadth-first spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    pub root: usize,
    /// `(parent vertex, tree edge)` for every non-root vertex.
    pub parent: Vec<Option<(usize, usize)>>,
    pub depth: Vec<usize>,
}

impl BfsTree {
    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn tree_edges(&self) -> BTreeSet<usize> {
        self.parent.iter().flatten().map(|&(_, e)| e).collect()
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.parent.iter().flatten().any(|&(_, x)| x == e)
    }

    /// Vertices of the path from `v` up to the root, `v` first.
    pub fn root_path(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some((p, _)) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Edges of the path from `v` up to the root.
    pub fn root_path_edges(&self, v: usize) -> Vec<usize> {
        let mut edges = Vec::new();
        let mut cur = v;
        while let Some((p, e)) = self.parent[cur] {
            edges.push(e);
            cur = p;
        }
        edges
    }
}

/// BFS from `root`; each vertex scans its rotation starting at its smallest
/// dart.
pub fn bfs_tree(graph: &EmbeddedMultigraph, root: usize) -> Result<BfsTree, EmbeddingError> {
    let n = graph.vertex_count();
    if root >= n {
        return Err(EmbeddingError::VertexOutOfRange(root));
    }
    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        let rot = graph.rotation(v);
        let Some(start) = (0..rot.len()).min_by_key(|&i| rot[i]) else {
            continue;
        };
        for k in 0..rot.len() {
            let d = rot[(start + k) % rot.len()];
            let w = graph.head(d);
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some((v, d.edge()));
                queue.push_back(w);
                reached += 1;
            }
        }
    }
    if reached != n {
        return Err(EmbeddingError::Disconnected);
    }
    Ok(BfsTree {
        root,
        parent,
        depth,
    })
}

/// Genus edges `X`: the non-tree edges left over once a dual spanning tree
/// (BFS over faces from face 0, edges in increasing id) is removed.
pub fn cotree_extra(graph: &EmbeddedMultigraph, tree: &BfsTree) -> Vec<usize> {
    let faces = graph.faces();
    let cotree = dual_spanning_edges(graph, &faces, &tree.tree_edges());
    let tree_edges = tree.tree_edges();
    (0..graph.edge_count())
        .filter(|e| !tree_edges.contains(e) && !cotree.contains(e))
        .collect()
}

fn dual_spanning_edges(
    graph: &EmbeddedMultigraph,
    faces: &Faces,
    excluded: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
    for e in (0..graph.edge_count()).filter(|e| !excluded.contains(e)) {
        let (a, b) = faces.faces_of_edge(e);
        if a != b {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
    }
    let mut chosen = BTreeSet::new();
    if faces.is_empty() {
        return chosen;
    }
    let mut seen = vec![false; faces.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for &(h, e) in &adj[f] {
            if !seen[h] {
                seen[h] = true;
                chosen.insert(e);
                queue.push_back(h);
            }
        }
    }
    chosen
}

/// The tree `T*` on faces, joined across edges outside `T ∪ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub tree: Tree,
    /// Graph edge crossed by each tree edge.
    pub graph_edge: Vec<usize>,
}

pub fn dual_tree(
    graph: &EmbeddedMultigraph,
    tree: &BfsTree,
    genus_edges: &[usize],
) -> Result<DualTree, TreeCotreeError> {
    let faces = graph.faces();
    let mut excluded = tree.tree_edges();
    excluded.extend(genus_edges.iter().copied());
    let mut edges = Vec::new();
    let mut graph_edge = Vec::new();
    for e in (0..graph.edge_count()).filter(|e| !excluded.contains(e)) {
        edges.push(faces.faces_of_edge(e));
        graph_edge.push(e);
    }
    let dual = Tree {
        nodes: faces.len(),
        edges,
    };
    if !dual.is_tree() {
        return Err(TreeCotreeError::DualNotTree {
            faces: dual.nodes,
            edges: dual.edges.len(),
        });
    }
    Ok(DualTree {
        tree: dual,
        graph_edge,
    })
}

/// Face bags over the dual tree, with bound `(3 + 2|X|) h + 1` for tree
/// height `h`.
pub fn bags(
    graph: &EmbeddedMultigraph,
    tree: &BfsTree,
    genus_edges: &[usize],
    dual: &DualTree,
) -> TreeDecomposition {
    let faces = graph.faces();
    let mut shared = BTreeSet::new();
    for &e in genus_edges {
        let edge = graph.edge(e);
        shared.extend(tree.root_path(edge.u));
        shared.extend(tree.root_path(edge.v));
    }
    let bags = faces
        .walks
        .iter()
        .map(|walk| {
            let mut bag = shared.clone();
            for v in graph.walk_vertices(walk) {
                bag.extend(tree.root_path(v));
            }
            bag
        })
        .collect();
    let bound = (3 + 2 * genus_edges.len()) * tree.height() + 1;
    TreeDecomposition::new(dual.tree.clone(), bags, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_td;
    use crate::generators::{base_surface, grow_random, GrowthSpec, Surface};

    #[test]
    fn tetrahedron_bfs_depths() {
        let g = base_surface(Surface::Sphere);
        let t = bfs_tree(&g, 0).unwrap();
        assert_eq!(t.depth, vec![0, 1, 1, 1]);
        assert_eq!(t.height(), 1);
    }

    #[test]
    fn k7_bfs_is_a_star() {
        let g = base_surface(Surface::Torus);
        for root in 0..7 {
            let t = bfs_tree(&g, root).unwrap();
            assert!(t.parent.iter().flatten().all(|&(p, _)| p == root));
        }
    }

    #[test]
    fn bfs_depths_match_distances() {
        let g = grow_random(&GrowthSpec::new(Surface::Sphere, 100, 3)).unwrap();
        let m = g.metrics().unwrap();
        let t = bfs_tree(&g, m.center).unwrap();
        assert_eq!(t.height(), m.radius);
        let dist = g.distances_from(&[m.center]);
        for v in 0..100 {
            assert_eq!(Some(t.depth[v]), dist[v]);
        }
    }

    #[test]
    fn genus_edge_counts() {
        for (s, expected) in [(Surface::Sphere, 0), (Surface::Projective, 1), (Surface::Torus, 2)] {
            let g = base_surface(s);
            let t = bfs_tree(&g, 0).unwrap();
            let x = cotree_extra(&g, &t);
            assert_eq!(x.len(), expected, "{s}");
            let mut keep: Vec<usize> = t.tree_edges().into_iter().collect();
            keep.extend(&x);
            let sub = g.induced_subembedding(&keep).unwrap();
            assert_eq!(sub.graph.faces().len(), 1, "{s}");
        }
    }

    #[test]
    fn dual_tree_shapes() {
        let g = base_surface(Surface::Sphere);
        let t = bfs_tree(&g, 0).unwrap();
        let x = cotree_extra(&g, &t);
        let d = dual_tree(&g, &t, &x).unwrap();
        assert_eq!(d.tree.nodes, 4);
        assert_eq!(d.tree.edges.len(), 3);

        let g = base_surface(Surface::Torus);
        let t = bfs_tree(&g, 0).unwrap();
        let x = cotree_extra(&g, &t);
        let d = dual_tree(&g, &t, &x).unwrap();
        assert_eq!(d.tree.nodes, 14);
        assert_eq!(d.tree.edges.len(), 13);
        assert!(d.tree.max_degree() <= 3);
    }

    #[test]
    fn inconsistent_genus_edges_break_the_dual() {
        let g = base_surface(Surface::Torus);
        let t = bfs_tree(&g, 0).unwrap();
        assert!(matches!(
            dual_tree(&g, &t, &[]),
            Err(TreeCotreeError::DualNotTree { faces: 14, edges: 15 })
        ));
    }

    #[test]
    fn tetrahedron_bags() {
        let g = base_surface(Surface::Sphere);
        let t = bfs_tree(&g, 0).unwrap();
        let x = cotree_extra(&g, &t);
        let d = dual_tree(&g, &t, &x).unwrap();
        let td = bags(&g, &t, &x, &d);
        assert_eq!(td.bag_bound, 4);
        let faces = g.faces();
        let opposite = faces
            .walks
            .iter()
            .position(|w| !g.walk_vertices(w).contains(&0))
            .unwrap();
        assert_eq!(td.bags[opposite], vec![0, 1, 2, 3]);
        assert!(validate_td(&g.multigraph(), &td).is_valid());
    }

    #[test]
    fn k7_bags_within_bound() {
        let g = base_surface(Surface::Torus);
        let t = bfs_tree(&g, 0).unwrap();
        let x = cotree_extra(&g, &t);
        let d = dual_tree(&g, &t, &x).unwrap();
        let td = bags(&g, &t, &x, &d);
        assert_eq!(td.bag_bound, 8);
        assert!(td.max_bag() <= 8);
        assert!(validate_td(&g.multigraph(), &td).is_valid());
    }
}
