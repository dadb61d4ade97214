//! Tree decompositions and their validation.

use std::collections::BTreeSet;
use std::fmt;

/// A plain multigraph: vertex count and endpoint pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn edgeless(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }
}

/// An undirected tree on nodes `0..nodes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn path(nodes: usize) -> Self {
        Tree {
            nodes,
            edges: (1..nodes).map(|i| (i - 1, i)).collect(),
        }
    }

    /// Per node: `(neighbour, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.nodes];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        if self.nodes == 0 || self.edges.len() + 1 != self.nodes {
            return false;
        }
        if self.edges.iter().any(|&(a, b)| a >= self.nodes || b >= self.nodes) {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.nodes
    }
}

/// A tree with one vertex set (bag) per node. Bags are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: Tree,
    pub bags: Vec<Vec<usize>>,
    pub bag_bound: usize,
}

impl TreeDecomposition {
    pub fn new(tree: Tree, bags: Vec<BTreeSet<usize>>, bag_bound: usize) -> Self {
        TreeDecomposition {
            tree,
            bags: bags.into_iter().map(|b| b.into_iter().collect()).collect(),
            bag_bound,
        }
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NotATree,
    BagCount { nodes: usize, bags: usize },
    /// Axiom 1: some vertex is in no bag (or a bag names a non-vertex).
    Uncovered { vertex: usize },
    ForeignVertex { node: usize, vertex: usize },
    /// Axiom 2: no bag holds both ends of an edge.
    EdgeNotCovered { edge: usize, u: usize, v: usize },
    /// Axiom 3: the nodes holding a vertex are not connected.
    Disconnected { vertex: usize },
    DegreeTooLarge { node: usize, degree: usize },
    BagTooLarge { node: usize, size: usize, bound: usize },
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NotATree => write!(f, "the decomposition graph is not a tree"),
            TdViolation::BagCount { nodes, bags } => {
                write!(f, "{bags} bags for {nodes} tree nodes")
            }
            TdViolation::Uncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            TdViolation::ForeignVertex { node, vertex } => {
                write!(f, "bag {node} contains non-vertex {vertex}")
            }
            TdViolation::EdgeNotCovered { edge, u, v } => {
                write!(f, "no bag contains both ends of edge {edge} ({u}, {v})")
            }
            TdViolation::Disconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} do not form a subtree")
            }
            TdViolation::DegreeTooLarge { node, degree } => {
                write!(f, "tree node {node} has degree {degree} > 3")
            }
            TdViolation::BagTooLarge { node, size, bound } => {
                write!(f, "bag {node} has {size} vertices, bound is {bound}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdReport {
    pub violation: Option<TdViolation>,
}

impl TdReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the three tree-decomposition axioms, then the degree-3 and bag-size
/// bounds. Reports the first violation found.
pub fn validate_td(graph: &Multigraph, td: &TreeDecomposition) -> TdReport {
    TdReport {
        violation: first_violation(graph, td),
    }
}

fn first_violation(graph: &Multigraph, td: &TreeDecomposition) -> Option<TdViolation> {
    let tree = &td.tree;
    if !tree.is_tree() {
        return Some(TdViolation::NotATree);
    }
    if td.bags.len() != tree.nodes {
        return Some(TdViolation::BagCount {
            nodes: tree.nodes,
            bags: td.bags.len(),
        });
    }
    // Nodes holding each vertex, in increasing order.
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); graph.n];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= graph.n {
                return Some(TdViolation::ForeignVertex { node, vertex: v });
            }
            holders[v].push(node);
        }
    }
    if let Some(vertex) = holders.iter().position(Vec::is_empty) {
        return Some(TdViolation::Uncovered { vertex });
    }

    for (edge, &(u, v)) in graph.edges.iter().enumerate() {
        if !sorted_intersect(&holders[u], &holders[v]) {
            return Some(TdViolation::EdgeNotCovered { edge, u, v });
        }
    }

    let sets: Vec<BTreeSet<usize>> = td.bags.iter().map(|b| b.iter().copied().collect()).collect();

    // In a tree, a node set induces a connected subgraph iff it spans
    // exactly one fewer tree edge than it has nodes.
    let mut spanned = vec![0usize; graph.n];
    for &(a, b) in &tree.edges {
        for v in sets[a].intersection(&sets[b]) {
            spanned[*v] += 1;
        }
    }
    if let Some(vertex) = (0..graph.n).find(|&v| spanned[v] + 1 != holders[v].len()) {
        return Some(TdViolation::Disconnected { vertex });
    }

    let mut degree = vec![0usize; tree.nodes];
    for &(a, b) in &tree.edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    if let Some(node) = degree.iter().position(|&d| d > 3) {
        return Some(TdViolation::DegreeTooLarge {
            node,
            degree: degree[node],
        });
    }
    if let Some(node) = td.bags.iter().position(|b| b.len() > td.bag_bound) {
        return Some(TdViolation::BagTooLarge {
            node,
            size: td.bags[node].len(),
            bound: td.bag_bound,
        });
    }
    None
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
