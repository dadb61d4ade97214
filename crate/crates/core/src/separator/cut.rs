//! Recursive ℓ-edge cut of a tree decomposition.
//!
//! Given a tree decomposition of max degree 3 with bags of size at most `b`
//! and `n ≥ (3ℓ+1) b`, [`td_separator`] removes `ℓ` tree edges so that every
//! component `Q` of the remaining forest satisfies
//! `(2ℓ+1)·|G[Q]| ≥ n − ℓb`, where `G[Q]` holds the vertices that appear in
//! bags of `Q` only.
//!
//! Each round orients every tree edge `x→y` whose `x`-side is too light,
//! collects the forest `J` of sinks joined by unoriented edges, cuts the edge
//! at the smallest-id leaf of `J` and continues on the far side with the
//! shared vertices removed from every bag.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::decomposition::{validate_td, Multigraph, TdViolation, TreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(TdViolation),
    #[error("bag bound {0} is below 2")]
    BagBoundTooSmall(usize),
    #[error("n = {n} is below (3ℓ+1)·b = {required}")]
    TooFewVertices { n: usize, required: usize },
    /// Both orientations of one tree edge: impossible for a valid input.
    #[error("internal: tree edge {edge} is oriented both ways")]
    OrientedBothWays { edge: usize },
    /// No unoriented edge at any sink: impossible for a valid input.
    #[error("internal: sink forest has no edges")]
    EmptySinkForest,
}

/// One component of `T − R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Tree nodes, increasing.
    pub nodes: Vec<usize>,
    /// `G[Q]`, increasing.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    /// Indices into the tree's edge list, in the order they were cut.
    pub cut: Vec<usize>,
    /// Components sorted by smallest node.
    pub components: Vec<Component>,
    /// `n − ℓb`.
    pub threshold_num: i64,
    /// `2ℓ + 1`.
    pub threshold_den: u64,
}

impl CutResult {
    pub fn meets_bound(&self, component: &Component) -> bool {
        self.threshold_den as i128 * component.vertices.len() as i128 >= self.threshold_num as i128
    }

    pub fn all_meet_bound(&self) -> bool {
        self.components.iter().all(|c| self.meets_bound(c))
    }
}

pub fn td_separator(
    graph: &Multigraph,
    td: &TreeDecomposition,
    ell: usize,
) -> Result<CutResult, CutError> {
    if let Some(v) = validate_td(graph, td).violation {
        return Err(CutError::InvalidDecomposition(v));
    }
    let n = graph.n;
    let b = td.bag_bound;
    if ell > 0 {
        if b < 2 {
            return Err(CutError::BagBoundTooSmall(b));
        }
        let required = (3 * ell + 1) * b;
        if n < required {
            return Err(CutError::TooFewVertices { n, required });
        }
    }

    let tree = &td.tree;
    let adj = tree.adjacency();
    let mut active = vec![true; tree.nodes];
    let mut bags: Vec<Vec<usize>> = td.bags.clone();
    let mut cut = Vec::with_capacity(ell);

    for budget in (1..=ell).rev() {
        let (x, y, edge) = choose_cut(&adj, &active, &bags, b, budget)?;
        cut.push(edge);
        let shared = intersect(&bags[x], &bags[y]);
        let far = side_of(&adj, &active, y, edge);
        active.copy_from_slice(&far);
        for z in (0..tree.nodes).filter(|&z| active[z]) {
            bags[z].retain(|v| shared.binary_search(v).is_err());
        }
    }

    Ok(CutResult {
        components: components(td, graph.n, &cut),
        cut,
        threshold_num: n as i64 - (ell * b) as i64,
        threshold_den: 2 * ell as u64 + 1,
    })
}

/// One round on the active subtree with the current bags and budget `ell`.
/// Returns `(x, y, edge)` where `x` is the chosen leaf of `J`.
fn choose_cut(
    adj: &[Vec<(usize, usize)>],
    active: &[bool],
    bags: &[Vec<usize>],
    b: usize,
    ell: usize,
) -> Result<(usize, usize, usize), CutError> {
    let nodes = adj.len();
    let root = (0..nodes).find(|&z| active[z]).expect("active subtree is nonempty");

    // BFS order and parents within the active subtree.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; nodes];
    let mut order = Vec::new();
    let mut seen = vec![false; nodes];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(z) = queue.pop_front() {
        order.push(z);
        for &(w, e) in &adj[z] {
            if active[w] && !seen[w] {
                seen[w] = true;
                parent[w] = Some((z, e));
                queue.push_back(w);
            }
        }
    }

    // Each vertex is counted at the topmost node holding it; a subtree sum
    // of these counts is then |G(child, parent)|.
    let mut counted = BTreeSet::new();
    let mut sub = vec![0usize; nodes];
    for &z in &order {
        for &v in &bags[z] {
            if counted.insert(v) {
                sub[z] += 1;
            }
        }
    }
    let n = counted.len();
    for &z in order.iter().rev() {
        if let Some((p, _)) = parent[z] {
            sub[p] += sub[z];
        }
    }

    let rhs = n as i128 - (ell * b) as i128;
    let den = 2 * ell as i128 + 1;
    let light = |size: usize| den * (size as i128) < rhs;

    // out[z]: some edge at z is oriented away from z.
    let mut out = vec![false; nodes];
    let mut unoriented = Vec::new();
    for &c in &order[1..] {
        let (p, e) = parent[c].unwrap();
        let g_cp = sub[c];
        let g_pc = n - sub[c] - intersect(&bags[p], &bags[c]).len();
        let (c_to_p, p_to_c) = (light(g_cp), light(g_pc));
        match (c_to_p, p_to_c) {
            (true, true) => return Err(CutError::OrientedBothWays { edge: e }),
            (true, false) => out[c] = true,
            (false, true) => out[p] = true,
            (false, false) => unoriented.push((p, c, e)),
        }
    }

    let mut j_degree = vec![0usize; nodes];
    let mut j_edges = Vec::new();
    for &(p, c, e) in &unoriented {
        if !out[p] || !out[c] {
            j_degree[p] += 1;
            j_degree[c] += 1;
            j_edges.push((p, c, e));
        }
    }
    if j_edges.is_empty() {
        return Err(CutError::EmptySinkForest);
    }
    let x = (0..nodes)
        .find(|&z| active[z] && j_degree[z] == 1)
        .expect("a nonempty forest has a leaf");
    let &(p, c, e) = j_edges
        .iter()
        .find(|&&(p, c, _)| p == x || c == x)
        .unwrap();
    let y = if p == x { c } else { p };
    Ok((x, y, e))
}

/// Active nodes on `start`'s side of tree edge `edge`.
fn side_of(adj: &[Vec<(usize, usize)>], active: &[bool], start: usize, edge: usize) -> Vec<bool> {
    let mut side = vec![false; adj.len()];
    side[start] = true;
    let mut stack = vec![start];
    while let Some(z) = stack.pop() {
        for &(w, e) in &adj[z] {
            if e != edge && active[w] && !side[w] {
                side[w] = true;
                stack.push(w);
            }
        }
    }
    side
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|v| b.binary_search(v).is_ok()).copied().collect()
}

/// Components of `T − cut` with their `G[Q]` in the original decomposition.
fn components(td: &TreeDecomposition, n: usize, cut: &[usize]) -> Vec<Component> {
    let tree = &td.tree;
    let adj = tree.adjacency();
    let mut label = vec![usize::MAX; tree.nodes];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..tree.nodes {
        if label[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut nodes = vec![s];
        label[s] = id;
        let mut stack = vec![s];
        while let Some(z) = stack.pop() {
            for &(w, e) in &adj[z] {
                if !cut.contains(&e) && label[w] == usize::MAX {
                    label[w] = id;
                    nodes.push(w);
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        comps.push(nodes);
    }
    // Component of each vertex, or None once it is seen in two components.
    let mut owner: Vec<Option<Option<usize>>> = vec![None; n];
    for (z, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            owner[v] = match owner[v] {
                None => Some(Some(label[z])),
                Some(Some(c)) if c == label[z] => Some(Some(c)),
                _ => Some(None),
            };
        }
    }
    let mut vertices = vec![Vec::new(); comps.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(Some(c)) = o {
            vertices[*c].push(v);
        }
    }
    comps
        .into_iter()
        .zip(vertices)
        .map(|(nodes, vertices)| Component { nodes, vertices })
        .collect()
}
