//! The complete-graph-plus-trees family for odd diameter.
//!
//! Every vertex of an embedded `K_p` becomes the root of a tree of depth
//! `(k−1)/2` whose root has `Δ−p+1` children and whose other internal
//! vertices have `Δ−1` children. Each tree is drawn inside the corner just
//! after its root's smallest dart, so the genus of the clique embedding is
//! kept.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use thiserror::Error;

use crate::bounds::{eq2_lower, min_clique_for_genus, BoundsError};
use crate::embedding::{EmbeddedMultigraph, EmbeddingError};
use crate::generators::{base_surface, Surface};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("k = {0} must be odd and at least 3")]
    BadDiameter(u64),
    #[error("Δ = {delta} is below p = {p}")]
    DegreeBelowClique { delta: u64, p: u64 },
    #[error("no built-in complete graph for Euler genus {0}; supply one")]
    NoBuiltin(u64),
    #[error("the supplied embedding is not a simple complete graph")]
    NotComplete,
    #[error("the supplied K_{p} has Euler genus {found}, not {expected}")]
    GenusMismatch { p: u64, found: u64, expected: u64 },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("internal: construction failed verification:\n{0}")]
    VerificationFailed(String),
}

/// Clique size of the built-in embedding for genus `g`.
pub fn builtin_clique(g: u64) -> Option<u64> {
    match g {
        0 => Some(4),
        1 => Some(6),
        2 => Some(7),
        _ => None,
    }
}

pub fn builtin_clique_embedding(g: u64) -> Option<EmbeddedMultigraph> {
    let surface = Surface::from_genus(usize::try_from(g).ok()?)?;
    Some(base_surface(surface))
}

/// `p·(1 + (Δ−p+1)((Δ−1)^{(k−1)/2} − 1)/(Δ−2))`, the exact order for `Δ ≥ 3`.
pub fn construction_order(p: u64, delta: u64, k: u64) -> BigUint {
    let power: BigUint = Pow::pow(BigUint::from(delta - 1), ((k - 1) / 2) as u32);
    let per_tree = BigUint::one() + BigUint::from(delta - p + 1) * (power - 1u32) / (delta - 2);
    BigUint::from(p) * per_tree
}

#[derive(Debug, Clone)]
pub struct ConstructionSpec {
    pub g: u64,
    pub delta: u64,
    pub k: u64,
    /// Embedded complete graph; the built-in one for `g` when unset.
    pub clique: Option<EmbeddedMultigraph>,
}

impl ConstructionSpec {
    pub fn builtin(g: u64, delta: u64, k: u64) -> Self {
        ConstructionSpec {
            g,
            delta,
            k,
            clique: None,
        }
    }
}

fn is_complete(graph: &EmbeddedMultigraph) -> bool {
    let n = graph.vertex_count();
    let mut seen = vec![false; n * n];
    for e in graph.edges() {
        if e.is_loop() {
            return false;
        }
        let (a, b) = (e.u.min(e.v), e.u.max(e.v));
        if std::mem::replace(&mut seen[a * n + b], true) {
            return false;
        }
    }
    graph.edge_count() == n * (n - 1) / 2
}

/// Hangs a tree of depth `(k−1)/2` at every vertex of the embedded complete
/// graph `clique`.
pub fn attach_trees(
    clique: &EmbeddedMultigraph,
    delta: u64,
    k: u64,
) -> Result<EmbeddedMultigraph, ConstructionError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(ConstructionError::BadDiameter(k));
    }
    if !is_complete(clique) {
        return Err(ConstructionError::NotComplete);
    }
    let p = clique.vertex_count() as u64;
    if delta < p {
        return Err(ConstructionError::DegreeBelowClique { delta, p });
    }
    let depth = (k - 1) / 2;
    let mut graph = clique.clone();
    for root in 0..clique.vertex_count() {
        let anchor = *clique.rotation(root).iter().min().expect("p ≥ 2");
        // (vertex, dart at that vertex after which children are placed)
        let mut level = vec![(root, anchor, delta - p + 1)];
        for _ in 0..depth {
            let mut next = Vec::new();
            for &(v, at, children) in &level {
                debug_assert_eq!(graph.origin(at), v);
                for _ in 0..children {
                    let (child, down) = graph.add_pendant_after(at);
                    next.push((child, down.twin(), delta - 1));
                }
            }
            level = next;
        }
    }
    Ok(graph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub order: usize,
    pub max_degree: usize,
    pub diameter: usize,
    pub euler_genus: usize,
    pub lower_bound: BigUint,
    pub degree_ok: bool,
    pub diameter_ok: bool,
    pub genus_ok: bool,
    pub order_ok: bool,
}

impl ConstructionReport {
    pub fn passed(&self) -> bool {
        self.degree_ok && self.diameter_ok && self.genus_ok && self.order_ok
    }
}

impl std::fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        writeln!(f, "{} max degree {}", mark(self.degree_ok), self.max_degree)?;
        writeln!(f, "{} diameter {}", mark(self.diameter_ok), self.diameter)?;
        writeln!(f, "{} Euler genus {}", mark(self.genus_ok), self.euler_genus)?;
        writeln!(
            f,
            "{} order {} ≥ {}",
            mark(self.order_ok),
            self.order,
            self.lower_bound
        )
    }
}

/// Independent check of degree, diameter (all-pairs BFS), genus and order
/// against `p(Δ−p+1)(Δ−1)^{(k−3)/2}`.
pub fn verify_construction(
    graph: &EmbeddedMultigraph,
    delta: u64,
    k: u64,
    g: u64,
    p: u64,
) -> Result<ConstructionReport, ConstructionError> {
    let metrics = graph.metrics()?;
    let euler_genus = graph.euler_genus()?;
    let lower_bound = eq2_lower(g, delta, k, p)?;
    let order = graph.vertex_count();
    Ok(ConstructionReport {
        order,
        max_degree: metrics.max_degree,
        diameter: metrics.diameter,
        euler_genus,
        degree_ok: metrics.max_degree as u64 == delta,
        diameter_ok: metrics.diameter as u64 == k,
        genus_ok: euler_genus as u64 <= g,
        order_ok: BigUint::from(order) >= lower_bound,
        lower_bound,
    })
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: EmbeddedMultigraph,
    pub p: u64,
    pub report: ConstructionReport,
}

pub fn construct_lower_bound(spec: &ConstructionSpec) -> Result<Construction, ConstructionError> {
    let clique = match &spec.clique {
        Some(c) => c.clone(),
        None => builtin_clique_embedding(spec.g).ok_or(ConstructionError::NoBuiltin(spec.g))?,
    };
    if !is_complete(&clique) {
        return Err(ConstructionError::NotComplete);
    }
    let p = clique.vertex_count() as u64;
    let found = clique.euler_genus()? as u64;
    if found != spec.g {
        return Err(ConstructionError::GenusMismatch {
            p,
            found,
            expected: spec.g,
        });
    }
    let min = min_clique_for_genus(spec.g);
    if p < min {
        return Err(BoundsError::PTooSmallForGenus { p, g: spec.g, min }.into());
    }
    let graph = attach_trees(&clique, spec.delta, spec.k)?;
    let report = verify_construction(&graph, spec.delta, spec.k, spec.g, p)?;
    if !report.passed() {
        return Err(ConstructionError::VerificationFailed(report.to_string()));
    }
    Ok(Construction { graph, p, report })
}
