//! Self-contained separator certificates and their independent verification.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embedding::{Dart, EmbeddedMultigraph, Faces, Flag, SubEmbedding};

/// One face of the separator subgraph `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedFace {
    /// Leaving flags `[dart, side]` of the facial walk, in graph dart ids.
    pub walk: Vec<[usize; 2]>,
    /// Vertices certified to lie strictly inside the face.
    pub interior_count: usize,
    /// Same, excluding vertices added by triangulation.
    pub interior_count_original: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub g: usize,
    pub r: usize,
    pub ell: usize,
    pub separator_edges: Vec<usize>,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    pub faces: Vec<CertifiedFace>,
    pub threshold_num: i64,
    pub threshold_den: u64,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// `n − ℓ(3+2g)r − ℓ`, the numerator of the per-face interior bound over
/// `2ℓ+1`.
pub fn interior_threshold(n: usize, g: usize, r: usize, ell: usize) -> i64 {
    n as i64 - (ell * (3 + 2 * g) * r) as i64 - ell as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    Parameters,
    EdgeBound,
    MinDegree,
    FaceCount,
    TwoCell,
    InteriorCount,
}

impl Clause {
    pub const ALL: [Clause; 6] = [
        Clause::Parameters,
        Clause::EdgeBound,
        Clause::MinDegree,
        Clause::FaceCount,
        Clause::TwoCell,
        Clause::InteriorCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Clause::Parameters => "parameters",
            Clause::EdgeBound => "edge-bound",
            Clause::MinDegree => "min-degree",
            Clause::FaceCount => "face-count",
            Clause::TwoCell => "two-cell",
            Clause::InteriorCount => "interior-count",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: Clause,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub clauses: Vec<ClauseResult>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, clause: Clause) -> &ClauseResult {
        self.clauses
            .iter()
            .find(|c| c.clause == clause)
            .expect("every clause is reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseResult> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", c.clause, c.detail)?;
        }
        Ok(())
    }
}

/// The induced embedding of a certificate's separator edges.
#[derive(Debug, Clone)]
pub struct CertificateView {
    pub separator: SubEmbedding,
    pub faces: Faces,
}

impl CertificateView {
    pub fn new(graph: &EmbeddedMultigraph, cert: &Certificate) -> Result<Self, String> {
        let m = graph.edge_count();
        if let Some(&e) = cert.separator_edges.iter().find(|&&e| e >= m) {
            return Err(format!("separator edge {e} out of range"));
        }
        let separator = graph
            .induced_subembedding(&cert.separator_edges)
            .map_err(|e| e.to_string())?;
        let faces = separator.graph.faces();
        Ok(CertificateView { separator, faces })
    }

    /// For each certificate face, the traced face whose flag orbit holds its
    /// whole walk.
    pub fn match_walks(&self, cert: &Certificate) -> Result<Vec<usize>, String> {
        let darts = 2 * self.separator.edge_from_parent.len();
        let mut matched = Vec::with_capacity(cert.faces.len());
        let mut used = vec![false; self.faces.len()];
        for (i, face) in cert.faces.iter().enumerate() {
            let mut owner = None;
            let mut seen = BTreeSet::new();
            for &[dart, side] in &face.walk {
                if side > 1 || dart >= darts {
                    return Err(format!("face {i}: invalid flag [{dart}, {side}]"));
                }
                let child = self
                    .separator
                    .dart_from_parent(Dart(dart))
                    .ok_or_else(|| format!("face {i}: dart {dart} is not on the separator"))?;
                let flag = Flag::new(child, side);
                if !seen.insert(flag) {
                    return Err(format!("face {i}: repeated flag [{dart}, {side}]"));
                }
                let f = self.faces.face_of(flag);
                match owner {
                    None => owner = Some(f),
                    Some(o) if o == f => {}
                    Some(_) => return Err(format!("face {i}: walk spans two faces")),
                }
            }
            let f = owner.ok_or_else(|| format!("face {i}: empty walk"))?;
            if self.faces.walks[f].len() != face.walk.len() {
                return Err(format!(
                    "face {i}: walk has {} steps, traced face has {}",
                    face.walk.len(),
                    self.faces.walks[f].len()
                ));
            }
            if std::mem::replace(&mut used[f], true) {
                return Err(format!("face {i}: traced face {f} listed twice"));
            }
            matched.push(f);
        }
        Ok(matched)
    }

    /// Vertices strictly inside each traced face of the separator: off the
    /// separator, with every incident face of the graph lying in that face.
    pub fn interiors(&self, graph: &EmbeddedMultigraph) -> Vec<Vec<usize>> {
        let gf = graph.faces();
        let in_s: Vec<bool> = (0..graph.edge_count())
            .map(|e| self.separator.edge_from_parent[e].is_some())
            .collect();

        // Regions: graph faces joined across edges off the separator.
        let mut region = vec![usize::MAX; gf.len()];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); gf.len()];
        for e in (0..graph.edge_count()).filter(|&e| !in_s[e]) {
            let (a, b) = gf.faces_of_edge(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut regions = 0;
        for s in 0..gf.len() {
            if region[s] != usize::MAX {
                continue;
            }
            region[s] = regions;
            let mut queue = VecDeque::from([s]);
            while let Some(f) = queue.pop_front() {
                for &h in &adj[f] {
                    if region[h] == usize::MAX {
                        region[h] = regions;
                        queue.push_back(h);
                    }
                }
            }
            regions += 1;
        }

        // Region -> separator face, read off the flags of separator edges.
        let mut sep_face: Vec<Option<usize>> = vec![None; regions];
        for (child, &parent) in self.separator.edge_to_parent.iter().enumerate() {
            for side in 0..2 {
                let pf = Flag::new(Dart::new(parent, 0), side);
                let cf = Flag::new(Dart::new(child, 0), side);
                sep_face[region[gf.face_of(pf)]] = Some(self.faces.face_of(cf));
            }
        }

        let mut out = vec![Vec::new(); self.faces.len()];
        for v in 0..graph.vertex_count() {
            if self.separator.vertex_from_parent[v].is_some() {
                continue;
            }
            let mut around = graph.rotation(v).iter().flat_map(|&d| {
                [0, 1].map(|side| sep_face[region[gf.face_of(Flag::new(d, side))]])
            });
            let Some(Some(first)) = around.next() else {
                continue;
            };
            if around.all(|f| f == Some(first)) {
                out[first].push(v);
            }
        }
        out
    }
}

/// Re-checks every clause of a certificate against the graph alone.
pub fn verify_certificate(graph: &EmbeddedMultigraph, cert: &Certificate) -> CertificateReport {
    let mut clauses = Vec::new();
    let mut push = |clause: Clause, result: Result<String, String>| {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        clauses.push(ClauseResult {
            clause,
            passed,
            detail,
        });
    };

    push(Clause::Parameters, check_parameters(graph, cert));
    push(Clause::EdgeBound, check_edges(graph, cert));

    let view = CertificateView::new(graph, cert);
    match &view {
        Ok(view) => {
            let matched = view.match_walks(cert);
            push(Clause::MinDegree, check_min_degree(&view.separator.graph));
            push(Clause::FaceCount, check_face_count(view, &matched, cert));
            push(Clause::TwoCell, check_two_cell(&view.separator.graph, cert));
            push(Clause::InteriorCount, check_interiors(graph, view, &matched, cert));
        }
        Err(e) => {
            for clause in [
                Clause::MinDegree,
                Clause::FaceCount,
                Clause::TwoCell,
                Clause::InteriorCount,
            ] {
                push(clause, Err(format!("separator unreadable: {e}")));
            }
        }
    }
    CertificateReport { clauses }
}

fn check_parameters(graph: &EmbeddedMultigraph, cert: &Certificate) -> Result<String, String> {
    if cert.n != graph.vertex_count() {
        return Err(format!("n = {} but the graph has {}", cert.n, graph.vertex_count()));
    }
    if cert.ell == 0 {
        return Err("ℓ = 0".into());
    }
    let g = graph.euler_genus().map_err(|e| e.to_string())?;
    if cert.g != g {
        return Err(format!("g = {} but the embedding has Euler genus {g}", cert.g));
    }
    let m = graph.metrics().map_err(|e| e.to_string())?;
    if cert.r < m.radius || cert.r > m.diameter {
        return Err(format!(
            "r = {} outside [radius, diameter] = [{}, {}]",
            cert.r, m.radius, m.diameter
        ));
    }
    Ok(format!("n = {}, g = {g}, r = {}, ℓ = {}", cert.n, cert.r, cert.ell))
}

fn check_edges(graph: &EmbeddedMultigraph, cert: &Certificate) -> Result<String, String> {
    let m = graph.edge_count();
    let s: BTreeSet<usize> = cert.separator_edges.iter().copied().collect();
    if s.len() != cert.separator_edges.len() {
        return Err("separator edges repeat".into());
    }
    for (name, list) in [("S", &cert.separator_edges), ("X", &cert.x), ("L", &cert.l)] {
        if let Some(e) = list.iter().find(|&&e| e >= m) {
            return Err(format!("{name} edge {e} out of range"));
        }
    }
    if let Some(e) = cert.x.iter().chain(&cert.l).find(|e| !s.contains(e)) {
        return Err(format!("edge {e} of X ∪ L is not in S"));
    }
    if cert.x.len() != cert.g {
        return Err(format!("|X| = {} ≠ g = {}", cert.x.len(), cert.g));
    }
    if cert.l.len() != cert.ell {
        return Err(format!("|L| = {} ≠ ℓ = {}", cert.l.len(), cert.ell));
    }
    let bound = (2 * cert.r + 1) * (cert.g + cert.ell);
    if s.len() > bound {
        return Err(format!("|E(S)| = {} > (2r+1)(g+ℓ) = {bound}", s.len()));
    }
    Ok(format!("|E(S)| = {} ≤ {bound}", s.len()))
}

fn check_min_degree(sep: &EmbeddedMultigraph) -> Result<String, String> {
    if sep.vertex_count() == 0 {
        return Err("S is empty".into());
    }
    if !sep.is_connected() {
        return Err("S is disconnected".into());
    }
    let min = (0..sep.vertex_count()).map(|v| sep.degree(v)).min().unwrap();
    if min < 2 {
        return Err(format!("S has a vertex of degree {min}"));
    }
    Ok(format!("connected, min degree {min}"))
}

fn check_face_count(
    view: &CertificateView,
    matched: &Result<Vec<usize>, String>,
    cert: &Certificate,
) -> Result<String, String> {
    let traced = view.faces.len();
    if traced != cert.ell + 1 {
        return Err(format!("S has {traced} faces, expected ℓ+1 = {}", cert.ell + 1));
    }
    if cert.faces.len() != traced {
        return Err(format!(
            "certificate lists {} faces, S has {traced}",
            cert.faces.len()
        ));
    }
    matched.as_ref().map_err(Clone::clone)?;
    Ok(format!("{traced} faces, all walks matched"))
}

fn check_two_cell(sep: &EmbeddedMultigraph, cert: &Certificate) -> Result<String, String> {
    let genus = sep.euler_genus().map_err(|e| e.to_string())?;
    if genus != cert.g {
        return Err(format!("V − E + F gives genus {genus}, ambient is {}", cert.g));
    }
    Ok(format!("Euler genus {genus}"))
}

fn check_interiors(
    graph: &EmbeddedMultigraph,
    view: &CertificateView,
    matched: &Result<Vec<usize>, String>,
    cert: &Certificate,
) -> Result<String, String> {
    let matched = matched
        .as_ref()
        .map_err(|e| format!("faces unmatched: {e}"))?;
    let num = interior_threshold(cert.n, cert.g, cert.r, cert.ell);
    let den = 2 * cert.ell as u64 + 1;
    if cert.threshold_num != num || cert.threshold_den != den {
        return Err(format!(
            "threshold {}/{} recomputes as {num}/{den}",
            cert.threshold_num, cert.threshold_den
        ));
    }
    let geometric = view.interiors(graph);
    for (i, face) in cert.faces.iter().enumerate() {
        let geo = geometric[matched[i]].len();
        if face.interior_count > geo {
            return Err(format!(
                "face {i}: certified {} interior vertices, found {geo}",
                face.interior_count
            ));
        }
        if face.interior_count_original > face.interior_count {
            return Err(format!("face {i}: original count exceeds total"));
        }
        if (den as i128) * (face.interior_count as i128) < num as i128 {
            return Err(format!(
                "face {i}: {} interior vertices below {num}/{den}",
                face.interior_count
            ));
        }
    }
    let min = cert.faces.iter().map(|f| f.interior_count).min().unwrap_or(0);
    Ok(format!("min interior {min} ≥ {num}/{den}"))
}
