//! Dart-based multigraphs with signed rotation systems.
//!
//! Every edge `e` owns two darts, `2e` (leaving `u`) and `2e + 1` (leaving
//! `v`). A vertex's rotation lists the darts leaving it in cyclic order; the
//! edge sign records whether the local orientations at its two ends agree
//! (`+`) or disagree (`-`). This describes a 2-cell embedding in an
//! orientable or non-orientable surface, determined up to homeomorphism.
//!
//! Faces are traced on *flags*. A flag is a dart together with one of its two
//! sides: side 0 faces the dart's rotation successor, side 1 its
//! predecessor. Three involutions act on flags:
//!
//! * `corner`: `(d, 0) <-> (succ d, 1)`, turning around a vertex;
//! * `along`: `(d, s) <-> (twin d, s')` with `s' = 1 - s` on `+` edges and
//!   `s' = s` on `-` edges, crossing to the other end of the edge;
//! * side flip `(d, 0) <-> (d, 1)`.
//!
//! Faces are the orbits of the group generated by `along` and `corner`; a
//! face of length `L` is an orbit of `2L` flags.

mod metrics;
mod ops;
pub mod sem1;

pub use metrics::GraphMetrics;
pub use ops::{Contraction, SubEmbedding};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation table has {found} entries but the graph has {n} vertices")]
    RotationCount { n: usize, found: usize },
    #[error("edge {edge} has endpoint {vertex}, outside 0..{n}")]
    EndpointOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("rotation of vertex {vertex} lists unknown dart {dart}")]
    UnknownDart { vertex: usize, dart: usize },
    #[error("dart {dart} appears more than once in the rotation system")]
    DuplicateDart { dart: usize },
    #[error("dart {dart} is missing from the rotation system")]
    MissingDart { dart: usize },
    #[error("dart {dart} is listed at vertex {found} but leaves vertex {expected}")]
    MisplacedDart { dart: usize, expected: usize, found: usize },
    #[error("the graph has no vertices")]
    Empty,
    #[error("the graph is not connected")]
    Disconnected,
    #[error("edge {0} does not exist")]
    EdgeOutOfRange(usize),
    #[error("vertex {0} does not exist")]
    VertexOutOfRange(usize),
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("vertices {0} and {1} are paired more than once in a neighbour list")]
    RepeatedNeighbor(usize, usize),
    #[error("triangle list is not a closed surface around vertex {0}")]
    NotASurface(usize),
}

/// One half of an edge: `2 * edge + end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dart(pub usize);

impl Dart {
    #[inline]
    pub fn new(edge: usize, end: usize) -> Self {
        debug_assert!(end < 2);
        Dart(2 * edge + end)
    }

    #[inline]
    pub fn edge(self) -> usize {
        self.0 >> 1
    }

    #[inline]
    pub fn end(self) -> usize {
        self.0 & 1
    }

    #[inline]
    pub fn twin(self) -> Self {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A dart together with one of its sides, packed as `2 * dart + side`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag(pub usize);

impl Flag {
    #[inline]
    pub fn new(dart: Dart, side: usize) -> Self {
        debug_assert!(side < 2);
        Flag(2 * dart.0 + side)
    }

    #[inline]
    pub fn dart(self) -> Dart {
        Dart(self.0 >> 1)
    }

    #[inline]
    pub fn side(self) -> usize {
        self.0 & 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn plus(u: usize, v: usize) -> Self {
        Edge::new(u, v, Sign::Plus)
    }

    #[inline]
    pub fn endpoint(&self, end: usize) -> usize {
        if end == 0 {
            self.u
        } else {
            self.v
        }
    }

    #[inline]
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A closed walk bounding one face, recorded as the flags from which each
/// edge is left, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacialWalk {
    pub flags: Vec<Flag>,
}

impl FacialWalk {
    /// Number of edge-steps.
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.flags.iter().map(|f| f.dart())
    }
}

/// All facial walks of an embedding plus the face owning every flag.
#[derive(Debug, Clone)]
pub struct Faces {
    pub walks: Vec<FacialWalk>,
    face_of_flag: Vec<usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn face_of(&self, flag: Flag) -> usize {
        self.face_of_flag[flag.0]
    }

    /// The faces on side 0 and side 1 of edge `e`.
    pub fn faces_of_edge(&self, e: usize) -> (usize, usize) {
        let d = Dart::new(e, 0);
        (self.face_of(Flag::new(d, 0)), self.face_of(Flag::new(d, 1)))
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.walks.iter().map(FacialWalk::len).collect()
    }
}

/// A multigraph together with a signed rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedMultigraph {
    n: usize,
    edges: Vec<Edge>,
    rotation: Vec<Vec<Dart>>,
    /// Index of each dart inside the rotation of its origin.
    slot: Vec<usize>,
}

impl EmbeddedMultigraph {
    /// Builds an embedding, checking that every dart occurs exactly once and
    /// at its own origin.
    pub fn new(
        n: usize,
        edges: Vec<Edge>,
        rotation: Vec<Vec<Dart>>,
    ) -> Result<Self, EmbeddingError> {
        if rotation.len() != n {
            return Err(EmbeddingError::RotationCount {
                n,
                found: rotation.len(),
            });
        }
        for (i, e) in edges.iter().enumerate() {
            for vertex in [e.u, e.v] {
                if vertex >= n {
                    return Err(EmbeddingError::EndpointOutOfRange { edge: i, vertex, n });
                }
            }
        }
        let darts = 2 * edges.len();
        let mut slot = vec![usize::MAX; darts];
        for (vertex, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.0 >= darts {
                    return Err(EmbeddingError::UnknownDart { vertex, dart: d.0 });
                }
                if slot[d.0] != usize::MAX {
                    return Err(EmbeddingError::DuplicateDart { dart: d.0 });
                }
                let expected = edges[d.edge()].endpoint(d.end());
                if expected != vertex {
                    return Err(EmbeddingError::MisplacedDart {
                        dart: d.0,
                        expected,
                        found: vertex,
                    });
                }
                slot[d.0] = i;
            }
        }
        if let Some(d) = slot.iter().position(|&s| s == usize::MAX) {
            return Err(EmbeddingError::MissingDart { dart: d });
        }
        Ok(EmbeddedMultigraph {
            n,
            edges,
            rotation,
            slot,
        })
    }

    /// Builds an all-positive embedding of a loopless graph from per-vertex
    /// cyclic neighbour lists. Each unordered pair listed once on each side
    /// becomes one edge; edges are numbered in lexicographic order of
    /// `(min, max)` endpoint pairs.
    pub fn from_neighbor_rotations(rotations: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let n = rotations.len();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(EmbeddingError::VertexOutOfRange(w));
                }
                if v < w {
                    pairs.push((v, w));
                }
            }
        }
        pairs.sort_unstable();
        // parallel edges are ambiguous in a neighbour list
        if let Some(p) = pairs.windows(2).find(|p| p[0] == p[1]) {
            return Err(EmbeddingError::RepeatedNeighbor(p[0].0, p[0].1));
        }
        let edges: Vec<Edge> = pairs.iter().map(|&(u, v)| Edge::plus(u, v)).collect();
        let rotation = rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                rot.iter()
                    .map(|&w| {
                        let key = (v.min(w), v.max(w));
                        let e = pairs
                            .binary_search(&key)
                            .map_err(|_| EmbeddingError::VertexOutOfRange(w))?;
                        Ok(Dart::new(e, usize::from(v != key.0)))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        EmbeddedMultigraph::new(n, edges, rotation)
    }

    /// Builds a signed rotation system from the triangle list of a closed
    /// triangulated surface. Every edge must lie in exactly two triangles and
    /// every vertex link must be a single cycle.
    pub fn from_triangles(n: usize, triangles: &[[usize; 3]]) -> Result<Self, EmbeddingError> {
        use std::collections::BTreeMap;

        let mut pairs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for i in 0..3 {
                let (a, b) = (tri[i], tri[(i + 1) % 3]);
                if a >= n || b >= n {
                    return Err(EmbeddingError::VertexOutOfRange(a.max(b)));
                }
                if a == b {
                    return Err(EmbeddingError::Loop(t));
                }
                pairs.entry((a.min(b), a.max(b))).or_default().push(t);
            }
        }
        let keys: Vec<(usize, usize)> = pairs.keys().copied().collect();
        let edge_id = |a: usize, b: usize| keys.binary_search(&(a.min(b), a.max(b))).unwrap();
        let third = |t: usize, a: usize, b: usize| {
            triangles[t].iter().copied().find(|&x| x != a && x != b).unwrap()
        };
        let dart_to = |v: usize, w: usize| Dart::new(edge_id(v, w), usize::from(v > w));

        // Orient each link cycle by walking triangles around the vertex.
        let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n];
        let mut neighbour_order: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let incident: Vec<usize> = (0..triangles.len())
                .filter(|&t| triangles[t].contains(&v))
                .collect();
            let Some(&t0) = incident.first() else {
                continue;
            };
            let tri = triangles[t0];
            let i = tri.iter().position(|&x| x == v).unwrap();
            let start = tri[(i + 1) % 3];
            let mut order = vec![start];
            let mut prev_t = t0;
            let mut cur = tri[(i + 2) % 3];
            while cur != start {
                order.push(cur);
                let ts = &pairs[&(v.min(cur), v.max(cur))];
                if ts.len() != 2 {
                    return Err(EmbeddingError::NotASurface(v));
                }
                let next_t = if ts[0] == prev_t { ts[1] } else { ts[0] };
                let next = third(next_t, v, cur);
                prev_t = next_t;
                cur = next;
                if order.len() > incident.len() {
                    return Err(EmbeddingError::NotASurface(v));
                }
            }
            if order.len() != incident.len() {
                return Err(EmbeddingError::NotASurface(v));
            }
            rotation[v] = order.iter().map(|&w| dart_to(v, w)).collect();
            neighbour_order[v] = order;
        }

        // An edge vw with apex x in one of its triangles is positive when the
        // two ends see x on opposite rotational sides.
        let position = |v: usize, w: usize| neighbour_order[v].iter().position(|&x| x == w).unwrap();
        let succ_is = |v: usize, w: usize, x: usize| {
            let ord = &neighbour_order[v];
            ord[(position(v, w) + 1) % ord.len()] == x
        };
        let edges = keys
            .iter()
            .map(|&(a, b)| {
                let t = pairs[&(a, b)][0];
                let x = third(t, a, b);
                let sign = if succ_is(a, b, x) != succ_is(b, a, x) {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                Edge::new(a, b, sign)
            })
            .collect();
        EmbeddedMultigraph::new(n, edges, rotation)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> usize {
        self.edges[d.edge()].endpoint(d.end())
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.origin(d.twin())
    }

    #[inline]
    pub fn succ(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.origin(d)];
        rot[(self.slot[d.0] + 1) % rot.len()]
    }

    #[inline]
    pub fn pred(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.origin(d)];
        rot[(self.slot[d.0] + rot.len() - 1) % rot.len()]
    }

    /// Crosses to the other end of the flag's edge.
    #[inline]
    pub fn along(&self, f: Flag) -> Flag {
        let d = f.dart();
        let side = match self.edges[d.edge()].sign {
            Sign::Plus => 1 - f.side(),
            Sign::Minus => f.side(),
        };
        Flag::new(d.twin(), side)
    }

    /// Turns around the flag's vertex to the neighbouring dart.
    #[inline]
    pub fn corner(&self, f: Flag) -> Flag {
        let d = f.dart();
        if f.side() == 0 {
            Flag::new(self.succ(d), 1)
        } else {
            Flag::new(self.pred(d), 0)
        }
    }

    /// Adjacency `(neighbour, edge)` in rotation order, loops included.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rotation[v].iter().map(move |&d| (self.head(d), d.edge()))
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for (w, _) in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn require_connected(&self) -> Result<(), EmbeddingError> {
        if self.n == 0 {
            Err(EmbeddingError::Empty)
        } else if !self.is_connected() {
            Err(EmbeddingError::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Traces every facial walk. Faces are numbered in order of their
    /// smallest flag; each walk starts from that flag.
    ///
    /// A single vertex without edges has one face with an empty walk.
    pub fn faces(&self) -> Faces {
        let flags = 4 * self.edges.len();
        let mut face_of_flag = vec![usize::MAX; flags];
        let mut walks = Vec::new();
        if flags == 0 && self.n == 1 {
            walks.push(FacialWalk { flags: Vec::new() });
        }
        for start in 0..flags {
            if face_of_flag[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let mut f = Flag(start);
            loop {
                walk.push(f);
                face_of_flag[f.0] = id;
                let arrived = self.along(f);
                face_of_flag[arrived.0] = id;
                f = self.corner(arrived);
                if f.0 == start {
                    break;
                }
            }
            walks.push(FacialWalk { flags: walk });
        }
        Faces { walks, face_of_flag }
    }

    /// Vertices visited by a facial walk, in order (with repetition).
    pub fn walk_vertices(&self, walk: &FacialWalk) -> Vec<usize> {
        walk.darts().map(|d| self.origin(d)).collect()
    }

    /// `2 - (|V| - |E| + |F|)`: the Euler genus of the surface the rotation
    /// system embeds into.
    pub fn euler_genus(&self) -> Result<usize, EmbeddingError> {
        self.require_connected()?;
        let chi = self.n as i64 - self.edges.len() as i64 + self.faces().len() as i64;
        Ok((2 - chi) as usize)
    }

    /// Whether the embedding is 2-cell in a surface of Euler genus `ambient`.
    pub fn is_two_cell(&self, ambient: usize) -> Result<bool, EmbeddingError> {
        Ok(self.euler_genus()? == ambient)
    }

    /// Loopless with every face of length 3.
    pub fn is_triangulation(&self) -> bool {
        !self.has_loops() && self.faces().walks.iter().all(|w| w.len() == 3)
    }

    /// Plain multigraph view (no embedding).
    pub fn multigraph(&self) -> crate::decomposition::Multigraph {
        crate::decomposition::Multigraph {
            n: self.n,
            edges: self.edges.iter().map(|e| (e.u, e.v)).collect(),
        }
    }

    // ---- in-crate mutation used by generators and constructions ----

    fn reindex(&mut self, v: usize) {
        for (i, d) in self.rotation[v].iter().enumerate() {
            self.slot[d.0] = i;
        }
    }

    fn push_vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    /// Appends edge `u -> v`; its darts must be placed before the graph is
    /// used again.
    fn push_edge(&mut self, u: usize, v: usize, sign: Sign) -> usize {
        self.edges.push(Edge::new(u, v, sign));
        self.slot.push(usize::MAX);
        self.slot.push(usize::MAX);
        self.edges.len() - 1
    }

    fn insert_after(&mut self, anchor: Dart, new: Dart) {
        let v = self.origin(anchor);
        let at = self.slot[anchor.0] + 1;
        self.rotation[v].insert(at, new);
        self.reindex(v);
    }

    fn push_dart(&mut self, v: usize, new: Dart) {
        self.rotation[v].push(new);
        self.reindex(v);
    }

    /// Inserts `new` into the corner entered by `arrived`.
    fn insert_in_corner(&mut self, arrived: Flag, new: Dart) {
        let d = arrived.dart();
        if arrived.side() == 0 {
            self.insert_after(d, new);
        } else {
            let p = self.pred(d);
            self.insert_after(p, new);
        }
    }

    /// Orientation of a corner relative to the walk direction.
    fn corner_sign(arrived: Flag) -> Sign {
        if arrived.side() == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Adds a chord between two corners of the same face. Corners are given
    /// by the flags through which the walk enters them.
    pub(crate) fn add_chord(&mut self, a: Flag, b: Flag) -> usize {
        let (va, vb) = (self.origin(a.dart()), self.origin(b.dart()));
        let sign = Self::corner_sign(a).times(Self::corner_sign(b));
        let e = self.push_edge(va, vb, sign);
        self.insert_in_corner(a, Dart::new(e, 0));
        self.insert_in_corner(b, Dart::new(e, 1));
        e
    }

    /// Places a new vertex inside a face and joins it to every corner. The
    /// argument lists the face's leaving flags in walk order.
    pub(crate) fn star_face(&mut self, walk: &[Flag]) -> usize {
        let x = self.push_vertex();
        let corners: Vec<Flag> = walk.iter().map(|&f| self.along(f)).collect();
        let mut new_darts = Vec::with_capacity(corners.len());
        for &c in &corners {
            let w = self.origin(c.dart());
            let e = self.push_edge(w, x, Self::corner_sign(c));
            self.insert_in_corner(c, Dart::new(e, 0));
            new_darts.push(Dart::new(e, 1));
        }
        for &d in new_darts.iter().rev() {
            self.push_dart(x, d);
        }
        x
    }

    /// Adds a pendant edge from `v` to a new vertex, placed right after
    /// `anchor` in the rotation of `v`.
    pub(crate) fn add_pendant_after(&mut self, anchor: Dart) -> (usize, Dart) {
        let v = self.origin(anchor);
        let x = self.push_vertex();
        let e = self.push_edge(v, x, Sign::Plus);
        self.insert_after(anchor, Dart::new(e, 0));
        self.push_dart(x, Dart::new(e, 1));
        (x, Dart::new(e, 0))
    }
}
