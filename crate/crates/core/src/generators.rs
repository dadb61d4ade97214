//! Base surface triangulations, seeded random growth, and triangulation of
//! arbitrary embedded multigraphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embedding::{EmbeddedMultigraph, EmbeddingError, Flag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown surface `{0}` (expected sphere, projective or torus)")]
    UnknownSurface(String),
    #[error("base embedding is not a loopless triangulation")]
    NotTriangulation,
    #[error("target of {target} vertices is below the base size {base}")]
    TargetTooSmall { target: usize, base: usize },
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("a graph without edges cannot be triangulated")]
    NoEdges,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// Built-in closed surfaces, each with a complete-graph triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    /// Tetrahedron, Euler genus 0.
    Sphere,
    /// K6, Euler genus 1.
    Projective,
    /// K7, Euler genus 2.
    Torus,
}

impl Surface {
    pub const ALL: [Surface; 3] = [Surface::Sphere, Surface::Projective, Surface::Torus];

    pub fn euler_genus(self) -> usize {
        match self {
            Surface::Sphere => 0,
            Surface::Projective => 1,
            Surface::Torus => 2,
        }
    }

    pub fn from_genus(g: usize) -> Option<Self> {
        Surface::ALL.into_iter().find(|s| s.euler_genus() == g)
    }

    pub fn name(self) -> &'static str {
        match self {
            Surface::Sphere => "sphere",
            Surface::Projective => "projective",
            Surface::Torus => "torus",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Surface {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sphere" => Ok(Surface::Sphere),
            "projective" => Ok(Surface::Projective),
            "torus" => Ok(Surface::Torus),
            other => Err(GeneratorError::UnknownSurface(other.to_string())),
        }
    }
}

/// Hemi-icosahedron: the antipodal quotient of the icosahedron.
const K6_PROJECTIVE: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 5, 1],
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 1],
    [4, 5, 2],
    [5, 1, 3],
];

pub fn base_surface(surface: Surface) -> EmbeddedMultigraph {
    match surface {
        Surface::Sphere => EmbeddedMultigraph::from_neighbor_rotations(&[
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ]),
        Surface::Projective => EmbeddedMultigraph::from_triangles(6, &K6_PROJECTIVE),
        Surface::Torus => {
            let rotations: Vec<Vec<usize>> = (0..7)
                .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|k| (i + k) % 7).collect())
                .collect();
            EmbeddedMultigraph::from_neighbor_rotations(&rotations)
        }
    }
    .expect("built-in embeddings are valid")
}

#[derive(Debug, Clone)]
pub enum Base {
    Builtin(Surface),
    Custom(EmbeddedMultigraph),
}

#[derive(Debug, Clone)]
pub struct GrowthSpec {
    pub base: Base,
    pub target_n: usize,
    pub seed: u64,
}

impl GrowthSpec {
    pub fn new(surface: Surface, target_n: usize, seed: u64) -> Self {
        GrowthSpec {
            base: Base::Builtin(surface),
            target_n,
            seed,
        }
    }
}

/// Grows a triangulation by repeatedly placing a degree-3 vertex inside a
/// uniformly random face. Each insertion adds one vertex, three edges and
/// two faces, so the surface never changes.
pub fn grow_random(spec: &GrowthSpec) -> Result<EmbeddedMultigraph, GeneratorError> {
    let mut graph = match &spec.base {
        Base::Builtin(s) => base_surface(*s),
        Base::Custom(g) => g.clone(),
    };
    if !graph.is_triangulation() {
        return Err(GeneratorError::NotTriangulation);
    }
    let base = graph.vertex_count();
    if spec.target_n < base {
        return Err(GeneratorError::TargetTooSmall {
            target: spec.target_n,
            base,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    // Each face is remembered by one of its leaving flags; flags of
    // untouched faces stay valid as darts are inserted elsewhere.
    let mut starts: Vec<Flag> = graph.faces().walks.iter().map(|w| w.flags[0]).collect();
    while graph.vertex_count() < spec.target_n {
        let i = rng.gen_range(0..starts.len());
        let f1 = starts[i];
        let f2 = graph.corner(graph.along(f1));
        let f3 = graph.corner(graph.along(f2));
        graph.star_face(&[f1, f2, f3]);
        starts[i] = f1;
        starts.push(f2);
        starts.push(f3);
    }
    Ok(graph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Cut ears with chords, falling back to a star where no loop-free ear
    /// exists.
    #[default]
    Ear,
    /// Star every non-triangular face.
    Star,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ear" => Ok(Strategy::Ear),
            "star" => Ok(Strategy::Star),
            other => Err(format!("unknown strategy `{other}` (expected ear or star)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Triangulated {
    pub graph: EmbeddedMultigraph,
    /// Vertices added by star insertions.
    pub auxiliary: BTreeSet<usize>,
}

/// Triangulates every face of a connected loopless embedding without
/// creating loops. Edge and vertex ids of the input are preserved.
pub fn triangulate(
    graph: &EmbeddedMultigraph,
    strategy: Strategy,
) -> Result<Triangulated, GeneratorError> {
    if let Some(e) = graph.edges().iter().position(|e| e.is_loop()) {
        return Err(GeneratorError::Loop(e));
    }
    if graph.vertex_count() == 0 {
        return Err(EmbeddingError::Empty.into());
    }
    if !graph.is_connected() {
        return Err(EmbeddingError::Disconnected.into());
    }
    if graph.edge_count() == 0 {
        return Err(GeneratorError::NoEdges);
    }
    let mut out = graph.clone();
    let mut auxiliary = BTreeSet::new();
    let starts: Vec<Flag> = out.faces().walks.iter().map(|w| w.flags[0]).collect();
    for start in starts {
        let mut walk = trace_from(&out, start);
        loop {
            if walk.len() == 3 {
                break;
            }
            let ear = if strategy == Strategy::Ear && walk.len() > 3 {
                find_ear(&out, &walk)
            } else {
                None
            };
            match ear {
                Some(i) => {
                    let len = walk.len();
                    let next = walk[(i + 1) % len];
                    // Corners at w_{i-1} and w_{i+1} are entered through the
                    // flags preceding them in the walk.
                    let a = out.along(walk[(i + len - 2) % len]);
                    let b = out.along(walk[i]);
                    out.add_chord(a, b);
                    walk = trace_from(&out, next);
                }
                None => {
                    let x = out.star_face(&walk);
                    auxiliary.insert(x);
                    break;
                }
            }
        }
    }
    Ok(Triangulated {
        graph: out,
        auxiliary,
    })
}

fn trace_from(graph: &EmbeddedMultigraph, start: Flag) -> Vec<Flag> {
    let mut walk = vec![start];
    let mut f = graph.corner(graph.along(start));
    while f != start {
        walk.push(f);
        f = graph.corner(graph.along(f));
    }
    walk
}

/// First walk position `i` whose neighbours `w_{i-1}`, `w_{i+1}` differ.
fn find_ear(graph: &EmbeddedMultigraph, walk: &[Flag]) -> Option<usize> {
    let len = walk.len();
    let vertex = |k: usize| graph.origin(walk[k % len].dart());
    (0..len).find(|&i| vertex(i + len - 1) != vertex(i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{Dart, Edge, Sign};

    #[test]
    fn base_surfaces_have_expected_counts() {
        for (s, n, m, f, g) in [
            (Surface::Sphere, 4, 6, 4, 0),
            (Surface::Projective, 6, 15, 10, 1),
            (Surface::Torus, 7, 21, 14, 2),
        ] {
            let e = base_surface(s);
            assert_eq!(e.vertex_count(), n, "{s}");
            assert_eq!(e.edge_count(), m, "{s}");
            let faces = e.faces();
            assert_eq!(faces.len(), f, "{s}");
            assert!(faces.walks.iter().all(|w| w.len() == 3));
            assert_eq!(e.euler_genus().unwrap(), g);
            assert!(e.is_triangulation());
        }
    }

    #[test]
    fn surface_names_parse() {
        assert_eq!("torus".parse::<Surface>().unwrap(), Surface::Torus);
        assert!(matches!(
            "klein".parse::<Surface>(),
            Err(GeneratorError::UnknownSurface(_))
        ));
    }

    #[test]
    fn zero_insertions_leave_base_unchanged() {
        let g = grow_random(&GrowthSpec::new(Surface::Sphere, 4, 99)).unwrap();
        assert_eq!(g, base_surface(Surface::Sphere));
    }

    #[test]
    fn sphere_growth_counts() {
        let g = grow_random(&GrowthSpec::new(Surface::Sphere, 100, 1)).unwrap();
        assert_eq!(g.vertex_count(), 100);
        assert_eq!(g.edge_count(), 294);
        assert_eq!(g.faces().len(), 196);
        assert!(g.is_triangulation());
    }

    #[test]
    fn torus_growth_keeps_genus() {
        let g = grow_random(&GrowthSpec::new(Surface::Torus, 50, 7)).unwrap();
        assert_eq!(g.euler_genus().unwrap(), 2);
        assert!(g.faces().walks.iter().all(|w| w.len() == 3));
    }

    #[test]
    fn growth_rejects_bad_input() {
        let square = EmbeddedMultigraph::from_neighbor_rotations(&[
            vec![1, 3],
            vec![2, 0],
            vec![3, 1],
            vec![0, 2],
        ])
        .unwrap();
        let spec = GrowthSpec {
            base: Base::Custom(square),
            target_n: 10,
            seed: 0,
        };
        assert_eq!(grow_random(&spec), Err(GeneratorError::NotTriangulation));
        assert!(matches!(
            grow_random(&GrowthSpec::new(Surface::Torus, 3, 0)),
            Err(GeneratorError::TargetTooSmall { .. })
        ));
    }

    #[test]
    fn triangulation_is_identity_on_triangulations() {
        let g = base_surface(Surface::Projective);
        let t = triangulate(&g, Strategy::Ear).unwrap();
        assert_eq!(t.graph, g);
        assert!(t.auxiliary.is_empty());
    }

    #[test]
    fn square_cycle_gets_two_diagonals() {
        let square = EmbeddedMultigraph::from_neighbor_rotations(&[
            vec![1, 3],
            vec![2, 0],
            vec![3, 1],
            vec![0, 2],
        ])
        .unwrap();
        let t = triangulate(&square, Strategy::Ear).unwrap();
        assert!(t.auxiliary.is_empty());
        assert_eq!(t.graph.vertex_count(), 4);
        assert_eq!(t.graph.edge_count(), 6);
        assert_eq!(t.graph.faces().lengths(), vec![3; 4]);
        assert_eq!(t.graph.euler_genus().unwrap(), 0);
        assert!(!t.graph.has_loops());
    }

    #[test]
    fn bigon_needs_a_star_vertex() {
        let bigon = EmbeddedMultigraph::new(
            2,
            vec![Edge::plus(0, 1), Edge::plus(0, 1)],
            vec![vec![Dart(0), Dart(2)], vec![Dart(3), Dart(1)]],
        )
        .unwrap();
        assert_eq!(bigon.faces().len(), 2);
        let t = triangulate(&bigon, Strategy::Ear).unwrap();
        assert_eq!(t.auxiliary.len(), 2);
        assert!(t.graph.is_triangulation());
        assert_eq!(t.graph.euler_genus().unwrap(), 0);
    }

    #[test]
    fn star_strategy_adds_one_vertex_per_face() {
        let square = EmbeddedMultigraph::from_neighbor_rotations(&[
            vec![1, 3],
            vec![2, 0],
            vec![3, 1],
            vec![0, 2],
        ])
        .unwrap();
        let t = triangulate(&square, Strategy::Star).unwrap();
        assert_eq!(t.auxiliary, BTreeSet::from([4, 5]));
        assert_eq!(t.graph.faces().lengths(), vec![3; 8]);
    }

    #[test]
    fn walk_abab_falls_back_to_star() {
        // Two parallel edges, one twisted: a single face a-b-a-b in the
        // projective plane.
        let g = EmbeddedMultigraph::new(
            2,
            vec![Edge::plus(0, 1), Edge::new(0, 1, Sign::Minus)],
            vec![vec![Dart(0), Dart(2)], vec![Dart(1), Dart(3)]],
        )
        .unwrap();
        let faces = g.faces();
        assert_eq!(faces.lengths(), vec![4]);
        let t = triangulate(&g, Strategy::Ear).unwrap();
        assert_eq!(t.auxiliary.len(), 1);
        assert!(t.graph.is_triangulation());
        assert_eq!(t.graph.euler_genus().unwrap(), 1);
    }

    #[test]
    fn triangulate_rejects_loops() {
        let g = EmbeddedMultigraph::new(
            1,
            vec![Edge::new(0, 0, Sign::Plus)],
            vec![vec![Dart(0), Dart(1)]],
        )
        .unwrap();
        assert_eq!(triangulate(&g, Strategy::Ear).unwrap_err(), GeneratorError::Loop(0));
    }
}
