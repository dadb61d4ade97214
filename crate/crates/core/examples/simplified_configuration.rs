//! Contract a separator down to its branch vertices.
//!
//! Run with `cargo run --release --example simplified_configuration`.

use surfsep::generators::{grow_random, GrowthSpec, Surface};
use surfsep::separator::{separate, simplified_configuration, ContractionOrder, SeparatorConfig};

fn main() {
    for (surface, n, ell) in [(Surface::Sphere, 1500, 5), (Surface::Torus, 1500, 3)] {
        let g = grow_random(&GrowthSpec::new(surface, n, 8)).unwrap();
        let run = separate(&g, &SeparatorConfig::new(ell)).unwrap();
        let s = &run.separator.graph;
        let h = simplified_configuration(s, ContractionOrder::SmallestEdgeFirst).unwrap();
        let other = simplified_configuration(s, ContractionOrder::LargestEdgeFirst).unwrap();
        let genus = run.certificate.g;
        let inv = h.invariants();
        println!(
            "{surface}, ℓ = {ell}: S has {} vertices and {} edges; H has {} ≤ {} vertices, {} ≤ {} edges",
            s.vertex_count(),
            s.edge_count(),
            inv.vertices,
            2 * ell + 2 * genus - 2,
            inv.edges,
            3 * ell + 3 * genus - 3
        );
        println!(
            "  face lengths {:?}, degrees {:?}, branch vertices {:?}, orders agree: {}",
            inv.face_lengths,
            inv.degrees,
            h.branch_map,
            inv == other.invariants()
        );
    }
}
