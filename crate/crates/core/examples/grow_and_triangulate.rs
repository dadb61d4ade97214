//! Seeded growth of random triangulations, SEM1 round trips, and
//! triangulating an arbitrary embedding.
//!
//! Run with `cargo run --example grow_and_triangulate`.

use surfsep::embedding::{sem1, EmbeddedMultigraph};
use surfsep::generators::{grow_random, triangulate, GrowthSpec, Strategy, Surface};

fn main() {
    for s in Surface::ALL {
        let g = grow_random(&GrowthSpec::new(s, 60, 42)).unwrap();
        let text = sem1::write(&g);
        let back = sem1::read(&text).unwrap();
        assert_eq!(sem1::write(&back), text);
        println!(
            "{}: {} vertices, {} edges, {} faces, genus {}, {} bytes of SEM1",
            s,
            g.vertex_count(),
            g.edge_count(),
            g.faces().len(),
            g.euler_genus().unwrap(),
            text.len()
        );
    }

    // A hexagon: the ear strategy adds chords only, the star strategy adds
    // one vertex per face.
    let hexagon = EmbeddedMultigraph::from_neighbor_rotations(
        &(0..6).map(|i| vec![(i + 1) % 6, (i + 5) % 6]).collect::<Vec<_>>(),
    )
    .unwrap();
    for strategy in [Strategy::Ear, Strategy::Star] {
        let t = triangulate(&hexagon, strategy).unwrap();
        println!(
            "hexagon, {strategy:?}: {} vertices ({} auxiliary), {} triangles",
            t.graph.vertex_count(),
            t.auxiliary.len(),
            t.graph.faces().len()
        );
    }

    println!("\nsmall sphere in SEM1:\n{}", sem1::write(&grow_random(&GrowthSpec::new(Surface::Sphere, 5, 1)).unwrap()));
}
