//! Vertices far from the boundary of a separator face.
//!
//! Run with `cargo run --example deep_vertices`.

use surfsep::generators::{grow_random, GrowthSpec, Surface};
use surfsep::separator::{deep_vertices, surface_separator};

fn main() {
    let g = grow_random(&GrowthSpec::new(Surface::Sphere, 500, 12)).unwrap();
    let cert = surface_separator(&g, 1).unwrap();
    for (i, face) in cert.faces.iter().enumerate() {
        let counts: Vec<usize> = (0..=8)
            .map(|k| deep_vertices(&g, &cert, i, k).unwrap().len())
            .collect();
        println!(
            "face {i}: boundary length {}, interior {}, deep counts for k = 0..=8: {:?}",
            face.walk.len(),
            face.interior_count,
            counts
        );
    }
}
