//! Trace faces of signed rotation systems and read off the Euler genus.
//!
//! Run with `cargo run --example faces_and_genus`.

use surfsep::embedding::{Dart, Edge, EmbeddedMultigraph, Sign};
use surfsep::generators::{base_surface, Surface};

fn describe(name: &str, g: &EmbeddedMultigraph) {
    let faces = g.faces();
    println!(
        "{name}: n = {}, m = {}, faces = {} with lengths {:?}, Euler genus {}",
        g.vertex_count(),
        g.edge_count(),
        faces.len(),
        faces.lengths(),
        g.euler_genus().unwrap()
    );
}

fn main() {
    for s in Surface::ALL {
        describe(s.name(), &base_surface(s));
    }

    // A single vertex with two loops. With both loops untwisted the rotation
    // [a, b, a', b'] gives the torus; twisting one loop gives a Klein-bottle
    // style embedding of Euler genus 2 with one face.
    for sign in [Sign::Plus, Sign::Minus] {
        let g = EmbeddedMultigraph::new(
            1,
            vec![Edge::plus(0, 0), Edge::new(0, 0, sign)],
            vec![vec![Dart(0), Dart(2), Dart(1), Dart(3)]],
        )
        .unwrap();
        describe(&format!("two interleaved loops, second {}", sign.symbol()), &g);
    }

    let k7 = base_surface(Surface::Torus);
    let m = k7.metrics().unwrap();
    println!(
        "K7 metrics: diameter {}, radius {}, center {}, max degree {}",
        m.diameter, m.radius, m.center, m.max_degree
    );
}
