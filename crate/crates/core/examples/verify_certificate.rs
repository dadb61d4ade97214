//! Verifying certificates, and what tampering looks like.
//!
//! Run with `cargo run --example verify_certificate`.

use surfsep::generators::{grow_random, GrowthSpec, Surface};
use surfsep::separator::{surface_separator, verify_certificate};

fn main() {
    let g = grow_random(&GrowthSpec::new(Surface::Projective, 500, 17)).unwrap();
    let cert = surface_separator(&g, 2).unwrap();
    println!("honest certificate:\n{}", verify_certificate(&g, &cert));

    let mut fewer_edges = cert.clone();
    let dropped = fewer_edges.l.pop().unwrap();
    fewer_edges.separator_edges.retain(|&e| e != dropped);
    println!("one cut edge removed:\n{}", verify_certificate(&g, &fewer_edges));

    let mut inflated = cert.clone();
    inflated.faces[0].interior_count += 50;
    println!("interior count inflated:\n{}", verify_certificate(&g, &inflated));

    let mut wrong_radius = cert;
    wrong_radius.r = 0;
    println!("radius understated:\n{}", verify_certificate(&g, &wrong_radius));
}
