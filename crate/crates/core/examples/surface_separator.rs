//! The full separator pipeline on a random torus triangulation, ending in a
//! JSON certificate.
//!
//! Run with `cargo run --example surface_separator`.

use surfsep::generators::{grow_random, GrowthSpec, Surface};
use surfsep::separator::{separate, SeparatorConfig};

fn main() {
    let g = grow_random(&GrowthSpec::new(Surface::Torus, 600, 3)).unwrap();
    for ell in 1..=3 {
        let run = separate(&g, &SeparatorConfig::new(ell)).unwrap();
        let c = &run.certificate;
        println!(
            "ℓ = {ell}: r = {}, |E(S)| = {} ≤ {}, faces = {}, interiors {:?}, bound {}/{}",
            c.r,
            c.separator_edges.len(),
            (2 * c.r + 1) * (c.g + ell),
            c.faces.len(),
            c.faces.iter().map(|f| f.interior_count).collect::<Vec<_>>(),
            c.threshold_num,
            c.threshold_den
        );
        println!("  genus edges X = {:?}, cut edges L = {:?}", c.x, c.l);
    }

    let small = grow_random(&GrowthSpec::new(Surface::Sphere, 60, 1)).unwrap();
    let cert = surfsep::separator::surface_separator(&small, 1).unwrap();
    println!("\ncertificate for a 60-vertex sphere:\n{}", cert.to_json());
}
