//! Complete graphs with trees hung at every vertex.
//!
//! Run with `cargo run --example lower_bound_construction`.

use surfsep::constructions::{construct_lower_bound, construction_order, ConstructionSpec};

fn main() {
    for (g, delta, k) in [(0, 5, 3), (1, 6, 3), (2, 10, 5), (0, 6, 7)] {
        let c = construct_lower_bound(&ConstructionSpec::builtin(g, delta, k)).unwrap();
        println!(
            "g = {g}, Δ = {delta}, k = {k}: K_{} plus trees, {} vertices (formula {})",
            c.p,
            c.graph.vertex_count(),
            construction_order(c.p, delta, k)
        );
        print!("{}", c.report);
    }
}
