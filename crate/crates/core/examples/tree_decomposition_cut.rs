//! Cutting a tree decomposition into ℓ+1 heavy pieces.
//!
//! Run with `cargo run --example tree_decomposition_cut`.

use std::collections::BTreeSet;

use surfsep::decomposition::{Multigraph, Tree, TreeDecomposition};
use surfsep::separator::td_separator;

fn main() {
    // Eight isolated vertices over a path of four bags.
    let graph = Multigraph::edgeless(8);
    let bags = (0..4).map(|i| BTreeSet::from([2 * i, 2 * i + 1])).collect();
    let td = TreeDecomposition::new(Tree::path(4), bags, 2);
    let cut = td_separator(&graph, &td, 1).unwrap();
    println!("ℓ = 1: cut tree edges {:?}", cut.cut);
    for c in &cut.components {
        println!("  nodes {:?} -> G[Q] = {:?}", c.nodes, c.vertices);
    }
    println!("  bound: 3·|G[Q]| ≥ {}", cut.threshold_num);
    match td_separator(&graph, &td, 2) {
        Ok(_) => unreachable!(),
        Err(e) => println!("ℓ = 2: {e}"),
    }

    // A caterpillar: a spine of 10 nodes, each with one leg; a path on 31
    // vertices along the spine and one pendant vertex per leg.
    let mut edges: Vec<(usize, usize)> = (1..10).map(|i| (i - 1, i)).collect();
    edges.extend((0..10).map(|i| (i, 10 + i)));
    let tree = Tree { nodes: 20, edges };
    let mut bags: Vec<BTreeSet<usize>> = Vec::new();
    for i in 0..10 {
        bags.push((3 * i..=3 * i + 3).collect());
    }
    for i in 0..10 {
        bags.push(BTreeSet::from([31 + i, 3 * i]));
    }
    let mut g = Multigraph::edgeless(41);
    g.edges = (1..31).map(|v| (v - 1, v)).collect();
    g.edges.extend((0..10).map(|i| (3 * i, 31 + i)));
    let td = TreeDecomposition::new(tree, bags, 4);
    for ell in 1..=2 {
        let cut = td_separator(&g, &td, ell).unwrap();
        let sizes: Vec<usize> = cut.components.iter().map(|c| c.vertices.len()).collect();
        println!(
            "caterpillar, ℓ = {ell}: cut {:?}, component sizes {:?}, need {}·size ≥ {}",
            cut.cut, sizes, cut.threshold_den, cut.threshold_num
        );
    }
}
