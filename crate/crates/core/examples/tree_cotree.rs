//! BFS tree, genus edges, dual tree and the face-bag tree decomposition.
//!
//! Run with `cargo run --example tree_cotree`.

use surfsep::decomposition::validate_td;
use surfsep::generators::{grow_random, GrowthSpec, Surface};
use surfsep::tree_cotree::{bags, bfs_tree, cotree_extra, dual_tree};

fn main() {
    for s in Surface::ALL {
        let g = grow_random(&GrowthSpec::new(s, 400, 9)).unwrap();
        let center = g.metrics().unwrap().center;
        let tree = bfs_tree(&g, center).unwrap();
        let x = cotree_extra(&g, &tree);

        let mut t_and_x: Vec<usize> = tree.tree_edges().into_iter().collect();
        t_and_x.extend(&x);
        let one_face = g.induced_subembedding(&t_and_x).unwrap().graph.faces().len();

        let dual = dual_tree(&g, &tree, &x).unwrap();
        let td = bags(&g, &tree, &x, &dual);
        let report = validate_td(&g.multigraph(), &td);
        println!(
            "{s}: r = {}, |X| = {} (genus {}), faces of T ∪ X = {one_face}, \
             dual tree max degree {}, largest bag {} ≤ {}, valid = {}",
            tree.height(),
            x.len(),
            g.euler_genus().unwrap(),
            dual.tree.max_degree(),
            td.max_bag(),
            td.bag_bound,
            report.is_valid()
        );
    }
}
