//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use surfsep::bounds::{moore, moore_closed_form, params_ell_c, thm_main_upper, Coefficient, Parity};
use surfsep::constructions::{construct_lower_bound, ConstructionSpec};
use surfsep::embedding::sem1;
use surfsep::separator::{
    separate, simplified_configuration, td_separator, verify_certificate, ContractionOrder, SeparatorConfig,
    SeparatorRun,
};
use surfsep::{grow_random, validate_td, EmbeddedMultigraph, GrowthSpec, Multigraph, Surface, Tree, TreeDecomposition};

const INSTANCES: usize = 210;

struct Instance {
    surface: Surface,
    n: usize,
    seed: u64,
    ell: usize,
    graph: EmbeddedMultigraph,
}

impl Instance {
    fn label(&self) -> String {
        format!("{} n={} seed={} ℓ={}", self.surface.name(), self.n, self.seed, self.ell)
    }
}

type Outcome = Result<String, String>;

/// Seeded instances over the three base surfaces with `n` in `[50, 2000]`.
/// The requested ℓ cycles through 1..=5 and is lowered to the largest value
/// meeting `n ≥ (3ℓ+1)((3+2g)r+1)`; sizes admitting no ℓ are redrawn.
fn instances() -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < INSTANCES {
        let surface = Surface::ALL[out.len() % 3];
        let n = rng.gen_range(50..=2000);
        seed += 1;
        let graph = grow_random(&GrowthSpec::new(surface, n, seed)).expect("growth succeeds");
        let r = graph.metrics().expect("connected").radius;
        let b = (3 + 2 * surface.euler_genus()) * r + 1;
        let ell_max = (n / b).saturating_sub(1) / 3;
        if ell_max == 0 {
            continue;
        }
        let ell = (1 + out.len() % 5).min(ell_max);
        out.push(Instance {
            surface,
            n,
            seed,
            ell,
            graph,
        });
    }
    out
}

/// `G[Q]` for each component of the tree minus `cut`, computed from scratch.
fn oracle_components(td: &TreeDecomposition, cut: &[usize]) -> Vec<BTreeSet<usize>> {
    let nodes = td.tree.nodes;
    let removed: BTreeSet<usize> = cut.iter().copied().collect();
    let mut comp = vec![usize::MAX; nodes];
    let mut count = 0;
    let adj = td.tree.adjacency();
    for s in 0..nodes {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(y, e) in &adj[x] {
                if !removed.contains(&e) && comp[y] == usize::MAX {
                    comp[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    let mut homes: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            homes.entry(v).or_default().insert(comp[node]);
        }
    }
    let mut out = vec![BTreeSet::new(); count];
    for (v, cs) in homes {
        if cs.len() == 1 {
            out[*cs.iter().next().unwrap()].insert(v);
        }
    }
    out
}

fn meets(n: usize, ell: usize, b: usize, size: usize) -> bool {
    ((2 * ell + 1) * size) as i64 >= n as i64 - (ell * b) as i64
}

fn criterion_1(instances: &[Instance], runs: &[SeparatorRun], elapsed: Duration) -> Outcome {
    for (inst, run) in instances.iter().zip(runs) {
        let td = &run.decomposition;
        let cut = td_separator(&inst.graph.multigraph(), td, inst.ell).map_err(|e| format!("{}: {e}", inst.label()))?;
        if cut.cut.len() != inst.ell {
            return Err(format!("{}: {} cut edges", inst.label(), cut.cut.len()));
        }
        let comps = oracle_components(td, &cut.cut);
        for q in &comps {
            if !meets(inst.n, inst.ell, td.bag_bound, q.len()) {
                return Err(format!("{}: component with |G[Q]| = {}", inst.label(), q.len()));
            }
        }
        let reported: Vec<BTreeSet<usize>> = cut
            .components
            .iter()
            .map(|c| c.vertices.iter().copied().collect())
            .collect();
        let mut a = comps.clone();
        let mut b = reported;
        a.sort();
        b.sort();
        if a != b {
            return Err(format!("{}: reported components differ from recomputation", inst.label()));
        }
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("{} instances in {elapsed:.1?}", instances.len()))
}

fn criterion_2(instances: &[Instance], runs: &[SeparatorRun]) -> Outcome {
    for (inst, run) in instances.iter().zip(runs) {
        let c = &run.certificate;
        let (n, g, r, ell) = (inst.n as i64, c.g as i64, c.r as i64, c.ell as i64);
        if c.separator_edges.len() as i64 > (2 * r + 1) * (g + ell) {
            return Err(format!("{}: |E(S)| = {}", inst.label(), c.separator_edges.len()));
        }
        if c.faces.len() != inst.ell + 1 {
            return Err(format!("{}: {} faces", inst.label(), c.faces.len()));
        }
        let s = &run.separator.graph;
        let chi = s.vertex_count() as i64 - s.edge_count() as i64 + s.faces().len() as i64;
        if chi != 2 - g {
            return Err(format!("{}: S has Euler characteristic {chi}", inst.label()));
        }
        let num = n - ell * (3 + 2 * g) * r - ell;
        for f in &c.faces {
            if (2 * ell + 1) * (f.interior_count as i64) < num {
                return Err(format!("{}: interior {} below {num}/{}", inst.label(), f.interior_count, 2 * ell + 1));
            }
        }
        let report = verify_certificate(&inst.graph, c);
        if !report.passed() {
            return Err(format!("{}: verifier rejects\n{report}", inst.label()));
        }
    }
    Ok(format!("{} certificates verified", runs.len()))
}

fn criterion_3(instances: &[Instance], runs: &[SeparatorRun]) -> Outcome {
    let mut checked = 0;
    for (inst, run) in instances.iter().zip(runs) {
        if inst.surface != Surface::Sphere {
            continue;
        }
        let c = &run.certificate;
        let (n, r, ell) = (inst.n as i64, c.r as i64, c.ell as i64);
        if c.separator_edges.len() as i64 > ell * (2 * r + 1) {
            return Err(format!("{}: |E(S)| = {}", inst.label(), c.separator_edges.len()));
        }
        for f in &c.faces {
            if (2 * ell + 1) * (f.interior_count as i64) < n - (3 * r + 1) * ell {
                return Err(format!("{}: interior {}", inst.label(), f.interior_count));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} sphere instances"))
}

fn criterion_4(instances: &[Instance], runs: &[SeparatorRun]) -> Outcome {
    for (inst, run) in instances.iter().zip(runs) {
        let g = inst.surface.euler_genus();
        let x = &run.certificate.x;
        if x.len() != g {
            return Err(format!("{}: |X| = {}", inst.label(), x.len()));
        }
        let mut kept: Vec<usize> = run.tree.tree_edges().into_iter().collect();
        kept.extend(x);
        kept.sort_unstable();
        let sub = inst.graph.induced_subembedding(&kept).map_err(|e| e.to_string())?;
        if sub.graph.faces().len() != 1 {
            return Err(format!("{}: T ∪ X has {} faces", inst.label(), sub.graph.faces().len()));
        }
        let td = &run.decomposition;
        let report = validate_td(&inst.graph.multigraph(), td);
        if !report.is_valid() {
            return Err(format!("{}: {:?}", inst.label(), report.violation));
        }
        if td.tree.max_degree() > 3 {
            return Err(format!("{}: T* degree {}", inst.label(), td.tree.max_degree()));
        }
        let bound = (3 + 2 * g) * run.certificate.r + 1;
        if td.max_bag() > bound {
            return Err(format!("{}: bag of {} > {bound}", inst.label(), td.max_bag()));
        }
    }
    Ok(format!("{} decompositions valid", runs.len()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let c = construct_lower_bound(&ConstructionSpec::builtin(2, 10, 5)).map_err(|e| e.to_string())?;
    let r = &c.report;
    if r.order != 287 || r.euler_genus != 2 || r.max_degree != 10 || r.diameter != 5 {
        return Err(format!("(2,10,5): {r:?}"));
    }
    if r.lower_bound != BigUint::from(252u32) || r.order < 252 {
        return Err(format!("(2,10,5): lower bound {}", r.lower_bound));
    }
    let small = construct_lower_bound(&ConstructionSpec::builtin(0, 5, 3)).map_err(|e| e.to_string())?;
    if small.report.order != 12 || small.report.diameter != 3 {
        return Err(format!("(0,5,3): {:?}", small.report));
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("287 and 12 vertices in {elapsed:.1?}"))
}

fn criterion_6() -> Outcome {
    let big = |x: u64| BigUint::from(x);
    let m = |d, l| moore(d, l).map_err(|e| e.to_string());
    if m(3, 2)? != big(10) || m(10, 2)? != big(101) {
        return Err("Moore bound values".into());
    }
    let even = params_ell_c(0, Parity::Even);
    if even.ell != 6 || even.c != Coefficient::Integer(big(6)) {
        return Err(format!("even (ℓ, c) = ({}, {})", even.ell, even.c));
    }
    let odd = params_ell_c(0, Parity::Odd);
    if odd.ell != 33 || odd.c != Coefficient::Integer(big(65)) {
        return Err(format!("odd (ℓ, c) = ({}, {})", odd.ell, odd.c));
    }
    let upper = thm_main_upper(0, 10, 2).map_err(|e| e.to_string())?;
    if upper != big(1134) {
        return Err(format!("upper bound {upper}"));
    }
    for delta in 3..=100 {
        for l in 0..=12 {
            if m(delta, l)? != moore_closed_form(delta, l).map_err(|e| e.to_string())? {
                return Err(format!("closed form differs at Δ={delta}, l={l}"));
            }
        }
    }
    Ok("M(3,2)=10, M(10,2)=101, (6,6), (33,65), 1134, closed form".into())
}

/// Random tree decompositions on at most 10 nodes with max degree 3. Each
/// node holds a few private vertices; some tree edges also carry a vertex
/// shared by both ends, and some vertices span a path of three nodes.
fn td_fixtures() -> Vec<(Multigraph, TreeDecomposition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    for nodes in 2..=10usize {
        for _ in 0..40 {
            let mut edges = Vec::new();
            let mut degree = vec![0usize; nodes];
            for child in 1..nodes {
                let parent = loop {
                    let p = rng.gen_range(0..child);
                    if degree[p] < 3 {
                        break p;
                    }
                };
                degree[parent] += 1;
                degree[child] += 1;
                edges.push((parent, child));
            }
            let tree = Tree { nodes, edges };
            let adj = tree.adjacency();
            let mut bags = vec![BTreeSet::new(); nodes];
            let mut n = 0;
            let heavy = rng.gen_range(1..=8);
            for bag in bags.iter_mut() {
                for _ in 0..rng.gen_range(heavy / 2..=heavy) {
                    bag.insert(n);
                    n += 1;
                }
            }
            for &(x, y) in &tree.edges {
                if rng.gen_bool(0.4) {
                    bags[x].insert(n);
                    bags[y].insert(n);
                    n += 1;
                }
            }
            for x in 0..nodes {
                if adj[x].len() >= 2 && rng.gen_bool(0.2) {
                    bags[x].insert(n);
                    bags[adj[x][0].0].insert(n);
                    bags[adj[x][1].0].insert(n);
                    n += 1;
                }
            }
            let mut graph = Multigraph::edgeless(n);
            for bag in &bags {
                let bag: Vec<usize> = bag.iter().copied().collect();
                for _ in 0..bag.len() {
                    let u = bag[rng.gen_range(0..bag.len())];
                    let w = bag[rng.gen_range(0..bag.len())];
                    graph.edges.push((u, w));
                }
            }
            let b = bags.iter().map(BTreeSet::len).max().unwrap_or(0);
            out.push((graph, TreeDecomposition::new(tree, bags, b)));
        }
    }
    out
}

fn subsets(m: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..m {
            cur.push(i);
            if go(i + 1, m, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, m, k, &mut Vec::new(), f)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    for (graph, td) in td_fixtures() {
        if !validate_td(&graph, &td).is_valid() {
            return Err("fixture is not a valid decomposition".into());
        }
        let (n, b, m) = (graph.n, td.bag_bound, td.tree.edges.len());
        if b < 2 {
            continue;
        }
        for ell in 1..=m {
            if n < (3 * ell + 1) * b {
                break;
            }
            runs += 1;
            let result = td_separator(&graph, &td, ell).map_err(|e| format!("ℓ={ell}: {e}"))?;
            let ok = |cut: &[usize]| oracle_components(&td, cut).iter().all(|q| meets(n, ell, b, q.len()));
            if result.cut.len() != ell || !ok(&result.cut) {
                return Err(format!("n={n} b={b} ℓ={ell}: cut {:?} misses the bound", result.cut));
            }
            if !subsets(m, ell, &mut |cut| ok(cut)) {
                return Err(format!("n={n} b={b} ℓ={ell}: no subset meets the bound"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("{runs} fixture runs in {elapsed:.1?}"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for seed in 1..=12u64 {
        let n = 400 + 130 * seed as usize;
        let graph = grow_random(&GrowthSpec::new(Surface::Sphere, n, 100 + seed)).map_err(|e| e.to_string())?;
        let run = separate(&graph, &SeparatorConfig::new(5)).map_err(|e| format!("n={n}: {e}"))?;
        let s = &run.separator.graph;
        let a = simplified_configuration(s, ContractionOrder::SmallestEdgeFirst).map_err(|e| e.to_string())?;
        let b = simplified_configuration(s, ContractionOrder::LargestEdgeFirst).map_err(|e| e.to_string())?;
        let (ia, ib) = (a.invariants(), b.invariants());
        if ia.vertices > 8 || ia.edges > 12 {
            return Err(format!("n={n}: H has {} vertices, {} edges", ia.vertices, ia.edges));
        }
        if ia != ib {
            return Err(format!("n={n}: orders disagree {ia:?} vs {ib:?}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} sphere certificates at ℓ=5"))
}

fn criterion_9(instances: &[Instance], runs: &[SeparatorRun]) -> Outcome {
    for (inst, run) in instances.iter().zip(runs).step_by(7) {
        let again = grow_random(&GrowthSpec::new(inst.surface, inst.n, inst.seed)).map_err(|e| e.to_string())?;
        if sem1::write(&again) != sem1::write(&inst.graph) {
            return Err(format!("{}: SEM1 differs", inst.label()));
        }
        let cert = separate(&again, &SeparatorConfig::new(inst.ell)).map_err(|e| e.to_string())?;
        if cert.certificate.to_json() != run.certificate.to_json() {
            return Err(format!("{}: certificate differs", inst.label()));
        }
    }
    Ok("SEM1 and certificates byte-identical".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let instances = instances();
    let runs: Vec<SeparatorRun> = instances
        .iter()
        .map(|i| separate(&i.graph, &SeparatorConfig::new(i.ell)).unwrap_or_else(|e| panic!("{}: {e}", i.label())))
        .collect();
    let elapsed = start.elapsed();

    let results = [
        ("1 cut guarantee", criterion_1(&instances, &runs, elapsed)),
        ("2 separator certificate", criterion_2(&instances, &runs)),
        ("3 sphere specialization", criterion_3(&instances, &runs)),
        ("4 tree-cotree and decomposition", criterion_4(&instances, &runs)),
        ("5 lower-bound construction", criterion_5()),
        ("6 bound calculators", criterion_6()),
        ("7 exhaustive cut oracle", criterion_7()),
        ("8 simplified configuration", criterion_8()),
        ("9 determinism", criterion_9(&instances, &runs)),
    ];
    let mut failed = false;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed = true;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
