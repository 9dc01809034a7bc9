//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use dim_core::coloring::PropagationRule;
use dim_core::generate::{generate_random_graph, WeightRange};
use dim_core::graph::{connected_components, Edge, Graph};
use dim_core::oracle::{brute_force_solve, enumerate_dims};
use dim_core::search::BranchRule;
use dim_core::{branching_factor, contains_k4, solve, Solution, Status};
use num_bigint::BigUint;

const LEAF_BASE: f64 = 1.1939;

type Outcome = Result<String, String>;

/// One solved instance, kept for the criteria that reuse earlier corpora.
struct Run {
    graph: Graph,
    sol: Solution,
}

fn leaf_bound(n: usize) -> f64 {
    8.0 * LEAF_BASE.powi(n as i32)
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn agree(g: &Graph, sol: &Solution) -> Result<(), String> {
    let truth = brute_force_solve(g).map_err(|e| e.to_string())?;
    if sol.status != truth.status || sol.count != truth.count || sol.min_weight != truth.min_weight {
        return Err(format!(
            "mismatch: engine ({:?}, {}, {:?}) vs oracle ({:?}, {}, {:?}) on\n{}",
            sol.status,
            sol.count,
            sol.min_weight,
            truth.status,
            truth.count,
            truth.min_weight,
            g.to_dimacs()
        ));
    }
    Ok(())
}

fn exhaustive_small(corpus: &mut Vec<Run>) -> Outcome {
    let mut graphs = 0u64;
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            let sol = solve(&g);
            agree(&g, &sol)?;
            corpus.push(Run { graph: g, sol });
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs on n <= 6 agree on status, weight and count"))
}

fn randomized(corpus: &mut Vec<Run>) -> Outcome {
    let weights = WeightRange::integer(-5, 20);
    let (mut checked, mut found, mut negative) = (0u64, 0u64, 0u64);
    let mut seed = 0u64;
    while checked < 600 {
        seed += 1;
        let n = 7 + (seed % 8) as usize;
        let p = [0.15, 0.3, 0.5][(seed / 8 % 3) as usize];
        let g = generate_random_graph(n, p, weights, seed).map_err(|e| e.to_string())?;
        if connected_components(&g).len() != 1 {
            continue;
        }
        let sol = solve(&g);
        agree(&g, &sol)?;
        if sol.status == Status::Found {
            found += 1;
            if g.total_weight(&sol.witness) != sol.min_weight.unwrap() {
                return Err(format!("witness weight differs from reported weight on\n{}", g.to_dimacs()));
            }
        }
        if g.weights().iter().any(|&w| w < 0.0) {
            negative += 1;
        }
        corpus.push(Run { graph: g, sol });
        checked += 1;
    }
    Ok(format!("{checked} connected G(n,p) instances agree ({found} with a DIM, {negative} with negative weights)"))
}

fn branching_constants() -> Outcome {
    let expected: [(&[u32], f64); 4] = [(&[3, 5], 1.1939), (&[2, 7], 1.1908), (&[4, 6], 1.1510), (&[6, 6], 1.1225)];
    let mut parts = Vec::new();
    for (vector, want) in expected {
        let got = branching_factor(vector).map_err(|e| e.to_string())?;
        if (got - want).abs() > 1e-4 {
            return Err(format!("tau{vector:?} = {got}, expected {want}"));
        }
        parts.push(format!("tau{vector:?}={got}"));
    }
    Ok(parts.join(" "))
}

fn large_sparse() -> Vec<Run> {
    let mut runs = Vec::new();
    for n in [30usize, 40, 50] {
        for seed in 0..10u64 {
            let g = generate_random_graph(n, 0.2, WeightRange::UNIT, seed).unwrap();
            let sol = solve(&g);
            runs.push(Run { graph: g, sol });
        }
    }
    runs
}

fn leaf_bound_holds(runs: &[&Run]) -> Outcome {
    let mut worst = 0.0f64;
    for r in runs {
        let ratio = r.sol.stats.leaves as f64 / leaf_bound(r.graph.n());
        if ratio > 1.0 {
            return Err(format!(
                "{} leaves exceed 8*{LEAF_BASE}^{} on\n{}",
                r.sol.stats.leaves,
                r.graph.n(),
                r.graph.to_dimacs()
            ));
        }
        worst = worst.max(ratio);
    }
    Ok(format!("{} runs, worst leaves/bound ratio {worst:.3e}", runs.len()))
}

fn stack_bound_holds(runs: &[&Run]) -> Outcome {
    let mut deepest = 0;
    for r in runs {
        if r.sol.stats.max_stack > r.graph.n() + 1 {
            return Err(format!("stack depth {} on n = {}", r.sol.stats.max_stack, r.graph.n()));
        }
        deepest = deepest.max(r.sol.stats.max_stack);
    }
    Ok(format!("{} runs, deepest stack {deepest}", runs.len()))
}

fn k4_short_circuit(runs: &[&Run]) -> Outcome {
    let mut with_k4 = 0;
    for r in runs {
        if contains_k4(&r.graph).is_some() {
            with_k4 += 1;
            if r.sol.status != Status::NoDim || r.sol.stats.nodes != 0 || r.sol.k4.is_none() {
                return Err(format!("K4 graph not short-circuited:\n{}", r.graph.to_dimacs()));
            }
        }
    }
    // K4 hidden in a long path
    let mut edges: Vec<(usize, usize)> = (1..40).map(|v| (v - 1, v)).collect();
    edges.extend([(10, 12), (10, 13), (11, 13)]);
    let g = Graph::from_edges(40, &edges).unwrap();
    let sol = solve(&g);
    if sol.status != Status::NoDim || sol.stats.nodes != 0 {
        return Err("K4 inside a path was searched".into());
    }
    Ok(format!("{} K4 instances answered noDim with 0 nodes", with_k4 + 1))
}

fn argmin_set(g: &Graph, dims: &[Vec<Edge>]) -> BTreeSet<Vec<Edge>> {
    let best = dims.iter().map(|d| g.total_weight(d)).fold(f64::INFINITY, f64::min);
    dims.iter().filter(|d| g.total_weight(d) == best).cloned().collect()
}

fn structural_invariant(runs: &[&Run]) -> Outcome {
    const OFFSET: f64 = 13.0;
    let mut checked = 0;
    for r in runs {
        let g = &r.graph;
        if g.n() > 10 || connected_components(g).len() != 1 {
            continue;
        }
        let e = enumerate_dims(g, usize::MAX).map_err(|e| e.to_string())?;
        if e.dims.is_empty() {
            continue;
        }
        let sizes: BTreeSet<usize> = e.dims.iter().map(Vec::len).collect();
        if sizes.len() != 1 {
            return Err(format!("DIM sizes {sizes:?} on\n{}", g.to_dimacs()));
        }
        let shifted = g.with_weights(g.weights().iter().map(|w| w + OFFSET).collect());
        if argmin_set(g, &e.dims) != argmin_set(&shifted, &e.dims) {
            return Err(format!("argmin set moved under offset on\n{}", g.to_dimacs()));
        }
        checked += 1;
    }
    Ok(format!("{checked} connected instances with n <= 10: equal DIM sizes, offset-invariant argmin"))
}

fn counting_fixtures() -> Outcome {
    // P9: the leaves of a star are pendant, so the center is black and any
    // of its five neighbors can be its partner
    let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
    let sol = solve(&star);
    agree(&star, &sol)?;
    let p9 = sol.stats.propagation.get(PropagationRule::ContainedNeighborhood);
    if sol.count != BigUint::from(5u32) || p9 == 0 {
        return Err(format!("star: count {}, P9 fired {p9} times", sol.count));
    }

    // s=0 with candidates v=1, v'=2, v''=3; w=4, w'=5, z=6
    let gadget = Graph::from_weighted_edges(
        7,
        [(0, 1, 1.0), (0, 2, 5.0), (0, 3, 9.0), (1, 4, 1.0), (2, 5, 1.0), (4, 5, 1.0), (4, 6, 3.0), (5, 6, 4.0)],
    )
    .unwrap();
    let sol = solve(&gadget);
    agree(&gadget, &sol)?;
    let b3 = sol.stats.branching.get(BranchRule::SharedApex);
    if sol.count != BigUint::from(3u32) || b3 == 0 {
        return Err(format!("gadget: count {}, B3b-iii fired {b3} times", sol.count));
    }
    Ok(format!("star count 5 with P9 x{p9}; gadget count 3 with B3b-iii x{b3}"))
}

fn report(id: u32, name: &str, started: Instant, outcome: Outcome) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("criterion {id} PASS  {name}: {detail} [{secs:.1}s]");
            true
        }
        Err(why) => {
            println!("criterion {id} FAIL  {name}: {why} [{secs:.1}s]");
            false
        }
    }
}

fn main() {
    let mut ok = true;
    let mut exhaustive = Vec::new();
    let mut random = Vec::new();

    let t = Instant::now();
    ok &= report(1, "exhaustive oracle equivalence", t, exhaustive_small(&mut exhaustive));
    let t = Instant::now();
    ok &= report(2, "randomized oracle equivalence", t, randomized(&mut random));
    let t = Instant::now();
    ok &= report(3, "branching factors", t, branching_constants());

    let t = Instant::now();
    let large = large_sparse();
    let all: Vec<&Run> = exhaustive.iter().chain(&random).chain(&large).collect();
    ok &= report(4, "leaf bound", t, leaf_bound_holds(&all));
    let t = Instant::now();
    ok &= report(5, "stack depth", t, stack_bound_holds(&all));
    let t = Instant::now();
    ok &= report(6, "K4 short-circuit", t, k4_short_circuit(&all));

    let t = Instant::now();
    let small: Vec<&Run> = exhaustive.iter().chain(&random).collect();
    ok &= report(7, "equal DIM cardinality", t, structural_invariant(&small));
    let t = Instant::now();
    ok &= report(8, "counting multipliers", t, counting_fixtures());

    if !ok {
        std::process::exit(1);
    }
}
