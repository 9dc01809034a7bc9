//! Branch-and-reduce search over colorings.
//!
//! Each search node propagates its coloring to a fixpoint. Total colorings
//! are leaves that contribute to the count and the weight minimum; stable
//! ones are split by the first applicable branching rule. Pending children
//! live on an explicit stack of `(trail mark, seed assignment)` records, so
//! backtracking is a trail rewind and the stack never holds more than
//! `n + 1` entries.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coloring::{Color, Coloring, PropagationFirings, PropagationOutcome, PropagationRule};
use crate::graph::{connected_components, normalize_weights, unshift_weight, Edge, Graph, Vertex};
use crate::oracle::brute_force_solve;
use crate::patterns::{build_pattern_index, contains_k4, PatternIndex};
use crate::Status;

/// Components up to this many vertices are handed to the brute-force solver.
pub const SMALL_COMPONENT: usize = 4;

/// `S`, `U` and `T` of a stable coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierSets {
    /// Single black vertices, ascending.
    pub singles: Vec<Vertex>,
    /// Uncolored vertices, ascending.
    pub uncolored: Vec<Vertex>,
    /// Uncolored vertices not adjacent to any single, ascending.
    pub outside: Vec<Vertex>,
    /// For an uncolored vertex, its single neighbor (there is at most one in
    /// a stable coloring).
    owner: Vec<Option<Vertex>>,
    in_outside: Vec<bool>,
}

impl FrontierSets {
    pub fn owner(&self, v: Vertex) -> Option<Vertex> {
        self.owner[v]
    }

    pub fn is_outside(&self, v: Vertex) -> bool {
        self.in_outside[v]
    }
}

pub fn frontier(c: &Coloring<'_>) -> FrontierSets {
    let g = c.graph();
    let n = g.n();
    let singles: Vec<Vertex> = c.singles().collect();
    let mut owner = vec![None; n];
    for &s in &singles {
        for &v in g.neighbors(s) {
            if c.color(v) == Color::Uncolored {
                owner[v] = Some(s);
            }
        }
    }
    let uncolored: Vec<Vertex> = (0..n).filter(|&v| c.color(v) == Color::Uncolored).collect();
    let mut in_outside = vec![false; n];
    let outside: Vec<Vertex> = uncolored.iter().copied().filter(|&v| owner[v].is_none()).collect();
    for &v in &outside {
        in_outside[v] = true;
    }
    FrontierSets { singles, uncolored, outside, owner, in_outside }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchRule {
    /// Empty coloring: split on a pivot vertex.
    Empty,
    /// An edge joins candidates of two different singles.
    CrossEdge,
    /// A candidate `v` of single `s` has a neighbor `w` outside every
    /// single's reach, in the general case.
    Generic,
    /// Three candidates, and the other two have no uncolored neighbors.
    IdleMates,
    /// Three candidates, and the mates' outside neighbors are far apart.
    SpreadMates,
    /// Three candidates whose outside neighbors `w`, `w'` are adjacent with
    /// a common neighbor `z`: the two symmetric pairings are merged.
    SharedApex,
    /// Three candidates with none of the above matching; plain split.
    Fallback,
}

impl BranchRule {
    pub const ALL: [BranchRule; 7] = [
        BranchRule::Empty,
        BranchRule::CrossEdge,
        BranchRule::Generic,
        BranchRule::IdleMates,
        BranchRule::SpreadMates,
        BranchRule::SharedApex,
        BranchRule::Fallback,
    ];

    pub fn tag(self) -> &'static str {
        ["B1", "B2", "B3a", "B3b-i", "B3b-ii", "B3b-iii", "B3b-fallback"][self as usize]
    }
}

impl fmt::Display for BranchRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchChild {
    pub vertex: Vertex,
    pub color: Color,
    /// Each total coloring under this child stands for this many.
    pub multiplier: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPlan {
    pub rule: BranchRule,
    pub children: Vec<BranchChild>,
}

impl BranchPlan {
    fn split(rule: BranchRule, v: Vertex) -> Self {
        BranchPlan {
            rule,
            children: vec![
                BranchChild { vertex: v, color: Color::Black, multiplier: 1 },
                BranchChild { vertex: v, color: Color::White, multiplier: 1 },
            ],
        }
    }
}

/// One candidate branching instance: single `s`, its candidate `v`, and an
/// outside neighbor `w` of `v`.
#[derive(Debug, Clone, Copy)]
struct Anchor {
    s: Vertex,
    v: Vertex,
    w: Vertex,
}

/// Picks the first applicable branching rule for a stable, non-total
/// coloring. Instances are scanned singles-first, then candidates, then
/// outside neighbors, all by ascending id.
pub fn select_bifurcation(c: &Coloring<'_>, f: &FrontierSets) -> BranchPlan {
    let g = c.graph();
    if c.is_empty() {
        let pivot = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("n > 0");
        return BranchPlan::split(BranchRule::Empty, pivot);
    }

    let candidates = |s: Vertex| g.neighbors(s).iter().copied().filter(move |&v| f.owner(v) == Some(s));

    for &s in &f.singles {
        for v in candidates(s) {
            if g.neighbors(v).iter().any(|&w| matches!(f.owner(w), Some(t) if t != s)) {
                return BranchPlan::split(BranchRule::CrossEdge, v);
            }
        }
    }

    let outside_of = |v: Vertex| g.neighbors(v).iter().copied().filter(|&w| f.is_outside(w));
    let mut anchors = Vec::new();
    for &s in &f.singles {
        let reach = c.uncolored_nbrs(s);
        for v in candidates(s) {
            let outside_count = outside_of(v).count();
            for w in outside_of(v) {
                if reach != 3 || g.degree(w) != 3 || outside_count >= 2 {
                    return BranchPlan::split(BranchRule::Generic, v);
                }
                anchors.push(Anchor { s, v, w });
            }
        }
    }

    let mut best: Option<(BranchRule, BranchPlan)> = None;
    for a in anchors {
        let plan = classify_three_candidates(c, f, a);
        if best.as_ref().is_none_or(|(r, _)| plan.rule < *r) {
            best = Some((plan.rule, plan));
        }
    }
    if let Some((_, plan)) = best {
        return plan;
    }

    // Only reachable when the graph is disconnected: some component is still
    // untouched.
    let pivot = f
        .uncolored
        .iter()
        .copied()
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("stable non-total coloring has an uncolored vertex");
    BranchPlan::split(BranchRule::Empty, pivot)
}

fn classify_three_candidates(c: &Coloring<'_>, f: &FrontierSets, a: Anchor) -> BranchPlan {
    let g = c.graph();
    let Anchor { s, v, w } = a;
    let mates: Vec<Vertex> = g.neighbors(s).iter().copied().filter(|&u| u != v && f.owner(u) == Some(s)).collect();
    debug_assert_eq!(mates.len(), 2);
    let has_uncolored = |u: Vertex| c.uncolored_nbrs(u) > 0;
    let (v1, v2) = match (has_uncolored(mates[0]), has_uncolored(mates[1])) {
        (false, false) => return BranchPlan::split(BranchRule::IdleMates, v),
        (true, _) => (mates[0], mates[1]),
        (false, true) => (mates[1], mates[0]),
    };
    let Some(w1) = g.neighbors(v1).iter().copied().find(|&x| x != w && f.is_outside(x)) else {
        return BranchPlan::split(BranchRule::Fallback, v);
    };
    let mut union: Vec<Vertex> = g.neighbors(w).iter().chain(g.neighbors(w1)).copied().collect();
    union.sort_unstable();
    union.dedup();
    if union.len() > 5 || !g.has_edge(w, w1) {
        return BranchPlan::split(BranchRule::SpreadMates, v);
    }
    let Some(z) = g.neighbors(w).iter().copied().find(|&x| g.has_edge(w1, x)) else {
        return BranchPlan::split(BranchRule::Fallback, v);
    };
    let weight = |x, y| g.weight(x, y).expect("edge");
    let pick = if weight(s, v) + weight(w1, z) <= weight(s, v1) + weight(w, z) { v } else { v1 };
    BranchPlan {
        rule: BranchRule::SharedApex,
        children: vec![
            BranchChild { vertex: v2, color: Color::Black, multiplier: 1 },
            BranchChild { vertex: pick, color: Color::Black, multiplier: 2 },
        ],
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchFirings(pub [u64; 7]);

impl BranchFirings {
    pub fn get(&self, rule: BranchRule) -> u64 {
        self.0[rule as usize]
    }

    fn bump(&mut self, rule: BranchRule) {
        self.0[rule as usize] += 1;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Colorings taken off the stack and propagated.
    pub nodes: u64,
    /// Nodes that ended invalid or total.
    pub leaves: u64,
    /// Largest number of pending colorings on the stack.
    pub max_stack: usize,
    pub propagation: PropagationFirings,
    pub branching: BranchFirings,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.max_stack = self.max_stack.max(other.max_stack);
        self.propagation.add(&other.propagation);
        for (a, b) in self.branching.0.iter_mut().zip(other.branching.0) {
            *a += b;
        }
    }

    /// Every rule tag with its firing count, including zeros.
    pub fn rule_firings(&self) -> BTreeMap<String, u64> {
        let mut out = BTreeMap::new();
        for r in PropagationRule::ALL {
            out.insert(r.tag().to_string(), self.propagation.get(r));
        }
        for r in BranchRule::ALL {
            out.insert(r.tag().to_string(), self.branching.get(r));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Minimum weight with a witness, plus the count, in one pass.
    #[default]
    Full,
    /// Same branches, no weight bookkeeping.
    CountOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub status: Status,
    /// Minimum DIM weight; `None` when there is no DIM or in count-only mode.
    pub min_weight: Option<f64>,
    /// A minimum-weight DIM, sorted; empty in count-only mode.
    pub witness: Vec<Edge>,
    pub count: BigUint,
    pub stats: SearchStats,
    /// Set when the graph was rejected up front for containing a K4.
    pub k4: Option<[Vertex; 4]>,
}

impl Solution {
    fn no_dim(stats: SearchStats, k4: Option<[Vertex; 4]>) -> Self {
        Solution { status: Status::NoDim, min_weight: None, witness: Vec::new(), count: BigUint::zero(), stats, k4 }
    }
}

struct Frame {
    mark: usize,
    seed: Option<BranchChild>,
}

/// Searches one connected, K4-free graph with nonnegative weights.
pub fn solve_connected(g: &Graph, idx: &PatternIndex) -> Solution {
    solve_connected_with(g, idx, SearchMode::Full)
}

pub fn solve_connected_with(g: &Graph, idx: &PatternIndex, mode: SearchMode) -> Solution {
    let mut c = Coloring::new(g, idx);
    let mut stats = SearchStats::default();
    let mut count = BigUint::zero();
    let mut best: Option<(f64, Vec<Edge>)> = None;

    let mut stack = vec![Frame { mark: 0, seed: None }];
    stats.max_stack = 1;
    while let Some(frame) = stack.pop() {
        c.restore_to_mark(frame.mark);
        stats.nodes += 1;
        if let Some(seed) = frame.seed {
            c.assign_with_multiplier(seed.vertex, seed.color, seed.multiplier);
        }
        match c.propagate() {
            PropagationOutcome::Invalid => stats.leaves += 1,
            PropagationOutcome::Total => {
                stats.leaves += 1;
                count += c.multiplier();
                if mode == SearchMode::Full {
                    let w = c.total_weight();
                    if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                        best = Some((w, c.extract_dim().0));
                    }
                }
            }
            PropagationOutcome::Stable => {
                let plan = select_bifurcation(&c, &frontier(&c));
                stats.branching.bump(plan.rule);
                let mark = c.trail().len();
                for &child in plan.children.iter().rev() {
                    stack.push(Frame { mark, seed: Some(child) });
                }
                stats.max_stack = stats.max_stack.max(stack.len());
            }
        }
    }
    stats.propagation = *c.firings();

    if count.is_zero() {
        return Solution::no_dim(stats, None);
    }
    let (min_weight, witness) = match best {
        Some((w, e)) => (Some(w), e),
        None => (None, Vec::new()),
    };
    Solution { status: Status::Found, min_weight, witness, count, stats, k4: None }
}

/// Solves an arbitrary graph: K4 check, weight shift, per-component search,
/// and recombination (weights add, counts multiply).
pub fn solve(g: &Graph) -> Solution {
    solve_with(g, SearchMode::Full)
}

pub fn solve_with(g: &Graph, mode: SearchMode) -> Solution {
    if let Some(k4) = contains_k4(g) {
        return Solution::no_dim(SearchStats::default(), Some(k4));
    }
    let (shifted, shift) = normalize_weights(g);
    let mut stats = SearchStats::default();
    let mut count = BigUint::one();
    let mut weight = 0.0;
    let mut witness = Vec::new();

    for comp in connected_components(&shifted) {
        let part = if comp.graph.n() <= SMALL_COMPONENT {
            let r = brute_force_solve(&comp.graph).expect("small component");
            Solution {
                status: r.status,
                min_weight: r.min_weight,
                witness: r.witness,
                count: r.count,
                stats: SearchStats::default(),
                k4: None,
            }
        } else {
            let idx = build_pattern_index(&comp.graph);
            solve_connected_with(&comp.graph, &idx, mode)
        };
        stats.absorb(&part.stats);
        if part.status == Status::NoDim {
            return Solution::no_dim(stats, None);
        }
        count *= part.count;
        if mode == SearchMode::Full {
            weight += part.min_weight.expect("found");
            witness.extend(part.witness.iter().map(|&e| comp.lift_edge(e)));
        }
    }
    witness.sort_unstable();
    let min_weight = (mode == SearchMode::Full).then(|| unshift_weight(weight, witness.len(), shift));
    Solution { status: Status::Found, min_weight, witness, count, stats, k4: None }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchingVectorError {
    #[error("a branching vector needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("branching vector entries must be positive")]
    NonPositive,
}

/// The branching factor of `(t1, ..., tr)`: the unique root `x > 1` of
/// `sum x^(-ti) = 1`, rounded to six decimals.
pub fn branching_factor(t: &[u32]) -> Result<f64, BranchingVectorError> {
    if t.len() < 2 {
        return Err(BranchingVectorError::TooShort(t.len()));
    }
    if t.contains(&0) {
        return Err(BranchingVectorError::NonPositive);
    }
    let excess = |x: f64| t.iter().map(|&ti| x.powi(-(ti as i32))).sum::<f64>() - 1.0;
    // excess(1) = r - 1 > 0 and excess(r) <= 0
    let (mut lo, mut hi) = (1.0f64, t.len() as f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if excess(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi) * 1e6).round() / 1e6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_extending;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn partial(c: &Coloring<'_>) -> Vec<Option<bool>> {
        c.colors()
            .iter()
            .map(|&col| match col {
                Color::Black => Some(true),
                Color::White => Some(false),
                Color::Uncolored => None,
            })
            .collect()
    }

    #[test]
    fn frontier_examples() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let idx = build_pattern_index(&p4);
        let c = Coloring::new(&p4, &idx);
        let f = frontier(&c);
        assert!(f.singles.is_empty());
        assert_eq!(f.uncolored, vec![0, 1, 2, 3]);
        assert_eq!(f.outside, vec![0, 1, 2, 3]);

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let idx = build_pattern_index(&star);
        let mut c = Coloring::new(&star, &idx);
        c.assign_color(0, Color::Black);
        let f = frontier(&c);
        assert_eq!(f.singles, vec![0]);
        assert_eq!(f.uncolored, vec![1, 2, 3]);
        assert!(f.outside.is_empty());

        let path = g(3, &[(0, 1), (1, 2)]);
        let idx = build_pattern_index(&path);
        let mut c = Coloring::new(&path, &idx);
        c.assign_color(0, Color::Black);
        let f = frontier(&c);
        assert_eq!((f.singles, f.uncolored, f.outside), (vec![0], vec![1, 2], vec![2]));
    }

    #[test]
    fn empty_coloring_splits_on_max_degree() {
        let graph = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]);
        let idx = build_pattern_index(&graph);
        let c = Coloring::new(&graph, &idx);
        let plan = select_bifurcation(&c, &frontier(&c));
        assert_eq!(plan.rule, BranchRule::Empty);
        assert_eq!(plan.children[0].vertex, 1);
    }

    #[test]
    fn cross_edge_between_two_singles() {
        // 0 and 3 are forced black by the pendants 4 and 5
        let graph = g(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (3, 5)]);
        let idx = build_pattern_index(&graph);
        let mut c = Coloring::new(&graph, &idx);
        assert_eq!(c.propagate(), PropagationOutcome::Stable);
        let f = frontier(&c);
        assert_eq!(f.singles, vec![0, 3]);
        let plan = select_bifurcation(&c, &f);
        assert_eq!(plan.rule, BranchRule::CrossEdge);
        assert_eq!(plan.children[0].vertex, 1);
    }

    #[test]
    fn generic_split_with_two_candidates() {
        // single 0 (forced by pendant 3) with candidates {1, 3}; 1 reaches 2
        let graph = g(6, &[(0, 1), (0, 3), (1, 2), (2, 4), (2, 5), (4, 5)]);
        let idx = build_pattern_index(&graph);
        let mut c = Coloring::new(&graph, &idx);
        assert_eq!(c.propagate(), PropagationOutcome::Stable);
        let f = frontier(&c);
        assert_eq!(f.singles, vec![0]);
        assert_eq!(f.outside, vec![2, 4, 5]);
        assert_eq!(c.uncolored_nbrs(0), 2);
        let plan = select_bifurcation(&c, &f);
        assert_eq!(plan.rule, BranchRule::Generic);
        assert_eq!(plan.children, BranchPlan::split(BranchRule::Generic, 1).children);

        // the two children partition the total valid extensions
        let parent = brute_force_extending(&graph, &partial(&c)).unwrap().count;
        let mut sum = BigUint::zero();
        for child in &plan.children {
            let mut p = partial(&c);
            p[child.vertex] = Some(child.color == Color::Black);
            sum += brute_force_extending(&graph, &p).unwrap().count;
        }
        assert_eq!(sum, parent);
        assert_eq!(parent, BigUint::from(3u32));
    }

    #[test]
    fn shared_apex_gadget() {
        // s=0 with candidates v=1, v'=2, v''=3 (3 pendant, so 0 is forced
        // black); w=4, w'=5, z=6 form a triangle
        let graph = Graph::from_weighted_edges(
            7,
            [(0, 1, 1.0), (0, 2, 5.0), (0, 3, 9.0), (1, 4, 1.0), (2, 5, 1.0), (4, 5, 1.0), (4, 6, 3.0), (5, 6, 4.0)],
        )
        .unwrap();
        let idx = build_pattern_index(&graph);
        let mut c = Coloring::new(&graph, &idx);
        assert_eq!(c.propagate(), PropagationOutcome::Stable);
        let plan = select_bifurcation(&c, &frontier(&c));
        assert_eq!(plan.rule, BranchRule::SharedApex);
        // sv + w'z = 1 + 4 <= sv' + wz = 5 + 3
        assert_eq!(
            plan.children,
            vec![
                BranchChild { vertex: 3, color: Color::Black, multiplier: 1 },
                BranchChild { vertex: 1, color: Color::Black, multiplier: 2 },
            ]
        );

        let sol = solve_connected(&graph, &idx);
        let truth = brute_force_solve(&graph).unwrap();
        assert_eq!(sol.count, truth.count);
        assert_eq!(sol.count, BigUint::from(3u32));
        assert_eq!(sol.min_weight, truth.min_weight);
        assert_eq!(sol.stats.branching.get(BranchRule::SharedApex), 1);
    }

    #[test]
    fn solve_connected_examples() {
        let p3 = Graph::from_weighted_edges(3, [(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        let idx = build_pattern_index(&p3);
        let s = solve_connected(&p3, &idx);
        assert_eq!(s.status, Status::Found);
        assert_eq!(s.min_weight, Some(1.0));
        assert_eq!(s.witness, vec![(0, 1)]);
        assert_eq!(s.count, BigUint::from(2u32));

        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let s = solve_connected(&c4, &build_pattern_index(&c4));
        assert_eq!(s.status, Status::NoDim);
        assert!(s.count.is_zero());

        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let s = solve_connected(&k3, &build_pattern_index(&k3));
        assert_eq!(s.min_weight, Some(1.0));
        assert_eq!(s.count, BigUint::from(3u32));

        let k1 = Graph::empty(1);
        let s = solve_connected(&k1, &build_pattern_index(&k1));
        assert_eq!((s.status, s.count.clone()), (Status::Found, BigUint::one()));
        assert!(s.witness.is_empty());
    }

    #[test]
    fn solve_examples() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let s = solve(&k4);
        assert_eq!(s.status, Status::NoDim);
        assert_eq!(s.k4, Some([0, 1, 2, 3]));
        assert_eq!(s.stats.nodes, 0);

        let two_k2 = Graph::from_weighted_edges(4, [(0, 1, 2.5), (2, 3, -1.0)]).unwrap();
        let s = solve(&two_k2);
        assert_eq!(s.min_weight, Some(1.5));
        assert_eq!(s.count, BigUint::one());
        assert_eq!(s.witness, vec![(0, 1), (2, 3)]);

        let k2_c4 = g(6, &[(0, 1), (2, 3), (3, 4), (4, 5), (2, 5)]);
        assert_eq!(solve(&k2_c4).status, Status::NoDim);
    }

    #[test]
    fn count_only_matches_full() {
        let graph = g(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4)]);
        let full = solve(&graph);
        let counted = solve_with(&graph, SearchMode::CountOnly);
        assert_eq!(full.count, counted.count);
        assert_eq!(full.stats.nodes, counted.stats.nodes);
        assert_eq!(counted.min_weight, None);
    }

    #[test]
    fn branching_factor_values() {
        assert!((branching_factor(&[3, 5]).unwrap() - 1.1939).abs() <= 1e-4);
        assert!((branching_factor(&[2, 7]).unwrap() - 1.1908).abs() <= 1e-4);
        assert!((branching_factor(&[6, 6]).unwrap() - 1.1225).abs() <= 1e-4);
        assert_eq!(branching_factor(&[1, 1]).unwrap(), 2.0);
        assert_eq!(branching_factor(&[4]), Err(BranchingVectorError::TooShort(1)));
        assert_eq!(branching_factor(&[0, 2]), Err(BranchingVectorError::NonPositive));
    }
}
