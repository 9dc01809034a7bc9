//! Partial black/white colorings with incremental neighbor counters, an undo
//! trail, and the forcing rules that extend a coloring to a fixpoint.
//!
//! A total coloring is valid when no two white vertices are adjacent and
//! every black vertex has exactly one black neighbor; its black-black edges
//! are then a dominating induced matching. A partial coloring is valid when
//! no two whites are adjacent, every black vertex has at most one black
//! neighbor, and every black vertex without a black neighbor (a *single*)
//! still has an uncolored neighbor.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::{Edge, Graph, Vertex};
use crate::patterns::PatternIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Uncolored,
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
            Color::Uncolored => Color::Uncolored,
        }
    }
}

/// Forcing rules, in the order they are listed (not the order they run).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropagationRule {
    /// Induced diamond: the two degree-3 vertices black, the others white.
    Diamond,
    /// The neighbor of a degree-1 vertex is black.
    Pendant,
    /// Every neighbor of a white vertex is black.
    WhiteNeighbor,
    /// Every other neighbor of a paired black vertex is white.
    PairedNeighbor,
    /// A vertex with two black neighbors is white.
    TwoBlackNeighbors,
    /// A single with exactly one uncolored neighbor takes it as its pair.
    LastCandidate,
    /// Induced paw: the two odd-degree vertices differ.
    Paw,
    /// Induced C4: cycle neighbors differ.
    Cycle4,
    /// A single whose candidates only see its closed neighborhood takes the
    /// lightest candidate; the others are interchangeable for counting.
    ContainedNeighborhood,
}

impl PropagationRule {
    pub const ALL: [PropagationRule; 9] = [
        PropagationRule::Diamond,
        PropagationRule::Pendant,
        PropagationRule::WhiteNeighbor,
        PropagationRule::PairedNeighbor,
        PropagationRule::TwoBlackNeighbors,
        PropagationRule::LastCandidate,
        PropagationRule::Paw,
        PropagationRule::Cycle4,
        PropagationRule::ContainedNeighborhood,
    ];

    /// Short tag, `P1` through `P9`.
    pub fn tag(self) -> &'static str {
        ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"][self as usize]
    }
}

impl fmt::Display for PropagationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Number of vertices colored by each forcing rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PropagationFirings(pub [u64; 9]);

impl PropagationFirings {
    pub fn get(&self, rule: PropagationRule) -> u64 {
        self.0[rule as usize]
    }

    fn bump(&mut self, rule: PropagationRule) {
        self.0[rule as usize] += 1;
    }

    pub fn add(&mut self, other: &PropagationFirings) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailEntry {
    pub vertex: Vertex,
    pub color: Color,
    /// Factor multiplied into the count multiplier by this step.
    pub multiplier: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagationOutcome {
    Invalid,
    /// Every vertex colored and the coloring is valid.
    Total,
    /// Valid and partial, with no forcing rule left to apply.
    Stable,
}

/// The rollback-relevant part of a [`Coloring`], for equality checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringState {
    pub color: Vec<Color>,
    pub black_nbrs: Vec<u32>,
    pub white_nbrs: Vec<u32>,
    pub uncolored_nbrs: Vec<u32>,
    pub singles: Vec<Vertex>,
    pub uncolored_count: usize,
    pub trail: Vec<TrailEntry>,
    pub multiplier: BigUint,
    pub white_white_edges: usize,
    pub overloaded_blacks: usize,
}

#[derive(Debug, Clone)]
pub struct Coloring<'g> {
    g: &'g Graph,
    idx: &'g PatternIndex,
    /// Colors forced by the graph structure alone (diamonds, pendants).
    fixed: Vec<(Vertex, Color, PropagationRule)>,
    fixed_conflict: bool,

    color: Vec<Color>,
    black_nbrs: Vec<u32>,
    white_nbrs: Vec<u32>,
    uncolored_nbrs: Vec<u32>,
    singles: BTreeSet<Vertex>,
    uncolored_count: usize,
    trail: Vec<TrailEntry>,
    multiplier: BigUint,
    white_white_edges: usize,
    /// Black vertices with two or more black neighbors.
    overloaded_blacks: usize,

    queue: VecDeque<Vertex>,
    queued: Vec<bool>,
    stamp: Vec<u32>,
    epoch: u32,
    firings: PropagationFirings,
}

impl<'g> Coloring<'g> {
    /// The empty coloring. `idx` must be the pattern index of `g`.
    pub fn new(g: &'g Graph, idx: &'g PatternIndex) -> Self {
        let n = g.n();
        let mut want: Vec<Option<(Color, PropagationRule)>> = vec![None; n];
        let mut fixed_conflict = false;
        let mut require = |v: Vertex, c: Color, rule: PropagationRule| match want[v] {
            None => want[v] = Some((c, rule)),
            Some((prev, _)) if prev != c => fixed_conflict = true,
            _ => {}
        };
        for d in &idx.diamonds {
            for &h in &d.hubs {
                require(h, Color::Black, PropagationRule::Diamond);
            }
            for &t in &d.tips {
                require(t, Color::White, PropagationRule::Diamond);
            }
        }
        for v in 0..n {
            if g.degree(v) == 1 {
                require(g.neighbors(v)[0], Color::Black, PropagationRule::Pendant);
            }
        }
        let fixed = want.iter().enumerate().filter_map(|(v, w)| w.map(|(c, r)| (v, c, r))).collect();

        Coloring {
            g,
            idx,
            fixed,
            fixed_conflict,
            color: vec![Color::Uncolored; n],
            black_nbrs: vec![0; n],
            white_nbrs: vec![0; n],
            uncolored_nbrs: (0..n).map(|v| g.degree(v) as u32).collect(),
            singles: BTreeSet::new(),
            uncolored_count: n,
            trail: Vec::with_capacity(n),
            multiplier: BigUint::one(),
            white_white_edges: 0,
            overloaded_blacks: 0,
            queue: VecDeque::with_capacity(n),
            queued: vec![false; n],
            stamp: vec![0; n],
            epoch: 0,
            firings: PropagationFirings::default(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn patterns(&self) -> &'g PatternIndex {
        self.idx
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Color {
        self.color[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    #[inline]
    pub fn black_nbrs(&self, v: Vertex) -> u32 {
        self.black_nbrs[v]
    }

    #[inline]
    pub fn white_nbrs(&self, v: Vertex) -> u32 {
        self.white_nbrs[v]
    }

    #[inline]
    pub fn uncolored_nbrs(&self, v: Vertex) -> u32 {
        self.uncolored_nbrs[v]
    }

    /// Single black vertices, ascending.
    pub fn singles(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.singles.iter().copied()
    }

    pub fn is_single(&self, v: Vertex) -> bool {
        self.singles.contains(&v)
    }

    /// The black neighbor of a paired black vertex.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        if self.color[v] != Color::Black || self.black_nbrs[v] != 1 {
            return None;
        }
        self.g.neighbors(v).iter().copied().find(|&u| self.color[u] == Color::Black)
    }

    pub fn uncolored_count(&self) -> usize {
        self.uncolored_count
    }

    pub fn is_empty(&self) -> bool {
        self.uncolored_count == self.g.n()
    }

    pub fn is_total(&self) -> bool {
        self.uncolored_count == 0
    }

    pub fn trail(&self) -> &[TrailEntry] {
        &self.trail
    }

    /// Number of total valid colorings represented by each total valid
    /// coloring reached from here.
    pub fn multiplier(&self) -> &BigUint {
        &self.multiplier
    }

    pub fn firings(&self) -> &PropagationFirings {
        &self.firings
    }

    /// True while an assignment has put two whites next to each other or
    /// given a black vertex two black neighbors.
    pub fn has_conflict(&self) -> bool {
        self.fixed_conflict || self.white_white_edges > 0 || self.overloaded_blacks > 0
    }

    pub fn state(&self) -> ColoringState {
        ColoringState {
            color: self.color.clone(),
            black_nbrs: self.black_nbrs.clone(),
            white_nbrs: self.white_nbrs.clone(),
            uncolored_nbrs: self.uncolored_nbrs.clone(),
            singles: self.singles.iter().copied().collect(),
            uncolored_count: self.uncolored_count,
            trail: self.trail.clone(),
            multiplier: self.multiplier.clone(),
            white_white_edges: self.white_white_edges,
            overloaded_blacks: self.overloaded_blacks,
        }
    }

    /// Colors an uncolored vertex. Returns true when this assignment
    /// introduced a white-white edge or a black vertex with two black
    /// neighbors.
    ///
    /// Panics if `v` is already colored or `color` is `Uncolored`.
    pub fn assign_color(&mut self, v: Vertex, color: Color) -> bool {
        self.assign_with_multiplier(v, color, 1)
    }

    /// [`assign_color`](Self::assign_color), also multiplying the count
    /// multiplier by `multiplier` until this step is undone.
    pub fn assign_with_multiplier(&mut self, v: Vertex, color: Color, multiplier: u64) -> bool {
        assert_eq!(self.color[v], Color::Uncolored, "vertex {v} is already colored");
        assert_ne!(color, Color::Uncolored);
        assert!(multiplier >= 1);
        let before = self.white_white_edges + self.overloaded_blacks;
        let g = self.g;

        self.color[v] = color;
        self.uncolored_count -= 1;
        match color {
            Color::White => {
                self.white_white_edges += self.white_nbrs[v] as usize;
                for &u in g.neighbors(v) {
                    self.uncolored_nbrs[u] -= 1;
                    self.white_nbrs[u] += 1;
                }
            }
            Color::Black => {
                for &u in g.neighbors(v) {
                    self.uncolored_nbrs[u] -= 1;
                    self.black_nbrs[u] += 1;
                    if self.color[u] == Color::Black {
                        match self.black_nbrs[u] {
                            1 => {
                                self.singles.remove(&u);
                            }
                            2 => self.overloaded_blacks += 1,
                            _ => {}
                        }
                    }
                }
                match self.black_nbrs[v] {
                    0 => {
                        self.singles.insert(v);
                    }
                    1 => {}
                    _ => self.overloaded_blacks += 1,
                }
            }
            Color::Uncolored => unreachable!(),
        }
        if multiplier != 1 {
            self.multiplier *= multiplier;
        }
        self.trail.push(TrailEntry { vertex: v, color, multiplier });
        self.white_white_edges + self.overloaded_blacks > before
    }

    fn undo_last(&mut self) {
        let TrailEntry { vertex: v, color, multiplier } = self.trail.pop().expect("trail is empty");
        let g = self.g;
        match color {
            Color::White => {
                for &u in g.neighbors(v) {
                    self.uncolored_nbrs[u] += 1;
                    self.white_nbrs[u] -= 1;
                }
                self.white_white_edges -= self.white_nbrs[v] as usize;
            }
            Color::Black => {
                match self.black_nbrs[v] {
                    0 => {
                        self.singles.remove(&v);
                    }
                    1 => {}
                    _ => self.overloaded_blacks -= 1,
                }
                for &u in g.neighbors(v) {
                    if self.color[u] == Color::Black {
                        match self.black_nbrs[u] {
                            1 => {
                                self.singles.insert(u);
                            }
                            2 => self.overloaded_blacks -= 1,
                            _ => {}
                        }
                    }
                    self.uncolored_nbrs[u] += 1;
                    self.black_nbrs[u] -= 1;
                }
            }
            Color::Uncolored => unreachable!(),
        }
        self.color[v] = Color::Uncolored;
        self.uncolored_count += 1;
        if multiplier != 1 {
            self.multiplier /= multiplier;
        }
    }

    /// Undoes assignments until the trail has length `mark`.
    pub fn restore_to_mark(&mut self, mark: usize) {
        assert!(mark <= self.trail.len());
        while self.trail.len() > mark {
            self.undo_last();
        }
    }

    fn enqueue(&mut self, v: Vertex) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push_back(v);
        }
    }

    fn force(&mut self, v: Vertex, color: Color, rule: PropagationRule, multiplier: u64) {
        self.assign_with_multiplier(v, color, multiplier);
        self.firings.bump(rule);
        self.enqueue(v);
        for &u in self.g.neighbors(v) {
            self.enqueue(u);
        }
    }

    fn clear_queue(&mut self) {
        for v in self.queue.drain(..) {
            self.queued[v] = false;
        }
    }

    /// Applies the forcing rules until none applies or the coloring becomes
    /// invalid. The containment rule (P9) is only tried once all other rules
    /// are exhausted.
    pub fn propagate(&mut self) -> PropagationOutcome {
        let outcome = self.run_propagation();
        self.clear_queue();
        outcome
    }

    fn run_propagation(&mut self) -> PropagationOutcome {
        if self.has_conflict() {
            return PropagationOutcome::Invalid;
        }
        for i in 0..self.fixed.len() {
            let (v, c, rule) = self.fixed[i];
            match self.color[v] {
                Color::Uncolored => self.force(v, c, rule, 1),
                have if have != c => return PropagationOutcome::Invalid,
                _ => {}
            }
        }
        for v in 0..self.g.n() {
            self.enqueue(v);
        }
        loop {
            while let Some(x) = self.queue.pop_front() {
                self.queued[x] = false;
                if self.has_conflict() || !self.inspect(x) {
                    return PropagationOutcome::Invalid;
                }
            }
            if self.has_conflict() {
                return PropagationOutcome::Invalid;
            }
            match self.find_contained_single() {
                Some((v, k)) => self.force(v, Color::Black, PropagationRule::ContainedNeighborhood, k),
                None => break,
            }
        }
        if self.uncolored_count > 0 {
            PropagationOutcome::Stable
        } else if self.validate_total() {
            PropagationOutcome::Total
        } else {
            PropagationOutcome::Invalid
        }
    }

    /// Applies every local rule centered on `x`. Returns false on a single
    /// with no uncolored neighbor left.
    fn inspect(&mut self, x: Vertex) -> bool {
        let g = self.g;
        match self.color[x] {
            Color::Uncolored => {
                if self.white_nbrs[x] > 0 {
                    self.force(x, Color::Black, PropagationRule::WhiteNeighbor, 1);
                } else if self.black_nbrs[x] >= 2 {
                    self.force(x, Color::White, PropagationRule::TwoBlackNeighbors, 1);
                }
                return true;
            }
            Color::White => {
                for &u in g.neighbors(x) {
                    if self.color[u] == Color::Uncolored {
                        self.force(u, Color::Black, PropagationRule::WhiteNeighbor, 1);
                    }
                }
            }
            Color::Black => match self.black_nbrs[x] {
                0 => match self.uncolored_nbrs[x] {
                    0 => return false,
                    1 => {
                        let u = g
                            .neighbors(x)
                            .iter()
                            .copied()
                            .find(|&u| self.color[u] == Color::Uncolored)
                            .expect("counter says one uncolored neighbor");
                        self.force(u, Color::Black, PropagationRule::LastCandidate, 1);
                    }
                    _ => {}
                },
                1 => {
                    for &u in g.neighbors(x) {
                        if self.color[u] == Color::Uncolored {
                            self.force(u, Color::White, PropagationRule::PairedNeighbor, 1);
                        }
                    }
                }
                _ => return true,
            },
        }
        self.inspect_patterns(x);
        true
    }

    fn inspect_patterns(&mut self, x: Vertex) {
        let idx = self.idx;
        let c = self.color[x];
        for &pi in idx.paws_at(x) {
            let [a, b] = idx.paws[pi].odd;
            let other = if a == x { b } else { a };
            if self.color[other] == Color::Uncolored {
                self.force(other, c.opposite(), PropagationRule::Paw, 1);
            }
        }
        for &ci in idx.c4s_at(x) {
            let q = &idx.c4s[ci];
            let pos = q.cycle.iter().position(|&v| v == x).expect("membership list");
            for u in q.around(pos) {
                if self.color[u] == Color::Uncolored {
                    self.force(u, c.opposite(), PropagationRule::Cycle4, 1);
                }
            }
        }
    }

    /// First single `s` (by id) whose uncolored neighbors all have their
    /// neighborhood inside `N[s]`. Returns the lightest such neighbor (ties
    /// to the lower id) and the number of candidates.
    fn find_contained_single(&mut self) -> Option<(Vertex, u64)> {
        let g = self.g;
        let singles: Vec<Vertex> = self.singles.iter().copied().collect();
        for s in singles {
            self.epoch += 1;
            let epoch = self.epoch;
            self.stamp[s] = epoch;
            for &u in g.neighbors(s) {
                self.stamp[u] = epoch;
            }
            let mut best: Option<(f64, Vertex)> = None;
            let mut candidates = 0u64;
            let mut contained = true;
            for (&v, &e) in g.neighbors(s).iter().zip(g.incident_edges(s)) {
                if self.color[v] != Color::Uncolored {
                    continue;
                }
                if g.neighbors(v).iter().any(|&y| self.stamp[y] != epoch) {
                    contained = false;
                    break;
                }
                candidates += 1;
                let w = g.edge_weight(e);
                if best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, v));
                }
            }
            if contained {
                if let Some((_, v)) = best {
                    return Some((v, candidates));
                }
            }
        }
        None
    }

    /// Checks a total coloring from scratch: no white-white edge and every
    /// black vertex with exactly one black neighbor.
    pub fn validate_total(&self) -> bool {
        let g = self.g;
        if self.uncolored_count != 0 {
            return false;
        }
        let no_white_edge =
            g.edges().iter().all(|&(u, v)| !(self.color[u] == Color::White && self.color[v] == Color::White));
        no_white_edge
            && (0..g.n())
                .filter(|&v| self.color[v] == Color::Black)
                .all(|v| g.neighbors(v).iter().filter(|&&u| self.color[u] == Color::Black).count() == 1)
    }

    /// The black-black edges of a valid total coloring and their total weight.
    pub fn extract_dim(&self) -> (Vec<Edge>, f64) {
        let g = self.g;
        let mut edges = Vec::new();
        let mut weight = 0.0;
        for v in 0..g.n() {
            if self.color[v] != Color::Black {
                continue;
            }
            for (&u, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                if u > v && self.color[u] == Color::Black {
                    edges.push((v, u));
                    weight += g.edge_weight(e);
                }
            }
        }
        (edges, weight)
    }

    /// Sum of pair-edge weights, without materializing the edge list.
    pub fn total_weight(&self) -> f64 {
        let g = self.g;
        g.edges()
            .iter()
            .zip(g.weights())
            .filter(|(&(u, v), _)| self.color[u] == Color::Black && self.color[v] == Color::Black)
            .map(|(_, w)| w)
            .sum()
    }

    /// Recomputes every counter from the colors and compares. For tests and
    /// debug assertions.
    pub fn counters_consistent(&self) -> bool {
        let g = self.g;
        let mut white_white = 0;
        let mut overloaded = 0;
        let mut singles = BTreeSet::new();
        for v in 0..g.n() {
            let count = |c| g.neighbors(v).iter().filter(|&&u| self.color[u] == c).count() as u32;
            let (b, w, u) = (count(Color::Black), count(Color::White), count(Color::Uncolored));
            if (b, w, u) != (self.black_nbrs[v], self.white_nbrs[v], self.uncolored_nbrs[v]) {
                return false;
            }
            match self.color[v] {
                Color::White => white_white += w as usize,
                Color::Black if b == 0 => {
                    singles.insert(v);
                }
                Color::Black if b >= 2 => overloaded += 1,
                _ => {}
            }
        }
        let uncolored = self.color.iter().filter(|&&c| c == Color::Uncolored).count();
        white_white / 2 == self.white_white_edges
            && overloaded == self.overloaded_blacks
            && singles == self.singles
            && uncolored == self.uncolored_count
            && self.trail.len() + uncolored == g.n()
    }

    /// Exhaustive scan for any forcing rule that would still color a vertex.
    /// Independent of the work queue; used to check fixpoints.
    pub fn find_applicable_rule(&self) -> Option<(PropagationRule, Vertex)> {
        use PropagationRule::*;
        let g = self.g;
        let idx = self.idx;
        let col = |v: Vertex| self.color[v];
        let unc = |v: Vertex| col(v) == Color::Uncolored;
        let black_count = |v: Vertex| g.neighbors(v).iter().filter(|&&u| col(u) == Color::Black).count();

        for d in &idx.diamonds {
            for &h in &d.hubs {
                if col(h) != Color::Black {
                    return Some((Diamond, h));
                }
            }
            for &t in &d.tips {
                if col(t) != Color::White {
                    return Some((Diamond, t));
                }
            }
        }
        for v in 0..g.n() {
            if g.degree(v) == 1 && col(g.neighbors(v)[0]) != Color::Black {
                return Some((Pendant, g.neighbors(v)[0]));
            }
        }
        for v in (0..g.n()).filter(|&v| unc(v)) {
            if g.neighbors(v).iter().any(|&u| col(u) == Color::White) {
                return Some((WhiteNeighbor, v));
            }
            if g.neighbors(v).iter().any(|&u| col(u) == Color::Black && black_count(u) == 1) {
                return Some((PairedNeighbor, v));
            }
            if black_count(v) >= 2 {
                return Some((TwoBlackNeighbors, v));
            }
        }
        let singles: Vec<Vertex> = (0..g.n()).filter(|&s| col(s) == Color::Black && black_count(s) == 0).collect();
        for &s in &singles {
            let cands: Vec<Vertex> = g.neighbors(s).iter().copied().filter(|&v| unc(v)).collect();
            if cands.len() == 1 {
                return Some((LastCandidate, cands[0]));
            }
        }
        for p in &idx.paws {
            let [a, b] = p.odd;
            if unc(a) != unc(b) {
                return Some((Paw, if unc(a) { a } else { b }));
            }
        }
        for q in &idx.c4s {
            for i in 0..4 {
                let (a, b) = (q.cycle[i], q.cycle[(i + 1) % 4]);
                if unc(a) != unc(b) {
                    return Some((Cycle4, if unc(a) { a } else { b }));
                }
            }
        }
        for &s in &singles {
            let cands: Vec<Vertex> = g.neighbors(s).iter().copied().filter(|&v| unc(v)).collect();
            let closed = |y: Vertex| y == s || g.has_edge(s, y);
            if !cands.is_empty() && cands.iter().all(|&v| g.neighbors(v).iter().all(|&y| closed(y))) {
                return Some((ContainedNeighborhood, cands[0]));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::build_pattern_index;

    fn with<R>(g: &Graph, f: impl FnOnce(&mut Coloring<'_>) -> R) -> R {
        let idx = build_pattern_index(g);
        let mut c = Coloring::new(g, &idx);
        f(&mut c)
    }

    fn k3() -> Graph {
        Graph::from_weighted_edges(3, [(0, 1, 4.0), (1, 2, 1.0), (0, 2, 2.0)]).unwrap()
    }

    #[test]
    fn new_coloring_counters() {
        with(&k3(), |c| {
            assert!(c.is_empty());
            assert!((0..3).all(|v| c.color(v) == Color::Uncolored && c.uncolored_nbrs(v) == 2));
            assert_eq!(c.multiplier(), &BigUint::one());
        });
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        with(&k2, |c| assert_eq!(c.uncolored_count(), 2));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        with(&p4, |c| {
            let u: Vec<u32> = (0..4).map(|v| c.uncolored_nbrs(v)).collect();
            assert_eq!(u, vec![1, 2, 2, 1]);
        });
    }

    #[test]
    fn assign_conflicts() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        with(&p3, |c| {
            assert!(!c.assign_color(1, Color::White));
            assert!(c.assign_color(0, Color::White));
        });
        with(&k3(), |c| {
            assert!(!c.assign_color(0, Color::Black));
            assert!(!c.assign_color(1, Color::Black));
            assert!(c.assign_color(2, Color::Black));
            assert!(c.has_conflict());
        });
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        with(&k2, |c| {
            assert!(!c.assign_color(0, Color::Black));
            assert!(c.is_single(0));
            assert!(!c.has_conflict());
            c.assign_color(1, Color::Black);
            assert_eq!(c.partner(0), Some(1));
            assert!(c.singles().next().is_none());
        });
    }

    #[test]
    #[should_panic(expected = "already colored")]
    fn assigning_twice_panics() {
        with(&k3(), |c| {
            c.assign_color(0, Color::Black);
            c.assign_color(0, Color::White);
        });
    }

    #[test]
    fn p3_contained_single_takes_lighter_edge() {
        let p3 = Graph::from_weighted_edges(3, [(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        with(&p3, |c| {
            c.assign_color(1, Color::Black);
            assert_eq!(c.propagate(), PropagationOutcome::Total);
            assert_eq!(c.colors(), &[Color::Black, Color::Black, Color::White]);
            assert_eq!(c.extract_dim(), (vec![(0, 1)], 1.0));
            assert_eq!(c.multiplier(), &BigUint::from(2u32));
            assert_eq!(c.firings().get(PropagationRule::ContainedNeighborhood), 1);
        });
    }

    #[test]
    fn diamond_is_fixed_at_the_root() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        with(&diamond, |c| {
            assert_eq!(c.propagate(), PropagationOutcome::Total);
            assert_eq!(c.extract_dim().0, vec![(0, 1)]);
            assert_eq!(c.firings().get(PropagationRule::Diamond), 4);
        });
    }

    #[test]
    fn k2_with_white_end_is_invalid() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        with(&k2, |c| {
            c.assign_color(0, Color::White);
            assert_eq!(c.propagate(), PropagationOutcome::Invalid);
        });
    }

    #[test]
    fn dead_single_is_invalid() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        with(&c5, |c| {
            c.assign_color(0, Color::Black);
            c.assign_color(1, Color::White);
            c.assign_color(4, Color::White);
            assert!(!c.has_conflict());
            assert_eq!(c.propagate(), PropagationOutcome::Invalid);
        });
    }

    #[test]
    fn validate_total_examples() {
        with(&k3(), |c| {
            c.assign_color(0, Color::Black);
            c.assign_color(1, Color::Black);
            c.assign_color(2, Color::White);
            assert!(c.validate_total());
            assert_eq!(c.extract_dim(), (vec![(0, 1)], 4.0));
        });
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        with(&c4, |c| {
            for (v, col) in [(0, Color::Black), (1, Color::White), (2, Color::Black), (3, Color::White)] {
                c.assign_color(v, col);
            }
            assert!(!c.validate_total());
        });
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        with(&k2, |c| {
            c.assign_color(0, Color::Black);
            c.assign_color(1, Color::Black);
            assert!(c.validate_total());
        });
        let p4 = Graph::from_weighted_edges(4, [(0, 1, 1.0), (1, 2, 7.0), (2, 3, 1.0)]).unwrap();
        with(&p4, |c| {
            for (v, col) in [(0, Color::White), (1, Color::Black), (2, Color::Black), (3, Color::White)] {
                c.assign_color(v, col);
            }
            assert_eq!(c.extract_dim(), (vec![(1, 2)], 7.0));
        });
        let two_k2 = Graph::from_weighted_edges(4, [(0, 1, 2.0), (2, 3, 3.5)]).unwrap();
        with(&two_k2, |c| {
            for v in 0..4 {
                c.assign_color(v, Color::Black);
            }
            assert_eq!(c.extract_dim(), (vec![(0, 1), (2, 3)], 5.5));
        });
    }

    #[test]
    fn restore_examples() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        with(&p4, |c| {
            let fresh = c.state();
            c.assign_color(0, Color::Black);
            c.assign_color(2, Color::White);
            c.assign_color(3, Color::Black);
            c.restore_to_mark(0);
            assert_eq!(c.state(), fresh);

            c.assign_color(0, Color::Black);
            let mark = c.trail().len();
            let after_a = c.state();
            c.assign_color(1, Color::White);
            c.restore_to_mark(mark);
            assert_eq!(c.state(), after_a);
        });
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        with(&star, |c| {
            let before = c.state();
            assert_eq!(c.propagate(), PropagationOutcome::Total);
            assert_eq!(c.multiplier(), &BigUint::from(3u32));
            c.restore_to_mark(0);
            assert_eq!(c.state(), before);
        });
    }
}
