//! Induced four-vertex patterns used by the structural propagation rules.

use crate::graph::{Graph, Vertex};

/// Two triangles sharing the edge `hubs`; `tips` are the non-adjacent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diamond {
    pub hubs: [Vertex; 2],
    pub tips: [Vertex; 2],
}

/// A triangle plus one vertex adjacent to exactly one triangle vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Paw {
    pub triangle: [Vertex; 3],
    pub pendant: Vertex,
    /// The two odd-degree vertices: the triangle vertex the pendant hangs
    /// from, then the pendant.
    pub odd: [Vertex; 2],
}

/// Induced 4-cycle in cyclic order, starting at its smallest vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct C4 {
    pub cycle: [Vertex; 4],
}

impl C4 {
    /// The two cycle neighbors of position `i`.
    pub fn around(&self, i: usize) -> [Vertex; 2] {
        [self.cycle[(i + 3) % 4], self.cycle[(i + 1) % 4]]
    }
}

/// All induced diamonds, paws and C4s of a K4-free graph, with per-vertex
/// membership lists.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PatternIndex {
    pub diamonds: Vec<Diamond>,
    pub paws: Vec<Paw>,
    pub c4s: Vec<C4>,
    diamonds_at: Vec<Vec<usize>>,
    paws_at: Vec<Vec<usize>>,
    c4s_at: Vec<Vec<usize>>,
}

impl PatternIndex {
    /// Indices of diamonds containing `v`.
    pub fn diamonds_at(&self, v: Vertex) -> &[usize] {
        &self.diamonds_at[v]
    }

    /// Indices of paws in which `v` is one of the two odd-degree vertices.
    pub fn paws_at(&self, v: Vertex) -> &[usize] {
        &self.paws_at[v]
    }

    /// Indices of induced C4s through `v`.
    pub fn c4s_at(&self, v: Vertex) -> &[usize] {
        &self.c4s_at[v]
    }
}

fn common_neighbors(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Returns the sorted vertex set of some K4, if the graph has one.
pub fn contains_k4(g: &Graph) -> Option<[Vertex; 4]> {
    for &(a, b) in g.edges() {
        let common = common_neighbors(g, a, b);
        for (i, &c) in common.iter().enumerate() {
            if let Some(&d) = common[i + 1..].iter().find(|&&d| g.has_edge(c, d)) {
                let mut k = [a, b, c, d];
                k.sort_unstable();
                return Some(k);
            }
        }
    }
    None
}

pub fn build_pattern_index(g: &Graph) -> PatternIndex {
    let n = g.n();
    let mut idx = PatternIndex {
        diamonds_at: vec![Vec::new(); n],
        paws_at: vec![Vec::new(); n],
        c4s_at: vec![Vec::new(); n],
        ..Default::default()
    };

    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    for &(a, b) in &edges {
        let common = common_neighbors(g, a, b);
        for (i, &c) in common.iter().enumerate() {
            for &d in &common[i + 1..] {
                if !g.has_edge(c, d) {
                    idx.diamonds.push(Diamond { hubs: [a, b], tips: [c, d] });
                }
            }
        }
        // triangles a < b < c, each seen once from its smallest edge
        for &c in common.iter().filter(|&&c| c > b) {
            let tri = [a, b, c];
            for (k, &x) in tri.iter().enumerate() {
                let (y, z) = (tri[(k + 1) % 3], tri[(k + 2) % 3]);
                for &d in g.neighbors(x) {
                    if d != y && d != z && !g.has_edge(d, y) && !g.has_edge(d, z) {
                        idx.paws.push(Paw { triangle: tri, pendant: d, odd: [x, d] });
                    }
                }
            }
        }
    }

    // induced C4s a-b-c-d with a the minimum; (a, c) is then the unique
    // diagonal through a and {b, d} its two common neighbors
    let mut via: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b) {
                if c > a && !g.has_edge(a, c) {
                    if via[c].is_empty() {
                        touched.push(c);
                    }
                    via[c].push(b);
                }
            }
        }
        touched.sort_unstable();
        for &c in &touched {
            let mids = &via[c];
            for (i, &b) in mids.iter().enumerate() {
                for &d in &mids[i + 1..] {
                    if !g.has_edge(b, d) {
                        idx.c4s.push(C4 { cycle: [a, b, c, d] });
                    }
                }
            }
        }
        for c in touched.drain(..) {
            via[c].clear();
        }
    }

    for (i, d) in idx.diamonds.iter().enumerate() {
        for v in d.hubs.iter().chain(&d.tips) {
            idx.diamonds_at[*v].push(i);
        }
    }
    for (i, p) in idx.paws.iter().enumerate() {
        for v in p.odd {
            idx.paws_at[v].push(i);
        }
    }
    for (i, q) in idx.c4s.iter().enumerate() {
        for v in q.cycle {
            idx.c4s_at[v].push(i);
        }
    }
    idx
}
