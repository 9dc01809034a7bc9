//! Weighted simple undirected graphs and the plain-text `p dim` file format.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

/// Vertex id, 0-based internally.
pub type Vertex = usize;

/// Undirected edge stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn edge_key(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("weight {0} is not finite")]
    NonFiniteWeight(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("missing `p dim <n> <m>` header")]
    MissingHeader,
    #[error("second problem line")]
    DuplicateHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Immutable simple undirected graph with one real weight per edge.
///
/// Neighbor lists are sorted ascending. Edge ids index `edges()` and the
/// weight table; they follow insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    adj_edge: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    weights: Vec<f64>,
    edge_index: HashMap<Edge, usize>,
}

impl Graph {
    /// Builds a graph from `(u, v, weight)` triples on vertices `0..n`.
    pub fn from_weighted_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let mut g = Graph {
            adj: vec![Vec::new(); n],
            adj_edge: vec![Vec::new(); n],
            edges: Vec::new(),
            weights: Vec::new(),
            edge_index: HashMap::new(),
        };
        for (u, v, w) in edges {
            g.push_edge(u, v, w)?;
        }
        for v in 0..n {
            let mut pairs: Vec<(Vertex, usize)> = g.adj[v].iter().copied().zip(g.adj_edge[v].iter().copied()).collect();
            pairs.sort_unstable();
            g.adj[v] = pairs.iter().map(|p| p.0).collect();
            g.adj_edge[v] = pairs.iter().map(|p| p.1).collect();
        }
        Ok(g)
    }

    /// Unit-weight convenience constructor.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Self::from_weighted_edges(n, edges.iter().map(|&(u, v)| (u, v, 1.0)))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_weighted_edges(n, std::iter::empty()).expect("no edges")
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex, w: f64) -> Result<(), GraphError> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !w.is_finite() {
            return Err(GraphError::NonFiniteWeight(w));
        }
        let key = edge_key(u, v);
        if self.edge_index.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.weights.push(w);
        self.edge_index.insert(key, id);
        self.adj[u].push(v);
        self.adj_edge[u].push(id);
        self.adj[v].push(u);
        self.adj_edge[v].push(id);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Edge ids parallel to `neighbors(v)`.
    #[inline]
    pub fn incident_edges(&self, v: Vertex) -> &[usize] {
        &self.adj_edge[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edge_index.get(&edge_key(u, v)).copied()
    }

    /// Weight of edge `uv`, or `None` when the vertices are not adjacent.
    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<f64> {
        let i = self.adj[u].binary_search(&v).ok()?;
        Some(self.weights[self.adj_edge[u][i]])
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn edge_weight(&self, id: usize) -> f64 {
        self.weights[id]
    }

    /// Sum of the weights of `edges`; panics if one is not an edge.
    pub fn total_weight(&self, edges: &[Edge]) -> f64 {
        edges.iter().map(|&(u, v)| self.weight(u, v).expect("edge not in graph")).sum()
    }

    pub fn min_weight(&self) -> Option<f64> {
        self.weights.iter().copied().reduce(f64::min)
    }

    /// Same vertices and edges, new weights (one per edge id).
    pub fn with_weights(&self, weights: Vec<f64>) -> Graph {
        assert_eq!(weights.len(), self.m());
        Graph { weights, ..self.clone() }
    }

    /// Subgraph induced by `vertices`; local id `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .zip(&self.weights)
            .filter(|&(&(u, v), _)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|(&(u, v), &w)| (local[u], local[v], w));
        Graph::from_weighted_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Writes the graph in the `p dim` format with 1-based ids. Weights use
    /// the shortest representation that parses back to the same `f64`.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::with_capacity(16 + 24 * self.m());
        writeln!(out, "p dim {} {}", self.n(), self.m()).unwrap();
        for (&(u, v), w) in self.edges.iter().zip(&self.weights) {
            writeln!(out, "e {} {} {}", u + 1, v + 1, w).unwrap();
        }
        out
    }
}

/// Parses the `p dim <n> <m>` / `e <u> <v> <w>` format. Lines starting with
/// `c` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut triples = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |kind| ParseError { line: line_no, kind };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let (n, m) = match tokens.as_slice() {
                    [_, "dim", n, m] => (n.parse::<usize>(), m.parse::<usize>()),
                    _ => return Err(err(ParseErrorKind::Malformed(line.to_string()))),
                };
                match (n, m) {
                    (Ok(n), Ok(m)) => header = Some((n, m)),
                    _ => return Err(err(ParseErrorKind::Malformed(line.to_string()))),
                }
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(err(ParseErrorKind::MissingHeader));
                };
                let [_, u, v, w] = tokens.as_slice() else {
                    return Err(err(ParseErrorKind::Malformed(line.to_string())));
                };
                let (Ok(u), Ok(v), Ok(w)) = (u.parse::<usize>(), v.parse::<usize>(), w.parse::<f64>()) else {
                    return Err(err(ParseErrorKind::Malformed(line.to_string())));
                };
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(GraphError::VertexOutOfRange { vertex: x, n }.into()));
                    }
                }
                if u == v {
                    return Err(err(GraphError::SelfLoop(u).into()));
                }
                if !w.is_finite() {
                    return Err(err(GraphError::NonFiniteWeight(w).into()));
                }
                triples.push((line_no, u - 1, v - 1, w));
            }
            _ => return Err(err(ParseErrorKind::Malformed(line.to_string()))),
        }
    }

    let Some((n, m)) = header else {
        return Err(ParseError { line: last_line.max(1), kind: ParseErrorKind::MissingHeader });
    };
    if triples.len() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCount { declared: m, found: triples.len() },
        });
    }

    let mut seen: HashMap<Edge, ()> = HashMap::with_capacity(m);
    for &(line, u, v, _) in &triples {
        let key = edge_key(u, v);
        if seen.insert(key, ()).is_some() {
            return Err(ParseError { line, kind: GraphError::DuplicateEdge(key.0 + 1, key.1 + 1).into() });
        }
    }
    Ok(Graph::from_weighted_edges(n, triples.into_iter().map(|(_, u, v, w)| (u, v, w))).expect("edges validated above"))
}

/// Uniform offset added to every edge weight to make all weights nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WeightShift {
    pub amount: f64,
    pub applied: bool,
}

/// Adds `M = max(0, -min weight)` to every edge.
pub fn normalize_weights(g: &Graph) -> (Graph, WeightShift) {
    let amount = g.min_weight().map_or(0.0, |w| (-w).max(0.0));
    if amount == 0.0 {
        return (g.clone(), WeightShift { amount: 0.0, applied: false });
    }
    let shifted = g.weights().iter().map(|w| w + amount).collect();
    (g.with_weights(shifted), WeightShift { amount, applied: true })
}

/// Maps an optimum on the shifted graph back to the original weights. Every
/// DIM of a graph has the same number of edges, so the shift contributes
/// exactly `M * k`.
pub fn unshift_weight(shifted_opt: f64, k: usize, shift: WeightShift) -> f64 {
    shifted_opt - shift.amount * k as f64
}

/// A connected component together with its local-to-original vertex map.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub graph: Graph,
    /// `to_original[local] = original`; ascending.
    pub to_original: Vec<Vertex>,
}

impl Component {
    pub fn lift_edge(&self, (u, v): Edge) -> Edge {
        edge_key(self.to_original[u], self.to_original[v])
    }
}

/// Maximal connected subgraphs, ordered by their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Component> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut members = Vec::new();
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(Component { graph: g.induced_subgraph(&members), to_original: members });
    }
    out
}

/// True iff every edge of `g` is dominated by exactly one member of `edges`
/// (an edge dominates itself and every edge sharing an endpoint with it).
pub fn is_dim(g: &Graph, edges: &[Edge]) -> bool {
    let mut members: Vec<Edge> = edges.iter().map(|&(u, v)| edge_key(u, v)).collect();
    members.sort_unstable();
    members.dedup();
    if members.len() != edges.len() || members.iter().any(|&(u, v)| u >= g.n() || !g.has_edge(u, v)) {
        return false;
    }
    g.edges().iter().all(|&(a, b)| {
        let dominated_by =
            members.iter().filter(|&&(x, y)| (x, y) == (a, b) || x == a || x == b || y == a || y == b).count();
        dominated_by == 1
    })
}
