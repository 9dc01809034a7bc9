//! Exact minimum-weight and counting solver for dominating induced matchings
//! (DIMs): edge sets in which every edge of the graph is dominated exactly
//! once.
//!
//! The solver works on black/white vertex colorings in which whites form an
//! independent set and blacks induce a perfect matching. The black-black
//! edges are the DIM. Forcing rules extend partial colorings and branching
//! rules split the stable ones. The search tree is walked depth-first over an
//! undo trail, so memory stays linear.

pub mod coloring;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod patterns;
pub mod search;

pub use coloring::{Color, Coloring, PropagationOutcome, PropagationRule};
pub use graph::{parse_graph, Edge, Graph, Vertex};
pub use oracle::{brute_force_solve, enumerate_dims, OracleResult};
pub use patterns::{build_pattern_index, contains_k4, PatternIndex};
pub use search::{branching_factor, solve, solve_connected, SearchStats, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    NoDim,
    Found,
}
