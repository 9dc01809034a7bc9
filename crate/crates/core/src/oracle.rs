//! Brute-force ground truth: try every black/white bipartition of the
//! vertex set and keep those where the whites are independent and every
//! black vertex has exactly one black neighbor.
//!
//! This module only uses the graph definition. It must stay independent of
//! the propagation and branching code it is used to check.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::Status;

/// Largest graph `brute_force_solve` accepts.
pub const ORACLE_MAX_N: usize = 25;
/// Largest graph `enumerate_dims` accepts.
pub const ENUMERATE_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {n} vertices; brute force is limited to {limit}")]
pub struct OracleError {
    pub n: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub status: Status,
    pub min_weight: Option<f64>,
    /// First minimum-weight DIM in bipartition order.
    pub witness: Vec<Edge>,
    pub count: BigUint,
    /// Every DIM, when requested, up to the caller's cap.
    pub dims: Option<Vec<Vec<Edge>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Enumeration {
    pub dims: Vec<Vec<Edge>>,
    pub truncated: bool,
}

/// Black vertex set `mask` encodes a DIM iff no edge joins two whites and
/// every black vertex has exactly one black neighbor. Returns the black-black
/// edges in that case.
fn dim_of_bipartition(g: &Graph, mask: u64) -> Option<Vec<Edge>> {
    let black = |v: usize| mask >> v & 1 == 1;
    let mut black_degree = vec![0u32; g.n()];
    let mut matched = Vec::new();
    for &(u, v) in g.edges() {
        match (black(u), black(v)) {
            (false, false) => return None,
            (true, true) => {
                black_degree[u] += 1;
                black_degree[v] += 1;
                matched.push((u, v));
            }
            _ => {}
        }
    }
    if (0..g.n()).any(|v| black(v) && black_degree[v] != 1) {
        return None;
    }
    matched.sort_unstable();
    Some(matched)
}

fn scan(g: &Graph, limit: usize, cap: Option<usize>) -> Result<(OracleResult, bool), OracleError> {
    scan_restricted(g, limit, cap, 0, 0)
}

fn scan_restricted(
    g: &Graph,
    limit: usize,
    cap: Option<usize>,
    must_black: u64,
    must_white: u64,
) -> Result<(OracleResult, bool), OracleError> {
    let n = g.n();
    if n > limit {
        return Err(OracleError { n, limit });
    }
    let mut count: u64 = 0;
    let mut best: Option<(f64, Vec<Edge>)> = None;
    let mut dims = cap.map(|_| Vec::new());
    let mut truncated = false;
    for mask in 0..(1u64 << n) {
        if mask & must_black != must_black || mask & must_white != 0 {
            continue;
        }
        let Some(edges) = dim_of_bipartition(g, mask) else { continue };
        count += 1;
        let w = g.total_weight(&edges);
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, edges.clone()));
        }
        if let (Some(list), Some(cap)) = (dims.as_mut(), cap) {
            if list.len() < cap {
                list.push(edges);
            } else {
                truncated = true;
            }
        }
    }
    let (status, min_weight, witness) = match best {
        Some((w, e)) => (Status::Found, Some(w), e),
        None => (Status::NoDim, None, Vec::new()),
    };
    Ok((OracleResult { status, min_weight, witness, count: BigUint::from(count), dims }, truncated))
}

pub fn brute_force_solve(g: &Graph) -> Result<OracleResult, OracleError> {
    scan(g, ORACLE_MAX_N, None).map(|r| r.0)
}

/// Like [`brute_force_solve`], also collecting up to `cap` DIMs.
pub fn brute_force_solve_enumerating(g: &Graph, cap: usize) -> Result<OracleResult, OracleError> {
    scan(g, ENUMERATE_MAX_N, Some(cap)).map(|r| r.0)
}

/// Brute force restricted to bipartitions extending a partial coloring:
/// `partial[v]` is `Some(true)` for a fixed black vertex, `Some(false)` for a
/// fixed white one.
pub fn brute_force_extending(g: &Graph, partial: &[Option<bool>]) -> Result<OracleResult, OracleError> {
    assert_eq!(partial.len(), g.n());
    let (mut must_black, mut must_white) = (0u64, 0u64);
    for (v, c) in partial.iter().enumerate() {
        match c {
            Some(true) => must_black |= 1 << v,
            Some(false) => must_white |= 1 << v,
            None => {}
        }
    }
    scan_restricted(g, ORACLE_MAX_N, None, must_black, must_white).map(|r| r.0)
}

/// All DIMs of `g` as sorted edge lists, in bipartition order, truncated at `cap`.
pub fn enumerate_dims(g: &Graph, cap: usize) -> Result<Enumeration, OracleError> {
    let (r, truncated) = scan(g, ENUMERATE_MAX_N, Some(cap))?;
    Ok(Enumeration { dims: r.dims.unwrap_or_default(), truncated })
}
