//! Reproducible instance generators.
//!
//! All randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Draws are consumed in a fixed
//! order and mapped to the unit interval as `(x >> 11) * 2^-53`, so a given
//! parameter set produces the same graph on every platform.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("weight range [{0}, {1}] is empty or not finite")]
    WeightRange(f64, f64),
    #[error("integer weights need integral bounds, got [{0}, {1}]")]
    NonIntegralBounds(f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightRange {
    pub min: f64,
    pub max: f64,
    /// Draw integers uniformly from `min..=max` instead of reals.
    pub integer: bool,
}

impl WeightRange {
    pub const UNIT: WeightRange = WeightRange { min: 1.0, max: 1.0, integer: false };

    pub fn real(min: f64, max: f64) -> Self {
        WeightRange { min, max, integer: false }
    }

    pub fn integer(min: i64, max: i64) -> Self {
        WeightRange { min: min as f64, max: max as f64, integer: true }
    }

    fn check(&self) -> Result<(), GenerateError> {
        if !(self.min.is_finite() && self.max.is_finite() && self.min <= self.max) {
            return Err(GenerateError::WeightRange(self.min, self.max));
        }
        if self.integer && (self.min.fract() != 0.0 || self.max.fract() != 0.0) {
            return Err(GenerateError::NonIntegralBounds(self.min, self.max));
        }
        Ok(())
    }

    fn draw(&self, rng: &mut Sampler) -> f64 {
        let u = rng.unit();
        if self.integer {
            let span = self.max - self.min + 1.0;
            (self.min + (u * span).floor()).min(self.max)
        } else {
            self.min + u * (self.max - self.min)
        }
    }
}

struct Sampler(Xoshiro256PlusPlus);

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    /// Uniform in [0, 1) with 53 bits.
    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// G(n, p): each pair `u < v`, in lexicographic order, draws one value to
/// decide inclusion and, if included, one more for its weight.
pub fn generate_random_graph(n: usize, p: f64, weights: WeightRange, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::Probability(p));
    }
    weights.check()?;
    let mut rng = Sampler::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < p {
                edges.push((u, v, weights.draw(&mut rng)));
            }
        }
    }
    Ok(Graph::from_weighted_edges(n, edges).expect("generated graph is simple"))
}

/// Instance families for the leaf-count benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gnp,
    Path,
    Cycle,
    /// Row-major grid with `floor(sqrt(n))` columns; the last row may be short.
    Grid,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gnp" => Ok(Family::Gnp),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "grid" | "grid-like" => Ok(Family::Grid),
            other => Err(format!("unknown family `{other}` (expected gnp, path, cycle, grid)")),
        }
    }
}

fn with_drawn_weights(n: usize, pairs: Vec<(Vertex, Vertex)>, weights: WeightRange, seed: u64) -> Graph {
    let mut rng = Sampler::new(seed);
    let edges = pairs.into_iter().map(|(u, v)| (u, v, weights.draw(&mut rng)));
    Graph::from_weighted_edges(n, edges).expect("family graph is simple")
}

/// One member of `family` on `n` vertices. `p` is only used by `Gnp`.
pub fn family_graph(family: Family, n: usize, p: f64, weights: WeightRange, seed: u64) -> Result<Graph, GenerateError> {
    weights.check()?;
    let pairs: Vec<(Vertex, Vertex)> = match family {
        Family::Gnp => return generate_random_graph(n, p, weights, seed),
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => {
            let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            if n >= 3 {
                e.push((0, n - 1));
            }
            e
        }
        Family::Grid => {
            let cols = ((n as f64).sqrt().floor() as usize).max(1);
            let mut e = Vec::new();
            for v in 0..n {
                if v % cols + 1 < cols && v + 1 < n {
                    e.push((v, v + 1));
                }
                if v + cols < n {
                    e.push((v, v + cols));
                }
            }
            e
        }
    };
    Ok(with_drawn_weights(n, pairs, weights, seed))
}
