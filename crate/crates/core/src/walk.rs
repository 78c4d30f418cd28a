//! Seeded random walks and exact n-step distributions.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{subgraph, Subgraph, SuperspecialGraph, VertexKind, WeightedDigraph};
use crate::spectra::{mixing_bound, point_mass, stationary_closed_form, TransitionMatrix};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct WalkConfig {
    pub steps: u64,
    pub seed: u64,
    /// Graph id of the start vertex; the seed vertex by default, or the
    /// first vertex of the subgraph if the seed is not in it.
    pub start: Option<usize>,
    pub subgraph: Subgraph,
}

impl WalkConfig {
    pub fn new(steps: u64, seed: u64) -> Self {
        Self {
            steps,
            seed,
            start: None,
            subgraph: Subgraph::Full,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkStats {
    pub p: u64,
    pub config: WalkConfig,
    /// Graph id of the start vertex.
    pub start: usize,
    /// Visits per graph id, counting the vertex reached after each step.
    pub visits: Vec<u64>,
    pub product_hits: u64,
    pub product_ratio: f64,
    /// `product_ratio · p`.
    pub scaled_ratio: f64,
    /// Stationary mass of the product vertices, exact and as a float.
    pub expected_product_mass: String,
    pub expected_product_mass_f64: f64,
}

/// The walk's vertices in graph ids, one per step (the start excluded).
pub fn random_walk_trace(g: &SuperspecialGraph, cfg: &WalkConfig) -> Result<(usize, Vec<usize>)> {
    if cfg.steps == 0 {
        return Err(Error::Precondition("a walk needs at least one step".into()));
    }
    let (h, back) = subgraph(g, cfg.subgraph);
    if h.is_empty() {
        return Err(Error::Precondition(format!("the {:?} subgraph is empty", cfg.subgraph)));
    }
    let local = match cfg.start {
        Some(s) => back
            .iter()
            .position(|&v| v == s)
            .ok_or_else(|| Error::Precondition(format!("start vertex {s} is not in the {:?} subgraph", cfg.subgraph)))?,
        None => back.iter().position(|&v| v == 0).unwrap_or(0),
    };
    let adj = h.adjacency();
    let choices = adj
        .iter()
        .enumerate()
        .map(|(v, out)| {
            WeightedIndex::new(out.iter().map(|(_, w)| *w))
                .map_err(|_| Error::Precondition(format!("vertex {} has no out-edges in the subgraph", back[v])))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut at = local;
    let mut trace = Vec::with_capacity(cfg.steps as usize);
    for _ in 0..cfg.steps {
        at = adj[at][choices[at].sample(&mut rng)].0;
        trace.push(back[at]);
    }
    Ok((back[local], trace))
}

pub fn random_walk(g: &SuperspecialGraph, cfg: &WalkConfig) -> Result<WalkStats> {
    let (start, trace) = random_walk_trace(g, cfg)?;
    let mut visits = vec![0u64; g.len()];
    for &v in &trace {
        visits[v] += 1;
    }
    let is_product = |v: usize| g.vertices[v].kind == VertexKind::Product;
    let product_hits: u64 = (0..g.len()).filter(|&v| is_product(v)).map(|v| visits[v]).sum();
    let (h, back) = subgraph(g, cfg.subgraph);
    let phi = stationary_closed_form(&h);
    let mass = phi.mass((0..h.len()).filter(|&i| is_product(back[i])));
    let ratio = product_hits as f64 / cfg.steps as f64;
    Ok(WalkStats {
        p: g.p,
        config: *cfg,
        start,
        visits,
        product_hits,
        product_ratio: ratio,
        scaled_ratio: ratio * g.p as f64,
        expected_product_mass: mass.to_string(),
        expected_product_mass_f64: mass.to_f64().unwrap(),
    })
}

/// Standard deviation of the visit frequency of a set with stationary mass
/// `m` over `steps` steps of a reversible chain with spectral radius
/// `lambda_star`: the binomial value inflated by `(1 + λ⋆)/(1 − λ⋆)`, which
/// bounds the integrated autocorrelation.
pub fn frequency_sigma(m: f64, steps: u64, lambda_star: f64) -> f64 {
    let binomial = m * (1.0 - m) / steps as f64;
    (binomial * (1.0 + lambda_star) / (1.0 - lambda_star)).sqrt()
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionCheck {
    /// `max_v |Pr[A_n = v] − φ(v)|` for `n = 0..=steps`.
    pub max_deviation: Vec<f64>,
    /// Steps `n` and vertices `v` where the deviation exceeds the bound.
    pub violations: Vec<(usize, usize)>,
}

/// Propagates a point mass at `u` exactly for `steps` steps and compares
/// every vertex with its stationary value and the mixing bound.
pub fn empirical_distribution_check(g: &WeightedDigraph, u: usize, steps: usize, lambda_star: f64) -> DistributionCheck {
    let m = TransitionMatrix::new(g);
    let phi = stationary_closed_form(g);
    let mut x = point_mass(g.len(), u);
    let mut max_deviation = Vec::with_capacity(steps + 1);
    let mut violations = Vec::new();
    for n in 0..=steps {
        let mut worst = 0.0f64;
        for v in 0..g.len() {
            let d: BigRational = (&x[v] - &phi.exact[v]).abs();
            let d = d.to_f64().unwrap();
            worst = worst.max(d);
            // slack for the float evaluation of the bound
            if d > mixing_bound(g, lambda_star, u, v, n as u32) * (1.0 + 1e-9) + 1e-15 {
                violations.push((n, v));
            }
        }
        max_deviation.push(worst);
        if n < steps {
            x = m.apply(&x);
        }
    }
    DistributionCheck {
        max_deviation,
        violations,
    }
}

/// Total-variation distance between visit frequencies and a distribution.
pub fn total_variation(visits: &[u64], phi: &[f64]) -> f64 {
    let n: u64 = visits.iter().sum();
    0.5 * visits
        .iter()
        .zip(phi)
        .map(|(&c, &f)| (c as f64 / n as f64 - f).abs())
        .sum::<f64>()
}
