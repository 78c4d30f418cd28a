use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::WeightedDigraph;

/// Column-stochastic random-walk matrix `M[v][u] = w(u→v) / deg u`, stored
/// by columns with parallel edges merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    /// `columns[u]` lists `(v, w(u→v))` with `v` increasing.
    pub columns: Vec<Vec<(usize, u64)>>,
    pub degrees: Vec<u64>,
}

impl TransitionMatrix {
    /// Vertices of out-degree zero cannot carry a walk; use
    /// [`drop_sinks`] first when that can happen.
    pub fn new(g: &WeightedDigraph) -> Self {
        let mut cols: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); g.len()];
        for e in &g.edges {
            *cols[e.src].entry(e.dst).or_insert(0) += e.weight as u64;
        }
        let degrees: Vec<u64> = cols.iter().map(|c| c.values().sum()).collect();
        assert!(
            degrees.iter().all(|&d| d > 0),
            "transition matrix of a graph with a vertex of out-degree 0"
        );
        Self {
            columns: cols.into_iter().map(|c| c.into_iter().collect()).collect(),
            degrees,
        }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn entry(&self, v: usize, u: usize) -> BigRational {
        let w = self.columns[u]
            .iter()
            .find(|(x, _)| *x == v)
            .map_or(0, |(_, w)| *w);
        BigRational::new(BigInt::from(w), BigInt::from(self.degrees[u]))
    }

    pub fn entry_f64(&self, v: usize, u: usize) -> f64 {
        self.columns[u]
            .iter()
            .find(|(x, _)| *x == v)
            .map_or(0.0, |(_, w)| *w as f64 / self.degrees[u] as f64)
    }

    /// `M x` in exact arithmetic.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        let mut y = vec![BigRational::zero(); self.len()];
        for (u, col) in self.columns.iter().enumerate() {
            if x[u].is_zero() {
                continue;
            }
            let xu = &x[u] / BigInt::from(self.degrees[u]);
            for &(v, w) in col {
                y[v] += &xu * BigInt::from(w);
            }
        }
        y
    }

    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.len()];
        for (u, col) in self.columns.iter().enumerate() {
            let xu = x[u] / self.degrees[u] as f64;
            for &(v, w) in col {
                y[v] += xu * w as f64;
            }
        }
        y
    }

    /// Every column sums to exactly 1.
    pub fn is_stochastic(&self) -> bool {
        self.columns
            .iter()
            .zip(&self.degrees)
            .all(|(c, &d)| c.iter().map(|(_, w)| w).sum::<u64>() == d)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        let mut m = vec![vec![0.0; n]; n];
        for (u, col) in self.columns.iter().enumerate() {
            for &(v, w) in col {
                m[v][u] = w as f64 / self.degrees[u] as f64;
            }
        }
        m
    }
}

/// Repeatedly removes vertices with no out-edges, logging each one. Returns
/// the remaining graph and the original index of each of its vertices.
pub fn drop_sinks(g: &WeightedDigraph) -> (WeightedDigraph, Vec<usize>) {
    let mut keep = vec![true; g.len()];
    loop {
        let mut d = vec![0u64; g.len()];
        for e in &g.edges {
            if keep[e.src] && keep[e.dst] {
                d[e.src] += e.weight as u64;
            }
        }
        let sinks: Vec<usize> = (0..g.len()).filter(|&v| keep[v] && d[v] == 0).collect();
        if sinks.is_empty() {
            break;
        }
        for v in sinks {
            log::warn!("vertex {v} has no surviving out-edges; excluded from the walk");
            keep[v] = false;
        }
    }
    g.induced(&keep)
}

/// The uniform point mass at `u`.
pub fn point_mass(n: usize, u: usize) -> Vec<BigRational> {
    let mut x = vec![BigRational::zero(); n];
    x[u] = BigRational::one();
    x
}
