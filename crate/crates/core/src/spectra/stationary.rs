use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::transition::TransitionMatrix;
use crate::graph::WeightedDigraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationaryDistribution {
    pub exact: Vec<BigRational>,
}

impl StationaryDistribution {
    pub fn to_f64(&self) -> Vec<f64> {
        self.exact.iter().map(|x| x.to_f64().unwrap()).collect()
    }

    /// Total mass on a set of vertices.
    pub fn mass(&self, vertices: impl IntoIterator<Item = usize>) -> BigRational {
        vertices
            .into_iter()
            .fold(BigRational::zero(), |acc, v| acc + &self.exact[v])
    }
}

/// `φ ∝ deg(v) / #RA(v)`, normalized to total mass 1.
pub fn stationary_closed_form(g: &WeightedDigraph) -> StationaryDistribution {
    let deg = g.out_degrees();
    let raw: Vec<BigRational> = deg
        .iter()
        .zip(&g.ra_order)
        .map(|(&d, &r)| BigRational::new(BigInt::from(d), BigInt::from(r)))
        .collect();
    let total = raw.iter().fold(BigRational::zero(), |a, x| a + x);
    StationaryDistribution {
        exact: raw.into_iter().map(|x| x / &total).collect(),
    }
}

/// `Mφ = φ` in exact arithmetic.
pub fn is_stationary(m: &TransitionMatrix, phi: &StationaryDistribution) -> bool {
    m.apply(&phi.exact) == phi.exact
}

/// Pairs `(u, v)` violating `φ(u)·M[v,u] = φ(v)·M[u,v]`.
pub fn detailed_balance_failures(m: &TransitionMatrix, phi: &StationaryDistribution) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (u, col) in m.columns.iter().enumerate() {
        for &(v, _) in col {
            if &phi.exact[u] * m.entry(v, u) != &phi.exact[v] * m.entry(u, v) {
                bad.push((u, v));
            }
        }
    }
    bad
}
