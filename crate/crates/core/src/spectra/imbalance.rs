use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::checks::pair_weights;
use crate::graph::WeightedDigraph;

/// Partition data of a graph with linear imbalance: per-class degrees and
/// the ratios `m_ij`, meaning `w(e) = m_ij · w(ē)` for `e` from class `i` to
/// class `j`. Only one of `(i, j)`, `(j, i)` needs to be given.
#[derive(Clone, Debug, Default)]
pub struct LinearImbalanceSpec {
    pub degrees: Vec<BigRational>,
    pub ratios: BTreeMap<(usize, usize), BigRational>,
}

impl LinearImbalanceSpec {
    pub fn ratio(&self, i: usize, j: usize) -> Option<BigRational> {
        if i == j {
            return Some(BigRational::one());
        }
        self.ratios
            .get(&(i, j))
            .cloned()
            .or_else(|| self.ratios.get(&(j, i)).map(|m| m.recip()))
    }

    /// Reads the class degrees and ratios off a graph, checking that they are
    /// constant on classes.
    pub fn from_graph(g: &WeightedDigraph, class: &[usize]) -> Result<Self> {
        let n = class.iter().max().map_or(0, |m| m + 1);
        let deg = g.out_degrees();
        let mut degrees: Vec<Option<u32>> = vec![None; n];
        for (v, &c) in class.iter().enumerate() {
            match degrees[c] {
                Some(d) if d != deg[v] => {
                    return Err(Error::Precondition(format!("class {c} is not degree-regular")))
                }
                _ => degrees[c] = Some(deg[v]),
            }
        }
        let w = pair_weights(g);
        let mut ratios = BTreeMap::new();
        for (&(u, v), &fwd) in &w {
            let back = *w.get(&(v, u)).ok_or_else(|| {
                Error::Precondition(format!("edge {u} → {v} has no reverse"))
            })?;
            let m = BigRational::new(BigInt::from(fwd), BigInt::from(back));
            let (i, j) = (class[u], class[v]);
            let want = if i == j { Some(&BigRational::one()) } else { ratios.get(&(i, j)) };
            match want {
                Some(x) if *x != m => {
                    return Err(Error::Precondition(format!(
                        "ratio of {u} → {v} is {m}, not the class ratio {x}"
                    )))
                }
                Some(_) => {}
                None => {
                    ratios.insert((i, j), m);
                }
            }
        }
        Ok(Self {
            degrees: degrees
                .into_iter()
                .map(|d| BigRational::from_integer(BigInt::from(d.unwrap_or(0))))
                .collect(),
            ratios,
        })
    }
}

/// Solves `(m_ji / d_j) α_j = α_i / d_i` along a spanning tree of the class
/// graph with `α₀ = 1`, then checks the remaining equations.
pub fn linear_imbalance_solve(spec: &LinearImbalanceSpec) -> Result<Vec<BigRational>> {
    let n = spec.degrees.len();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in spec.ratios.keys() {
        if i != j {
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    let mut alpha: Vec<Option<BigRational>> = vec![None; n];
    if n == 0 {
        return Ok(Vec::new());
    }
    alpha[0] = Some(BigRational::one());
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let ai = alpha[i].clone().unwrap();
        for &j in &adj[i] {
            if alpha[j].is_none() {
                let mji = spec.ratio(j, i).unwrap();
                alpha[j] = Some(&ai * &spec.degrees[j] / (&spec.degrees[i] * mji));
                queue.push_back(j);
            }
        }
    }
    let alpha: Vec<BigRational> = alpha
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| Error::Precondition(format!("class {i} is not connected to class 0"))))
        .collect::<Result<_>>()?;
    for &(i, j) in spec.ratios.keys() {
        let lhs = spec.ratio(j, i).unwrap() * &alpha[j] / &spec.degrees[j];
        let rhs = &alpha[i] / &spec.degrees[i];
        if lhs != rhs {
            return Err(Error::Invariant(format!(
                "linear imbalance is not composable: equation for classes {i}, {j} fails"
            )));
        }
    }
    Ok(alpha)
}
