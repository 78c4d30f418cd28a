//! Random-walk spectra: transition matrices, stationary distributions,
//! linear imbalance, extreme eigenvalues, diameters and mixing bounds.

pub mod eigen;
pub mod imbalance;
pub mod stationary;
pub mod transition;

use serde::Serialize;

use crate::graph::WeightedDigraph;
pub use imbalance::{linear_imbalance_solve, LinearImbalanceSpec};
pub use stationary::{detailed_balance_failures, is_stationary, stationary_closed_form, StationaryDistribution};
pub use transition::{drop_sinks, point_mass, TransitionMatrix};

/// Graphs up to this many vertices use the dense solver.
pub const DENSE_THRESHOLD: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenMethod {
    Jacobi,
    Lanczos,
}

#[derive(Clone, Copy, Debug)]
pub struct SpectralOptions {
    pub dense_threshold: usize,
    pub seed: u64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        Self {
            dense_threshold: DENSE_THRESHOLD,
            seed: crate::field::DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub vertices: usize,
    /// Largest eigenvalue; 1 for a whole graph, below 1 for a restriction.
    pub perron: f64,
    /// Second largest eigenvalue.
    pub lambda2: f64,
    pub lambda_min: f64,
    /// `max(|λ₂|, |λ_min|)`.
    pub lambda_star: f64,
    /// Out-degree of the ambient graph, the scale of `λ̃⋆`.
    pub degree: u32,
    pub method: EigenMethod,
    pub residual: f64,
}

impl SpectralReport {
    /// `λ̃⋆ = deg·λ⋆`, comparable with eigenvalues of the weighted
    /// adjacency matrix.
    pub fn scaled(&self) -> f64 {
        self.degree as f64 * self.lambda_star
    }
}

/// The reversible symmetrization `S[v][u] = M[v][u]·sqrt(φ(u)/φ(v))` of `M`
/// restricted to the rows and columns in `keep`; it has the spectrum of the
/// restricted `M`.
pub fn symmetrized(m: &TransitionMatrix, phi: &[f64], keep: &[usize]) -> Vec<Vec<f64>> {
    let n = keep.len();
    let mut pos = vec![usize::MAX; m.len()];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let mut s = vec![vec![0.0; n]; n];
    for (j, &u) in keep.iter().enumerate() {
        for &(v, w) in &m.columns[u] {
            let i = pos[v];
            if i != usize::MAX {
                s[i][j] += w as f64 / m.degrees[u] as f64 * (phi[u] / phi[v]).sqrt();
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            let a = 0.5 * (s[i][j] + s[j][i]);
            s[i][j] = a;
            s[j][i] = a;
        }
    }
    s
}

/// Extreme eigenvalues of the random walk on a strongly connected `g`; the
/// reported degree scale is the largest out-degree.
pub fn lambda_star(g: &WeightedDigraph, opts: &SpectralOptions) -> SpectralReport {
    let keep = vec![true; g.len()];
    restricted_lambda_star(g, &keep, opts)
}

/// Spectrum of the walk matrix of `g` restricted to the vertices in `keep`,
/// with the degrees of `g`. The largest eigenvalue is set aside as the
/// Perron value and `λ⋆` taken over the rest.
pub fn restricted_lambda_star(g: &WeightedDigraph, keep: &[bool], opts: &SpectralOptions) -> SpectralReport {
    let m = TransitionMatrix::new(g);
    let phi = stationary_closed_form(g).to_f64();
    let idx: Vec<usize> = (0..g.len()).filter(|&v| keep[v]).collect();
    let n = idx.len();
    let degree = g.out_degrees().into_iter().max().unwrap_or(0);
    let whole = n == g.len();
    let (ev, method, residual) = if n <= opts.dense_threshold {
        let s = symmetrized(&m, &phi, &idx);
        let (ev, r) = eigen::jacobi_eigenvalues(&s, 1e-13);
        (ev, EigenMethod::Jacobi, r)
    } else {
        let sq: Vec<f64> = idx.iter().map(|&v| phi[v].sqrt()).collect();
        let apply = |x: &[f64]| -> Vec<f64> {
            let mut y = vec![0.0; g.len()];
            for (i, &v) in idx.iter().enumerate() {
                y[v] = x[i] * sq[i];
            }
            let z = m.apply_f64(&y);
            idx.iter().enumerate().map(|(i, &v)| z[v] / sq[i]).collect()
        };
        // on a whole graph sqrt(φ) spans the eigenvalue 1 and is deflated
        let norm = sq.iter().map(|x| x * x).sum::<f64>().sqrt();
        let deflate = if whole {
            vec![sq.iter().map(|x| x / norm).collect::<Vec<f64>>()]
        } else {
            Vec::new()
        };
        let top = if whole { 1 } else { 2 };
        let r = eigen::lanczos(n, apply, &deflate, 800, top, 1e-8, opts.seed);
        let k = r.ritz.len();
        let residual = r.residuals[k - top..].iter().chain([&r.residuals[0]]).fold(0.0f64, |a, &b| a.max(b));
        let mut ev = r.ritz;
        if whole {
            ev.push(1.0);
        }
        (ev, EigenMethod::Lanczos, residual)
    };
    let k = ev.len();
    let (perron, lambda2, lambda_min) = match k {
        0 => (0.0, 0.0, 0.0),
        1 => (ev[0], 0.0, 0.0),
        _ => (ev[k - 1], ev[k - 2], ev[0]),
    };
    SpectralReport {
        vertices: n,
        perron,
        lambda2,
        lambda_min,
        lambda_star: lambda2.abs().max(lambda_min.abs()),
        degree,
        method,
        residual,
    }
}

/// Largest BFS eccentricity along edge directions; `None` if some vertex
/// cannot reach another.
pub fn diameter(g: &WeightedDigraph) -> Option<usize> {
    let adj = g.adjacency();
    let mut best = 0;
    for s in 0..g.len() {
        let d = crate::graph::bfs_distances(&adj, s);
        for x in d {
            best = best.max(x?);
        }
    }
    Some(best)
}

/// `λ⋆ⁿ · sqrt((deg v / deg u)·(#RA(u) / #RA(v)))`, bounding
/// `|Pr[walk from u is at v after n steps] − φ(v)|`.
pub fn mixing_bound(g: &WeightedDigraph, lambda_star: f64, u: usize, v: usize, n: u32) -> f64 {
    let deg = g.out_degrees();
    let r = (deg[v] as f64 / deg[u] as f64) * (g.ra_order[u] as f64 / g.ra_order[v] as f64);
    lambda_star.powi(n as i32) * r.sqrt()
}

/// [`restricted_lambda_star`] on the vertices of one kind.
pub fn subgraph_spectrum(
    g: &crate::graph::SuperspecialGraph,
    which: crate::graph::Subgraph,
    opts: &SpectralOptions,
) -> SpectralReport {
    let keep: Vec<bool> = g.vertices.iter().map(|v| which.keeps(v.kind)).collect();
    restricted_lambda_star(&g.digraph(), &keep, opts)
}

/// One row of the per-prime summary: diameters and `λ̃⋆` of Γ₂ and of its
/// Jacobian and product subgraphs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectraRow {
    pub p: u64,
    pub vertices: usize,
    pub d_g: Option<usize>,
    pub d_j: Option<usize>,
    pub d_e: Option<usize>,
    pub lambda_g: f64,
    pub lambda_j: f64,
    pub lambda_e: f64,
}

pub fn spectra_row(g: &crate::graph::SuperspecialGraph, opts: &SpectralOptions) -> SpectraRow {
    use crate::graph::{subgraph, Subgraph};
    let d = |w| diameter(&subgraph(g, w).0);
    let l = |w| subgraph_spectrum(g, w, opts).scaled();
    SpectraRow {
        p: g.p,
        vertices: g.len(),
        d_g: d(Subgraph::Full),
        d_j: d(Subgraph::Jacobian),
        d_e: d(Subgraph::Product),
        lambda_g: l(Subgraph::Full),
        lambda_j: l(Subgraph::Jacobian),
        lambda_e: l(Subgraph::Product),
    }
}
