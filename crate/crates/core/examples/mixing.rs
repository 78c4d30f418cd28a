//! Distance of the n-step distribution from stationarity, next to the
//! spectral bound.
//!
//!     cargo run --example mixing -- 19

use superspecial::graph::build_graph;
use superspecial::spectra::{lambda_star, SpectralOptions};
use superspecial::walk::empirical_distribution_check;

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(19);
    let g = build_graph(p, None)?.digraph();
    let ls = lambda_star(&g, &SpectralOptions::default()).lambda_star;
    let c = empirical_distribution_check(&g, 0, 20, ls);
    println!("λ⋆ = {ls:.6}");
    for (n, d) in c.max_deviation.iter().enumerate() {
        println!("n = {n:>2}  max |Pr − φ| = {d:.3e}  λ⋆ⁿ = {:.3e}", ls.powi(n as i32));
    }
    println!("bound violations: {}", c.violations.len());
    Ok(())
}
