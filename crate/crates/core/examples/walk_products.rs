//! How often a random walk lands on an elliptic product, against the
//! stationary mass of the products.
//!
//!     cargo run --release --example walk_products -- 101 100000

use superspecial::graph::build_graph;
use superspecial::spectra::{lambda_star, SpectralOptions};
use superspecial::walk::{frequency_sigma, random_walk, WalkConfig};

fn main() -> superspecial::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(101);
    let steps: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let g = build_graph(p, None)?;
    let ls = lambda_star(&g.digraph(), &SpectralOptions::default()).lambda_star;
    for seed in 1..=5 {
        let s = random_walk(&g, &WalkConfig::new(steps, seed))?;
        let sigma = frequency_sigma(s.expected_product_mass_f64, steps, ls);
        println!(
            "seed {seed}: {} product visits, ratio·p = {:.3}, z = {:+.2}",
            s.product_hits,
            s.scaled_ratio,
            (s.product_ratio - s.expected_product_mass_f64) / sigma
        );
        if seed == 5 {
            println!(
                "stationary product mass {} ≈ {:.5}, ·p = {:.3}",
                s.expected_product_mass,
                s.expected_product_mass_f64,
                s.expected_product_mass_f64 * p as f64
            );
        }
    }
    Ok(())
}
