//! Diameters and scaled second eigenvalues of the graph and its Jacobian
//! and product subgraphs over a range of primes.
//!
//!     cargo run --release --example spectra_table -- 17 101

use superspecial::field::is_prime;
use superspecial::graph::build_graph;
use superspecial::spectra::{spectra_row, SpectralOptions};

fn main() -> superspecial::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().ok());
    let lo = args.next().flatten().unwrap_or(17);
    let hi = args.next().flatten().unwrap_or(61);
    let opts = SpectralOptions::default();
    println!("{:>4} {:>5} {:>4} {:>4} {:>4} {:>8} {:>8} {:>8}", "p", "|V|", "d(G)", "d(J)", "d(E)", "λ(G)", "λ(J)", "λ(E)");
    for p in (lo.max(11)..=hi).filter(|&p| is_prime(p)) {
        let r = spectra_row(&build_graph(p, None)?, &opts);
        let d = |x: Option<usize>| x.map_or("-".into(), |v| v.to_string());
        println!(
            "{:>4} {:>5} {:>4} {:>4} {:>4} {:>8.3} {:>8.3} {:>8.3}",
            p, r.vertices, d(r.d_g), d(r.d_j), d(r.d_e), r.lambda_g, r.lambda_j, r.lambda_e
        );
    }
    // Ramanujan bound for 15-regular graphs
    println!("2√14 = {:.3}", 2.0 * 14f64.sqrt());
    Ok(())
}
