//! The elliptic 2-isogeny graph: supersingular j-invariants, weighted edges
//! and the stationary distribution from its linear imbalance.
//!
//!     cargo run --example elliptic_graph -- 83

use superspecial::elliptic::build_gamma1;
use superspecial::field::QuadExtField;
use superspecial::spectra::{linear_imbalance_solve, stationary_closed_form, LinearImbalanceSpec};

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(83);
    let g1 = build_gamma1(p)?;
    let f = QuadExtField::new(p)?;
    let (zero, k1728) = (f.zero(), f.from_int(1728));
    println!("p = {p}: {} supersingular j-invariants", g1.curves.len());
    for (i, j) in g1.curves.js.iter().enumerate() {
        let out: Vec<String> = g1
            .graph
            .edges
            .iter()
            .filter(|e| e.src == i)
            .map(|e| format!("{}×{}", g1.curves.js[e.dst], e.weight))
            .collect();
        println!("  j = {j:<10} #RA = {}  -> {}", g1.graph.ra_order[i], out.join(", "));
    }
    let class: Vec<usize> = g1
        .curves
        .js
        .iter()
        .map(|j| if *j == zero { 1 } else if *j == k1728 { 2 } else { 0 })
        .collect();
    match LinearImbalanceSpec::from_graph(&g1.graph, &class).and_then(|s| linear_imbalance_solve(&s)) {
        Ok(alpha) => {
            let a: Vec<String> = alpha.iter().map(|x| x.to_string()).collect();
            println!("class weights (generic, j=0, j=1728): ({})", a.join(", "));
        }
        Err(e) => println!("no imbalance solution: {e}"),
    }
    let phi = stationary_closed_form(&g1.graph);
    let phi: Vec<String> = phi.exact.iter().map(|x| x.to_string()).collect();
    println!("φ = [{}]", phi.join(", "));
    Ok(())
}
