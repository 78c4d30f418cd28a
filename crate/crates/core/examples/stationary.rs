//! Exact stationary distribution of the walk, checked against the
//! transition matrix in rational arithmetic.
//!
//!     cargo run --example stationary -- 29

use superspecial::graph::{build_graph, subgraph, Subgraph, VertexKind};
use superspecial::spectra::{detailed_balance_failures, is_stationary, stationary_closed_form, TransitionMatrix};

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(29);
    let g = build_graph(p, None)?;
    for which in [Subgraph::Full, Subgraph::Jacobian, Subgraph::Product] {
        let (h, back) = subgraph(&g, which);
        let m = TransitionMatrix::new(&h);
        let phi = stationary_closed_form(&h);
        println!(
            "{which:?}: {} vertices, Mφ = φ: {}, detailed balance failures: {}",
            h.len(),
            is_stationary(&m, &phi),
            detailed_balance_failures(&m, &phi).len()
        );
        if which == Subgraph::Full {
            let products = (0..h.len()).filter(|&i| g.vertices[back[i]].kind == VertexKind::Product);
            let mass = phi.mass(products);
            println!("  product mass {mass} (·p ≈ {:.3})", p as f64 * num_traits::ToPrimitive::to_f64(&mass).unwrap());
            for (v, x) in phi.exact.iter().enumerate().take(6) {
                println!("  φ({}) = {x}", g.vertices[back[v]].key);
            }
        }
    }
    Ok(())
}
