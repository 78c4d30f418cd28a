//! The whole graph at a small prime: vertices with their automorphism
//! types and the weighted edges between them.
//!
//!     cargo run --example small_graph -- 11

use superspecial::graph::{build_graph, to_dot};

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(11);
    let g = build_graph(p, None)?;
    println!("p = {p}: {} vertices, {} edges", g.len(), g.edges.len());
    for v in &g.vertices {
        println!("  [{}] {:<10} #RA = {:<3} {}", v.id, v.ra_type.name(), v.ra_order, v.key);
    }
    for e in &g.edges {
        let (a, b) = (&g.vertices[e.src], &g.vertices[e.dst]);
        println!("  {} -> {}  weight {}", a.ra_type.name(), b.ra_type.name(), e.weight);
    }
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", to_dot(&g));
    }
    Ok(())
}
