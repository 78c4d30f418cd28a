//! Vertex counts per automorphism type against the closed forms.
//!
//!     cargo run --example census_table -- 101

use superspecial::graph::{build_graph, census};

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(101);
    let g = build_graph(p, None)?;
    let c = census(&g);
    println!("p = {p} (p mod 5 = {}, p mod 12 = {})", p % 5, p % 12);
    println!("{:<10} {:>8} {:>10}", "type", "built", "expected");
    for r in &c.rows {
        println!("{:<10} {:>8} {:>10}", r.ra_type.name(), r.observed, r.expected);
    }
    println!("total {} vertices; all match: {}", g.len(), c.all_match());
    Ok(())
}
