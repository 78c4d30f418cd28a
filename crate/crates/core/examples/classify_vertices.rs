//! Two ways to get the automorphism group of every Jacobian vertex: the
//! invariant-based classification and the stabilizer of the branch points.
//!
//!     cargo run --release --example classify_vertices -- 89

use std::collections::BTreeMap;

use superspecial::graph::build_graph;

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(89);
    let g = build_graph(p, None)?;
    let mut table: BTreeMap<&str, (usize, u32, Vec<u32>)> = BTreeMap::new();
    for v in g.vertices.iter().filter(|v| v.ra_type.is_jacobian()) {
        let row = table.entry(v.ra_type.name()).or_insert((0, v.ra_order, Vec::new()));
        row.0 += 1;
        let m = v.moebius_order.unwrap();
        if !row.2.contains(&m) {
            row.2.push(m);
        }
    }
    println!("{:<8} {:>6} {:>6} {:>10}", "type", "count", "#RA", "stabilizer");
    for (name, (n, ra, stab)) in table {
        let stab: Vec<String> = stab.iter().map(|s| s.to_string()).collect();
        println!("{name:<8} {n:>6} {ra:>6} {:>10}", stab.join(","));
    }
    Ok(())
}
