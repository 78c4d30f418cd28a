//! Replacing paths through an elliptic product by paths whose interior
//! vertices are all Jacobians.
//!
//!     cargo run --example reroute -- 23

use superspecial::graph::{build_graph, product_interior_paths, reroute_path, reroute_path_within};

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(23);
    let g = build_graph(p, None)?;
    let paths = product_interior_paths(&g);
    let mut lengths = [0usize; 6];
    for path in &paths {
        match reroute_path(&g, path) {
            Ok(q) => lengths[q.len() - 1] += 1,
            Err(_) => {
                let q = reroute_path_within(&g, path, 5)?;
                lengths[q.len() - 1] += 1;
                let name = |v: usize| g.vertices[v].ra_type.name();
                println!(
                    "{} -> {} -> {} needs length {}: {}",
                    name(path[0]),
                    name(path[1]),
                    name(path[2]),
                    q.len() - 1,
                    q.iter().map(|&v| name(v)).collect::<Vec<_>>().join(" -> ")
                );
            }
        }
    }
    println!("{} paths through a product; replacement lengths 1..5: {:?}", paths.len(), &lengths[1..]);
    Ok(())
}
