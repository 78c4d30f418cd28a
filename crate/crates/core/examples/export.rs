//! Writing a graph to JSON, DOT and CSV, reading the JSON back and
//! checking it.
//!
//!     cargo run --example export -- 31 /tmp/ssgraph

use std::path::PathBuf;

use superspecial::cli::verify_file;
use superspecial::graph::{build_graph, to_dot, write_edges_csv, GraphFile};

fn main() -> superspecial::Result<()> {
    let mut args = std::env::args().skip(1);
    let p = args.next().and_then(|s| s.parse().ok()).unwrap_or(31);
    let dir: PathBuf = args.next().map_or_else(std::env::temp_dir, PathBuf::from);
    std::fs::create_dir_all(&dir).map_err(|e| superspecial::Error::io(&dir, e))?;
    let g = build_graph(p, None)?;

    let json = dir.join(format!("graph-{p}.json"));
    GraphFile::from_graph(&g).write_json(&json)?;
    let dot = dir.join(format!("graph-{p}.dot"));
    std::fs::write(&dot, to_dot(&g)).map_err(|e| superspecial::Error::io(&dot, e))?;
    let csv = dir.join(format!("edges-{p}.csv"));
    let f = std::fs::File::create(&csv).map_err(|e| superspecial::Error::io(&csv, e))?;
    write_edges_csv(&g, f).map_err(|e| superspecial::Error::io(&csv, e.into()))?;

    let back = GraphFile::read_json(&json)?;
    println!("wrote {}, {}, {}", json.display(), dot.display(), csv.display());
    println!("read back {} vertices, {} edges", back.vertices.len(), back.edges.len());
    print!("{}", verify_file(&json)?);
    Ok(())
}
