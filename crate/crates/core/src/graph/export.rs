use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::build::{SuperspecialGraph, VertexKind, VertexModel};
use super::digraph::{Edge, WeightedDigraph};
use crate::error::{Error, Result};
use crate::field::{Field, Fp2};
use crate::genus2::RAType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelRecord {
    /// Coefficients of `F`, constant term first.
    Sextic(Vec<[u32; 2]>),
    /// The 2-torsion x-coordinates of each factor.
    Product([[u32; 2]; 3], [[u32; 2]; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexFile {
    pub id: usize,
    pub kind: VertexKind,
    #[serde(rename = "type")]
    pub ra_type: String,
    pub ra_order: u32,
    /// Hex of the canonical key bytes.
    pub key: String,
    pub model: ModelRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub p: u64,
    pub seed: String,
    pub vertices: Vec<VertexFile>,
    pub edges: Vec<Edge>,
}

fn enc(x: &Fp2) -> [u32; 2] {
    let c = x.encode();
    [c[0], c[1]]
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl GraphFile {
    pub fn from_graph(g: &SuperspecialGraph) -> Self {
        let vertices = g
            .vertices
            .iter()
            .map(|v| VertexFile {
                id: v.id,
                kind: v.kind,
                ra_type: v.ra_type.name().to_string(),
                ra_order: v.ra_order,
                key: hex(&v.key.to_bytes()),
                model: match &v.model {
                    VertexModel::Jacobian(m) => ModelRecord::Sextic(m.poly().coeffs().iter().map(enc).collect()),
                    VertexModel::Product(e, e2) => ModelRecord::Product(e.roots().map(|r| enc(&r)), e2.roots().map(|r| enc(&r))),
                },
            })
            .collect();
        Self {
            p: g.p,
            seed: g.seed.to_string(),
            vertices,
            edges: g.digraph().edges,
        }
    }

    pub fn digraph(&self) -> WeightedDigraph {
        WeightedDigraph::new(self.vertices.iter().map(|v| v.ra_order).collect(), self.edges.clone())
    }

    /// Structural validation of a file read from disk.
    pub fn validate(&self, path: &Path) -> Result<()> {
        let bad = |msg: String| Error::Format {
            path: path.to_path_buf(),
            msg,
        };
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id != i {
                return Err(bad(format!("vertex {i} has id {}", v.id)));
            }
            let t = RAType::from_name(&v.ra_type).ok_or_else(|| bad(format!("vertex {i}: unknown type {:?}", v.ra_type)))?;
            if t.ra_order() != v.ra_order {
                return Err(bad(format!("vertex {i}: type {t} has RA order {}, not {}", t.ra_order(), v.ra_order)));
            }
            if t.is_jacobian() != (v.kind == VertexKind::Jacobian) {
                return Err(bad(format!("vertex {i}: type {t} does not match kind {:?}", v.kind)));
            }
        }
        for e in &self.edges {
            if e.src >= self.vertices.len() || e.dst >= self.vertices.len() || e.weight == 0 {
                return Err(bad(format!("invalid edge {e:?}")));
            }
        }
        Ok(())
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        serde_json::to_writer_pretty(std::io::BufWriter::new(f), self).map_err(|e| Error::io(path, e.into()))
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let g: GraphFile = serde_json::from_str(&text).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            msg: e.to_string(),
        })?;
        g.validate(path)?;
        Ok(g)
    }
}

/// Graphviz rendering with edge weights as labels.
pub fn to_dot(g: &SuperspecialGraph) -> String {
    let mut s = format!("digraph G2_{} {{\n", g.p);
    for v in &g.vertices {
        let shape = match v.kind {
            VertexKind::Jacobian => "ellipse",
            VertexKind::Product => "box",
        };
        let _ = writeln!(s, "  v{} [label=\"{}\\n{}\" shape={shape}];", v.id, v.id, v.ra_type.name());
    }
    for e in &g.edges {
        let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.src, e.dst, e.weight);
    }
    s.push_str("}\n");
    s
}

/// Edge list as CSV with header `src,dst,weight`.
pub fn write_edges_csv<W: std::io::Write>(g: &SuperspecialGraph, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for e in g.digraph().edges {
        w.serialize(e)?;
    }
    w.flush()?;
    Ok(())
}
