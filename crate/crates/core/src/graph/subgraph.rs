use serde::{Deserialize, Serialize};

use super::build::{SuperspecialGraph, VertexKind};
use super::digraph::WeightedDigraph;

/// Which induced subgraph to work on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subgraph {
    #[default]
    Full,
    Jacobian,
    Product,
}

impl Subgraph {
    pub fn keeps(self, kind: VertexKind) -> bool {
        match self {
            Subgraph::Full => true,
            Subgraph::Jacobian => kind == VertexKind::Jacobian,
            Subgraph::Product => kind == VertexKind::Product,
        }
    }
}

/// The induced subgraph and the graph id of each of its vertices. Out-degrees
/// of the result count only the surviving isogenies.
pub fn subgraph(g: &SuperspecialGraph, which: Subgraph) -> (WeightedDigraph, Vec<usize>) {
    let keep: Vec<bool> = g.vertices.iter().map(|v| which.keeps(v.kind)).collect();
    g.digraph().induced(&keep)
}

impl std::str::FromStr for Subgraph {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Subgraph::Full),
            "jacobian" => Ok(Subgraph::Jacobian),
            "product" => Ok(Subgraph::Product),
            _ => Err(format!("unknown subgraph {s:?} (full, jacobian, product)")),
        }
    }
}
