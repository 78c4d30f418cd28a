use std::collections::VecDeque;

use super::build::{SuperspecialGraph, VertexKind};
use crate::error::{Error, Result};

/// Replaces a path `J₀ → E × E′ → A` by one with only Jacobians in its
/// interior, of length at most 4. Paths whose middle vertex is already a
/// Jacobian are returned as given.
///
/// The search is a BFS from `J₀` that only passes through Jacobians, so it
/// returns a shortest replacement; this may be the single edge `J₀ → A`.
pub fn reroute_path(g: &SuperspecialGraph, path: &[usize; 3]) -> Result<Vec<usize>> {
    reroute_path_within(g, path, 4)
}

/// As [`reroute_path`] with the replacement length bounded by `max_len`.
pub fn reroute_path_within(g: &SuperspecialGraph, path: &[usize; 3], max_len: usize) -> Result<Vec<usize>> {
    let [a, b, c] = *path;
    let kind = |v: usize| g.vertices[v].kind;
    let adjacent = |u: usize, v: usize| g.edges_from(u).any(|e| e.dst == v);
    if !adjacent(a, b) || !adjacent(b, c) {
        return Err(Error::Precondition(format!("{a} → {b} → {c} is not a path")));
    }
    if kind(b) == VertexKind::Jacobian {
        return Ok(path.to_vec());
    }
    if kind(a) != VertexKind::Jacobian {
        return Err(Error::Precondition(format!("path must start at a Jacobian, not {}", g.vertices[a].key)));
    }
    let adj = g.digraph().adjacency();
    let mut parent: Vec<Option<usize>> = vec![None; g.len()];
    let mut depth = vec![usize::MAX; g.len()];
    let mut queue = VecDeque::new();
    // paths of length ≥ 1, so `c = a` is handled like any other target
    for &(v, _) in &adj[a] {
        if depth[v] == usize::MAX {
            depth[v] = 1;
            parent[v] = Some(a);
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        if u == c || depth[u] >= max_len {
            continue;
        }
        if kind(u) != VertexKind::Jacobian {
            continue;
        }
        for &(v, _) in &adj[u] {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    if depth[c] == usize::MAX || !valid_interior(g, c, &parent, a) {
        return Err(Error::Invariant(format!(
            "no Jacobian-interior path of length ≤ {max_len} replaces {a} → {b} → {c}"
        )));
    }
    let mut out = vec![c];
    let mut v = c;
    while let Some(u) = parent[v] {
        out.push(u);
        if u == a {
            break;
        }
        v = u;
    }
    out.reverse();
    Ok(out)
}

/// The BFS only expands Jacobians, but `c` may have been reached directly
/// from `a` at depth 1 even when it is itself a product; either way every
/// recorded parent other than `a` is a Jacobian.
fn valid_interior(g: &SuperspecialGraph, c: usize, parent: &[Option<usize>], a: usize) -> bool {
    let mut v = c;
    while let Some(u) = parent[v] {
        if u == a {
            return true;
        }
        if g.vertices[u].kind != VertexKind::Jacobian {
            return false;
        }
        v = u;
    }
    false
}

/// Every path `J → P → A` in the graph with `P` a product, as vertex ids.
pub fn product_interior_paths(g: &SuperspecialGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for e in &g.edges {
        if g.vertices[e.src].kind != VertexKind::Jacobian || g.vertices[e.dst].kind != VertexKind::Product {
            continue;
        }
        for f in g.edges_from(e.dst) {
            let path = [e.src, e.dst, f.dst];
            if !out.contains(&path) {
                out.push(path);
            }
        }
    }
    out
}
