use std::collections::VecDeque;

/// A weighted directed edge; `weight` counts kernels in one automorphism orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: u32,
}

/// The bare structure that the spectral and walk code works on: vertices are
/// `0..n`, each with the order of its reduced automorphism group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedDigraph {
    pub ra_order: Vec<u32>,
    pub edges: Vec<Edge>,
}

impl WeightedDigraph {
    pub fn new(ra_order: Vec<u32>, edges: Vec<Edge>) -> Self {
        Self { ra_order, edges }
    }

    pub fn len(&self) -> usize {
        self.ra_order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ra_order.is_empty()
    }

    /// Total out-weight of every vertex.
    pub fn out_degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.len()];
        for e in &self.edges {
            d[e.src] += e.weight;
        }
        d
    }

    /// Per-vertex list of `(dst, weight)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.len()];
        for e in &self.edges {
            adj[e.src].push((e.dst, e.weight));
        }
        adj
    }

    /// Induced subgraph on the vertices where `keep` holds, renumbered in order.
    /// Returns the subgraph and the old index of each new vertex.
    pub fn induced(&self, keep: &[bool]) -> (Self, Vec<usize>) {
        let mut map = vec![usize::MAX; self.len()];
        let mut back = Vec::new();
        for (v, &k) in keep.iter().enumerate() {
            if k {
                map[v] = back.len();
                back.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.src] && keep[e.dst])
            .map(|e| Edge {
                src: map[e.src],
                dst: map[e.dst],
                weight: e.weight,
            })
            .collect();
        let ra = back.iter().map(|&v| self.ra_order[v]).collect();
        (Self::new(ra, edges), back)
    }

    /// BFS distances from `s` along edge directions; `None` if unreachable.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        bfs_distances(&adj, s)
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let fwd = self.bfs(0);
        let rev = self.reversed().bfs(0);
        fwd.iter().all(Option::is_some) && rev.iter().all(Option::is_some)
    }

    pub fn reversed(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                src: e.dst,
                dst: e.src,
                weight: e.weight,
            })
            .collect();
        Self::new(self.ra_order.clone(), edges)
    }

    /// Period of a strongly connected digraph: gcd of `level(u) + 1 − level(v)`
    /// over all edges, with BFS levels from vertex 0. Aperiodic iff 1.
    pub fn period(&self) -> usize {
        let dist = self.bfs(0);
        let mut g = 0usize;
        for e in &self.edges {
            if let (Some(du), Some(dv)) = (dist[e.src], dist[e.dst]) {
                let diff = (du + 1).abs_diff(dv);
                g = gcd(g, diff);
            }
        }
        g
    }
}

pub fn bfs_distances(adj: &[Vec<(usize, u32)>], s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        let du = dist[u].unwrap();
        for &(v, _) in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(src: usize, dst: usize, weight: u32) -> Edge {
        Edge { src, dst, weight }
    }

    #[test]
    fn period_of_cycles() {
        let c3 = WeightedDigraph::new(vec![1; 3], vec![e(0, 1, 1), e(1, 2, 1), e(2, 0, 1)]);
        assert_eq!(c3.period(), 3);
        let mut with_loop = c3.clone();
        with_loop.edges.push(e(1, 1, 1));
        assert_eq!(with_loop.period(), 1);
        let bip = WeightedDigraph::new(vec![1; 2], vec![e(0, 1, 2), e(1, 0, 2)]);
        assert_eq!(bip.period(), 2);
    }

    #[test]
    fn induced_renumbers() {
        let g = WeightedDigraph::new(vec![1, 2, 3], vec![e(0, 1, 1), e(1, 2, 4), e(2, 1, 5)]);
        let (h, back) = g.induced(&[false, true, true]);
        assert_eq!(back, vec![1, 2]);
        assert_eq!(h.edges, vec![e(0, 1, 4), e(1, 0, 5)]);
        assert_eq!(h.ra_order, vec![2, 3]);
        assert!(h.is_strongly_connected());
        assert!(!g.is_strongly_connected());
    }
}
