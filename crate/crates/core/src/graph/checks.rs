use std::collections::BTreeMap;

use serde::Serialize;

use super::build::{EdgeRecord, SuperspecialGraph, VertexKind, VertexModel};
use crate::elliptic::EllipticModel;
use crate::field::{Field, Fp2};
use crate::genus2::{moebius_matches, RAType};
use crate::richelot::product::{compose, invert, kernel_index};
use crate::richelot::splitting::{pairing_index, permute_pairing};
use crate::richelot::{pairings, Codomain, DualKernel, ProductKernel};
use crate::graph::digraph::WeightedDigraph;

/// Vertices whose out-weights do not sum to 15.
pub fn out_weight_failures(g: &SuperspecialGraph) -> Vec<usize> {
    let d = g.digraph().out_degrees();
    (0..g.len()).filter(|&v| d[v] != 15).collect()
}

/// Total weight of all edges `u → v`, for every ordered pair with an edge.
pub fn pair_weights(g: &WeightedDigraph) -> BTreeMap<(usize, usize), u64> {
    let mut w = BTreeMap::new();
    for e in &g.edges {
        *w.entry((e.src, e.dst)).or_insert(0) += e.weight as u64;
    }
    w
}

/// Ordered pairs violating `#RA(u)·w(v→u) = #RA(v)·w(u→v)`.
pub fn ratio_failures(g: &WeightedDigraph) -> Vec<(usize, usize)> {
    let w = pair_weights(g);
    let mut bad = Vec::new();
    for (&(u, v), &fwd) in &w {
        let back = w.get(&(v, u)).copied().unwrap_or(0);
        if g.ra_order[u] as u64 * back != g.ra_order[v] as u64 * fwd {
            bad.push((u, v));
        }
    }
    bad
}

/// Number of edge classes from a Jacobian of the given type to products.
pub fn product_edge_classes(t: RAType) -> Option<usize> {
    match t {
        RAType::A | RAType::II => Some(0),
        RAType::I | RAType::IV | RAType::VI => Some(1),
        RAType::III | RAType::V => Some(2),
        _ => None,
    }
}

/// Jacobian vertices whose count of product-bound edge classes differs from
/// [`product_edge_classes`], with the observed count.
pub fn product_neighbour_discrepancies(g: &SuperspecialGraph) -> Vec<(usize, usize)> {
    g.vertices
        .iter()
        .filter(|v| v.kind == VertexKind::Jacobian)
        .filter_map(|v| {
            let n = g
                .edges_from(v.id)
                .filter(|e| g.vertices[e.dst].kind == VertexKind::Product)
                .count();
            (Some(n) != product_edge_classes(v.ra_type)).then_some((v.id, n))
        })
        .collect()
}

/// Jacobian vertices whose Bolza type and Möbius stabilizer disagree.
pub fn classifier_disagreements(g: &SuperspecialGraph) -> Vec<usize> {
    g.vertices
        .iter()
        .filter(|v| v.moebius_order.is_some_and(|m| m != v.ra_order))
        .map(|v| v.id)
        .collect()
}

/// Permutations `τ` with `x ↦ ux + t` sending `a[i]` to `b[τ(i)]`.
fn affine_matches(a: &[Fp2; 3], b: &[Fp2; 3]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for t in crate::richelot::product::PERMUTATIONS {
        let d = (a[1] - a[0]).inv().expect("distinct roots");
        let u = (b[t[1]] - b[t[0]]) * d;
        let s = b[t[0]] - u * a[0];
        if u * a[2] + s == b[t[2]] {
            out.push(t);
        }
    }
    out
}

/// Transports the dual kernel of `e` from its codomain model to the stored
/// model of `e.dst`, as a kernel index there.
pub fn transport_dual(g: &SuperspecialGraph, e: &EdgeRecord) -> Option<usize> {
    match (&e.codomain, &e.dual, &g.vertices[e.dst].model) {
        (Codomain::Jacobian(c), DualKernel::Splitting(i), VertexModel::Jacobian(m)) => {
            let (_, perm) = moebius_matches(c.roots(), m.roots()).into_iter().next()?;
            Some(pairing_index(&permute_pairing(&pairings()[*i], &perm)))
        }
        (Codomain::Product(c1, c2), DualKernel::Product(k), VertexModel::Product(s1, s2)) => {
            transport_product(k, (c1, c2), (s1, s2)).map(|k| kernel_index(&k))
        }
        _ => None,
    }
}

fn transport_product(
    k: &ProductKernel,
    (c1, c2): (&EllipticModel, &EllipticModel),
    (s1, s2): (&EllipticModel, &EllipticModel),
) -> Option<ProductKernel> {
    let first = |a: &EllipticModel, b: &EllipticModel| affine_matches(a.roots(), b.roots()).into_iter().next();
    if let (Some(t1), Some(t2)) = (first(c1, s1), first(c2, s2)) {
        return Some(match *k {
            ProductKernel::Product(i, j) => ProductKernel::Product(t1[i], t2[j]),
            ProductKernel::Gluing(pi) => ProductKernel::Gluing(compose(&t2, &compose(&pi, &invert(&t1)))),
        });
    }
    let (t1, t2) = (first(c1, s2)?, first(c2, s1)?);
    Some(match *k {
        ProductKernel::Product(i, j) => ProductKernel::Product(t2[j], t1[i]),
        ProductKernel::Gluing(pi) => ProductKernel::Gluing(compose(&t1, &compose(&invert(&pi), &invert(&t2)))),
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DualTransportReport {
    pub checked: usize,
    /// Edges whose dual could not be matched to a reverse edge satisfying
    /// `#RA(u)·w(reverse) = #RA(v)·w(forward)`.
    pub failures: Vec<usize>,
}

/// For every edge `u → v`, finds the reverse edge containing the transported
/// dual kernel and checks it returns to `u` with the weight the ratio
/// principle predicts.
pub fn dual_transport_check(g: &SuperspecialGraph) -> DualTransportReport {
    let mut report = DualTransportReport::default();
    for (n, e) in g.edges.iter().enumerate() {
        report.checked += 1;
        let ok = transport_dual(g, e).is_some_and(|k| {
            g.edges_from(e.dst).any(|r| {
                r.kernels.contains(&k)
                    && r.dst == e.src
                    && g.vertices[e.src].ra_order * r.weight == g.vertices[e.dst].ra_order * e.weight
            })
        });
        if !ok {
            report.failures.push(n);
        }
    }
    report
}
