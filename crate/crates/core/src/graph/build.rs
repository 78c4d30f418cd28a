use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::digraph::{Edge, WeightedDigraph};
use crate::elliptic::{enumerate_supersingular, orbits, EllipticModel, SupersingularSet};
use crate::error::{Error, Result};
use crate::genus2::{product_type, RAType, SexticModel, VertexKey};
use crate::richelot::product::{compose, invert, kernel_index};
use crate::richelot::splitting::{pairing_index, permute_pairing};
use crate::richelot::{
    jacobian_steps, pairings, product_kernels, product_steps, Codomain, DualKernel, IsogenyStep,
    ProductKernel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Jacobian,
    Product,
}

/// Representative model of a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexModel {
    Jacobian(SexticModel),
    /// For `E²` both entries are the same model.
    Product(EllipticModel, EllipticModel),
}

#[derive(Clone, Debug)]
pub struct VertexRecord {
    pub id: usize,
    pub key: VertexKey,
    pub kind: VertexKind,
    pub ra_type: RAType,
    pub ra_order: u32,
    /// Order of the Möbius stabilizer of the branch points (Jacobians only).
    pub moebius_order: Option<u32>,
    pub model: VertexModel,
}

/// One automorphism orbit of kernels out of `src`.
#[derive(Clone, Debug)]
pub struct EdgeRecord {
    pub src: usize,
    pub dst: usize,
    pub weight: u32,
    /// Kernel indices in the orbit; the first is the representative.
    pub kernels: Vec<usize>,
    /// Codomain model computed from the representative.
    pub codomain: Codomain,
    /// Dual kernel of the representative, relative to `codomain`.
    pub dual: DualKernel,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BuildStats {
    pub identity_checks: usize,
    pub identity_failures: usize,
    pub dual_checks: usize,
    pub dual_failures: usize,
    /// Steps out of Jacobians whose codomain is an elliptic product.
    pub split_steps: usize,
    pub seconds: f64,
}

/// The superspecial (2,2)-isogeny graph Γ₂(2;p).
#[derive(Clone, Debug)]
pub struct SuperspecialGraph {
    pub p: u64,
    pub seed: VertexKey,
    pub curves: SupersingularSet,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    pub stats: BuildStats,
    index: HashMap<VertexKey, usize>,
}

impl SuperspecialGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn id_of(&self, key: &VertexKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn digraph(&self) -> WeightedDigraph {
        WeightedDigraph::new(
            self.vertices.iter().map(|v| v.ra_order).collect(),
            self.edges
                .iter()
                .map(|e| Edge {
                    src: e.src,
                    dst: e.dst,
                    weight: e.weight,
                })
                .collect(),
        )
    }

    pub fn edges_from(&self, v: usize) -> impl Iterator<Item = &EdgeRecord> {
        self.edges.iter().filter(move |e| e.src == v)
    }

    pub fn out_weight(&self, v: usize) -> u32 {
        self.edges_from(v).map(|e| e.weight).sum()
    }

    pub fn count_of(&self, t: RAType) -> usize {
        self.vertices.iter().filter(|v| v.ra_type == t).count()
    }
}

/// Permutations of the 15 kernel indices induced by the reduced automorphisms.
pub fn kernel_permutations(model: &VertexModel) -> Vec<Vec<usize>> {
    match model {
        VertexModel::Jacobian(m) => {
            let ps = pairings();
            m.moebius_group()
                .permutations()
                .iter()
                .map(|g| ps.iter().map(|q| pairing_index(&permute_pairing(q, g))).collect())
                .collect()
        }
        VertexModel::Product(e, e2) => {
            let ks = product_kernels();
            let act = |s: &[usize; 3], t: &[usize; 3]| -> Vec<usize> {
                ks.iter()
                    .map(|k| {
                        kernel_index(&match *k {
                            ProductKernel::Product(i, j) => ProductKernel::Product(s[i], t[j]),
                            ProductKernel::Gluing(pi) => {
                                ProductKernel::Gluing(compose(t, &compose(&pi, &invert(s))))
                            }
                        })
                    })
                    .collect()
            };
            let mut perms = Vec::new();
            for (_, s) in e.reduced_automorphisms() {
                for (_, t) in e2.reduced_automorphisms() {
                    perms.push(act(&s, &t));
                }
            }
            if e == e2 {
                perms.push(
                    ks.iter()
                        .map(|k| {
                            kernel_index(&match *k {
                                ProductKernel::Product(i, j) => ProductKernel::Product(j, i),
                                ProductKernel::Gluing(pi) => ProductKernel::Gluing(invert(&pi)),
                            })
                        })
                        .collect(),
                );
            }
            perms
        }
    }
}

/// The 15 isogeny steps out of a vertex model.
pub fn expand_vertex(model: &VertexModel) -> Result<Vec<IsogenyStep>> {
    match model {
        VertexModel::Jacobian(m) => jacobian_steps(m),
        VertexModel::Product(e, e2) => product_steps(e, e2),
    }
}

struct Expansion {
    steps: Vec<IsogenyStep>,
    orbits: Vec<Vec<usize>>,
    dual_ok: Vec<bool>,
}

fn expand(model: &VertexModel, key: &VertexKey) -> Result<Expansion> {
    let steps = expand_vertex(model)?;
    let orbits = orbits(15, &kernel_permutations(model));
    for orbit in &orbits {
        let k0 = &steps[orbit[0]].key;
        if let Some(&bad) = orbit.iter().find(|&&k| steps[k].key != *k0) {
            return Err(Error::Invariant(format!(
                "kernels {} and {bad} at {key} are in one orbit but reach {k0} and {}",
                orbit[0], steps[bad].key
            )));
        }
    }
    let dual_ok = steps
        .iter()
        .map(|s| s.dual_step().map(|b| b.key == *key))
        .collect::<Result<_>>()?;
    Ok(Expansion {
        steps,
        orbits,
        dual_ok,
    })
}

fn product_model(curves: &SupersingularSet, js: &[crate::field::Fp2; 2]) -> Result<VertexModel> {
    let get = |j| {
        curves
            .model(j)
            .copied()
            .ok_or_else(|| Error::Invariant(format!("j = {j} is not in the supersingular set")))
    };
    Ok(VertexModel::Product(get(&js[0])?, get(&js[1])?))
}

fn new_vertex(id: usize, key: VertexKey, step: &IsogenyStep, curves: &SupersingularSet) -> Result<VertexRecord> {
    match &key {
        VertexKey::Product(js) => {
            let ra_type = product_type(&js[0], &js[1]);
            Ok(VertexRecord {
                id,
                kind: VertexKind::Product,
                ra_type,
                ra_order: ra_type.ra_order(),
                moebius_order: None,
                model: product_model(curves, js)?,
                key,
            })
        }
        VertexKey::Jacobian { .. } => {
            let Codomain::Jacobian(m) = &step.codomain else {
                return Err(Error::Invariant(format!("Jacobian key {key} on a product codomain")));
            };
            let ra_type = m.bolza_type()?;
            Ok(VertexRecord {
                id,
                kind: VertexKind::Jacobian,
                ra_type,
                ra_order: ra_type.ra_order(),
                moebius_order: Some(m.moebius_group().order() as u32),
                model: VertexModel::Jacobian(m.clone()),
                key,
            })
        }
    }
}

/// Breadth-first closure from `E × E` for the first enumerated
/// supersingular `j`, or from `seed` if given.
pub fn build_graph(p: u64, seed: Option<[crate::field::Fp2; 2]>) -> Result<SuperspecialGraph> {
    let start = Instant::now();
    if p < 7 {
        return Err(Error::Precondition(format!("p = {p}: need p ≥ 7")));
    }
    let curves = enumerate_supersingular(p)?;
    let seed_key = match seed {
        Some([a, b]) => VertexKey::product(a, b),
        None => VertexKey::product(curves.js[0], curves.js[0]),
    };
    let VertexKey::Product(js) = &seed_key else { unreachable!() };
    let ra_type = product_type(&js[0], &js[1]);
    let first = VertexRecord {
        id: 0,
        key: seed_key.clone(),
        kind: VertexKind::Product,
        ra_type,
        ra_order: ra_type.ra_order(),
        moebius_order: None,
        model: product_model(&curves, js)?,
    };
    let mut g = SuperspecialGraph {
        p,
        seed: seed_key.clone(),
        curves,
        vertices: vec![first],
        edges: Vec::new(),
        stats: BuildStats::default(),
        index: HashMap::from([(seed_key, 0)]),
    };
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let results: Vec<Result<Expansion>> = frontier
            .par_iter()
            .map(|&v| expand(&g.vertices[v].model, &g.vertices[v].key))
            .collect();
        let mut next = Vec::new();
        for (&v, res) in frontier.iter().zip(results) {
            let ex = res?;
            let is_jac = g.vertices[v].kind == VertexKind::Jacobian;
            for (s, ok) in ex.steps.iter().zip(&ex.dual_ok) {
                g.stats.dual_checks += 1;
                g.stats.dual_failures += !ok as usize;
                if let Some(id) = s.identity {
                    g.stats.identity_checks += 1;
                    g.stats.identity_failures += !id as usize;
                }
                if is_jac && s.key.is_product() {
                    g.stats.split_steps += 1;
                }
            }
            for orbit in ex.orbits {
                let rep = &ex.steps[orbit[0]];
                let dst = match g.index.get(&rep.key) {
                    Some(&d) => d,
                    None => {
                        let d = g.vertices.len();
                        g.vertices.push(new_vertex(d, rep.key.clone(), rep, &g.curves)?);
                        g.index.insert(rep.key.clone(), d);
                        next.push(d);
                        d
                    }
                };
                g.edges.push(EdgeRecord {
                    src: v,
                    dst,
                    weight: orbit.len() as u32,
                    codomain: rep.codomain.clone(),
                    dual: rep.dual,
                    kernels: orbit,
                });
            }
        }
        frontier = next;
    }
    g.stats.seconds = start.elapsed().as_secs_f64();
    log::info!(
        "p = {p}: {} vertices, {} edges in {:.2}s",
        g.vertices.len(),
        g.edges.len(),
        g.stats.seconds
    );
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_weights(g: &SuperspecialGraph, a: RAType, b: RAType) -> Vec<u32> {
        let mut w: Vec<u32> = g
            .edges
            .iter()
            .filter(|e| g.vertices[e.src].ra_type == a && g.vertices[e.dst].ra_type == b)
            .map(|e| e.weight)
            .collect();
        w.sort_unstable();
        w
    }

    #[test]
    fn p11_matches_the_small_example() {
        let g = build_graph(11, None).unwrap();
        let mut types: Vec<(RAType, u32)> = g.vertices.iter().map(|v| (v.ra_type, v.ra_order)).collect();
        types.sort();
        assert_eq!(
            types,
            vec![
                (RAType::IV, 6),
                (RAType::V, 12),
                (RAType::Pi0x1728, 12),
                (RAType::Sigma0, 36),
                (RAType::Sigma1728, 16)
            ]
        );
        assert_eq!(edge_weights(&g, RAType::Sigma1728, RAType::Sigma0), vec![4]);
        assert_eq!(edge_weights(&g, RAType::Sigma0, RAType::Sigma1728), vec![9]);
        // Type-V: loop 3, and 1, 3, 6, 2 out of the vertex
        assert_eq!(edge_weights(&g, RAType::V, RAType::V), vec![3]);
        assert_eq!(edge_weights(&g, RAType::V, RAType::IV), vec![2, 6]);
        assert_eq!(edge_weights(&g, RAType::V, RAType::Sigma0), vec![1]);
        assert_eq!(edge_weights(&g, RAType::V, RAType::Sigma1728), vec![3]);
        for v in 0..g.len() {
            assert_eq!(g.out_weight(v), 15);
        }
    }

    #[test]
    fn p17_has_eight_vertices() {
        let g = build_graph(17, None).unwrap();
        assert_eq!(g.len(), 8);
        let count = |t| g.count_of(t);
        assert_eq!(
            [RAType::A, RAType::I, RAType::II, RAType::III, RAType::IV, RAType::V, RAType::VI].map(count),
            [0, 1, 0, 1, 2, 1, 0]
        );
        assert_eq!([RAType::Pi0, RAType::Sigma, RAType::Sigma0].map(count), [1, 1, 1]);
    }

    #[test]
    fn seed_choice_does_not_change_the_graph() {
        let a = build_graph(23, None).unwrap();
        let j = a.curves.js[a.curves.len() - 1];
        let b = build_graph(23, Some([j, a.curves.js[0]])).unwrap();
        let mut ka: Vec<_> = a.vertices.iter().map(|v| v.key.clone()).collect();
        let mut kb: Vec<_> = b.vertices.iter().map(|v| v.key.clone()).collect();
        ka.sort();
        kb.sort();
        assert_eq!(ka, kb);
        assert_eq!(a.edges.len(), b.edges.len());
    }

    #[test]
    fn type_a_edges_are_single_kernels() {
        let g = build_graph(41, None).unwrap();
        let a: Vec<_> = g.vertices.iter().filter(|v| v.ra_type == RAType::A).collect();
        assert!(!a.is_empty());
        for v in a {
            assert!(g.edges_from(v.id).all(|e| e.weight == 1));
            assert_eq!(g.edges_from(v.id).count(), 15);
        }
    }

    #[test]
    fn small_primes_are_rejected() {
        assert!(matches!(build_graph(5, None), Err(Error::Precondition(_))));
    }
}
