use std::collections::BTreeMap;

use superspecial::graph::{build_graph, subgraph, Subgraph, VertexKind};
use superspecial::spectra::{lambda_star, stationary_closed_form, SpectralOptions};
use superspecial::walk::{
    empirical_distribution_check, frequency_sigma, random_walk, random_walk_trace, total_variation, WalkConfig,
};
use superspecial::Error;

#[test]
fn walks_are_reproducible() {
    let g = build_graph(31, None).unwrap();
    let cfg = WalkConfig::new(5000, 42);
    let (s1, a) = random_walk_trace(&g, &cfg).unwrap();
    let (s2, b) = random_walk_trace(&g, &cfg).unwrap();
    assert_eq!((s1, &a), (s2, &b));
    let (_, c) = random_walk_trace(&g, &WalkConfig::new(5000, 43)).unwrap();
    assert_ne!(a, c);
}

#[test]
fn frozen_walk_at_23() {
    let gold: serde_json::Value = serde_json::from_str(include_str!("data/walk-23-seed7.json")).unwrap();
    let g = build_graph(23, None).unwrap();
    let s = random_walk(&g, &WalkConfig::new(1000, 7)).unwrap();
    assert_eq!(s.product_hits, gold["product_hits"].as_u64().unwrap());
    assert_eq!(g.vertices[s.start].key.to_string(), gold["start"].as_str().unwrap());
    let visits: BTreeMap<String, u64> = g
        .vertices
        .iter()
        .map(|v| (v.key.to_string(), s.visits[v.id]))
        .collect();
    let want: BTreeMap<String, u64> = serde_json::from_value(gold["visits"].clone()).unwrap();
    assert_eq!(visits, want);
}

#[test]
fn product_visits_at_101() {
    let g = build_graph(101, None).unwrap();
    let ls = lambda_star(&g.digraph(), &SpectralOptions::default()).lambda_star;
    let s = random_walk(&g, &WalkConfig::new(100_000, 1)).unwrap();
    let m = s.expected_product_mass_f64;
    assert!((3.0 / 101.0..=7.0 / 101.0).contains(&m), "{m}");
    let sigma = frequency_sigma(m, 100_000, ls);
    assert!((s.product_ratio - m).abs() <= 4.0 * sigma, "{} vs {m} ± {sigma}", s.product_ratio);
}

#[test]
fn visit_frequencies_approach_stationarity() {
    let g = build_graph(23, None).unwrap();
    let phi = stationary_closed_form(&g.digraph()).to_f64();
    let s = random_walk(&g, &WalkConfig::new(200_000, 5)).unwrap();
    assert!(total_variation(&s.visits, &phi) < 0.02);
}

#[test]
fn subgraph_walks_stay_inside() {
    let g = build_graph(37, None).unwrap();
    for (which, kind) in [(Subgraph::Jacobian, VertexKind::Jacobian), (Subgraph::Product, VertexKind::Product)] {
        let mut cfg = WalkConfig::new(2000, 9);
        cfg.subgraph = which;
        let (start, trace) = random_walk_trace(&g, &cfg).unwrap();
        assert_eq!(g.vertices[start].kind, kind);
        assert!(trace.iter().all(|&v| g.vertices[v].kind == kind));
    }
}

#[test]
fn exact_distribution_respects_the_mixing_bound() {
    let g = build_graph(17, None).unwrap();
    for which in [Subgraph::Full, Subgraph::Jacobian, Subgraph::Product] {
        let (h, _) = subgraph(&g, which);
        let ls = lambda_star(&h, &SpectralOptions::default()).lambda_star;
        let c = empirical_distribution_check(&h, 0, 25, ls);
        assert!(c.violations.is_empty(), "{which:?} {:?}", c.violations);
        assert!(c.max_deviation[25] < c.max_deviation[0]);
    }
}

#[test]
fn bad_walk_configs_are_rejected() {
    let g = build_graph(17, None).unwrap();
    assert!(matches!(random_walk(&g, &WalkConfig::new(0, 1)), Err(Error::Precondition(_))));
    let mut cfg = WalkConfig::new(10, 1);
    cfg.subgraph = Subgraph::Product;
    cfg.start = g.vertices.iter().position(|v| v.kind == VertexKind::Jacobian);
    assert!(matches!(random_walk(&g, &cfg), Err(Error::Precondition(_))));
}
