use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use superspecial::elliptic::build_gamma1;
use superspecial::field::{is_prime, QuadExtField};
use superspecial::graph::{build_graph, subgraph, Subgraph};
use superspecial::spectra::{
    detailed_balance_failures, is_stationary, lambda_star, linear_imbalance_solve, mixing_bound, point_mass,
    stationary_closed_form, subgraph_spectrum, LinearImbalanceSpec, SpectralOptions, TransitionMatrix,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn p11_second_eigenvalue_is_seven_plus_root_three() {
    let g = build_graph(11, None).unwrap();
    let r = lambda_star(&g.digraph(), &SpectralOptions::default());
    assert!((15.0 * r.lambda2 - (7.0 + 3f64.sqrt())).abs() < 1e-9);
    assert!((r.perron - 1.0).abs() < 1e-12);
    assert!(15.0 * r.lambda_star > 2.0 * 14f64.sqrt());
}

#[test]
fn stationary_distribution_is_exact() {
    for p in (11..=101).filter(|&p| is_prime(p)) {
        let g = build_graph(p, None).unwrap();
        for which in [Subgraph::Full, Subgraph::Jacobian, Subgraph::Product] {
            let (h, _) = subgraph(&g, which);
            let m = TransitionMatrix::new(&h);
            let phi = stationary_closed_form(&h);
            assert!(m.is_stochastic());
            assert!(is_stationary(&m, &phi), "p={p} {which:?}");
            assert!(detailed_balance_failures(&m, &phi).is_empty(), "p={p} {which:?}");
        }
    }
}

#[test]
fn gamma1_imbalance_pattern() {
    for p in [23, 47, 59, 71, 83] {
        assert_eq!(p % 12, 11);
        let g1 = build_gamma1(p).unwrap();
        let f = QuadExtField::new(p).unwrap();
        let e0 = g1.curves.index_of(&f.zero()).unwrap();
        let e1728 = g1.curves.index_of(&f.from_int(1728)).unwrap();
        let class: Vec<usize> = (0..g1.graph.len())
            .map(|v| match v {
                _ if v == e0 => 1,
                _ if v == e1728 => 2,
                _ => 0,
            })
            .collect();
        let spec = LinearImbalanceSpec::from_graph(&g1.graph, &class).unwrap();
        let alpha = linear_imbalance_solve(&spec).unwrap();
        assert_eq!(alpha, vec![rat(1, 1), rat(1, 3), rat(1, 2)], "p={p}");
        // the solution agrees with deg/#RA up to scale
        let phi = stationary_closed_form(&g1.graph);
        let generic = (0..class.len()).find(|&v| class[v] == 0).unwrap();
        assert_eq!(&phi.exact[e0] / &phi.exact[generic], rat(1, 3));
        assert_eq!(&phi.exact[e1728] / &phi.exact[generic], rat(1, 2));
    }
}

#[test]
fn gamma1_at_11_has_no_generic_class() {
    let g1 = build_gamma1(11).unwrap();
    assert_eq!(g1.graph.len(), 2);
    let class = vec![1, 2];
    let spec = LinearImbalanceSpec::from_graph(&g1.graph, &class).unwrap();
    assert!(linear_imbalance_solve(&spec).is_err());
}

#[test]
fn imbalance_rejects_incomposable_ratios() {
    let mut spec = LinearImbalanceSpec {
        degrees: vec![rat(3, 1); 3],
        ..Default::default()
    };
    spec.ratios.insert((0, 1), rat(2, 1));
    spec.ratios.insert((1, 2), rat(2, 1));
    spec.ratios.insert((0, 2), rat(3, 1));
    assert!(linear_imbalance_solve(&spec).is_err());
    spec.ratios.insert((0, 2), rat(4, 1));
    assert!(linear_imbalance_solve(&spec).is_ok());
}

#[test]
fn dense_and_iterative_solvers_agree() {
    let g = build_graph(61, None).unwrap();
    let dense = SpectralOptions::default();
    let sparse = SpectralOptions {
        dense_threshold: 0,
        ..dense
    };
    for which in [Subgraph::Full, Subgraph::Jacobian, Subgraph::Product] {
        let a = subgraph_spectrum(&g, which, &dense);
        let b = subgraph_spectrum(&g, which, &sparse);
        assert!((a.lambda2 - b.lambda2).abs() < 1e-7, "{which:?}");
        assert!((a.lambda_min - b.lambda_min).abs() < 1e-7, "{which:?}");
        assert!(b.residual < 1e-6);
    }
}

#[test]
fn walk_distribution_converges_within_the_bound() {
    let g = build_graph(29, None).unwrap();
    let h = g.digraph();
    let m = TransitionMatrix::new(&h);
    let phi = stationary_closed_form(&h).to_f64();
    let ls = lambda_star(&h, &SpectralOptions::default()).lambda_star;
    for u in [0, h.len() - 1] {
        let mut x = point_mass(h.len(), u);
        for n in 1..=12u32 {
            x = m.apply(&x);
            for v in 0..h.len() {
                let xv = x[v].to_f64().unwrap();
                assert!((xv - phi[v]).abs() <= mixing_bound(&h, ls, u, v, n) + 1e-12);
            }
        }
    }
}
