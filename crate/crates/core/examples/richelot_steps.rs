//! The fifteen Richelot isogenies out of one Jacobian: splitting, δ,
//! codomain, and the round trip through the dual kernel.
//!
//!     cargo run --example richelot_steps -- 41

use superspecial::field::Field;
use superspecial::graph::{build_graph, VertexModel};
use superspecial::richelot::{quadratic_splittings, richelot_codomain, splitting_delta, Codomain};

fn main() -> superspecial::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(41);
    let g = build_graph(p, None)?;
    let v = g
        .vertices
        .iter()
        .find(|v| matches!(v.model, VertexModel::Jacobian(_)))
        .expect("every graph with p > 7 has a Jacobian");
    let VertexModel::Jacobian(m) = &v.model else { unreachable!() };
    println!("{} ({}), y² = {:?}", v.key, v.ra_type.name(), m.poly());
    for s in quadratic_splittings(m) {
        let delta = splitting_delta(&s);
        let step = richelot_codomain(&s)?;
        let back = step.dual_step()?;
        let target = match &step.codomain {
            Codomain::Jacobian(_) => "Jacobian",
            Codomain::Product(..) => "E × E'",
        };
        println!(
            "  {:?}  δ {:<12} -> {:<8} {}  identity {:?}  dual returns: {}",
            s.pairing,
            if delta.is_zero() { "0".to_string() } else { delta.to_string() },
            target,
            step.key,
            step.identity,
            back.key == v.key
        );
    }
    Ok(())
}
