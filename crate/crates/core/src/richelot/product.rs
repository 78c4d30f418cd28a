//! (2,2)-isogenies out of an elliptic product `E × E′`.

use super::splitting::pairing_index;
use super::{Codomain, DualKernel, IsogenyStep};
use crate::elliptic::EllipticModel;
use crate::error::{Error, Result};
use crate::field::{Field, Fp2};
use crate::genus2::{ProjPoint, SexticModel, VertexKey};

/// A Lagrangian subgroup of `(E × E′)[2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKernel {
    /// `K_{i,j} = ⟨(P_i, 0), (0, P′_j)⟩`.
    Product(usize, usize),
    /// `K_π = {(P_i, P′_{π(i)})}`, π in one-line notation.
    Gluing([usize; 3]),
}

/// Permutations of `0..3` in lexicographic one-line order.
pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

pub fn invert(p: &[usize; 3]) -> [usize; 3] {
    let mut q = [0; 3];
    for (i, &x) in p.iter().enumerate() {
        q[x] = i;
    }
    q
}

/// `a ∘ b`.
pub fn compose(a: &[usize; 3], b: &[usize; 3]) -> [usize; 3] {
    [a[b[0]], a[b[1]], a[b[2]]]
}

/// The nine product kernels in `(i, j)` order followed by the six gluings.
pub fn product_kernels() -> Vec<ProductKernel> {
    let mut out = Vec::with_capacity(15);
    for i in 0..3 {
        for j in 0..3 {
            out.push(ProductKernel::Product(i, j));
        }
    }
    out.extend(PERMUTATIONS.iter().map(|p| ProductKernel::Gluing(*p)));
    out
}

pub fn kernel_index(k: &ProductKernel) -> usize {
    match k {
        ProductKernel::Product(i, j) => 3 * i + j,
        ProductKernel::Gluing(p) => 9 + PERMUTATIONS.iter().position(|q| q == p).unwrap(),
    }
}

/// The quantities of the Howe–Leprévost–Poonen gluing for `α_i`, `β_i`.
#[derive(Clone, Debug)]
pub struct GluingData {
    pub a1: Fp2,
    pub b1: Fp2,
    pub a2: Fp2,
    pub b2: Fp2,
}

pub fn gluing_data(al: &[Fp2; 3], be: &[Fp2; 3]) -> GluingData {
    let (a1, a2, a3) = (al[0], al[1], al[2]);
    let (b1, b2, b3) = (be[0], be[1], be[2]);
    let q = |n: Fp2, d: Fp2| n.square() * d.inv().expect("distinct 2-torsion");
    GluingData {
        a1: q(a3 - a2, b3 - b2) + q(a2 - a1, b2 - b1) + q(a1 - a3, b1 - b3),
        b1: q(b3 - b2, a3 - a2) + q(b2 - b1, a2 - a1) + q(b1 - b3, a1 - a3),
        a2: a1 * (b3 - b2) + a2 * (b1 - b3) + a3 * (b2 - b1),
        b2: b1 * (a3 - a2) + b2 * (a1 - a3) + b3 * (a2 - a1),
    }
}

pub fn product_isogeny_codomain(
    k: &ProductKernel,
    e: &EllipticModel,
    e2: &EllipticModel,
) -> Result<IsogenyStep> {
    match *k {
        ProductKernel::Product(i, j) => {
            let (c1, d1) = e.velu(i)?;
            let (c2, d2) = e2.velu(j)?;
            Ok(IsogenyStep {
                key: VertexKey::product(c1.j(), c2.j()),
                codomain: Codomain::Product(c1, c2),
                dual: DualKernel::Product(ProductKernel::Product(d1, d2)),
                identity: None,
            })
        }
        ProductKernel::Gluing(pi) => glue(&pi, e, e2),
    }
}

fn glue(pi: &[usize; 3], e: &EllipticModel, e2: &EllipticModel) -> Result<IsogenyStep> {
    let al = *e.roots();
    let be = [e2.roots()[pi[0]], e2.roots()[pi[1]], e2.roots()[pi[2]]];
    let g = gluing_data(&al, &be);
    if g.a2.is_zero() != g.b2.is_zero() {
        log::warn!("gluing data disagree: a2 = {}, b2 = {}", g.a2, g.b2);
    }
    if g.a2.is_zero() || g.b2.is_zero() {
        // the anti-isometry comes from an isomorphism E → E′
        return Ok(IsogenyStep {
            key: VertexKey::product(e.j(), e2.j()),
            codomain: Codomain::Product(*e, *e2),
            dual: DualKernel::Product(ProductKernel::Gluing(*pi)),
            identity: None,
        });
    }
    let sq = |x: Fp2| x.square();
    let dp = sq(be[1] - be[2]) * sq(be[0] - be[2]) * sq(be[0] - be[1]);
    let d = sq(al[1] - al[2]) * sq(al[0] - al[2]) * sq(al[0] - al[1]);
    let a = dp * g.a1 * g.a2.inv().unwrap();
    let b = d * g.b1 * g.b2.inv().unwrap();
    // F_i = p_i X² + q_i Z²
    let p = [
        a * (al[1] - al[0]) * (al[0] - al[2]),
        a * (al[2] - al[1]) * (al[1] - al[0]),
        a * (al[0] - al[2]) * (al[2] - al[1]),
    ];
    let q = [
        b * (be[1] - be[0]) * (be[0] - be[2]),
        b * (be[2] - be[1]) * (be[1] - be[0]),
        b * (be[0] - be[2]) * (be[2] - be[1]),
    ];
    let mut pts = Vec::with_capacity(6);
    for i in 0..3 {
        let r2 = -q[i] * p[i].inv().ok_or_else(|| Error::Invariant("degenerate gluing".into()))?;
        let r = r2
            .sqrt()
            .ok_or_else(|| Error::Invariant(format!("gluing branch points leave F_p² (r² = {r2})")))?;
        if r.is_zero() {
            return Err(Error::Invariant("degenerate gluing".into()));
        }
        pts.push(ProjPoint::affine(r));
        pts.push(ProjPoint::affine(-r));
    }
    let lead = -(p[0] * p[1] * p[2]);
    let model = SexticModel::from_roots(lead, pts.clone().try_into().unwrap())?;
    let idx = |x: &ProjPoint<Fp2>| model.roots().iter().position(|r| r == x).unwrap();
    let dual = pairing_index(&[
        (idx(&pts[0]), idx(&pts[1])),
        (idx(&pts[2]), idx(&pts[3])),
        (idx(&pts[4]), idx(&pts[5])),
    ]);
    Ok(IsogenyStep {
        key: model.key()?,
        codomain: Codomain::Jacobian(model),
        dual: DualKernel::Splitting(dual),
        identity: None,
    })
}
