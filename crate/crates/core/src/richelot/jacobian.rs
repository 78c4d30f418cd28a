//! Richelot isogenies out of a Jacobian `y² = F(x)`.

use super::product::ProductKernel;
use super::splitting::{pairing_index, quadratic_roots, splitting_delta, QuadraticSplitting};
use super::{Codomain, DualKernel, IsogenyStep};
use crate::elliptic::EllipticModel;
use crate::error::{Error, Result};
use crate::field::{Field, Fp2, Poly};
use crate::genus2::{ProjPoint, SexticModel, VertexKey};

/// `G_i = δ⁻¹(F_j′F_k − F_k′F_j)` for `(i, j, k)` cyclic.
pub fn richelot_g(s: &QuadraticSplitting, delta: &Fp2) -> [Poly<Fp2>; 3] {
    let di = delta.inv().expect("δ ≠ 0");
    let f = &s.factors;
    let g = |j: usize, k: usize| {
        f[j].derivative()
            .mul(&f[k])
            .sub(&f[k].derivative().mul(&f[j]))
            .scale(&di)
    };
    [g(1, 2), g(2, 0), g(0, 1)]
}

/// Checks `F₁(x₁)G₁(x₂) + F₂(x₁)G₂(x₂) + F₃(x₁)G₃(x₂) + (x₁ − x₂)² = 0`
/// coefficient by coefficient.
pub fn richelot_identity_holds(f: &[Poly<Fp2>; 3], g: &[Poly<Fp2>; 3]) -> bool {
    let w = f[0].lead().copied().expect("nonzero factor");
    let mut m = [[w.zero(); 3]; 3];
    for i in 0..3 {
        let fi = f[i].padded(3, &w);
        let gi = g[i].padded(3, &w);
        for a in 0..3 {
            for b in 0..3 {
                m[a][b] = m[a][b] + fi[a] * gi[b];
            }
        }
    }
    m[2][0] = m[2][0] + w.one();
    m[1][1] = m[1][1] - w.from_int(2);
    m[0][2] = m[0][2] + w.one();
    m.iter().flatten().all(|c| c.is_zero())
}

/// The Richelot step for one splitting.
pub fn richelot_codomain(s: &QuadraticSplitting) -> Result<IsogenyStep> {
    let delta = splitting_delta(s);
    if delta.is_zero() {
        return split_codomain(s);
    }
    let g = richelot_g(s, &delta);
    let identity = richelot_identity_holds(&s.factors, &g);
    let mut pts = Vec::with_capacity(6);
    let mut lead = delta.one();
    for gi in &g {
        pts.extend(quadratic_roots(gi)?);
        lead = lead * *gi.lead().unwrap();
    }
    let roots: [ProjPoint<Fp2>; 6] = pts.clone().try_into().unwrap();
    let model = SexticModel::from_roots(lead, roots)?;
    let idx = |p: &ProjPoint<Fp2>| model.roots().iter().position(|r| r == p).unwrap();
    let dual = pairing_index(&[
        (idx(&pts[0]), idx(&pts[1])),
        (idx(&pts[2]), idx(&pts[3])),
        (idx(&pts[4]), idx(&pts[5])),
    ]);
    let key = model.key()?;
    Ok(IsogenyStep {
        codomain: Codomain::Jacobian(model),
        dual: DualKernel::Splitting(dual),
        key,
        identity: Some(identity),
    })
}

/// Coefficients `(c₀, c₁, c₂)` of a polynomial of degree ≤ 2.
fn coeffs3(q: &Poly<Fp2>, w: &Fp2) -> [Fp2; 3] {
    q.padded(3, w).try_into().unwrap()
}

/// The square `L²` of the linear form with `Q = c·L²`, normalized so that
/// `L = X − rZ` or `L = Z`.
fn square_of_linear(q: &[Fp2; 3]) -> Result<[Fp2; 3]> {
    let w = q[0];
    let disc = q[1].square() - w.from_int(4) * q[0] * q[2];
    if !disc.is_zero() {
        return Err(Error::Invariant("split-case form is not a square".into()));
    }
    if !q[2].is_zero() {
        let r = -q[1] * (w.from_int(2) * q[2]).inv().unwrap();
        Ok([r.square(), -w.from_int(2) * r, w.one()])
    } else {
        Ok([w.one(), w.zero(), w.zero()])
    }
}

/// Solves `F = αU² + βV²`.
fn decompose(f: &[Fp2; 3], u: &[Fp2; 3], v: &[Fp2; 3]) -> Result<(Fp2, Fp2)> {
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let det = u[a] * v[b] - u[b] * v[a];
        if det.is_zero() {
            continue;
        }
        let di = det.inv().unwrap();
        let alpha = (f[a] * v[b] - f[b] * v[a]) * di;
        let beta = (u[a] * f[b] - u[b] * f[a]) * di;
        if (0..3).all(|c| alpha * u[c] + beta * v[c] == f[c]) {
            return Ok((alpha, beta));
        }
        break;
    }
    Err(Error::Invariant("factor is not a combination of U² and V²".into()))
}

/// δ = 0: the codomain is `E × E′` with `E: Y² = Π(α_iX + β_iZ)` and
/// `E′: Y² = Π(β_iX + α_iZ)`. Points are indexed by `i` on both factors, so
/// the dual kernel is the gluing along the identity permutation.
fn split_codomain(s: &QuadraticSplitting) -> Result<IsogenyStep> {
    let w = *s.factors[0].lead().unwrap();
    let f = s.factors.clone().map(|q| coeffs3(&q, &w));
    let disc = |q: &[Fp2; 3]| q[1].square() - w.from_int(4) * q[0] * q[2];
    // D(λ) = disc(F₁ + λF₂)
    let d2 = disc(&f[1]);
    let d1 = w.from_int(2) * f[0][1] * f[1][1] - w.from_int(4) * (f[0][0] * f[1][2] + f[1][0] * f[0][2]);
    let d0 = disc(&f[0]);
    let lambdas = quadratic_roots(&Poly::new(vec![d0, d1, d2]))?;
    let mut sq = Vec::with_capacity(2);
    for l in &lambdas {
        let l = l
            .value()
            .ok_or_else(|| Error::Invariant("F₂ is a square".into()))?;
        let q = [0, 1, 2].map(|c| f[0][c] + *l * f[1][c]);
        sq.push(square_of_linear(&q)?);
    }
    if sq[0] == sq[1] {
        return Err(Error::Invariant("repeated discriminant root in split case".into()));
    }
    let mut ab = Vec::with_capacity(3);
    for fi in &f {
        ab.push(decompose(fi, &sq[0], &sq[1])?);
    }
    let root = |num: Fp2, den: Fp2| -> Result<Fp2> {
        den.inv()
            .map(|d| -num * d)
            .ok_or_else(|| Error::Invariant("split-case coefficient vanishes".into()))
    };
    let e = EllipticModel::new([
        root(ab[0].1, ab[0].0)?,
        root(ab[1].1, ab[1].0)?,
        root(ab[2].1, ab[2].0)?,
    ])?;
    let e2 = EllipticModel::new([
        root(ab[0].0, ab[0].1)?,
        root(ab[1].0, ab[1].1)?,
        root(ab[2].0, ab[2].1)?,
    ])?;
    let key = VertexKey::product(e.j(), e2.j());
    Ok(IsogenyStep {
        codomain: Codomain::Product(e, e2),
        dual: DualKernel::Product(ProductKernel::Gluing([0, 1, 2])),
        key,
        identity: None,
    })
}
