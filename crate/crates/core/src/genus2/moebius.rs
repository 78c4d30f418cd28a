//! Reduced automorphisms of a genus-2 curve as the subgroup of PGL₂ that
//! permutes its six branch points.

use crate::field::Field;

/// Point `(x : z)` of P¹, normalized to `(x : 1)` or `(1 : 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint<F: Field> {
    pub x: F,
    pub z: F,
}

impl<F: Field> ProjPoint<F> {
    pub fn affine(x: F) -> Self {
        let z = x.one();
        Self { x, z }
    }

    pub fn infinity(witness: &F) -> Self {
        Self {
            x: witness.one(),
            z: witness.zero(),
        }
    }

    /// Normalizes `(x : z)`; `None` for `(0 : 0)`.
    pub fn new(x: F, z: F) -> Option<Self> {
        if z.is_zero() {
            if x.is_zero() {
                None
            } else {
                Some(Self::infinity(&x))
            }
        } else {
            Some(Self::affine(x.div(&z)))
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.z.is_zero()
    }

    /// The affine coordinate, `None` at ∞.
    pub fn value(&self) -> Option<&F> {
        (!self.is_infinity()).then_some(&self.x)
    }
}

/// `(x : z) ↦ (m[0]x + m[1]z : m[2]x + m[3]z)`.
pub type Matrix<F> = [F; 4];

pub fn apply<F: Field>(m: &Matrix<F>, p: &ProjPoint<F>) -> Option<ProjPoint<F>> {
    ProjPoint::new(
        m[0].clone() * p.x.clone() + m[1].clone() * p.z.clone(),
        m[2].clone() * p.x.clone() + m[3].clone() * p.z.clone(),
    )
}

pub fn compose<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let t = |i: usize, j: usize| a[2 * i].clone() * b[j].clone() + a[2 * i + 1].clone() * b[2 + j].clone();
    [t(0, 0), t(0, 1), t(1, 0), t(1, 1)]
}

fn adjugate<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    [m[3].clone(), -m[1].clone(), -m[2].clone(), m[0].clone()]
}

/// The map sending `(1:0), (0:1), (1:1)` to `a, b, c`, if the points are distinct.
fn frame<F: Field>(a: &ProjPoint<F>, b: &ProjPoint<F>, c: &ProjPoint<F>) -> Option<Matrix<F>> {
    let det = a.x.clone() * b.z.clone() - b.x.clone() * a.z.clone();
    let di = det.inv()?;
    let lam = (c.x.clone() * b.z.clone() - b.x.clone() * c.z.clone()) * di.clone();
    let mu = (a.x.clone() * c.z.clone() - c.x.clone() * a.z.clone()) * di;
    if lam.is_zero() || mu.is_zero() {
        return None;
    }
    Some([
        lam.clone() * a.x.clone(),
        mu.clone() * b.x.clone(),
        lam * a.z.clone(),
        mu * b.z.clone(),
    ])
}

/// The stabilizer of a 6-point set, with each element's permutation of the points.
#[derive(Clone, Debug)]
pub struct MoebiusGroup<F: Field> {
    pub elements: Vec<(Matrix<F>, [usize; 6])>,
}

impl<F: Field> MoebiusGroup<F> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn permutations(&self) -> Vec<[usize; 6]> {
        self.elements.iter().map(|(_, p)| *p).collect()
    }
}

/// Permutations `σ` with some Möbius map sending `src[i]` to `dst[σ(i)]`,
/// found by solving for the map taking the first three points of `src` to
/// each ordered triple of `dst` (120 candidates).
pub fn moebius_matches<F: Field>(
    src: &[ProjPoint<F>; 6],
    dst: &[ProjPoint<F>; 6],
) -> Vec<(Matrix<F>, [usize; 6])> {
    let from = frame(&src[0], &src[1], &src[2]).expect("branch points must be distinct");
    let from_inv = adjugate(&from);
    let mut out = Vec::new();
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                if a == b || b == c || a == c {
                    continue;
                }
                let Some(to) = frame(&dst[a], &dst[b], &dst[c]) else {
                    continue;
                };
                let m = compose(&to, &from_inv);
                let mut perm = [0usize; 6];
                let ok = src.iter().enumerate().all(|(i, p)| {
                    apply(&m, p)
                        .and_then(|q| dst.iter().position(|r| *r == q))
                        .map(|k| perm[i] = k)
                        .is_some()
                });
                if ok {
                    out.push((m, perm));
                }
            }
        }
    }
    out
}

/// The stabilizer of a 6-point set.
pub fn moebius_group<F: Field>(pts: &[ProjPoint<F>; 6]) -> MoebiusGroup<F> {
    MoebiusGroup {
        elements: moebius_matches(pts, pts),
    }
}
