use crate::error::{Error, Result};
use crate::field::{Field, Fp2, Poly};
use crate::genus2::{ProjPoint, SexticModel};

/// A perfect matching of the six branch-point indices.
pub type Pairing = [(usize, usize); 3];

/// The 15 perfect matchings of `0..6`, in lexicographic order.
pub fn pairings() -> Vec<Pairing> {
    let mut out = Vec::with_capacity(15);
    for b in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != b).collect();
        for k in 1..4 {
            let c = rest[0];
            let d = rest[k];
            let others: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != d).collect();
            out.push([(0, b), (c, d), (others[0], others[1])]);
        }
    }
    out
}

/// Index into [`pairings`] of an arbitrary matching, after normalizing it.
pub fn pairing_index(p: &Pairing) -> usize {
    let mut q = p.map(|(a, b)| (a.min(b), a.max(b)));
    q.sort_unstable();
    pairings()
        .iter()
        .position(|x| *x == q)
        .expect("not a perfect matching of 0..6")
}

/// Image of a matching under a permutation of the six points.
pub fn permute_pairing(p: &Pairing, perm: &[usize; 6]) -> Pairing {
    p.map(|(a, b)| (perm[a], perm[b]))
}

/// `F = F₁F₂F₃`, one factor per pair of branch points; the leading constant
/// of `F` is carried by `F₁`. A pair containing ∞ gives a linear factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSplitting {
    pub pairing: Pairing,
    pub factors: [Poly<Fp2>; 3],
}

impl QuadraticSplitting {
    pub fn product(&self) -> Poly<Fp2> {
        self.factors[0].mul(&self.factors[1]).mul(&self.factors[2])
    }

    /// The 3×3 matrix of coefficients, row `i` = `(F_{i,0}, F_{i,1}, F_{i,2})`.
    pub fn coefficient_rows(&self) -> [[Fp2; 3]; 3] {
        let w = self.factors[0].lead().copied().expect("nonzero factor");
        self.factors
            .clone()
            .map(|f| f.padded(3, &w).try_into().unwrap())
    }
}

fn pair_factor(a: &ProjPoint<Fp2>, b: &ProjPoint<Fp2>) -> Poly<Fp2> {
    let lin = |p: &ProjPoint<Fp2>| match p.value() {
        Some(r) => Poly::new(vec![-*r, r.one()]),
        None => Poly::constant(p.x.one()),
    };
    lin(a).mul(&lin(b))
}

/// The 15 splittings of a model, ordered like [`pairings`].
pub fn quadratic_splittings(model: &SexticModel) -> Vec<QuadraticSplitting> {
    let r = model.roots();
    let lead = Poly::constant(model.leading_coefficient());
    pairings()
        .into_iter()
        .map(|pairing| {
            let [(a, b), (c, d), (e, f)] = pairing;
            let factors = [
                pair_factor(&r[a], &r[b]).mul(&lead),
                pair_factor(&r[c], &r[d]),
                pair_factor(&r[e], &r[f]),
            ];
            QuadraticSplitting { pairing, factors }
        })
        .collect()
}

/// `δ(F₁, F₂, F₃)`.
pub fn splitting_delta(s: &QuadraticSplitting) -> Fp2 {
    crate::genus2::clebsch::det3(&s.coefficient_rows())
}

/// Roots of a nonzero polynomial of degree ≤ 2 read as a binary quadratic
/// form, so a degree drop contributes roots at ∞.
pub fn quadratic_roots(q: &Poly<Fp2>) -> Result<[ProjPoint<Fp2>; 2]> {
    let w = q.lead().copied().ok_or_else(|| Error::Invariant("zero quadratic".into()))?;
    let c = q.padded(3, &w);
    let inf = ProjPoint::infinity(&w);
    if !c[2].is_zero() {
        let disc = c[1].square() - w.from_int(4) * c[0] * c[2];
        let s = disc.sqrt().ok_or_else(|| {
            Error::Invariant(format!("roots of {q:?} leave F_p²"))
        })?;
        let den = (w.from_int(2) * c[2]).inv().unwrap();
        Ok([
            ProjPoint::affine((-c[1] + s) * den),
            ProjPoint::affine((-c[1] - s) * den),
        ])
    } else if !c[1].is_zero() {
        Ok([ProjPoint::affine(-c[0] * c[1].inv().unwrap()), inf])
    } else {
        Ok([inf.clone(), inf])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QuadExtField;

    #[test]
    fn fifteen_distinct_pairings() {
        let p = pairings();
        assert_eq!(p.len(), 15);
        for (i, x) in p.iter().enumerate() {
            assert_eq!(pairing_index(x), i);
            let mut seen: Vec<usize> = x.iter().flat_map(|&(a, b)| [a, b]).collect();
            seen.sort_unstable();
            assert_eq!(seen, vec![0, 1, 2, 3, 4, 5]);
        }
        assert_eq!(p[0], [(0, 1), (2, 3), (4, 5)]);
        assert_eq!(p[14], [(0, 5), (1, 4), (2, 3)]);
    }

    fn polys(k: &QuadExtField, rows: &[[i64; 3]; 3]) -> QuadraticSplitting {
        let f = |r: &[i64; 3]| Poly::new(r.iter().map(|&c| k.from_int(c)).collect());
        QuadraticSplitting {
            pairing: [(0, 1), (2, 3), (4, 5)],
            factors: [f(&rows[0]), f(&rows[1]), f(&rows[2])],
        }
    }

    #[test]
    fn delta_examples() {
        let k = QuadExtField::new(101).unwrap();
        assert!(splitting_delta(&polys(&k, &[[-1, 0, 1], [-4, 0, 1], [-9, 0, 1]])).is_zero());
        assert_eq!(
            splitting_delta(&polys(&k, &[[-1, 0, 1], [1, 1, 1], [1, -1, 1]])),
            k.from_int(-4)
        );
        // F₃ = 2F₁ − F₂
        assert!(splitting_delta(&polys(&k, &[[3, 1, 4], [1, 5, 9], [5, -3, -1]])).is_zero());
    }

    #[test]
    fn splittings_of_x6_minus_1() {
        let k = QuadExtField::new(11).unwrap();
        let f = Poly::new([-1, 0, 0, 0, 0, 0, 1].iter().map(|&c| k.from_int(c)).collect());
        let m = SexticModel::from_poly(f.clone()).unwrap();
        let s = quadratic_splittings(&m);
        assert_eq!(s.len(), 15);
        assert!(s.iter().all(|x| x.product() == f));
        let want: Vec<Poly<Fp2>> = [[-1, 0, 1], [1, 1, 1], [1, -1, 1]]
            .iter()
            .map(|r| Poly::new(r.iter().map(|&c| k.from_int(c)).collect()))
            .collect();
        assert!(s.iter().any(|x| want.iter().all(|w| x.factors.contains(w))));
    }

    #[test]
    fn quintic_splittings_have_one_linear_factor() {
        let k = QuadExtField::new(31).unwrap();
        let f = Poly::new([-1, 0, 0, 0, 0, 1].iter().map(|&c| k.from_int(c)).collect());
        let m = SexticModel::from_poly(f.clone()).unwrap();
        for s in quadratic_splittings(&m) {
            let linear = s.factors.iter().filter(|g| g.degree() == Some(1)).count();
            assert_eq!(linear, 1);
            assert_eq!(s.product(), f);
        }
    }
}
