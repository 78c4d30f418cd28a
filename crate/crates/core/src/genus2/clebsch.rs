//! Clebsch invariants of a binary sextic via transvectants, and Mestre's
//! derived quantities.

use crate::field::Field;

/// Binary form `Σ c[k] x^k y^{d−k}` of degree `d = c.len() − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Form<F: Field> {
    c: Vec<F>,
}

impl<F: Field> Form<F> {
    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    /// `∂x^a ∂y^b`, a form of degree `d − a − b`.
    fn partial(&self, a: usize, b: usize) -> Self {
        let d = self.degree();
        let w = &self.c[0];
        let out = (0..=d - a - b)
            .map(|k| {
                // x^{k+a} y^{d−k−a} ↦ falling factorials
                let kx = k + a;
                let ky = d - kx;
                if ky < b {
                    return w.zero();
                }
                let f = falling(kx, a) * falling(ky, b);
                self.c[kx].clone() * w.from_int(f as i64)
            })
            .collect();
        Self { c: out }
    }

    fn mul(&self, o: &Self) -> Self {
        let w = &self.c[0];
        let mut out = vec![w.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { c: out }
    }

    fn add_scaled(&mut self, o: &Self, s: &F) {
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            *a = a.clone() + b.clone() * s.clone();
        }
    }

    fn constant(&self) -> F {
        debug_assert_eq!(self.c.len(), 1);
        self.c[0].clone()
    }
}

fn falling(n: usize, k: usize) -> u64 {
    (0..k).map(|i| (n - i) as u64).product()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn binomial(n: usize, k: usize) -> u64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The `h`-th transvectant `(f, g)_h` normalized by `(m−h)!(n−h)!/(m!n!)`.
fn transvectant<F: Field>(f: &Form<F>, g: &Form<F>, h: usize) -> Form<F> {
    let (m, n) = (f.degree(), g.degree());
    let w = &f.c[0];
    let mut acc = Form {
        c: vec![w.zero(); m + n - 2 * h + 1],
    };
    for j in 0..=h {
        let term = f.partial(h - j, j).mul(&g.partial(j, h - j));
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc.add_scaled(&term, &w.from_int(sign * binomial(h, j) as i64));
    }
    let num = w.from_int((factorial(m - h) * factorial(n - h)) as i64);
    let den = w.from_int((factorial(m) * factorial(n)) as i64);
    let s = num * den.inv().expect("characteristic exceeds 6");
    Form {
        c: acc.c.into_iter().map(|x| x * s.clone()).collect(),
    }
}

/// Clebsch invariants `(A, B, C, D)` of weights 2, 4, 6, 10.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClebschInvariants<F: Field> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Field> ClebschInvariants<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Self { a, b, c, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// `(μA, μ²B, μ³C, μ⁵D)`.
    pub fn scaled(&self, mu: &F) -> Self {
        Self {
            a: self.a.clone() * mu.clone(),
            b: self.b.clone() * mu.pow_u64(2),
            c: self.c.clone() * mu.pow_u64(3),
            d: self.d.clone() * mu.pow_u64(5),
        }
    }

    /// Equality in weighted projective space P(1,2,3,5) of the μ-scaling,
    /// decided by cross-multiplied monomials of matching weight.
    pub fn projectively_equal(&self, o: &Self) -> bool {
        let v = [&self.a, &self.b, &self.c, &self.d];
        let w = [&o.a, &o.b, &o.c, &o.d];
        let wt = [1u64, 2, 3, 5];
        if self.is_zero() || o.is_zero() {
            return self.is_zero() && o.is_zero();
        }
        for i in 0..4 {
            if v[i].is_zero() != w[i].is_zero() {
                return false;
            }
            for k in 0..4 {
                // v_i^{wt_k} w_k^{wt_i} = w_i^{wt_k} v_k^{wt_i}
                let l = v[i].pow_u64(wt[k]) * w[k].pow_u64(wt[i]);
                let r = w[i].pow_u64(wt[k]) * v[k].pow_u64(wt[i]);
                if l != r {
                    return false;
                }
            }
        }
        true
    }
}

/// Clebsch invariants of `Σ coeffs[k] x^k` viewed as a binary sextic
/// (a quintic gets `x⁶`-coefficient zero, i.e. a branch point at ∞).
pub fn clebsch_invariants<F: Field>(coeffs: &[F]) -> ClebschInvariants<F> {
    assert!(!coeffs.is_empty() && coeffs.len() <= 7, "not a sextic");
    let w = &coeffs[0];
    let mut c = coeffs.to_vec();
    c.resize(7, w.zero());
    let f = Form { c };
    let i = transvectant(&f, &f, 4);
    let delta = transvectant(&i, &i, 2);
    let y1 = transvectant(&f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    ClebschInvariants {
        a: transvectant(&f, &f, 6).constant(),
        b: transvectant(&i, &i, 4).constant(),
        c: transvectant(&i, &delta, 4).constant(),
        d: transvectant(&y3, &y1, 2).constant(),
    }
}

/// Mestre's `A_ij` and `R²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MestreDerived<F: Field> {
    pub a11: F,
    pub a12: F,
    pub a22: F,
    pub a23: F,
    pub a31: F,
    pub a33: F,
    pub r_squared: F,
}

pub fn mestre_derived<F: Field>(inv: &ClebschInvariants<F>) -> MestreDerived<F> {
    let (a, b, c, d) = (&inv.a, &inv.b, &inv.c, &inv.d);
    let k = |n: i64| a.from_int(n);
    let third = k(3).inv().unwrap();
    let half = k(2).inv().unwrap();
    let a11 = k(2) * c.clone() + third.clone() * a.clone() * b.clone();
    let a12 = k(2) * third.clone() * (b.square() + a.clone() * c.clone());
    let a23 = half.clone() * b.clone() * a12.clone() + third.clone() * c.clone() * a11.clone();
    let a22 = d.clone();
    let a31 = d.clone();
    let a33 = half.clone() * b.clone() * a22.clone() + third * c.clone() * a12.clone();
    let m = [
        [a11.clone(), a12.clone(), a31.clone()],
        [a12.clone(), a22.clone(), a23.clone()],
        [a31.clone(), a23.clone(), a33.clone()],
    ];
    let r_squared = half * det3(&m);
    MestreDerived {
        a11,
        a12,
        a22,
        a23,
        a31,
        a33,
        r_squared,
    }
}

pub(crate) fn det3<F: Field>(m: &[[F; 3]; 3]) -> F {
    let t = |i: usize, j: usize| m[i][j].clone();
    t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1)) - t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0))
        + t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField};

    const BIG: u64 = 1_000_003;

    fn q(num: i64, den: i64) -> Fp {
        let k = PrimeField::new(BIG).unwrap();
        k.elem(num) * k.elem(den).inv().unwrap()
    }

    fn inv_of(c: &[i64]) -> ClebschInvariants<Fp> {
        let k = PrimeField::new(BIG).unwrap();
        let v: Vec<Fp> = c.iter().map(|&x| k.elem(x)).collect();
        clebsch_invariants(&v)
    }

    // reference values computed exactly over Q by an independent
    // computer-algebra transvectant script, reduced mod a large prime
    #[test]
    fn reference_values() {
        let inv = inv_of(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(inv, ClebschInvariants::new(q(2, 1), q(2, 3), q(-2, 9), q(0, 1)));
        let inv = inv_of(&[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(inv, ClebschInvariants::new(q(-2, 1), q(2, 3), q(2, 9), q(0, 1)));
        // x⁵y − xy⁵
        let inv = inv_of(&[0, -1, 0, 0, 0, 1, 0]);
        assert_eq!(inv, ClebschInvariants::new(q(1, 3), q(0, 1), q(0, 1), q(0, 1)));
        // x⁵y − y⁶
        let inv = inv_of(&[-1, 0, 0, 0, 0, 1, 0]);
        assert_eq!(inv, ClebschInvariants::new(q(0, 1), q(0, 1), q(0, 1), q(-1, 1458)));
        // (x³ − 1)(x³ − 3) = x⁶ − 4x³ + 3
        let inv = inv_of(&[3, 0, 0, -4, 0, 0, 1]);
        assert_eq!(
            inv,
            ClebschInvariants::new(
                q(26, 5),
                q(13778, 1875),
                q(-1143574, 140625),
                q(-1518666272, 87890625)
            )
        );
        let inv = inv_of(&[5, -1, 0, 3, 0, 2, 1]);
        let d = q(-6292938078569 % BIG as i64, 1) * q(1, 56953125000 % BIG as i64);
        assert_eq!(
            inv,
            ClebschInvariants::new(q(613, 60), q(224443, 11250), q(-1927381, 62500), d)
        );
    }

    #[test]
    fn mestre_plug_in() {
        let k = PrimeField::new(101).unwrap();
        let (z, o) = (k.elem(0), k.elem(1));
        let m = mestre_derived(&ClebschInvariants::new(z, z, z, o));
        assert_eq!((m.a11, m.a12, m.a22, m.a23, m.a31, m.a33), (z, z, o, z, o, z));
        let m = mestre_derived(&ClebschInvariants::new(o, z, z, z));
        assert!(m.a11.is_zero() && m.a12.is_zero() && m.a33.is_zero() && m.r_squared.is_zero());
    }

    #[test]
    fn mestre_r_squared_matches_cofactor_expansion() {
        let k = PrimeField::new(1009).unwrap();
        let inv = ClebschInvariants::new(k.elem(5), k.elem(77), k.elem(-3), k.elem(910));
        let m = mestre_derived(&inv);
        // expansion along the second row
        let e = [
            [m.a11, m.a12, m.a31],
            [m.a12, m.a22, m.a23],
            [m.a31, m.a23, m.a33],
        ];
        let minor = |r: [usize; 2], c: [usize; 2]| e[r[0]][c[0]] * e[r[1]][c[1]] - e[r[0]][c[1]] * e[r[1]][c[0]];
        let det = -e[1][0] * minor([0, 2], [1, 2]) + e[1][1] * minor([0, 2], [0, 2])
            - e[1][2] * minor([0, 2], [0, 1]);
        assert_eq!(m.r_squared * k.elem(2), det);
    }

    #[test]
    fn projective_equality() {
        let k = PrimeField::new(101).unwrap();
        let e = |a, b, c, d| ClebschInvariants::new(k.elem(a), k.elem(b), k.elem(c), k.elem(d));
        assert!(e(2, 8, 16, 64).projectively_equal(&e(1, 2, 2, 2)));
        assert!(e(0, 3, 5, 7).projectively_equal(&e(0, 3, -5, -7)));
        assert!(!e(1, 2, 2, 2).projectively_equal(&e(1, 2, 2, 3)));
    }
}
