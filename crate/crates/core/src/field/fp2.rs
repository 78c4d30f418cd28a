use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Field, Fp, PrimeField};
use crate::error::Result;

/// `F_{p²} = F_p[t]/(t² − n)` with `n` the least quadratic nonresidue mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtField {
    base: PrimeField,
    nonresidue: u32,
}

impl QuadExtField {
    pub fn new(p: u64) -> Result<Self> {
        let base = PrimeField::new(p)?;
        Ok(Self::over(base))
    }

    pub fn over(base: PrimeField) -> Self {
        let n = (2..base.p())
            .find(|&v| base.elem(v as i64).legendre() == -1)
            .expect("odd prime has a nonresidue");
        Self {
            base,
            nonresidue: n as u32,
        }
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue as u64
    }

    pub fn elem(&self, c0: i64, c1: i64) -> Fp2 {
        let p = self.p() as i64;
        Fp2 {
            c0: c0.rem_euclid(p) as u32,
            c1: c1.rem_euclid(p) as u32,
            p: p as u32,
            n: self.nonresidue,
        }
    }

    pub fn from_int(&self, v: i64) -> Fp2 {
        self.elem(v, 0)
    }

    pub fn zero(&self) -> Fp2 {
        self.elem(0, 0)
    }

    pub fn one(&self) -> Fp2 {
        self.elem(1, 0)
    }

    /// The generator `t` with `t² = n`.
    pub fn gen(&self) -> Fp2 {
        self.elem(0, 1)
    }

    pub fn decode(&self, coords: &[u32]) -> Fp2 {
        let c0 = coords.first().copied().unwrap_or(0) as i64;
        let c1 = coords.get(1).copied().unwrap_or(0) as i64;
        self.elem(c0, c1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp2> + '_ {
        let p = self.p() as i64;
        (0..p).flat_map(move |c1| (0..p).map(move |c0| self.elem(c0, c1)))
    }
}

/// Element `c0 + c1·t` of F_{p²}.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp2 {
    c0: u32,
    c1: u32,
    p: u32,
    n: u32,
}

impl Fp2 {
    pub fn c0(&self) -> u64 {
        self.c0 as u64
    }

    pub fn c1(&self) -> u64 {
        self.c1 as u64
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn context(&self) -> QuadExtField {
        QuadExtField {
            base: PrimeField::new_unchecked(self.p as u64),
            nonresidue: self.n,
        }
    }

    fn with(&self, c0: u64, c1: u64) -> Fp2 {
        Fp2 {
            c0: c0 as u32,
            c1: c1 as u32,
            p: self.p,
            n: self.n,
        }
    }

    pub fn from_fp(&self, a: Fp) -> Fp2 {
        self.with(a.value(), 0)
    }

    /// The Frobenius `x ↦ x^p`, i.e. conjugation `t ↦ −t`.
    pub fn frobenius(&self) -> Fp2 {
        let p = self.p as u64;
        self.with(self.c0 as u64, (p - self.c1 as u64) % p)
    }

    pub fn norm(&self) -> Fp {
        let p = self.p as u64;
        let a0 = self.c0 as u64;
        let a1 = self.c1 as u64;
        let v = (a0 * a0 % p + p - (self.n as u64 * (a1 * a1 % p)) % p) % p;
        Fp::new(v as i64, p)
    }

    pub fn in_prime_field(&self) -> bool {
        self.c1 == 0
    }

    pub fn as_fp(&self) -> Option<Fp> {
        self.in_prime_field()
            .then(|| Fp::new(self.c0 as i64, self.p as u64))
    }

    /// Square root via the norm map, canonical sign.
    pub fn sqrt_fp2(&self) -> Option<Fp2> {
        if self.is_zero() {
            return Some(*self);
        }
        let p = self.p as u64;
        let fp = |v: u64| Fp::new(v as i64, p);
        let root = if self.c1 == 0 {
            let a0 = fp(self.c0 as u64);
            match a0.sqrt_fp() {
                Some(r) => self.with(r.value(), 0),
                None => {
                    // a0 = n·s² gives sqrt = s·t
                    let s = (a0 * fp(self.n as u64).inv()?).sqrt_fp()?;
                    self.with(0, s.value())
                }
            }
        } else {
            let r = self.norm().sqrt_fp()?;
            let half = fp(2).inv()?;
            let a0 = fp(self.c0 as u64);
            let a1 = fp(self.c1 as u64);
            let mut x0sq = (a0 + r) * half;
            if x0sq.legendre() == -1 {
                x0sq = (a0 - r) * half;
            }
            let x0 = x0sq.sqrt_fp()?;
            if x0.value() == 0 {
                return None;
            }
            let x1 = a1 * (fp(2) * x0).inv()?;
            self.with(x0.value(), x1.value())
        };
        if root * root != *self {
            return None;
        }
        Some(super::canonical_sign(root))
    }
}

impl PartialOrd for Fp2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by canonical encoding `(c0, c1)`.
impl Ord for Fp2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c0, self.c1).cmp(&(other.c0, other.c1))
    }
}

impl fmt::Debug for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1 == 0 {
            write!(f, "{}", self.c0)
        } else if self.c0 == 0 {
            write!(f, "{}*t", self.c1)
        } else {
            write!(f, "{}+{}*t", self.c0, self.c1)
        }
    }
}

impl Add for Fp2 {
    type Output = Fp2;
    fn add(self, o: Fp2) -> Fp2 {
        let p = self.p as u64;
        self.with(
            (self.c0 as u64 + o.c0 as u64) % p,
            (self.c1 as u64 + o.c1 as u64) % p,
        )
    }
}

impl Sub for Fp2 {
    type Output = Fp2;
    fn sub(self, o: Fp2) -> Fp2 {
        let p = self.p as u64;
        self.with(
            (self.c0 as u64 + p - o.c0 as u64) % p,
            (self.c1 as u64 + p - o.c1 as u64) % p,
        )
    }
}

impl Mul for Fp2 {
    type Output = Fp2;
    fn mul(self, o: Fp2) -> Fp2 {
        let p = self.p as u64;
        let (a0, a1, b0, b1) = (self.c0 as u64, self.c1 as u64, o.c0 as u64, o.c1 as u64);
        let nb = self.n as u64 * (a1 * b1 % p) % p;
        self.with((a0 * b0 + nb) % p, (a0 * b1 + a1 * b0) % p)
    }
}

impl Neg for Fp2 {
    type Output = Fp2;
    fn neg(self) -> Fp2 {
        let p = self.p as u64;
        self.with((p - self.c0 as u64) % p, (p - self.c1 as u64) % p)
    }
}

impl Field for Fp2 {
    fn zero(&self) -> Self {
        self.with(0, 0)
    }
    fn one(&self) -> Self {
        self.with(1, 0)
    }
    fn from_int(&self, n: i64) -> Self {
        let p = self.p as i64;
        self.with(n.rem_euclid(p) as u64, 0)
    }
    fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x⁻¹ = conj(x) / N(x)
        let ninv = self.norm().inv()?;
        let c = self.frobenius();
        Some(c * self.from_fp(ninv))
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.p as u64 * self.p as u64)
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> Self {
        self.with(
            rng.gen_range(0..self.p) as u64,
            rng.gen_range(0..self.p) as u64,
        )
    }
    fn encode(&self) -> Vec<u32> {
        vec![self.c0, self.c1]
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_fp2()
    }
    fn is_square(&self) -> bool {
        // every element of F_p is a square in F_{p²}; otherwise test the norm
        self.is_zero() || self.norm().legendre() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_nonresidue() {
        assert_eq!(QuadExtField::new(7).unwrap().nonresidue(), 3);
        assert_eq!(QuadExtField::new(11).unwrap().nonresidue(), 2);
        assert!(QuadExtField::new(5).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_p7() {
        let k = QuadExtField::new(7).unwrap();
        for a in k.elements() {
            assert_eq!(a.frobenius().frobenius(), a);
            if !a.is_zero() {
                assert!((a * a.inv().unwrap()).is_one());
            }
            let sq = a * a;
            let r = sq.sqrt_fp2().unwrap();
            assert_eq!(r * r, sq);
            // Frobenius is x^p
            assert_eq!(a.pow_u64(7), a.frobenius());
        }
    }

    #[test]
    fn sqrt_matches_euler_criterion() {
        let k = QuadExtField::new(13).unwrap();
        let e = (k.one().order() - 1u32) >> 1;
        for a in k.elements().filter(|a| !a.is_zero()) {
            let euler = a.pow(&e).is_one();
            assert_eq!(a.sqrt_fp2().is_some(), euler, "{a}");
            assert_eq!(a.is_square(), euler);
        }
    }
}
