use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{is_prime, Field};
use crate::error::{Error, Result};

/// Validated odd prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Accepts primes `7 ≤ p < 2³¹`.
    pub fn new(p: u64) -> Result<Self> {
        if p < 7 {
            return Err(Error::Precondition(format!(
                "characteristic {p} is excluded (need p ≥ 7, p ∉ {{2, 3, 5}})"
            )));
        }
        if p >= 1 << 31 {
            return Err(Error::Precondition(format!("p = {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Precondition(format!("p = {p} is not prime")));
        }
        Ok(Self { p: p as u32 })
    }

    /// Unchecked constructor for small test fields such as F_5.
    pub fn new_unchecked(p: u64) -> Self {
        Self { p: p as u32 }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::new(v, self.p as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p as i64).map(|v| self.elem(v))
    }
}

/// Element of F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        let r = v.rem_euclid(p as i64);
        Self {
            v: r as u32,
            p: p as u32,
        }
    }

    pub fn value(&self) -> u64 {
        self.v as u64
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    pub fn pow_mod(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn legendre(&self) -> i32 {
        if self.v == 0 {
            return 0;
        }
        if self.pow_mod((self.p as u64 - 1) / 2).v == 1 {
            1
        } else {
            -1
        }
    }

    /// Tonelli–Shanks in F_p returning the least representative.
    pub fn sqrt_fp(&self) -> Option<Self> {
        if self.v == 0 {
            return Some(*self);
        }
        if self.legendre() != 1 {
            return None;
        }
        let p = self.p as u64;
        let r = if p % 4 == 3 {
            self.pow_mod((p + 1) / 4)
        } else {
            let mut q = p - 1;
            let mut s = 0;
            while q.is_multiple_of(2) {
                q /= 2;
                s += 1;
            }
            let mut z = Fp::new(2, p);
            while z.legendre() != -1 {
                z = z + z.one();
            }
            let mut m = s;
            let mut c = z.pow_mod(q);
            let mut t = self.pow_mod(q);
            let mut r = self.pow_mod(q.div_ceil(2));
            while t.v != 1 {
                let mut i = 0;
                let mut t2 = t;
                while t2.v != 1 {
                    t2 = t2 * t2;
                    i += 1;
                }
                let mut b = c;
                for _ in 0..(m - i - 1) {
                    b = b * b;
                }
                r = r * b;
                c = b * b;
                t = t * c;
                m = i;
            }
            r
        };
        let neg = -r;
        Some(if neg.v < r.v { neg } else { r })
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let s = self.v as u64 + o.v as u64;
        let p = self.p as u64;
        Fp {
            v: (if s >= p { s - p } else { s }) as u32,
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        let p = self.p as u64;
        let s = self.v as u64 + p - o.v as u64;
        Fp {
            v: (if s >= p { s - p } else { s }) as u32,
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        Fp {
            v: ((self.v as u64 * o.v as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.v == 0 {
            self
        } else {
            Fp {
                v: self.p - self.v,
                p: self.p,
            }
        }
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn from_int(&self, n: i64) -> Self {
        Fp::new(n, self.p as u64)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // extended Euclid on machine words
        let (mut r0, mut r1) = (self.p as i64, self.v as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Fp::new(t0, self.p as u64))
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> Self {
        Fp {
            v: rng.gen_range(0..self.p),
            p: self.p,
        }
    }
    fn encode(&self) -> Vec<u32> {
        vec![self.v]
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_fp()
    }
}
