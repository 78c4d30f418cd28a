//! Exact finite-field arithmetic.
//!
//! The tower used throughout the crate is `F_p ⊂ F_{p²} ⊂ F_{p^{2k}}`:
//!
//! * [`Fp`] is the prime field, elements carry their modulus.
//! * [`Fp2`] is `F_p[t]/(t² − n)` with `n` the least quadratic nonresidue.
//! * [`ExtElem`] lives in a quotient `K[x]/(m)` over any base field `K`,
//!   used when roots leave the base field.
//!
//! All element types implement [`Field`], so the polynomial and root-finding
//! code in [`poly`] and [`roots`] is written once.

mod ext;
mod fp;
mod fp2;
pub mod poly;
pub mod roots;

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use ext::{ExtContext, ExtElem};
pub use fp::{Fp, PrimeField};
pub use fp2::{Fp2, QuadExtField};
pub use poly::Poly;
pub use roots::{find_roots, find_roots_seeded, is_irreducible, poly_gcd, roots_in_field, RootSet};

/// Seed used by every randomized field routine unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x005e_ed22;

/// Common interface of the finite fields in the tower.
///
/// Elements know their own field, so constants are produced from an existing
/// element (`a.zero()`, `a.from_int(3)`).
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn from_int(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn characteristic(&self) -> u64;
    /// Number of elements of the field this element lives in.
    fn order(&self) -> BigUint;
    fn random(&self, rng: &mut ChaCha8Rng) -> Self;
    /// Little-endian vector of prime-field residues.
    fn encode(&self) -> Vec<u32>;

    fn is_one(&self) -> bool {
        *self == self.one()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero")
    }

    fn pow(&self, e: &BigUint) -> Self {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = acc.square();
            if e.bit(i) {
                acc = acc * self.clone();
            }
        }
        acc
    }

    fn pow_u64(&self, e: u64) -> Self {
        self.pow(&BigUint::from(e))
    }

    /// Euler's criterion; zero counts as a square.
    fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let e = (self.order() - 1u32) >> 1;
        self.pow(&e).is_one()
    }

    /// Square root with a canonical choice between `±r`.
    fn sqrt(&self) -> Option<Self> {
        sqrt_tonelli_shanks(self, DEFAULT_SEED).map(canonical_sign)
    }
}

/// Picks the representative of `{r, −r}` with the smaller encoding.
pub fn canonical_sign<F: Field>(r: F) -> F {
    let neg = -r.clone();
    if neg.encode() < r.encode() {
        neg
    } else {
        r
    }
}

/// Generic Tonelli–Shanks over a field of odd order `q`.
pub fn sqrt_tonelli_shanks<F: Field>(a: &F, seed: u64) -> Option<F> {
    if a.is_zero() {
        return Some(a.clone());
    }
    if !a.is_square() {
        return None;
    }
    let q = a.order();
    let mut t = q - 1u32;
    let mut s = 0u32;
    while !t.bit(0) {
        t >>= 1;
        s += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = loop {
        let c = a.random(&mut rng);
        if !c.is_zero() && !c.is_square() {
            break c;
        }
    };
    let mut m = s;
    let mut c = z.pow(&t);
    let mut x = a.pow(&((&t + BigUint::one()) >> 1));
    let mut b = a.pow(&t);
    while !b.is_one() {
        let mut i = 0u32;
        let mut b2 = b.clone();
        while !b2.is_one() {
            b2 = b2.square();
            i += 1;
        }
        let mut tmp = c.clone();
        for _ in 0..(m - i - 1) {
            tmp = tmp.square();
        }
        x = x * tmp.clone();
        c = tmp.square();
        b = b * c.clone();
        m = i;
    }
    Some(x)
}

/// Trial-division primality test, adequate for the machine-word moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
