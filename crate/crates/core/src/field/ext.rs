use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::pow;
use rand_chacha::ChaCha8Rng;

use super::{Field, Poly};

/// Quotient field `K[x]/(m)` for a monic irreducible `m` over a base field `K`.
#[derive(Debug)]
pub struct ExtContext<F: Field> {
    modulus: Poly<F>,
    witness: F,
    order: BigUint,
}

impl<F: Field> ExtContext<F> {
    /// `modulus` must be monic and irreducible; this is not re-checked here.
    pub fn new(modulus: Poly<F>) -> Arc<Self> {
        let witness = modulus.lead().expect("nonzero modulus").one();
        let k = modulus.degree().expect("nonzero modulus");
        assert!(k >= 1, "extension modulus must have positive degree");
        let order = pow(witness.order(), k);
        Arc::new(Self {
            modulus: modulus.monic(),
            witness,
            order,
        })
    }

    /// The degree-1 context whose elements coincide with the base field.
    pub fn trivial(witness: &F) -> Arc<Self> {
        Self::new(Poly::x(witness))
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    pub fn base_witness(&self) -> &F {
        &self.witness
    }

    pub fn embed(self: &Arc<Self>, a: F) -> ExtElem<F> {
        let mut c = vec![a.zero(); self.degree()];
        c[0] = a;
        ExtElem {
            c,
            ctx: Arc::clone(self),
        }
    }

    pub fn from_poly(self: &Arc<Self>, p: &Poly<F>) -> ExtElem<F> {
        let r = p.rem(&self.modulus);
        ExtElem {
            c: r.padded(self.degree(), &self.witness),
            ctx: Arc::clone(self),
        }
    }

    /// The class of `x`.
    pub fn gen(self: &Arc<Self>) -> ExtElem<F> {
        self.from_poly(&Poly::x(&self.witness))
    }
}

/// Element of an [`ExtContext`].
#[derive(Clone)]
pub struct ExtElem<F: Field> {
    c: Vec<F>,
    ctx: Arc<ExtContext<F>>,
}

impl<F: Field> ExtElem<F> {
    pub fn context(&self) -> &Arc<ExtContext<F>> {
        &self.ctx
    }

    pub fn coords(&self) -> &[F] {
        &self.c
    }

    fn as_poly(&self) -> Poly<F> {
        Poly::new(self.c.clone())
    }

    /// Descends to the base field when every higher coordinate vanishes.
    pub fn to_base(&self) -> Option<F> {
        self.c[1..]
            .iter()
            .all(|x| x.is_zero())
            .then(|| self.c[0].clone())
    }

    fn lift(&self, p: Poly<F>) -> Self {
        ExtElem {
            c: p.rem(&self.ctx.modulus).padded(self.ctx.degree(), &self.ctx.witness),
            ctx: Arc::clone(&self.ctx),
        }
    }
}

impl<F: Field> PartialEq for ExtElem<F> {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl<F: Field> Eq for ExtElem<F> {}

impl<F: Field> Hash for ExtElem<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state)
    }
}

impl<F: Field> fmt::Debug for ExtElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x:?}")?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Add for ExtElem<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        ExtElem { c, ctx: self.ctx }
    }
}

impl<F: Field> Sub for ExtElem<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        ExtElem { c, ctx: self.ctx }
    }
}

impl<F: Field> Mul for ExtElem<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let prod = self.as_poly().mul(&o.as_poly());
        self.lift(prod)
    }
}

impl<F: Field> Neg for ExtElem<F> {
    type Output = Self;
    fn neg(self) -> Self {
        let c = self.c.iter().map(|a| -a.clone()).collect();
        ExtElem { c, ctx: self.ctx }
    }
}

impl<F: Field> Field for ExtElem<F> {
    fn zero(&self) -> Self {
        self.ctx.embed(self.ctx.witness.zero())
    }
    fn one(&self) -> Self {
        self.ctx.embed(self.ctx.witness.one())
    }
    fn from_int(&self, n: i64) -> Self {
        self.ctx.embed(self.ctx.witness.from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // extended Euclid: s·a + t·m = g, g a nonzero constant
        let m = self.ctx.modulus.clone();
        let (mut r0, mut r1) = (m, self.as_poly());
        let (mut s0, mut s1) = (Poly::zero(), Poly::constant(self.ctx.witness.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let g = r0.lead()?.inv()?;
        Some(self.lift(s0.scale(&g)))
    }
    fn characteristic(&self) -> u64 {
        self.ctx.witness.characteristic()
    }
    fn order(&self) -> BigUint {
        self.ctx.order.clone()
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> Self {
        let c = (0..self.ctx.degree())
            .map(|_| self.ctx.witness.random(rng))
            .collect();
        ExtElem {
            c,
            ctx: Arc::clone(&self.ctx),
        }
    }
    fn encode(&self) -> Vec<u32> {
        self.c.iter().flat_map(|x| x.encode()).collect()
    }
}
