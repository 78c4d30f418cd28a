//! Root finding by distinct-degree and equal-degree (Cantor–Zassenhaus) splitting.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ExtContext, ExtElem, Field, Poly, DEFAULT_SEED};

/// Monic gcd; `gcd(0, 0)` is the zero polynomial.
pub fn poly_gcd<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Roots of a polynomial together with the extension they were found in.
#[derive(Clone, Debug)]
pub struct RootSet<F: Field> {
    pub context: Arc<ExtContext<F>>,
    /// Distinct roots with multiplicities, sorted by encoding.
    pub roots: Vec<(ExtElem<F>, usize)>,
}

impl<F: Field> RootSet<F> {
    pub fn extension_degree(&self) -> usize {
        self.context.degree()
    }

    pub fn count_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// The roots as base-field elements, if they all lie in the base.
    pub fn in_base(&self) -> Option<Vec<(F, usize)>> {
        self.roots
            .iter()
            .map(|(r, m)| r.to_base().map(|b| (b, *m)))
            .collect()
    }
}

pub fn find_roots<F: Field>(f: &Poly<F>) -> RootSet<F> {
    find_roots_seeded(f, DEFAULT_SEED)
}

/// All roots of `f ≠ 0` in its splitting field.
///
/// The splitting field is `K[x]/(m)` with `deg m` the lcm of the irreducible
/// factor degrees of `f`; `m` is found by a seeded random search.
pub fn find_roots_seeded<F: Field>(f: &Poly<F>, seed: u64) -> RootSet<F> {
    let witness = f.lead().expect("find_roots on the zero polynomial").one();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sqfree = squarefree_part(f);
    let k = distinct_degrees(&sqfree)
        .into_iter()
        .fold(1usize, lcm);
    let ctx = if k == 1 {
        ExtContext::trivial(&witness)
    } else {
        ExtContext::new(random_irreducible(&witness, k, &mut rng))
    };
    let lifted = sqfree.map(|c| ctx.embed(c.clone()));
    let full = f.map(|c| ctx.embed(c.clone()));
    let mut distinct = Vec::new();
    split_linear(&lifted, &mut rng, &mut distinct);
    let mut roots: Vec<(ExtElem<F>, usize)> = distinct
        .into_iter()
        .map(|r| {
            let m = multiplicity(&full, &r);
            (r, m)
        })
        .collect();
    roots.sort_by_key(|(r, _)| r.encode());
    RootSet { context: ctx, roots }
}

/// Roots of `f` lying in its own coefficient field, with multiplicities.
pub fn roots_in_field<F: Field>(f: &Poly<F>, seed: u64) -> Vec<(F, usize)> {
    let witness = match f.lead() {
        Some(l) => l.one(),
        None => return Vec::new(),
    };
    let sqfree = squarefree_part(f);
    if sqfree.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let x = Poly::x(&witness);
    let xq = x.powmod(&witness.order(), &sqfree);
    let linear = poly_gcd(&sqfree, &xq.sub(&x));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut distinct = Vec::new();
    split_linear(&linear, &mut rng, &mut distinct);
    let mut out: Vec<(F, usize)> = distinct
        .into_iter()
        .map(|r| {
            let m = multiplicity(f, &r);
            (r, m)
        })
        .collect();
    out.sort_by_key(|(r, _)| r.encode());
    out
}

/// `f / gcd(f, f′)`, valid while `deg f` is below the characteristic.
fn squarefree_part<F: Field>(f: &Poly<F>) -> Poly<F> {
    let d = f.derivative();
    if d.is_zero() {
        return f.monic();
    }
    let g = poly_gcd(f, &d);
    f.divrem(&g).0.monic()
}

fn multiplicity<F: Field>(f: &Poly<F>, r: &F) -> usize {
    let lin = Poly::new(vec![-r.clone(), r.one()]);
    let mut g = f.clone();
    let mut m = 0;
    loop {
        let (q, rem) = g.divrem(&lin);
        if !rem.is_zero() || g.degree() == Some(0) {
            return m;
        }
        m += 1;
        g = q;
    }
}

/// Degrees of the irreducible factors of a squarefree polynomial, with repetition.
fn distinct_degrees<F: Field>(f: &Poly<F>) -> Vec<usize> {
    let Some(lead) = f.lead() else {
        return Vec::new();
    };
    let q = lead.order();
    let x = Poly::x(lead);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while rest.degree().unwrap_or(0) > 0 {
        i += 1;
        if 2 * i > rest.degree().unwrap() {
            out.push(rest.degree().unwrap());
            break;
        }
        h = h.powmod(&q, &rest);
        let g = poly_gcd(&rest, &h.sub(&x));
        let gd = g.degree().unwrap_or(0);
        if gd > 0 {
            out.extend(std::iter::repeat_n(i, gd / i));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    out
}

/// Splits a squarefree product of distinct linear factors into its roots.
fn split_linear<F: Field>(f: &Poly<F>, rng: &mut ChaCha8Rng, out: &mut Vec<F>) {
    let Some(d) = f.degree() else { return };
    if d == 0 {
        return;
    }
    let f = f.monic();
    if d == 1 {
        out.push(-f.coeffs()[0].clone());
        return;
    }
    let lead = f.lead().unwrap().clone();
    let e = (lead.order() - 1u32) >> 1;
    loop {
        let a = lead.random(rng);
        let t = Poly::new(vec![a, lead.one()]);
        let h = t.powmod(&e, &f).sub(&Poly::constant(lead.one()));
        let g = poly_gcd(&f, &h);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < d {
            split_linear(&g, rng, out);
            split_linear(&f.divrem(&g).0, rng, out);
            return;
        }
    }
}

/// Rabin's test: `m` of degree `k` is irreducible iff `x^{q^k} ≡ x` and
/// `gcd(x^{q^{k/r}} − x, m) = 1` for each prime `r | k`.
pub fn is_irreducible<F: Field>(m: &Poly<F>) -> bool {
    let Some(k) = m.degree() else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let lead = m.lead().unwrap();
    let q = lead.order();
    let x = Poly::x(lead);
    let frob_iter = |n: usize| {
        let mut h = x.clone();
        for _ in 0..n {
            h = h.powmod(&q, m);
        }
        h
    };
    if frob_iter(k).sub(&x).rem(m) != Poly::zero() {
        return false;
    }
    prime_factors(k).into_iter().all(|r| {
        let g = poly_gcd(m, &frob_iter(k / r).sub(&x));
        g.degree() == Some(0)
    })
}

fn random_irreducible<F: Field>(witness: &F, k: usize, rng: &mut ChaCha8Rng) -> Poly<F> {
    loop {
        let mut c: Vec<F> = (0..k).map(|_| witness.random(rng)).collect();
        c.push(witness.one());
        let m = Poly::new(c);
        if is_irreducible(&m) {
            return m;
        }
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
