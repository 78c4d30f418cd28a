//! Supersingular elliptic curves over F_{p²} with fully rational 2-torsion.
//!
//! Every model here has Frobenius `π = −p` over F_{p²}: we start from a
//! supersingular curve defined over F_p and only ever move along 2-isogenies
//! defined over F_{p²}. Frobenius then acts trivially on `E[2]`, so all
//! 2-torsion x-coordinates are in F_{p²} and Vélu's formulas never leave it.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::field::{roots_in_field, Field, Fp2, Poly, QuadExtField, DEFAULT_SEED};
use crate::graph::{Edge, WeightedDigraph};

/// `y² = (x − s₁)(x − s₂)(x − s₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EllipticModel {
    roots: [Fp2; 3],
}

impl EllipticModel {
    pub fn new(roots: [Fp2; 3]) -> Result<Self> {
        let [a, b, c] = roots;
        if a == b || b == c || a == c {
            return Err(Error::Precondition(format!(
                "2-torsion roots {a}, {b}, {c} are not distinct"
            )));
        }
        Ok(Self { roots })
    }

    pub fn roots(&self) -> &[Fp2; 3] {
        &self.roots
    }

    pub fn j(&self) -> Fp2 {
        j_from_roots(&self.roots)
    }

    /// Translate so that the roots sum to zero.
    pub fn centered(&self) -> Self {
        let k = self.roots[0].from_int(3).inv().unwrap();
        let m = (self.roots[0] + self.roots[1] + self.roots[2]) * k;
        Self {
            roots: self.roots.map(|r| r - m),
        }
    }

    /// Codomain of the 2-isogeny with kernel `(s_i, 0)`, centered, together
    /// with the index of the dual kernel point on it.
    pub fn velu(&self, i: usize) -> Result<(EllipticModel, usize)> {
        let s = self.roots[i];
        let t1 = self.roots[(i + 1) % 3] - s;
        let t2 = self.roots[(i + 2) % 3] - s;
        // translated curve x(x² + ax + b); codomain X(X² − 2aX + a² − 4b)
        let a = -(t1 + t2);
        let b = t1 * t2;
        let r = b.sqrt().ok_or_else(|| {
            Error::Invariant(format!(
                "2-isogenous curve has 2-torsion outside F_{{p²}} (b = {b})"
            ))
        })?;
        let two = a.from_int(2);
        let shift = two * a * a.from_int(3).inv().unwrap();
        let roots = [a.zero() - shift, a + two * r - shift, a - two * r - shift];
        Ok((EllipticModel::new(roots)?, 0))
    }

    /// Reduced automorphisms `x ↦ u·x` of a centered model, as multipliers
    /// `u` together with the permutation each induces on the roots.
    pub fn reduced_automorphisms(&self) -> Vec<(Fp2, [usize; 3])> {
        let c = self.centered();
        let one = c.roots[0].one();
        let mut out = vec![(one, [0, 1, 2])];
        for a in 0..3 {
            for b in 0..3 {
                if c.roots[a].is_zero() || c.roots[b].is_zero() {
                    continue;
                }
                let u = c.roots[b] * c.roots[a].inv().unwrap();
                if u.is_one() || out.iter().any(|(v, _)| *v == u) {
                    continue;
                }
                let perm = c.roots.map(|r| c.roots.iter().position(|&s| s == u * r));
                if let [Some(x), Some(y), Some(z)] = perm {
                    out.push((u, [x, y, z]));
                }
            }
        }
        out
    }

    /// `#RA(E) = #Aut(E)/2`: 1 generically, 2 for j = 1728, 3 for j = 0.
    pub fn ra_order(&self) -> u32 {
        self.reduced_automorphisms().len() as u32
    }
}

/// j-invariant of `(x − s₁)(x − s₂)(x − s₃)` via its short Weierstrass form.
pub fn j_from_roots<F: Field>(s: &[F; 3]) -> F {
    let e1 = s[0].clone() + s[1].clone() + s[2].clone();
    let e2 = s[0].clone() * s[1].clone() + s[1].clone() * s[2].clone() + s[0].clone() * s[2].clone();
    let e3 = s[0].clone() * s[1].clone() * s[2].clone();
    let k = |n| e1.from_int(n);
    let third = k(3).inv().unwrap();
    let a = e2.clone() - e1.square() * third.clone();
    let b = -e3 + e1.clone() * e2 * third - k(2) * e1.pow_u64(3) * k(27).inv().unwrap();
    j_from_short(&a, &b)
}

/// j-invariant of `y² = x³ + ax + b`.
pub fn j_from_short<F: Field>(a: &F, b: &F) -> F {
    let a3 = a.pow_u64(3) * a.from_int(4);
    let den = a3.clone() + b.square() * a.from_int(27);
    a.from_int(1728) * a3 * den.inv().expect("singular curve")
}

/// A short Weierstrass model `(a, b)` with the given j-invariant.
pub fn short_model_for_j<F: Field>(j: &F) -> (F, F) {
    if j.is_zero() {
        (j.zero(), j.one())
    } else if *j == j.from_int(1728) {
        (j.one(), j.zero())
    } else {
        let a = j.from_int(27) * j.clone() * (j.from_int(4) * (j.from_int(1728) - j.clone())).inv().unwrap();
        (a.clone(), a)
    }
}

/// Coefficient of `x^{p−1}` in `(x³ + ax + b)^{(p−1)/2}`; zero iff supersingular.
pub fn hasse_invariant<F: Field>(a: &F, b: &F) -> F {
    let p = a.characteristic();
    let m = (p - 1) / 2;
    let one = a.one();
    let mut fact = vec![one.clone()];
    for n in 1..=m {
        fact.push(fact[n as usize - 1].clone() * a.from_int(n as i64));
    }
    let mut acc = a.zero();
    // choose i copies of x³, k of a·x, l of b with 3i + k = p − 1
    for i in 0..=m {
        if 3 * i > p - 1 {
            break;
        }
        let k = p - 1 - 3 * i;
        if i + k > m {
            continue;
        }
        let l = m - i - k;
        let denom = fact[i as usize].clone() * fact[k as usize].clone() * fact[l as usize].clone();
        let term = fact[m as usize].clone() * denom.inv().unwrap() * a.pow_u64(k) * b.pow_u64(l);
        acc = acc + term;
    }
    acc
}

pub fn is_supersingular(j: &Fp2) -> bool {
    let (a, b) = short_model_for_j(j);
    hasse_invariant(&a, &b).is_zero()
}

/// Reduced automorphism group order determined by j alone.
pub fn ra_order_of_j(j: &Fp2) -> u32 {
    if j.is_zero() {
        3
    } else if *j == j.from_int(1728) {
        2
    } else {
        1
    }
}

/// The supersingular j-invariants over F_{p²} with one chosen model each.
#[derive(Clone, Debug)]
pub struct SupersingularSet {
    pub field: QuadExtField,
    /// j-invariants in discovery order; `models[i]` has j-invariant `js[i]`.
    pub js: Vec<Fp2>,
    pub models: Vec<EllipticModel>,
    index: HashMap<Fp2, usize>,
}

impl SupersingularSet {
    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn len(&self) -> usize {
        self.js.len()
    }

    pub fn is_empty(&self) -> bool {
        self.js.is_empty()
    }

    pub fn index_of(&self, j: &Fp2) -> Option<usize> {
        self.index.get(j).copied()
    }

    pub fn model(&self, j: &Fp2) -> Option<&EllipticModel> {
        self.index_of(j).map(|i| &self.models[i])
    }

    pub fn contains_0(&self) -> bool {
        self.index.contains_key(&self.field.zero())
    }

    pub fn contains_1728(&self) -> bool {
        self.index.contains_key(&self.field.from_int(1728))
    }

    /// Number of j ∉ {0, 1728}.
    pub fn generic_count(&self) -> usize {
        self.len() - self.contains_0() as usize - self.contains_1728() as usize
    }
}

/// Expected count of generic supersingular j's: `(p−1)/12 − ε₁/2 − ε₃/3`.
pub fn expected_generic_count(p: u64) -> i64 {
    let e1 = (p % 4 == 3) as i64;
    let e3 = (p % 3 == 2) as i64;
    let num = (p as i64 - 1) - 6 * e1 - 4 * e3;
    assert_eq!(num % 12, 0, "N_p must be integral");
    num / 12
}

/// First supersingular model defined over F_p, with its 2-torsion in F_{p²}.
fn bootstrap_model(field: QuadExtField) -> Result<EllipticModel> {
    for jv in 0..field.p() as i64 {
        let j = field.from_int(jv);
        if !is_supersingular(&j) {
            continue;
        }
        let (a, b) = short_model_for_j(&j);
        let cubic = Poly::new(vec![b, a, field.zero(), field.one()]);
        let roots = roots_in_field(&cubic, DEFAULT_SEED);
        if roots.len() == 3 {
            let r = [roots[0].0, roots[1].0, roots[2].0];
            return EllipticModel::new(r);
        }
        log::warn!("supersingular j = {j} over F_p without split 2-torsion over F_p²");
    }
    Err(Error::Invariant(format!(
        "no supersingular j found in F_{}",
        field.p()
    )))
}

/// All supersingular j's, by closing an F_p-rational one under 2-isogenies.
pub fn enumerate_supersingular(p: u64) -> Result<SupersingularSet> {
    let field = QuadExtField::new(p)?;
    let start = bootstrap_model(field)?;
    let mut js = vec![start.j()];
    let mut models = vec![start];
    let mut index = HashMap::from([(start.j(), 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let m = models[i];
        for k in 0..3 {
            let (cod, _) = m.velu(k)?;
            let j = cod.j();
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(j) {
                e.insert(js.len());
                queue.push_back(js.len());
                js.push(j);
                models.push(cod);
            }
        }
    }
    let set = SupersingularSet {
        field,
        js,
        models,
        index,
    };
    let expected = expected_generic_count(p);
    if set.generic_count() as i64 != expected {
        return Err(Error::Invariant(format!(
            "p = {p}: found {} generic supersingular j, expected {expected}",
            set.generic_count()
        )));
    }
    Ok(set)
}

/// Groups kernel indices into orbits under a list of index permutations.
pub(crate) fn orbits(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for p in perms {
                let y = p[x];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// The weighted elliptic 2-isogeny graph Γ₁(2;p).
#[derive(Clone, Debug)]
pub struct Gamma1 {
    pub curves: SupersingularSet,
    pub graph: WeightedDigraph,
}

pub fn build_gamma1(p: u64) -> Result<Gamma1> {
    let curves = enumerate_supersingular(p)?;
    let mut edges = Vec::new();
    let mut ra = Vec::new();
    for (u, m) in curves.models.iter().enumerate() {
        let auts = m.reduced_automorphisms();
        ra.push(auts.len() as u32);
        let perms: Vec<Vec<usize>> = auts.iter().map(|(_, p)| p.to_vec()).collect();
        for orbit in orbits(3, &perms) {
            let dst_j: Vec<Fp2> = orbit
                .iter()
                .map(|&k| m.velu(k).map(|(c, _)| c.j()))
                .collect::<Result<_>>()?;
            if dst_j.iter().any(|j| *j != dst_j[0]) {
                return Err(Error::Invariant(
                    "kernels in one automorphism orbit have different codomains".into(),
                ));
            }
            let dst = curves.index_of(&dst_j[0]).ok_or_else(|| {
                Error::Invariant(format!("codomain j = {} not enumerated", dst_j[0]))
            })?;
            edges.push(Edge {
                src: u,
                dst,
                weight: orbit.len() as u32,
            });
        }
    }
    Ok(Gamma1 {
        curves,
        graph: WeightedDigraph::new(ra, edges),
    })
}

/// Multiset of codomain j-invariants reached from `j`.
pub fn neighbours(set: &SupersingularSet, j: &Fp2) -> Result<BTreeMap<Fp2, usize>> {
    let m = set
        .model(j)
        .ok_or_else(|| Error::Precondition(format!("j = {j} is not supersingular")))?;
    let mut out = BTreeMap::new();
    for k in 0..3 {
        *out.entry(m.velu(k)?.0.j()).or_insert(0) += 1;
    }
    Ok(out)
}
