use num_rational::Ratio;
use serde::Serialize;

use super::build::SuperspecialGraph;
use crate::genus2::RAType;

/// The congruence flags `ε₁, ε₂, ε₃, ε₅` of a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Epsilons {
    /// p ≡ 3 (mod 4)
    pub e1: i64,
    /// p ≡ 5, 7 (mod 8)
    pub e2: i64,
    /// p ≡ 2 (mod 3)
    pub e3: i64,
    /// p ≡ 4 (mod 5)
    pub e5: i64,
}

impl Epsilons {
    pub fn of(p: u64) -> Self {
        Self {
            e1: (p % 4 == 3) as i64,
            e2: matches!(p % 8, 5 | 7) as i64,
            e3: (p % 3 == 2) as i64,
            e5: (p % 5 == 4) as i64,
        }
    }
}

/// Number of generic supersingular j-invariants, `(p−1)/12 − ε₁/2 − ε₃/3`.
pub fn generic_j_count(p: u64) -> Ratio<i64> {
    let e = Epsilons::of(p);
    Ratio::new(p as i64 - 1, 12) - Ratio::new(e.e1, 2) - Ratio::new(e.e3, 3)
}

/// Closed-form number of vertices of type `t` in Γ₂(2;p).
pub fn expected_count(p: u64, t: RAType) -> Ratio<i64> {
    let e = Epsilons::of(p);
    let n = generic_j_count(p);
    let r = |a: i64, b: i64| Ratio::new(a, b);
    let i = |a: i64| Ratio::from_integer(a);
    let q = p as i64;
    match t {
        RAType::A => {
            r((q - 1) * (q * q - 35 * q + 346), 2880)
                - r(e.e1, 16)
                - r(e.e2, 4)
                - r(2 * e.e3, 9)
                - r(e.e5, 5)
        }
        RAType::I => r((q - 1) * (q - 17), 48) + r(e.e1, 4) + i(e.e2) + i(e.e3),
        RAType::II => i(e.e5),
        RAType::III => r(3, 2) * n + r(e.e1, 2) - r(e.e2, 2) - r(e.e3, 2),
        RAType::IV => i(2) * n + i(e.e1) - i(e.e2),
        RAType::V => i(e.e3),
        RAType::VI => i(e.e2),
        RAType::Pi => n * (n - i(1)) / i(2),
        RAType::Pi0 => i(e.e3) * n,
        RAType::Pi1728 => i(e.e1) * n,
        RAType::Pi0x1728 => i(e.e1 * e.e3),
        RAType::Sigma => n,
        RAType::Sigma0 => i(e.e3),
        RAType::Sigma1728 => i(e.e1),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub ra_type: RAType,
    pub observed: i64,
    pub expected: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub p: u64,
    pub epsilons: Epsilons,
    pub generic_j: String,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn mismatches(&self) -> Vec<&CensusRow> {
        self.rows.iter().filter(|r| !r.matches).collect()
    }
}

pub fn census(g: &SuperspecialGraph) -> CensusReport {
    let n = generic_j_count(g.p);
    assert!(n.is_integer(), "p = {}: generic j count {n} is not integral", g.p);
    let rows = RAType::ALL
        .iter()
        .map(|&t| {
            let observed = g.count_of(t) as i64;
            let expected = expected_count(g.p, t);
            CensusRow {
                ra_type: t,
                observed,
                expected: expected.to_string(),
                matches: expected == Ratio::from_integer(observed),
            }
        })
        .collect();
    CensusReport {
        p: g.p,
        epsilons: Epsilons::of(g.p),
        generic_j: n.to_string(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_are_integral() {
        for p in [7u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 101, 521] {
            for t in RAType::ALL {
                let c = expected_count(p, t);
                assert!(c.is_integer() && c >= Ratio::from_integer(0), "p={p} {t:?} {c}");
            }
        }
    }

    #[test]
    fn small_primes() {
        let c = |p, t| expected_count(p, t).to_integer();
        assert_eq!(generic_j_count(19), Ratio::from_integer(1));
        assert_eq!((c(11, RAType::V), c(11, RAType::IV), c(11, RAType::A)), (1, 1, 0));
        assert_eq!(c(17, RAType::III), 1);
        let at17: i64 = RAType::ALL.iter().map(|&t| c(17, t)).sum();
        assert_eq!(at17, 8);
    }
}
