use std::fmt;

use serde::{Deserialize, Serialize};

use super::clebsch::{mestre_derived, ClebschInvariants};
use crate::error::{Error, Result};
use crate::field::{Field, Fp2};

/// Reduced automorphism type of a superspecial abelian surface: the seven
/// Jacobian types and the seven elliptic-product types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RAType {
    A,
    I,
    II,
    III,
    IV,
    V,
    VI,
    /// `E × E′`, both generic.
    Pi,
    /// `E₀ × E′`.
    Pi0,
    /// `E₁₇₂₈ × E′`.
    Pi1728,
    /// `E₀ × E₁₇₂₈`.
    Pi0x1728,
    /// `E²`, generic.
    Sigma,
    Sigma0,
    Sigma1728,
}

impl RAType {
    pub const ALL: [RAType; 14] = [
        RAType::A,
        RAType::I,
        RAType::II,
        RAType::III,
        RAType::IV,
        RAType::V,
        RAType::VI,
        RAType::Pi,
        RAType::Pi0,
        RAType::Pi1728,
        RAType::Pi0x1728,
        RAType::Sigma,
        RAType::Sigma0,
        RAType::Sigma1728,
    ];

    /// Order of the reduced automorphism group.
    pub fn ra_order(self) -> u32 {
        match self {
            RAType::A => 1,
            RAType::I => 2,
            RAType::II => 5,
            RAType::III => 4,
            RAType::IV => 6,
            RAType::V => 12,
            RAType::VI => 24,
            RAType::Pi => 2,
            RAType::Pi0 => 6,
            RAType::Pi1728 => 4,
            RAType::Pi0x1728 => 12,
            RAType::Sigma => 4,
            RAType::Sigma0 => 36,
            RAType::Sigma1728 => 16,
        }
    }

    pub fn is_jacobian(self) -> bool {
        matches!(
            self,
            RAType::A | RAType::I | RAType::II | RAType::III | RAType::IV | RAType::V | RAType::VI
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            RAType::A => "A",
            RAType::I => "I",
            RAType::II => "II",
            RAType::III => "III",
            RAType::IV => "IV",
            RAType::V => "V",
            RAType::VI => "VI",
            RAType::Pi => "Pi",
            RAType::Pi0 => "Pi0",
            RAType::Pi1728 => "Pi1728",
            RAType::Pi0x1728 => "Pi0x1728",
            RAType::Sigma => "Sigma",
            RAType::Sigma0 => "Sigma0",
            RAType::Sigma1728 => "Sigma1728",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for RAType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How to read the second Type-I condition, `A₁₁A₂₂ ≠ A₁₂` as printed or the
/// weight-homogeneous `A₁₁A₂₂ ≠ A₁₂²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeIReading {
    Literal,
    Squared,
}

/// Reading confirmed against the Möbius-stabilizer classifier.
pub const TYPE_I_READING: TypeIReading = TypeIReading::Squared;

pub fn bolza_type<F: Field>(inv: &ClebschInvariants<F>) -> Result<RAType> {
    bolza_type_with(inv, TYPE_I_READING)
}

/// Bolza's conditions, most special type first.
pub fn bolza_type_with<F: Field>(inv: &ClebschInvariants<F>, reading: TypeIReading) -> Result<RAType> {
    if inv.is_zero() {
        return Err(Error::Precondition("all Clebsch invariants vanish".into()));
    }
    let (a, b, c, d) = (&inv.a, &inv.b, &inv.c, &inv.d);
    let k = |n: i64| a.from_int(n);
    let m = mestre_derived(inv);
    let (a11, a12) = (&m.a11, &m.a12);
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Ok(RAType::II);
    }
    if b.is_zero() && c.is_zero() && d.is_zero() {
        return Ok(RAType::VI);
    }
    if k(6) * b.clone() == a.square() && d.is_zero() && a11.is_zero() && !a.is_zero() {
        return Ok(RAType::V);
    }
    if k(6) * c.square() == b.pow_u64(3)
        && k(3) * d.clone() == k(2) * b.clone() * a11.clone()
        && k(2) * a.clone() * b.clone() != k(15) * c.clone()
        && !d.is_zero()
    {
        return Ok(RAType::IV);
    }
    if b.clone() * a11.clone() - k(2) * a.clone() * a12.clone() == -(k(6) * d.clone())
        && c.clone() * a11.clone() + k(2) * b.clone() * a12.clone() == a.clone() * d.clone()
        && !d.is_zero()
        && k(6) * c.square() != b.pow_u64(3)
    {
        return Ok(RAType::III);
    }
    if m.r_squared.is_zero() {
        let lhs = a11.clone() * m.a22.clone();
        let rhs = match reading {
            TypeIReading::Literal => a12.clone(),
            TypeIReading::Squared => a12.square(),
        };
        if lhs != rhs {
            return Ok(RAType::I);
        }
        return Err(Error::Invariant(format!(
            "Clebsch invariants {inv:?} satisfy no row of the Bolza table"
        )));
    }
    Ok(RAType::A)
}

/// Type of `E × E′` from the two j-invariants.
pub fn product_type(j1: &Fp2, j2: &Fp2) -> RAType {
    let c1728 = j1.from_int(1728);
    let class = |j: &Fp2| {
        if j.is_zero() {
            0
        } else if *j == c1728 {
            1
        } else {
            2
        }
    };
    let (c1, c2) = (class(j1), class(j2));
    if j1 == j2 {
        return match c1 {
            0 => RAType::Sigma0,
            1 => RAType::Sigma1728,
            _ => RAType::Sigma,
        };
    }
    match (c1.min(c2), c1.max(c2)) {
        (0, 1) => RAType::Pi0x1728,
        (0, _) => RAType::Pi0,
        (1, _) => RAType::Pi1728,
        _ => RAType::Pi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadExtField};
    use crate::genus2::clebsch::clebsch_invariants;

    #[test]
    fn special_points() {
        let k = PrimeField::new(101).unwrap();
        let (z, o) = (k.elem(0), k.elem(1));
        assert_eq!(bolza_type(&ClebschInvariants::new(z, z, z, o)).unwrap(), RAType::II);
        assert_eq!(bolza_type(&ClebschInvariants::new(o, z, z, z)).unwrap(), RAType::VI);
        assert!(bolza_type(&ClebschInvariants::new(z, z, z, z)).is_err());
    }

    #[test]
    fn p11_curves() {
        let k = QuadExtField::new(11).unwrap();
        let f = |c: &[i64]| c.iter().map(|&v| k.from_int(v)).collect::<Vec<_>>();
        let v = clebsch_invariants(&f(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(bolza_type(&v).unwrap(), RAType::V);
        let iv = clebsch_invariants(&f(&[3, 0, 0, -4, 0, 0, 1]));
        assert_eq!(bolza_type(&iv).unwrap(), RAType::IV);
    }

    #[test]
    fn product_types() {
        let k = QuadExtField::new(101).unwrap();
        let (j0, j1728, g1, g2) = (k.zero(), k.from_int(1728), k.from_int(5), k.from_int(9));
        assert_eq!(product_type(&g1, &g2), RAType::Pi);
        assert_eq!(product_type(&j0, &j1728).ra_order(), 12);
        assert_eq!(product_type(&j1728, &j0), RAType::Pi0x1728);
        assert_eq!(product_type(&j0, &j0).ra_order(), 36);
        assert_eq!(product_type(&g1, &j1728), RAType::Pi1728);
        assert_eq!(product_type(&j1728, &j1728).ra_order(), 16);
    }
}
