//! Genus-2 curves `y² = F(x)`: Clebsch invariants, Bolza types, canonical
//! keys and the Möbius stabilizer of the branch locus.

pub mod bolza;
pub mod clebsch;
pub mod key;
pub mod moebius;

use crate::error::{Error, Result};
use crate::field::{roots_in_field, Fp2, Poly, DEFAULT_SEED};

pub use bolza::{bolza_type, bolza_type_with, product_type, RAType, TypeIReading, TYPE_I_READING};
pub use clebsch::{clebsch_invariants, mestre_derived, ClebschInvariants, MestreDerived};
pub use key::{canonical_jacobian_key, VertexKey};
pub use moebius::{moebius_group, moebius_matches, MoebiusGroup, ProjPoint};

/// `y² = F(x)` with `F` squarefree of degree 5 or 6 over F_{p²}, together with
/// its six branch points (∞ included when the degree is 5).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticModel {
    f: Poly<Fp2>,
    roots: [ProjPoint<Fp2>; 6],
}

impl SexticModel {
    pub fn from_poly(f: Poly<Fp2>) -> Result<Self> {
        let deg = f.degree().unwrap_or(0);
        if deg != 5 && deg != 6 {
            return Err(Error::Precondition(format!(
                "genus-2 model needs degree 5 or 6, got {deg}"
            )));
        }
        let found = roots_in_field(&f, DEFAULT_SEED);
        if found.iter().any(|(_, m)| *m > 1) {
            return Err(Error::Precondition(format!("{f:?} is not squarefree")));
        }
        if found.len() != deg {
            return Err(Error::Invariant(format!(
                "branch points of {f:?} leave F_p²: only {} of {deg} found",
                found.len()
            )));
        }
        let lead = *f.lead().unwrap();
        let mut pts: Vec<ProjPoint<Fp2>> = found.into_iter().map(|(r, _)| ProjPoint::affine(r)).collect();
        if deg == 5 {
            pts.push(ProjPoint::infinity(&lead));
        }
        Ok(Self {
            f,
            roots: pts.try_into().unwrap(),
        })
    }

    /// `lead · Π (x − r)` over the affine points, which must be six distinct
    /// points of P¹ (at most one at ∞).
    pub fn from_roots(lead: Fp2, roots: [ProjPoint<Fp2>; 6]) -> Result<Self> {
        for i in 0..6 {
            for j in 0..i {
                if roots[i] == roots[j] {
                    return Err(Error::Precondition("repeated branch point".into()));
                }
            }
        }
        let affine: Vec<Fp2> = roots.iter().filter_map(|r| r.value().copied()).collect();
        let f = Poly::from_roots(&lead, &affine).scale(&lead);
        let mut sorted = roots;
        sorted.sort_by_key(|r| (r.is_infinity(), r.x));
        Ok(Self { f, roots: sorted })
    }

    pub fn poly(&self) -> &Poly<Fp2> {
        &self.f
    }

    /// Branch points, affine ones sorted by encoding and ∞ last.
    pub fn roots(&self) -> &[ProjPoint<Fp2>; 6] {
        &self.roots
    }

    pub fn leading_coefficient(&self) -> Fp2 {
        *self.f.lead().unwrap()
    }

    pub fn clebsch(&self) -> ClebschInvariants<Fp2> {
        clebsch_invariants(self.f.coeffs())
    }

    pub fn key(&self) -> Result<VertexKey> {
        canonical_jacobian_key(&self.clebsch())
    }

    pub fn bolza_type(&self) -> Result<RAType> {
        bolza_type(&self.clebsch())
    }

    pub fn moebius_group(&self) -> MoebiusGroup<Fp2> {
        moebius_group(&self.roots)
    }
}
