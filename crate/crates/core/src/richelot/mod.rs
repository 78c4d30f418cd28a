//! The fifteen (2,2)-isogenies out of a vertex.

pub mod jacobian;
pub mod product;
pub mod splitting;

use crate::elliptic::EllipticModel;
use crate::error::Result;
use crate::genus2::{SexticModel, VertexKey};

pub use jacobian::{richelot_codomain, richelot_g, richelot_identity_holds};
pub use product::{product_isogeny_codomain, product_kernels, ProductKernel};
pub use splitting::{pairings, quadratic_splittings, splitting_delta, Pairing, QuadraticSplitting};

/// Model of a codomain, as produced by the isogeny formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Codomain {
    Jacobian(SexticModel),
    Product(EllipticModel, EllipticModel),
}

/// Kernel of the dual isogeny, relative to the codomain model in the step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKernel {
    /// Index into [`pairings`] of the codomain's branch points.
    Splitting(usize),
    Product(ProductKernel),
}

/// One isogeny out of a vertex.
#[derive(Clone, Debug)]
pub struct IsogenyStep {
    pub codomain: Codomain,
    pub dual: DualKernel,
    pub key: VertexKey,
    /// Whether the Richelot identity held, for non-split Jacobian steps.
    pub identity: Option<bool>,
}

impl IsogenyStep {
    /// Applies the dual kernel at the codomain model.
    pub fn dual_step(&self) -> Result<IsogenyStep> {
        match (&self.codomain, &self.dual) {
            (Codomain::Jacobian(m), DualKernel::Splitting(i)) => {
                richelot_codomain(&quadratic_splittings(m)[*i])
            }
            (Codomain::Product(e, e2), DualKernel::Product(k)) => product_isogeny_codomain(k, e, e2),
            _ => unreachable!("dual kernel kind always matches the codomain"),
        }
    }
}

/// The 15 steps out of a Jacobian model, ordered like [`pairings`].
pub fn jacobian_steps(m: &SexticModel) -> Result<Vec<IsogenyStep>> {
    quadratic_splittings(m).iter().map(richelot_codomain).collect()
}

/// The 15 steps out of `E × E′`, ordered like [`product_kernels`].
pub fn product_steps(e: &EllipticModel, e2: &EllipticModel) -> Result<Vec<IsogenyStep>> {
    product_kernels()
        .iter()
        .map(|k| product_isogeny_codomain(k, e, e2))
        .collect()
}
