use std::fmt;

use super::clebsch::ClebschInvariants;
use crate::error::{Error, Result};
use crate::field::{Field, Fp2, QuadExtField};

/// Canonical isomorphism-class key of a vertex.
///
/// Jacobian keys normalize the Clebsch point under `(A,B,C,D) ↦ (μA,μ²B,μ³C,μ⁵D)`;
/// product keys are the two j-invariants sorted by encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKey {
    Jacobian { tag: u8, coords: Vec<Fp2> },
    Product([Fp2; 2]),
}

pub const TAG_A_NONZERO: u8 = 1;
pub const TAG_B_NONZERO: u8 = 2;
pub const TAG_C_NONZERO: u8 = 3;
pub const TAG_D_ONLY: u8 = 4;
pub const TAG_PRODUCT: u8 = 5;

impl VertexKey {
    pub fn product(j1: Fp2, j2: Fp2) -> Self {
        if j1 <= j2 {
            VertexKey::Product([j1, j2])
        } else {
            VertexKey::Product([j2, j1])
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self, VertexKey::Product(_))
    }

    pub fn tag(&self) -> u8 {
        match self {
            VertexKey::Jacobian { tag, .. } => *tag,
            VertexKey::Product(_) => TAG_PRODUCT,
        }
    }

    pub fn coords(&self) -> &[Fp2] {
        match self {
            VertexKey::Jacobian { coords, .. } => coords,
            VertexKey::Product(js) => js,
        }
    }

    /// Tag byte followed by little-endian `u32` residues of every coordinate.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = vec![self.tag()];
        for c in self.coords() {
            for r in c.encode() {
                out.extend_from_slice(&r.to_le_bytes());
            }
        }
        out
    }

    pub fn from_bytes(field: &QuadExtField, bytes: &[u8]) -> Result<Self> {
        let bad = || Error::Precondition("malformed vertex key".into());
        let (&tag, rest) = bytes.split_first().ok_or_else(bad)?;
        if rest.len() % 8 != 0 {
            return Err(bad());
        }
        let coords: Vec<Fp2> = rest
            .chunks(8)
            .map(|c| {
                let a = u32::from_le_bytes(c[..4].try_into().unwrap());
                let b = u32::from_le_bytes(c[4..].try_into().unwrap());
                field.decode(&[a, b])
            })
            .collect();
        match tag {
            TAG_PRODUCT if coords.len() == 2 => Ok(VertexKey::Product([coords[0], coords[1]])),
            1..=4 => Ok(VertexKey::Jacobian { tag, coords }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for VertexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        match self {
            VertexKey::Jacobian { tag, .. } => write!(f, "J{tag}({})", parts.join(", ")),
            VertexKey::Product(_) => write!(f, "E({})", parts.join(", ")),
        }
    }
}

pub fn canonical_jacobian_key(inv: &ClebschInvariants<Fp2>) -> Result<VertexKey> {
    let ClebschInvariants { a, b, c, d } = inv;
    let (tag, coords) = if !a.is_zero() {
        let ai = a.inv().unwrap();
        (
            TAG_A_NONZERO,
            vec![*b * ai.pow_u64(2), *c * ai.pow_u64(3), *d * ai.pow_u64(5)],
        )
    } else if !b.is_zero() {
        let bi = b.inv().unwrap();
        (
            TAG_B_NONZERO,
            vec![
                c.square() * bi.pow_u64(3),
                d.square() * bi.pow_u64(5),
                *c * *d * bi.pow_u64(4),
            ],
        )
    } else if !c.is_zero() {
        (TAG_C_NONZERO, vec![d.pow_u64(3) * c.inv().unwrap().pow_u64(5)])
    } else if !d.is_zero() {
        (TAG_D_ONLY, vec![])
    } else {
        return Err(Error::Precondition("all Clebsch invariants vanish".into()));
    };
    Ok(VertexKey::Jacobian { tag, coords })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_examples() {
        let k = QuadExtField::new(101).unwrap();
        let e = |a, b, c, d| ClebschInvariants::new(k.from_int(a), k.from_int(b), k.from_int(c), k.from_int(d));
        let key = |i| canonical_jacobian_key(&i).unwrap();
        assert_eq!(key(e(2, 8, 16, 64)), key(e(1, 2, 2, 2)));
        assert_eq!(key(e(0, 0, 0, 7)), key(e(0, 0, 0, 1)));
        assert_eq!(key(e(0, 4, 6, 9)), key(e(0, 4, -6, -9)));
        assert_ne!(key(e(1, 2, 2, 2)), key(e(1, 2, 2, 3)));
    }

    #[test]
    fn bytes_round_trip() {
        let k = QuadExtField::new(103).unwrap();
        let keys = [
            VertexKey::product(k.elem(5, 7), k.elem(1, 0)),
            VertexKey::Jacobian {
                tag: 1,
                coords: vec![k.elem(3, 4), k.elem(0, 9), k.elem(102, 1)],
            },
        ];
        for key in keys {
            assert_eq!(VertexKey::from_bytes(&k, &key.to_bytes()).unwrap(), key);
        }
    }
}
