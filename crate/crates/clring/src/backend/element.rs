//! Public group-element types.
//!
//! Elements carry their curve identity and are valid by construction: the
//! only ways to obtain one are the engine operations and the strict
//! decoders, which enforce the curve equation and subgroup membership.
//! Mixing elements of different parameter sets in an algebraic operation
//! is a caller bug and panics.

use std::fmt;
use std::ops::{Add, Neg};

use crypto_bigint::Uint;

use super::curve::{
    affine_add, demo_spec, gt_in_subgroup, in_subgroup, map_to_point, scalar_mul, standard_spec,
    tate_pairing, AffinePoint, CurveSpec,
};
use super::fp::{Fp, Fp2};
use super::scalar::Scalar;
use crate::PointDecodeError;

/// Identifies one of the supported parameter sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveId {
    /// 256-bit field, demonstration-grade hardness. Fast; used by the test
    /// and demo surfaces.
    Demo256,
    /// 1536-bit field, ~128-bit hardness. Default for real key material.
    Standard1536,
}

impl CurveId {
    pub fn code(self) -> u16 {
        match self {
            CurveId::Demo256 => 1,
            CurveId::Standard1536 => 2,
        }
    }

    pub fn from_code(code: u16) -> Option<Self> {
        match code {
            1 => Some(CurveId::Demo256),
            2 => Some(CurveId::Standard1536),
            _ => None,
        }
    }

    /// Byte length of one compressed G1 element (prefix byte + x).
    pub fn g1_encoded_len(self) -> usize {
        1 + self.field_len()
    }

    /// Byte length of one target-group element (two field coordinates).
    pub fn gt_encoded_len(self) -> usize {
        2 * self.field_len()
    }

    fn field_len(self) -> usize {
        match self {
            CurveId::Demo256 => demo_spec().field_len(),
            CurveId::Standard1536 => standard_spec().field_len(),
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::Demo256 => write!(f, "demo256"),
            CurveId::Standard1536 => write!(f, "standard1536"),
        }
    }
}

// The parameter sets differ 6x in limb count; the demo variant dominates
// hot paths, so the indirection a Box would add buys nothing here.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, PartialEq, Eq)]
enum G1Repr {
    Demo(AffinePoint<4>),
    Standard(AffinePoint<24>),
}

/// Element of the additive source group (the order-q curve subgroup).
#[derive(Clone, PartialEq, Eq)]
pub struct G1Element {
    repr: G1Repr,
}

impl G1Element {
    pub fn curve(&self) -> CurveId {
        match self.repr {
            G1Repr::Demo(_) => CurveId::Demo256,
            G1Repr::Standard(_) => CurveId::Standard1536,
        }
    }

    pub fn identity(curve: CurveId) -> Self {
        match curve {
            CurveId::Demo256 => Self {
                repr: G1Repr::Demo(AffinePoint::identity(demo_spec())),
            },
            CurveId::Standard1536 => Self {
                repr: G1Repr::Standard(AffinePoint::identity(standard_spec())),
            },
        }
    }

    /// The fixed base point of the parameter set.
    pub fn generator(curve: CurveId) -> Self {
        match curve {
            CurveId::Demo256 => Self {
                repr: G1Repr::Demo(demo_spec().generator),
            },
            CurveId::Standard1536 => Self {
                repr: G1Repr::Standard(standard_spec().generator),
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.repr {
            G1Repr::Demo(p) => p.infinity,
            G1Repr::Standard(p) => p.infinity,
        }
    }

    /// Compressed encoding: prefix byte (0x00 infinity, 0x02/0x03 parity
    /// of y) followed by the big-endian x-coordinate.
    pub fn to_bytes(&self) -> Vec<u8> {
        fn go<const L: usize>(p: &AffinePoint<L>, spec: &CurveSpec<L>) -> Vec<u8> {
            let mut out = vec![0u8; 1 + spec.field_len()];
            if p.infinity {
                return out;
            }
            out[0] = if p.y.is_odd() { 0x03 } else { 0x02 };
            out[1..].copy_from_slice(p.x.retrieve().to_be_bytes().as_ref());
            out
        }
        match &self.repr {
            G1Repr::Demo(p) => go(p, demo_spec()),
            G1Repr::Standard(p) => go(p, standard_spec()),
        }
    }

    /// Strict decoder: rejects wrong lengths, non-canonical coordinates,
    /// off-curve x values and points outside the order-q subgroup.
    pub fn from_bytes(curve: CurveId, bytes: &[u8]) -> Result<Self, PointDecodeError> {
        fn go<const L: usize>(
            spec: &CurveSpec<L>,
            bytes: &[u8],
        ) -> Result<AffinePoint<L>, PointDecodeError> {
            if bytes.len() != 1 + spec.field_len() {
                return Err(PointDecodeError::Length);
            }
            let (prefix, xbytes) = (bytes[0], &bytes[1..]);
            if prefix == 0x00 {
                if xbytes.iter().any(|&b| b != 0) {
                    return Err(PointDecodeError::NonCanonical);
                }
                return Ok(AffinePoint::identity(spec));
            }
            if prefix != 0x02 && prefix != 0x03 {
                return Err(PointDecodeError::NonCanonical);
            }
            let x_uint = Uint::<L>::from_be_slice(xbytes);
            if x_uint >= *spec.modulus() {
                return Err(PointDecodeError::NonCanonical);
            }
            let x = Fp::new(&x_uint, &spec.fp);
            let rhs = x.square().mul(&x).add(&x);
            let y = rhs.sqrt(&spec.sqrt_exp).ok_or(PointDecodeError::OffCurve)?;
            let y = if y.is_odd() == (prefix == 0x03) {
                y
            } else {
                y.neg()
            };
            // (x, 0) would encode as even parity; a 0x03 prefix for it is
            // non-canonical and the subgroup check rejects it anyway.
            let point = AffinePoint {
                x,
                y,
                infinity: false,
            };
            if !in_subgroup(&point, spec) {
                return Err(PointDecodeError::NotInSubgroup);
            }
            Ok(point)
        }
        match curve {
            CurveId::Demo256 => Ok(Self {
                repr: G1Repr::Demo(go(demo_spec(), bytes)?),
            }),
            CurveId::Standard1536 => Ok(Self {
                repr: G1Repr::Standard(go(standard_spec(), bytes)?),
            }),
        }
    }

    pub(crate) fn mul_scalar_uncounted(&self, k: &Scalar) -> Self {
        let k = k.to_uint();
        match &self.repr {
            G1Repr::Demo(p) => Self {
                repr: G1Repr::Demo(scalar_mul(&k, p, demo_spec())),
            },
            G1Repr::Standard(p) => Self {
                repr: G1Repr::Standard(scalar_mul(&k, p, standard_spec())),
            },
        }
    }

    pub(crate) fn pair_uncounted(&self, other: &Self) -> GTElement {
        match (&self.repr, &other.repr) {
            (G1Repr::Demo(a), G1Repr::Demo(b)) => GTElement {
                repr: GtRepr::Demo(tate_pairing(a, b, demo_spec())),
            },
            (G1Repr::Standard(a), G1Repr::Standard(b)) => GTElement {
                repr: GtRepr::Standard(tate_pairing(a, b, standard_spec())),
            },
            _ => panic!("pairing arguments from different parameter sets"),
        }
    }

    pub(crate) fn hash_uncounted(curve: CurveId, domain_tag: u8, msg: &[u8]) -> Self {
        match curve {
            CurveId::Demo256 => Self {
                repr: G1Repr::Demo(map_to_point(demo_spec(), domain_tag, msg)),
            },
            CurveId::Standard1536 => Self {
                repr: G1Repr::Standard(map_to_point(standard_spec(), domain_tag, msg)),
            },
        }
    }
}

impl Add<&G1Element> for &G1Element {
    type Output = G1Element;

    fn add(self, rhs: &G1Element) -> G1Element {
        match (&self.repr, &rhs.repr) {
            (G1Repr::Demo(a), G1Repr::Demo(b)) => G1Element {
                repr: G1Repr::Demo(affine_add(a, b, demo_spec())),
            },
            (G1Repr::Standard(a), G1Repr::Standard(b)) => G1Element {
                repr: G1Repr::Standard(affine_add(a, b, standard_spec())),
            },
            _ => panic!("adding points from different parameter sets"),
        }
    }
}

impl Neg for &G1Element {
    type Output = G1Element;

    fn neg(self) -> G1Element {
        match &self.repr {
            G1Repr::Demo(p) => G1Element {
                repr: G1Repr::Demo(p.neg()),
            },
            G1Repr::Standard(p) => G1Element {
                repr: G1Repr::Standard(p.neg()),
            },
        }
    }
}

impl fmt::Debug for G1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G1Element({}, {})", self.curve(), hex::encode(self.to_bytes()))
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, PartialEq, Eq)]
enum GtRepr {
    Demo(Fp2<4>),
    Standard(Fp2<24>),
}

/// Element of the multiplicative target group (order-q subgroup of
/// F_{p^2}^*), where pairing outputs live.
#[derive(Clone, PartialEq, Eq)]
pub struct GTElement {
    repr: GtRepr,
}

impl GTElement {
    pub fn curve(&self) -> CurveId {
        match self.repr {
            GtRepr::Demo(_) => CurveId::Demo256,
            GtRepr::Standard(_) => CurveId::Standard1536,
        }
    }

    pub fn one(curve: CurveId) -> Self {
        match curve {
            CurveId::Demo256 => Self {
                repr: GtRepr::Demo(Fp2::one(&demo_spec().fp)),
            },
            CurveId::Standard1536 => Self {
                repr: GtRepr::Standard(Fp2::one(&standard_spec().fp)),
            },
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            GtRepr::Demo(v) => v.is_one(&demo_spec().fp),
            GtRepr::Standard(v) => v.is_one(&standard_spec().fp),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match (&self.repr, &rhs.repr) {
            (GtRepr::Demo(a), GtRepr::Demo(b)) => Self {
                repr: GtRepr::Demo(a.mul(b)),
            },
            (GtRepr::Standard(a), GtRepr::Standard(b)) => Self {
                repr: GtRepr::Standard(a.mul(b)),
            },
            _ => panic!("multiplying target-group values from different parameter sets"),
        }
    }

    /// Inverse in the order-q subgroup. Subgroup elements are unitary
    /// (z^(p+1) = 1), so inversion is conjugation.
    pub fn inverse(&self) -> Self {
        match &self.repr {
            GtRepr::Demo(v) => Self {
                repr: GtRepr::Demo(v.conjugate()),
            },
            GtRepr::Standard(v) => Self {
                repr: GtRepr::Standard(v.conjugate()),
            },
        }
    }

    /// Canonical encoding: both coordinates big-endian, c0 then c1.
    pub fn to_bytes(&self) -> Vec<u8> {
        fn go<const L: usize>(v: &Fp2<L>) -> Vec<u8> {
            let mut out = Vec::with_capacity(2 * L * 8);
            out.extend_from_slice(v.c0.retrieve().to_be_bytes().as_ref());
            out.extend_from_slice(v.c1.retrieve().to_be_bytes().as_ref());
            out
        }
        match &self.repr {
            GtRepr::Demo(v) => go(v),
            GtRepr::Standard(v) => go(v),
        }
    }

    /// Strict decoder: canonical coordinates and order-q membership.
    pub fn from_bytes(curve: CurveId, bytes: &[u8]) -> Result<Self, PointDecodeError> {
        fn go<const L: usize>(
            spec: &CurveSpec<L>,
            bytes: &[u8],
        ) -> Result<Fp2<L>, PointDecodeError> {
            let width = spec.field_len();
            if bytes.len() != 2 * width {
                return Err(PointDecodeError::Length);
            }
            let c0 = Uint::<L>::from_be_slice(&bytes[..width]);
            let c1 = Uint::<L>::from_be_slice(&bytes[width..]);
            if c0 >= *spec.modulus() || c1 >= *spec.modulus() {
                return Err(PointDecodeError::NonCanonical);
            }
            let value = Fp2::new(Fp::new(&c0, &spec.fp), Fp::new(&c1, &spec.fp));
            if !gt_in_subgroup(&value, spec) {
                return Err(PointDecodeError::NotInSubgroup);
            }
            Ok(value)
        }
        match curve {
            CurveId::Demo256 => Ok(Self {
                repr: GtRepr::Demo(go(demo_spec(), bytes)?),
            }),
            CurveId::Standard1536 => Ok(Self {
                repr: GtRepr::Standard(go(standard_spec(), bytes)?),
            }),
        }
    }

    pub(crate) fn pow_uncounted(&self, k: &Scalar) -> Self {
        let k = k.to_uint();
        match &self.repr {
            GtRepr::Demo(v) => Self {
                repr: GtRepr::Demo(v.pow_vartime(&k)),
            },
            GtRepr::Standard(v) => Self {
                repr: GtRepr::Standard(v.pow_vartime(&k)),
            },
        }
    }

}

impl fmt::Debug for GTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GTElement({}, {})", self.curve(), hex::encode(self.to_bytes()))
    }
}
