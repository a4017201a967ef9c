//! Arithmetic modulo the shared subgroup order q.
//!
//! Every supported curve uses the same 254-bit prime q for its pairing
//! subgroup, so scalars are a single concrete type independent of the
//! curve parameter set.

use std::fmt;
use std::sync::OnceLock;

use crypto_bigint::modular::{FixedMontyForm, FixedMontyParams};
use crypto_bigint::{NonZero, Odd, U256};
use rand_core::RngCore;

use super::curve::SUBGROUP_ORDER;
use super::hashing::expand_message;
use crate::EntropyError;

pub(crate) const SCALAR_LEN: usize = 32;

fn q_params() -> &'static FixedMontyParams<4> {
    static PARAMS: OnceLock<FixedMontyParams<4>> = OnceLock::new();
    PARAMS.get_or_init(|| {
        FixedMontyParams::new_vartime(Odd::new(SUBGROUP_ORDER).expect("q is odd"))
    })
}

/// An element of Z_q. Contexts that require Z_q^* (secret values, the
/// master key, hash outputs, signing nonces) enforce nonzeroness at their
/// own boundary.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Scalar(FixedMontyForm<4>);

impl Scalar {
    pub fn zero() -> Self {
        Self(FixedMontyForm::zero(q_params()))
    }

    pub fn one() -> Self {
        Self(FixedMontyForm::one(q_params()))
    }

    pub fn from_u64(value: u64) -> Self {
        Self(FixedMontyForm::new(&U256::from(value), q_params()))
    }

    /// Strict decoding: exactly 32 big-endian bytes, value < q.
    pub fn from_be_bytes(bytes: &[u8]) -> Option<Self> {
        if bytes.len() != SCALAR_LEN {
            return None;
        }
        let value = U256::from_be_slice(bytes);
        if value >= SUBGROUP_ORDER {
            return None;
        }
        Some(Self(FixedMontyForm::new(&value, q_params())))
    }

    pub fn to_be_bytes(self) -> [u8; SCALAR_LEN] {
        let mut out = [0u8; SCALAR_LEN];
        out.copy_from_slice(self.0.retrieve().to_be_bytes().as_ref());
        out
    }

    /// Reduces up to 64 big-endian bytes modulo q.
    pub(crate) fn reduce_wide(bytes: &[u8]) -> Self {
        assert!(bytes.len() <= 64);
        let mut buf = [0u8; 64];
        buf[64 - bytes.len()..].copy_from_slice(bytes);
        let hi = U256::from_be_slice(&buf[..32]);
        let lo = U256::from_be_slice(&buf[32..]);
        let q = NonZero::new(SUBGROUP_ORDER).expect("q is nonzero");
        let reduced = U256::rem_wide_vartime((lo, hi), &q);
        Self(FixedMontyForm::new(&reduced, q_params()))
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(self.0.add(&rhs.0))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self(self.0.sub(&rhs.0))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(self.0.mul(&rhs.0))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.neg())
    }

    pub fn invert(&self) -> Option<Self> {
        self.0.invert_vartime().into_option().map(Self)
    }

    pub(crate) fn to_uint(self) -> U256 {
        self.0.retrieve()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", hex::encode(self.to_be_bytes()))
    }
}

/// Uniform nonzero scalar from the supplied randomness source.
///
/// Draws 64 bytes and reduces, which keeps the modular bias below 2^-258;
/// a zero result (probability ~2^-253) is redrawn. Deterministic under a
/// seeded source.
pub fn random_scalar<R: RngCore + ?Sized>(rng: &mut R) -> Result<Scalar, EntropyError> {
    let mut buf = [0u8; 64];
    loop {
        rng.try_fill_bytes(&mut buf).map_err(|_| EntropyError)?;
        let s = Scalar::reduce_wide(&buf);
        if !s.is_zero() {
            return Ok(s);
        }
    }
}

/// Deterministic hash into Z_q^*.
///
/// Expand-and-reduce over a domain-tagged input; a zero result is re-derived
/// with an appended counter byte.
pub fn hash_to_scalar(msg: &[u8]) -> Scalar {
    for counter in 0u8..=255 {
        let expanded = expand_message(64, &[b"clring-hash-to-scalar-v1", msg, &[counter]]);
        let s = Scalar::reduce_wide(&expanded);
        if !s.is_zero() {
            return s;
        }
    }
    unreachable!("hash-to-scalar failed for 256 consecutive counters")
}
