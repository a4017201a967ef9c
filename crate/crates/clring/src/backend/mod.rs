//! Bilinear-group engine.
//!
//! A symmetric pairing over supersingular curves: both pairing arguments
//! come from the same source group, so any element can appear on either
//! side of `pair`. The four operations that dominate cost — pairings, G1
//! scalar multiplications, target-group exponentiations and MapToPoint
//! hashes — are counted per thread; everything else (point additions,
//! scalar arithmetic, hashes to Z_q) is free as far as the accounting is
//! concerned. Internal uses of the same primitives (cofactor clearing,
//! decode-time subgroup checks) do not touch the counters: one public call,
//! one increment.

mod counter;
mod curve;
mod element;
mod fp;
mod hashing;
mod scalar;

pub use counter::{counter_report, counter_reset, OpCounter};
pub use element::{CurveId, G1Element, GTElement};
pub use scalar::{hash_to_scalar, random_scalar, Scalar};

use rand_core::RngCore;

/// Domain tag for the identity hash (partial-key derivation).
pub const TAG_IDENTITY_HASH: u8 = 0x01;
/// Domain tag for the transcript hash used inside signatures.
pub const TAG_TRANSCRIPT_HASH: u8 = 0x03;

/// Bilinear map. Symmetric: `pair(a, b) == pair(b, a)`.
///
/// Counted as one pairing, including the degenerate identity-argument
/// cases (which evaluate to the multiplicative identity).
///
/// Panics if the arguments come from different parameter sets; elements
/// are subgroup-valid by construction, so no other failure exists.
pub fn pair(a: &G1Element, b: &G1Element) -> GTElement {
    counter::count_pairing();
    a.pair_uncounted(b)
}

/// Scalar multiplication in the source group; counted as one G1 SM.
pub fn g1_mul(k: &Scalar, a: &G1Element) -> G1Element {
    counter::count_g1_mul();
    a.mul_scalar_uncounted(k)
}

/// Exponentiation in the target group; counted as one GT exponentiation.
pub fn gt_exp(base: &GTElement, k: &Scalar) -> GTElement {
    counter::count_gt_exp();
    base.pow_uncounted(k)
}

/// Deterministic hash onto the source group; counted as one MapToPoint
/// hash regardless of internal retries. Distinct domain tags give
/// independent hash functions.
pub fn hash_to_g1(curve: CurveId, domain_tag: u8, msg: &[u8]) -> G1Element {
    counter::count_map_to_point();
    G1Element::hash_uncounted(curve, domain_tag, msg)
}

/// Byte-script randomness source for deterministic replay of retry paths
/// in tests and demos. Implements the standard RNG interface by cycling
/// over a fixed byte script.
pub struct ScriptedRng {
    script: Vec<u8>,
    pos: usize,
}

impl ScriptedRng {
    pub fn new(script: Vec<u8>) -> Self {
        assert!(!script.is_empty(), "script must be nonempty");
        Self { script, pos: 0 }
    }
}

impl RngCore for ScriptedRng {
    fn next_u32(&mut self) -> u32 {
        let mut buf = [0u8; 4];
        self.fill_bytes(&mut buf);
        u32::from_le_bytes(buf)
    }

    fn next_u64(&mut self) -> u64 {
        let mut buf = [0u8; 8];
        self.fill_bytes(&mut buf);
        u64::from_le_bytes(buf)
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        for byte in dest.iter_mut() {
            *byte = self.script[self.pos];
            self.pos = (self.pos + 1) % self.script.len();
        }
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand_core::Error> {
        self.fill_bytes(dest);
        Ok(())
    }
}

impl rand_core::CryptoRng for ScriptedRng {}
