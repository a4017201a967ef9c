//! Certificateless ring signatures over a symmetric bilinear pairing.
//!
//! A certificateless scheme splits each member's signing capability in two:
//! a partial private key issued by a key generation center (KGC) and a
//! secret value the member picks alone. Neither half alone suffices, no
//! certificates bind public keys to identities, and the KGC never learns a
//! complete private key. On top of that key model this crate implements
//! ring signatures: a signer proves membership in an ad-hoc list of
//! identities without revealing which member signed.
//!
//! What's here:
//!
//! * A backend pairing engine re-exported at the root: a symmetric
//!   (Type-1) Tate pairing over supersingular curves with deterministic
//!   hash-to-group maps and per-thread operation accounting ([`OpCounter`]).
//! * [`scheme`]: the seven-algorithm certificateless ring signature scheme
//!   (constant pairing count: two to sign, three to verify), plus an
//!   anonymity diagnostic showing that the natural de-anonymization test
//!   accepts every ring member equally.
//! * [`codec`]: canonical, versioned encodings for every artifact, strict
//!   decoders, and the JSON ring-file format.
//! * [`attack`]: a generic "PK ring scheme + ID ring scheme" composition,
//!   an executable key-replacement forgery against it, the same strategy
//!   failing against the concrete scheme, and a programmable-oracle
//!   signing simulator that produces valid signatures without any key.
//!
//! Security posture: this is a research toolkit. The `demo256` parameter
//! set is deliberately small and breakable; nothing here is constant-time.
//!
//! ```
//! use clring::scheme::{
//!     anonymity_identity_check, extract_partial_private_key, ring_sign, set_private_key,
//!     set_public_key, set_secret_value, setup, verify, Identity, Ring, SecurityLevel,
//! };
//! use rand_chacha::rand_core::SeedableRng;
//!
//! let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
//! let (params, master) = setup(SecurityLevel::Demo, &mut rng)?;
//!
//! // two members: a KGC-issued partial key plus a self-chosen secret each
//! let mut ids = Vec::new();
//! let mut pks = Vec::new();
//! let mut keys = Vec::new();
//! for name in ["alice", "bob"] {
//!     let id = Identity::new(name.as_bytes().to_vec()).unwrap();
//!     let x = set_secret_value(&params, &mut rng)?;
//!     pks.push(set_public_key(&params, &x));
//!     keys.push(set_private_key(x, extract_partial_private_key(&params, &master, &id)));
//!     ids.push(id);
//! }
//! let ring = Ring::new(ids, pks).unwrap();
//!
//! // alice signs on behalf of the ring
//! let sig = ring_sign(&params, b"leak", &ring, 0, &keys[0], &mut rng)?;
//! assert!(verify(&params, b"leak", &ring, &sig)?);
//!
//! // the de-anonymization test is satisfied by *every* member equally
//! for j in 0..ring.len() {
//!     assert!(anonymity_identity_check(&params, b"leak", &ring, &sig, j)?);
//! }
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

use thiserror::Error;

pub mod attack;
mod backend;
pub mod codec;
pub(crate) mod redo;
pub mod scheme;
pub(crate) mod wire;

pub use backend::{
    counter_report, counter_reset, g1_mul, gt_exp, hash_to_g1, hash_to_scalar, pair,
    random_scalar, CurveId, G1Element, GTElement, OpCounter, Scalar, ScriptedRng,
    TAG_IDENTITY_HASH, TAG_TRANSCRIPT_HASH,
};

/// The randomness source failed to produce bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("randomness source unavailable or exhausted")]
pub struct EntropyError;

/// Why a group-element decoding was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PointDecodeError {
    #[error("wrong encoded length")]
    Length,
    #[error("non-canonical encoding")]
    NonCanonical,
    #[error("x-coordinate is not on the curve")]
    OffCurve,
    #[error("element is not in the prime-order subgroup")]
    NotInSubgroup,
}
