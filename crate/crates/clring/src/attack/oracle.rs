//! Programmable random oracle and the signing-oracle simulation.
//!
//! Security arguments answer ring-sign queries without any private key by
//! *choosing* the challenge h_s first, deriving the commitment y_s from
//! the verification equation, and then programming the challenge hash so
//! that H2(transcript of y_s) = h_s. This module makes that procedure
//! executable: the resulting signatures verify when the challenge hash is
//! routed through the oracle, and fail against the real hash.
//!
//! The oracle is confined to this module; production verification never
//! accepts one.

use std::collections::{HashMap, HashSet};

use rand_core::CryptoRngCore;
use thiserror::Error;

use crate::backend::{
    g1_mul, gt_exp, hash_to_g1, hash_to_scalar, pair, random_scalar, G1Element, GTElement,
    Scalar, TAG_IDENTITY_HASH, TAG_TRANSCRIPT_HASH,
};
use crate::redo::{draw_fresh_commitment, RetryError, MAX_REDRAWS};
use crate::scheme::{
    encode_context, transcript_input, Ring, RingSignature, SystemParams, VerifyError,
};
use crate::EntropyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle output at this input is already determined")]
    AlreadyDetermined,
    #[error("oracle outputs must be nonzero")]
    ZeroValue,
}

/// A hash-to-scalar oracle whose outputs can be set pointwise.
///
/// Unprogrammed inputs fall back to the real challenge hash, and every
/// answered input is recorded: programming a point that was already
/// queried (or programmed) is an error, which is the consistency rule a
/// random-oracle simulation must obey.
#[derive(Default)]
pub struct ProgrammableOracle {
    programmed: HashMap<Vec<u8>, Scalar>,
    answered: HashSet<Vec<u8>>,
}

impl ProgrammableOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Answers a query, recording it.
    pub fn query(&mut self, input: &[u8]) -> Scalar {
        self.answered.insert(input.to_vec());
        match self.programmed.get(input) {
            Some(value) => *value,
            None => hash_to_scalar(input),
        }
    }

    /// Fixes the oracle's answer at `input`, failing if that answer is
    /// already determined by an earlier query or programming.
    pub fn program(&mut self, input: &[u8], value: Scalar) -> Result<(), OracleError> {
        if value.is_zero() {
            return Err(OracleError::ZeroValue);
        }
        if self.answered.contains(input) || self.programmed.contains_key(input) {
            return Err(OracleError::AlreadyDetermined);
        }
        self.programmed.insert(input.to_vec(), value);
        Ok(())
    }

    pub fn programmed_inputs(&self) -> impl Iterator<Item = &[u8]> {
        self.programmed.keys().map(Vec::as_slice)
    }

    pub fn programmed_len(&self) -> usize {
        self.programmed.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SimulateError {
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error("ring and parameters must share one parameter set")]
    CurveMismatch,
    #[error("oracle already determined at the point to program")]
    OracleCollision,
    #[error("could not draw a usable commitment after {0} attempts")]
    RedoExhausted(usize),
}

/// Answers a ring-sign query without any private key.
///
/// Procedure: pick a random slot s; draw commitments y_i = g^{r_i} and
/// query the oracle for the other members' challenges; draw the signer
/// challenge h_s and the binding element V at random; solve the
/// verification equation for y_s,
///
///   y_s = e(V - (sum_{i!=s} r_i)P, P) * e(sum_i h_i Q_i, -P0) * e(sum_i h_i P_i, -U),
///
/// redrawing (h_s, V) if y_s is the identity or collides with another
/// commitment; finally program the oracle so the transcript of y_s hashes
/// to h_s. The result verifies under [`verify_with_oracle`] and fails
/// under the real challenge hash.
pub fn simulate_ring_sign_query(
    params: &SystemParams,
    oracle: &mut ProgrammableOracle,
    message: &[u8],
    ring: &Ring,
    rng: &mut dyn CryptoRngCore,
) -> Result<RingSignature, SimulateError> {
    if ring.curve() != params.curve() {
        return Err(SimulateError::CurveMismatch);
    }
    let n = ring.len();
    let signer_slot = (rng.next_u32() as usize) % n;

    let ctx = encode_context(message, ring);
    let u = hash_to_g1(params.curve(), TAG_TRANSCRIPT_HASH, &ctx);
    let q_points: Vec<G1Element> = ring
        .identities()
        .iter()
        .map(|id| hash_to_g1(params.curve(), TAG_IDENTITY_HASH, id.as_bytes()))
        .collect();

    let mut nonces: Vec<Option<Scalar>> = vec![None; n];
    let mut commitments: Vec<Option<GTElement>> = vec![None; n];
    for i in (0..n).filter(|&i| i != signer_slot) {
        let r = random_scalar(rng)?;
        commitments[i] = Some(gt_exp(params.g(), &r));
        nonces[i] = Some(r);
    }

    let mut challenges: Vec<Option<Scalar>> = vec![None; n];
    for i in (0..n).filter(|&i| i != signer_slot) {
        let input = transcript_input(&ctx, commitments[i].as_ref().unwrap());
        challenges[i] = Some(oracle.query(&input));
    }

    // Parts of the two challenge sums that do not depend on h_s.
    let mut fixed_hq = G1Element::identity(params.curve());
    let mut fixed_hp = G1Element::identity(params.curve());
    for i in (0..n).filter(|&i| i != signer_slot) {
        let h = challenges[i].as_ref().unwrap();
        fixed_hq = &fixed_hq + &g1_mul(h, &q_points[i]);
        fixed_hp = &fixed_hp + &g1_mul(h, ring.public_keys()[i].element());
    }
    let r_partial = nonces
        .iter()
        .flatten()
        .fold(Scalar::zero(), |acc, r| acc.add(r));
    let r_partial_p = g1_mul(&r_partial, params.p());

    let taken: Vec<GTElement> = commitments.iter().flatten().cloned().collect();
    let ((h_s, v), y_s, _) = draw_fresh_commitment(MAX_REDRAWS, &taken, || {
        let h_s = random_scalar(rng)?;
        let v = g1_mul(&random_scalar(rng)?, params.p());
        let sum_hq = &fixed_hq + &g1_mul(&h_s, &q_points[signer_slot]);
        let sum_hp = &fixed_hp + &g1_mul(&h_s, ring.public_keys()[signer_slot].element());
        let y_s = pair(&(&v + &(-&r_partial_p)), params.p())
            .mul(&pair(&sum_hq, &-params.p0()))
            .mul(&pair(&sum_hp, &-&u));
        Ok::<_, EntropyError>(((h_s, v), y_s))
    })
    .map_err(|e| match e {
        RetryError::Draw(err) => SimulateError::Entropy(err),
        RetryError::Exhausted(k) => SimulateError::RedoExhausted(k),
    })?;

    oracle
        .program(&transcript_input(&ctx, &y_s), h_s)
        .map_err(|_| SimulateError::OracleCollision)?;
    commitments[signer_slot] = Some(y_s);

    let y: Vec<GTElement> = commitments.into_iter().map(Option::unwrap).collect();
    Ok(RingSignature::from_parts(y, v).expect("simulated commitments are fresh"))
}

/// Verification with the challenge hash routed through the oracle.
/// Identical to production verification otherwise.
pub fn verify_with_oracle(
    params: &SystemParams,
    message: &[u8],
    ring: &Ring,
    sig: &RingSignature,
    oracle: &mut ProgrammableOracle,
) -> Result<bool, VerifyError> {
    let n = ring.len();
    if sig.len() != n {
        return Err(VerifyError::LengthMismatch {
            expected: n,
            got: sig.len(),
        });
    }
    if ring.curve() != params.curve() || sig.curve() != params.curve() {
        return Err(VerifyError::CurveMismatch);
    }

    let ctx = encode_context(message, ring);
    let u = hash_to_g1(params.curve(), TAG_TRANSCRIPT_HASH, &ctx);

    let mut sum_hq = G1Element::identity(params.curve());
    let mut sum_hp = G1Element::identity(params.curve());
    let mut y_product = GTElement::one(params.curve());
    for i in 0..n {
        let y_i = &sig.commitments()[i];
        let h = oracle.query(&transcript_input(&ctx, y_i));
        let q_i = hash_to_g1(
            params.curve(),
            TAG_IDENTITY_HASH,
            ring.identities()[i].as_bytes(),
        );
        sum_hq = &sum_hq + &g1_mul(&h, &q_i);
        sum_hp = &sum_hp + &g1_mul(&h, ring.public_keys()[i].element());
        y_product = y_product.mul(y_i);
    }

    let rhs = y_product
        .mul(&pair(&sum_hq, params.p0()))
        .mul(&pair(&sum_hp, &u));
    Ok(pair(sig.v(), params.p()) == rhs)
}
