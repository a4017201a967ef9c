//! Executable security analysis: the generic composition of two ring
//! schemes, the key-replacement forgery that breaks it, the same strategy
//! failing against the concrete scheme, and the programmable-oracle
//! signing simulation used in unforgeability arguments.

mod components;
mod oracle;

pub use components::{
    id_ring_instance, pk_ring_instance, ComponentSignError, ComponentSignature, IdInstance,
    IdRingScheme, PkInstance, PkRingScheme,
};
pub use oracle::{
    simulate_ring_sign_query, verify_with_oracle, OracleError, ProgrammableOracle, SimulateError,
};

use rand_core::CryptoRngCore;
use thiserror::Error;

use crate::codec;
use crate::scheme::{
    self, Identity, MasterKey, PartialPrivateKey, PublicKey, Ring, RingSignature, SecretValue,
    SystemParams,
};
use crate::wire;
use crate::EntropyError;

/// Certificateless ring scheme built by composing a PK ring scheme and an
/// ID ring scheme over framed derived messages. A signer is supposed to
/// hold both halves for the *same* identity — but nothing in the
/// composition enforces that, which [`type1_attack`] turns into a forgery.
pub struct GenericClRing<PK: PkRingScheme, ID: IdRingScheme> {
    pk_scheme: PK,
    id_scheme: ID,
    params_encoding: Vec<u8>,
}

/// Composite signature: the PK-side signature over M' and the ID-side
/// signature over M''.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericSignature {
    pub sigma_pk: ComponentSignature,
    pub sigma_id: ComponentSignature,
}

impl<PK: PkRingScheme, ID: IdRingScheme> GenericClRing<PK, ID> {
    pub fn new(params: &SystemParams, pk_scheme: PK, id_scheme: ID) -> Self {
        Self {
            pk_scheme,
            id_scheme,
            params_encoding: codec::encode(&codec::Object::Params(params.clone())),
        }
    }

    pub fn pk_scheme(&self) -> &PK {
        &self.pk_scheme
    }

    pub fn id_scheme(&self) -> &ID {
        &self.id_scheme
    }

    /// Derived message M' = frame(M, param, L_ID, L_PK); appending the
    /// PK-side signature yields M''. All fields are length-prefixed.
    fn frame(
        &self,
        msg: &[u8],
        ids: &[Identity],
        pks: &[PublicKey],
        sigma_pk: Option<&ComponentSignature>,
    ) -> Vec<u8> {
        let mut out = Vec::with_capacity(128 + msg.len());
        out.extend_from_slice(b"GENMSG01");
        wire::put_bytes(&mut out, msg);
        wire::put_bytes(&mut out, &self.params_encoding);
        wire::put_u32(&mut out, ids.len() as u32);
        for id in ids {
            wire::put_bytes(&mut out, id.as_bytes());
        }
        wire::put_u32(&mut out, pks.len() as u32);
        for pk in pks {
            wire::put_bytes(&mut out, &pk.element().to_bytes());
        }
        if let Some(sig) = sigma_pk {
            wire::put_bytes(&mut out, &sig.to_bytes());
        }
        out
    }

    /// Honest composite signing: both component signatures are produced by
    /// the same member `signer_index`, using its secret value for the PK
    /// side and its partial key for the ID side.
    #[allow(clippy::too_many_arguments)]
    pub fn ring_sign(
        &self,
        msg: &[u8],
        ids: &[Identity],
        pks: &[PublicKey],
        signer_index: usize,
        x: &SecretValue,
        d: &PartialPrivateKey,
        rng: &mut dyn CryptoRngCore,
    ) -> Result<GenericSignature, ComponentSignError> {
        let m_prime = self.frame(msg, ids, pks, None);
        let sigma_pk = self
            .pk_scheme
            .ring_sign_pk(x, signer_index, pks, &m_prime, rng)?;
        let m_double = self.frame(msg, ids, pks, Some(&sigma_pk));
        let sigma_id = self
            .id_scheme
            .ring_sign_id(d, signer_index, ids, &m_double, rng)?;
        Ok(GenericSignature { sigma_pk, sigma_id })
    }

    /// Composite verification: both component verifications must accept
    /// over the exact framed messages.
    pub fn verify(
        &self,
        msg: &[u8],
        ids: &[Identity],
        pks: &[PublicKey],
        sig: &GenericSignature,
    ) -> bool {
        let m_prime = self.frame(msg, ids, pks, None);
        if !self.pk_scheme.ver_pk(&sig.sigma_pk, pks, &m_prime) {
            return false;
        }
        let m_double = self.frame(msg, ids, pks, Some(&sig.sigma_pk));
        self.id_scheme.ver_id(&sig.sigma_id, ids, &m_double)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AttackError {
    #[error("the attack needs a ring of at least two members")]
    RingTooSmall,
    #[error("slot index {index} out of range for ring of {ring_size}")]
    IndexOutOfRange { index: usize, ring_size: usize },
    #[error("the replaced slot and the partial-key slot must differ")]
    SameIndex,
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error("component signing failed: {0}")]
    Component(#[from] ComponentSignError),
    #[error("concrete signing failed: {0}")]
    Concrete(#[from] scheme::SignError),
}

/// Exactly which secrets the forger touched. The point of the record: the
/// secret value and the partial key belong to *different* ring members,
/// so no complete private key was ever assembled, and no signing oracle
/// was available at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdversaryKnowledge {
    /// Slot whose public key the adversary replaced; it knows the matching
    /// secret value because it generated it.
    pub replaced_slot: usize,
    /// Slot whose partial private key the adversary extracted from the KGC.
    pub partial_key_slot: usize,
    /// Signing-oracle queries issued during the forgery. Always zero: the
    /// attack is a no-message attack.
    pub signing_oracle_queries: usize,
}

impl AdversaryKnowledge {
    /// True only if both halves came from the same member, i.e. the
    /// adversary held a complete private key. The attack never does.
    pub fn uses_complete_private_key(&self) -> bool {
        self.replaced_slot == self.partial_key_slot
    }
}

/// Outcome of one key-replacement forgery run against the generic
/// composition.
pub struct AttackResult {
    pub message: Vec<u8>,
    pub identities: Vec<Identity>,
    /// Public keys as the verifier sees them: honest keys everywhere
    /// except the replaced slot.
    pub public_keys: Vec<PublicKey>,
    pub signature: GenericSignature,
    pub verified: bool,
    pub knowledge: AdversaryKnowledge,
}

/// The Type-I key-replacement forgery against the generic composition.
///
/// The adversary picks `n` identities, obtains their honest public keys,
/// replaces slot `i`'s key with one it generated itself, extracts the
/// partial key of a *different* member `j`, and then runs the two
/// component signers exactly as the composition prescribes — the PK side
/// with its own secret value at slot `i`, the ID side with the extracted
/// partial key at slot `j`. The composite verifier accepts, because
/// nothing ties the two component signers to one member.
pub fn type1_attack<PK: PkRingScheme, ID: IdRingScheme>(
    composite: &GenericClRing<PK, ID>,
    ring_size: usize,
    replaced_slot: usize,
    partial_key_slot: usize,
    message: &[u8],
    rng: &mut dyn CryptoRngCore,
) -> Result<AttackResult, AttackError> {
    let (identities, mut public_keys) =
        honest_members(composite.pk_scheme(), ring_size, replaced_slot, partial_key_slot, rng)?;

    // Adversary-side key material: a fresh keypair for the replaced slot.
    let (replacement_pk, adversary_x) = composite.pk_scheme().gen_keypair(rng)?;
    public_keys[replaced_slot] = replacement_pk;

    // One partial-key extraction, for a member other than the replaced one.
    let extracted_d = composite.id_scheme().kgen_id(&identities[partial_key_slot]);

    let m_prime = composite.frame(message, &identities, &public_keys, None);
    let sigma_pk = composite.pk_scheme().ring_sign_pk(
        &adversary_x,
        replaced_slot,
        &public_keys,
        &m_prime,
        rng,
    )?;
    let m_double = composite.frame(message, &identities, &public_keys, Some(&sigma_pk));
    let sigma_id = composite.id_scheme().ring_sign_id(
        &extracted_d,
        partial_key_slot,
        &identities,
        &m_double,
        rng,
    )?;
    let signature = GenericSignature { sigma_pk, sigma_id };

    let verified = composite.verify(message, &identities, &public_keys, &signature);
    Ok(AttackResult {
        message: message.to_vec(),
        identities,
        public_keys,
        signature,
        verified,
        knowledge: AdversaryKnowledge {
            replaced_slot,
            partial_key_slot,
            signing_oracle_queries: 0,
        },
    })
}

/// Outcome of replaying the identical strategy against the concrete
/// scheme.
pub struct ConcreteControlResult {
    pub message: Vec<u8>,
    pub ring: Ring,
    pub signature: RingSignature,
    pub verified: bool,
    pub knowledge: AdversaryKnowledge,
}

/// Control experiment: the same adversary — same knowledge, same replaced
/// key — attempts the forgery against the concrete scheme, signing at the
/// replaced slot with the key pair (x', D_j). The signature is produced
/// (the secret value matches the replaced public key) but verification
/// pins the partial key to slot i's identity hash, so it fails.
pub fn type1_attack_against_concrete(
    params: &SystemParams,
    master: &MasterKey,
    ring_size: usize,
    replaced_slot: usize,
    partial_key_slot: usize,
    message: &[u8],
    rng: &mut dyn CryptoRngCore,
) -> Result<ConcreteControlResult, AttackError> {
    check_slots(ring_size, replaced_slot, partial_key_slot)?;

    let mut identities = Vec::with_capacity(ring_size);
    let mut public_keys = Vec::with_capacity(ring_size);
    for member in 0..ring_size {
        identities.push(random_identity(member, rng)?);
        let x = scheme::set_secret_value(params, rng)?;
        public_keys.push(scheme::set_public_key(params, &x));
        // honest members' secret values are never shown to the adversary
    }

    let adversary_x = scheme::set_secret_value(params, rng)?;
    public_keys[replaced_slot] = scheme::set_public_key(params, &adversary_x);
    let extracted_d =
        scheme::extract_partial_private_key(params, master, &identities[partial_key_slot]);

    let ring = Ring::new(identities, public_keys).expect("freshly built ring is valid");
    let mismatched_key = scheme::set_private_key(adversary_x, extracted_d);
    let signature = scheme::ring_sign(
        params,
        message,
        &ring,
        replaced_slot,
        &mismatched_key,
        rng,
    )?;
    let verified =
        scheme::verify(params, message, &ring, &signature).expect("well-formed signature");

    Ok(ConcreteControlResult {
        message: message.to_vec(),
        ring,
        signature,
        verified,
        knowledge: AdversaryKnowledge {
            replaced_slot,
            partial_key_slot,
            signing_oracle_queries: 0,
        },
    })
}

fn check_slots(ring_size: usize, i: usize, j: usize) -> Result<(), AttackError> {
    if ring_size < 2 {
        return Err(AttackError::RingTooSmall);
    }
    for index in [i, j] {
        if index >= ring_size {
            return Err(AttackError::IndexOutOfRange { index, ring_size });
        }
    }
    if i == j {
        return Err(AttackError::SameIndex);
    }
    Ok(())
}

fn random_identity(member: usize, rng: &mut dyn CryptoRngCore) -> Result<Identity, EntropyError> {
    let mut tag = [0u8; 16];
    rng.try_fill_bytes(&mut tag).map_err(|_| EntropyError)?;
    let mut bytes = format!("member-{member}-").into_bytes();
    bytes.extend_from_slice(hex::encode(tag).as_bytes());
    Ok(Identity::new(bytes).expect("nonempty"))
}

fn honest_members<PK: PkRingScheme>(
    pk_scheme: &PK,
    ring_size: usize,
    i: usize,
    j: usize,
    rng: &mut dyn CryptoRngCore,
) -> Result<(Vec<Identity>, Vec<PublicKey>), AttackError> {
    check_slots(ring_size, i, j)?;
    let mut identities = Vec::with_capacity(ring_size);
    let mut public_keys = Vec::with_capacity(ring_size);
    for member in 0..ring_size {
        identities.push(random_identity(member, rng)?);
        let (pk, _honest_secret) = pk_scheme.gen_keypair(rng)?;
        public_keys.push(pk);
    }
    Ok((identities, public_keys))
}
