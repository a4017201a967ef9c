//! Minimal component ring schemes used by the generic composition.
//!
//! Both are structural restrictions of the concrete scheme. The PK-based
//! instance authenticates with the self-chosen secret value only
//! (V = (sum r_i)P + h_s * x_s * U); the identity-based instance
//! authenticates with the KGC-issued partial key only
//! (V = (sum r_i)P + h_s * D_s). Each is a complete ring scheme on its
//! own — which is exactly what the key-replacement attack exploits when
//! they are glued together without binding the two halves.

use rand_core::CryptoRngCore;
use thiserror::Error;

use crate::backend::{
    g1_mul, gt_exp, hash_to_g1, hash_to_scalar, pair, random_scalar, G1Element, GTElement,
    Scalar, TAG_IDENTITY_HASH, TAG_TRANSCRIPT_HASH,
};
use crate::redo::{draw_fresh_commitment, RetryError, MAX_REDRAWS};
use crate::scheme::{
    Identity, MasterKey, PartialPrivateKey, PublicKey, SecretValue, SystemParams,
};
use crate::wire;
use crate::EntropyError;

/// Signature shape shared by both component schemes: per-member
/// commitments plus the binding element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentSignature {
    pub y: Vec<GTElement>,
    pub v: G1Element,
}

impl ComponentSignature {
    /// Canonical bytes, used when a component signature is itself hashed
    /// into a derived message.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        wire::put_u32(&mut out, self.y.len() as u32);
        for y in &self.y {
            out.extend_from_slice(&y.to_bytes());
        }
        out.extend_from_slice(&self.v.to_bytes());
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ComponentSignError {
    #[error("signer index {index} out of range for {ring_size} members")]
    IndexOutOfRange { index: usize, ring_size: usize },
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error("could not draw a usable commitment after {0} attempts")]
    RedoExhausted(usize),
}

/// A traditional public-key ring signature scheme.
pub trait PkRingScheme {
    fn gen_keypair(&self, rng: &mut dyn CryptoRngCore)
        -> Result<(PublicKey, SecretValue), EntropyError>;

    fn ring_sign_pk(
        &self,
        sk: &SecretValue,
        signer_index: usize,
        pks: &[PublicKey],
        msg: &[u8],
        rng: &mut dyn CryptoRngCore,
    ) -> Result<ComponentSignature, ComponentSignError>;

    fn ver_pk(&self, sig: &ComponentSignature, pks: &[PublicKey], msg: &[u8]) -> bool;
}

/// An identity-based ring signature scheme with KGC key issuance.
pub trait IdRingScheme {
    fn kgen_id(&self, id: &Identity) -> PartialPrivateKey;

    fn ring_sign_id(
        &self,
        key: &PartialPrivateKey,
        signer_index: usize,
        ids: &[Identity],
        msg: &[u8],
        rng: &mut dyn CryptoRngCore,
    ) -> Result<ComponentSignature, ComponentSignError>;

    fn ver_id(&self, sig: &ComponentSignature, ids: &[Identity], msg: &[u8]) -> bool;
}

fn component_context(tag: &[u8; 8], params: &SystemParams, msg: &[u8], members: &[Vec<u8>]) -> Vec<u8> {
    let mut out = Vec::with_capacity(64 + msg.len());
    out.extend_from_slice(tag);
    wire::put_u16(&mut out, params.curve().code());
    wire::put_u64(&mut out, msg.len() as u64);
    out.extend_from_slice(msg);
    wire::put_u32(&mut out, members.len() as u32);
    for m in members {
        wire::put_bytes(&mut out, m);
    }
    out
}

fn challenge(ctx: &[u8], y: &GTElement) -> Scalar {
    let mut input = ctx.to_vec();
    input.extend_from_slice(&y.to_bytes());
    hash_to_scalar(&input)
}

/// Shared signing skeleton: commitments for the cosigners, one pairing
/// folding their challenge sum against `anchor`, then the signer's
/// binding element h_s * (witness scale of `bind_base`).
struct Skeleton<'a> {
    params: &'a SystemParams,
    ctx: Vec<u8>,
    /// Per-member points entering the challenge sum (Q_i or P_i).
    points: Vec<G1Element>,
    /// Second pairing argument for the sum (P0 or U).
    anchor: G1Element,
}

impl Skeleton<'_> {
    fn sign(
        &self,
        signer_index: usize,
        witness: &G1Element, // D_s for the ID side, x_s*U for the PK side
        rng: &mut dyn CryptoRngCore,
    ) -> Result<ComponentSignature, ComponentSignError> {
        let n = self.points.len();
        if signer_index >= n {
            return Err(ComponentSignError::IndexOutOfRange {
                index: signer_index,
                ring_size: n,
            });
        }
        let mut nonces: Vec<Option<Scalar>> = vec![None; n];
        let mut commitments: Vec<Option<GTElement>> = vec![None; n];
        for i in (0..n).filter(|&i| i != signer_index) {
            let r = random_scalar(rng)?;
            commitments[i] = Some(gt_exp(self.params.g(), &r));
            nonces[i] = Some(r);
        }
        let mut sum = G1Element::identity(self.params.curve());
        for i in (0..n).filter(|&i| i != signer_index) {
            let h = challenge(&self.ctx, commitments[i].as_ref().unwrap());
            sum = &sum + &g1_mul(&h, &self.points[i]);
        }
        let base = pair(&-&self.anchor, &sum);
        let taken: Vec<GTElement> = commitments.iter().flatten().cloned().collect();
        let (r_s, y_s, _) = draw_fresh_commitment(MAX_REDRAWS, &taken, || {
            let r = random_scalar(rng)?;
            Ok::<_, EntropyError>((r, gt_exp(self.params.g(), &r).mul(&base)))
        })
        .map_err(|e| match e {
            RetryError::Draw(err) => ComponentSignError::Entropy(err),
            RetryError::Exhausted(k) => ComponentSignError::RedoExhausted(k),
        })?;
        let h_s = challenge(&self.ctx, &y_s);
        nonces[signer_index] = Some(r_s);
        commitments[signer_index] = Some(y_s);

        let r_sum = nonces
            .iter()
            .flatten()
            .fold(Scalar::zero(), |acc, r| acc.add(r));
        let v = &g1_mul(&r_sum, self.params.p()) + &g1_mul(&h_s, witness);
        Ok(ComponentSignature {
            y: commitments.into_iter().map(Option::unwrap).collect(),
            v,
        })
    }

    fn verify(&self, sig: &ComponentSignature) -> bool {
        let n = self.points.len();
        if sig.y.len() != n || sig.v.curve() != self.params.curve() {
            return false;
        }
        if sig.y.iter().any(|y| y.curve() != self.params.curve()) {
            return false;
        }
        let mut sum = G1Element::identity(self.params.curve());
        let mut y_product = GTElement::one(self.params.curve());
        for i in 0..n {
            let h = challenge(&self.ctx, &sig.y[i]);
            sum = &sum + &g1_mul(&h, &self.points[i]);
            y_product = y_product.mul(&sig.y[i]);
        }
        pair(&sig.v, self.params.p()) == y_product.mul(&pair(&sum, &self.anchor))
    }
}

/// PK-side instance. Keys are (x, xP); the transcript point U is derived
/// from the message and the public-key list.
pub struct PkInstance {
    params: SystemParams,
}

/// Builds the traditional public-key ring scheme over `params`.
pub fn pk_ring_instance(params: &SystemParams) -> PkInstance {
    PkInstance {
        params: params.clone(),
    }
}

impl PkInstance {
    fn skeleton(&self, pks: &[PublicKey], msg: &[u8]) -> Skeleton<'_> {
        let members: Vec<Vec<u8>> = pks.iter().map(|pk| pk.element().to_bytes()).collect();
        let ctx = component_context(b"GPKCTX01", &self.params, msg, &members);
        let anchor = hash_to_g1(self.params.curve(), TAG_TRANSCRIPT_HASH, &ctx);
        Skeleton {
            params: &self.params,
            points: pks.iter().map(|pk| pk.element().clone()).collect(),
            anchor,
            ctx,
        }
    }
}

impl PkRingScheme for PkInstance {
    fn gen_keypair(
        &self,
        rng: &mut dyn CryptoRngCore,
    ) -> Result<(PublicKey, SecretValue), EntropyError> {
        let x = SecretValue::from_scalar(random_scalar(rng)?).expect("nonzero by construction");
        let pk = PublicKey::from_element(g1_mul(x.scalar(), self.params.p()))
            .expect("nonzero multiple of P");
        Ok((pk, x))
    }

    fn ring_sign_pk(
        &self,
        sk: &SecretValue,
        signer_index: usize,
        pks: &[PublicKey],
        msg: &[u8],
        rng: &mut dyn CryptoRngCore,
    ) -> Result<ComponentSignature, ComponentSignError> {
        let skeleton = self.skeleton(pks, msg);
        let witness = g1_mul(sk.scalar(), &skeleton.anchor); // x_s * U
        skeleton.sign(signer_index, &witness, rng)
    }

    fn ver_pk(&self, sig: &ComponentSignature, pks: &[PublicKey], msg: &[u8]) -> bool {
        self.skeleton(pks, msg).verify(sig)
    }
}

/// ID-side instance. The KGC master key lives here; member keys are the
/// partial keys D = kappa * H1(ID) and the challenge sum folds against P0.
pub struct IdInstance {
    params: SystemParams,
    master: MasterKey,
}

/// Builds the identity-based ring scheme over `params` with `master` as
/// the KGC key.
pub fn id_ring_instance(params: &SystemParams, master: &MasterKey) -> IdInstance {
    IdInstance {
        params: params.clone(),
        master: master.clone(),
    }
}

impl IdInstance {
    fn skeleton(&self, ids: &[Identity], msg: &[u8]) -> Skeleton<'_> {
        let members: Vec<Vec<u8>> = ids.iter().map(|id| id.as_bytes().to_vec()).collect();
        let ctx = component_context(b"GIDCTX01", &self.params, msg, &members);
        Skeleton {
            params: &self.params,
            points: ids
                .iter()
                .map(|id| hash_to_g1(self.params.curve(), TAG_IDENTITY_HASH, id.as_bytes()))
                .collect(),
            anchor: self.params.p0().clone(),
            ctx,
        }
    }
}

impl IdRingScheme for IdInstance {
    fn kgen_id(&self, id: &Identity) -> PartialPrivateKey {
        let q_id = hash_to_g1(self.params.curve(), TAG_IDENTITY_HASH, id.as_bytes());
        PartialPrivateKey::from_element(g1_mul(self.master.kappa(), &q_id))
            .expect("kappa and Q_ID are nonzero")
    }

    fn ring_sign_id(
        &self,
        key: &PartialPrivateKey,
        signer_index: usize,
        ids: &[Identity],
        msg: &[u8],
        rng: &mut dyn CryptoRngCore,
    ) -> Result<ComponentSignature, ComponentSignError> {
        let skeleton = self.skeleton(ids, msg);
        skeleton.sign(signer_index, key.element(), rng)
    }

    fn ver_id(&self, sig: &ComponentSignature, ids: &[Identity], msg: &[u8]) -> bool {
        self.skeleton(ids, msg).verify(sig)
    }
}
