//! The certificateless ring signature scheme.
//!
//! Seven algorithms: [`setup`], [`extract_partial_private_key`],
//! [`set_secret_value`], [`set_private_key`], [`set_public_key`],
//! [`ring_sign`] and [`verify`], plus the [`anonymity_identity_check`]
//! diagnostic. The pairing count is constant: two per signature, three per
//! verification, independent of the ring size.
//!
//! Indices are zero-based everywhere in this API; a ring of n members has
//! signer indices 0..n.

use rand_core::{CryptoRng, RngCore};
use thiserror::Error;

use crate::backend::{
    g1_mul, gt_exp, hash_to_g1, hash_to_scalar, pair, random_scalar, CurveId, G1Element,
    GTElement, Scalar, TAG_IDENTITY_HASH, TAG_TRANSCRIPT_HASH,
};
use crate::redo::{draw_fresh_commitment, RetryError, MAX_REDRAWS};
use crate::wire;
use crate::EntropyError;

/// Identifier of the only hash suite currently defined (SHA-256
/// expand-and-reduce for scalars, try-and-increment for points).
pub const HASH_SUITE_SHA256: u8 = 1;

/// Selects a parameter set at setup time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SecurityLevel {
    /// Small, fast, breakable-by-design parameters for tests and demos.
    Demo,
    /// ~128-bit parameters; the default for anything resembling real use.
    Standard,
}

impl SecurityLevel {
    pub fn curve(self) -> CurveId {
        match self {
            SecurityLevel::Demo => CurveId::Demo256,
            SecurityLevel::Standard => CurveId::Standard1536,
        }
    }
}

/// Public system parameters published by the KGC.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemParams {
    curve: CurveId,
    p: G1Element,
    g: GTElement,
    p0: G1Element,
    hash_suite: u8,
}

impl SystemParams {
    /// Reassembles parameters from decoded parts, revalidating the
    /// structural invariants (nonidentity generators, g = e(P, P)).
    pub fn from_parts(
        p: G1Element,
        g: GTElement,
        p0: G1Element,
        hash_suite: u8,
    ) -> Result<Self, ParamsError> {
        if hash_suite != HASH_SUITE_SHA256 {
            return Err(ParamsError::UnknownHashSuite(hash_suite));
        }
        let curve = p.curve();
        if p0.curve() != curve || g.curve() != curve {
            return Err(ParamsError::MixedCurves);
        }
        if p.is_identity() || p0.is_identity() {
            return Err(ParamsError::IdentityGenerator);
        }
        if p.pair_uncounted(&p) != g {
            return Err(ParamsError::InconsistentPairingBase);
        }
        Ok(Self {
            curve,
            p,
            g,
            p0,
            hash_suite,
        })
    }

    pub fn curve(&self) -> CurveId {
        self.curve
    }

    /// The group generator P.
    pub fn p(&self) -> &G1Element {
        &self.p
    }

    /// g = e(P, P), the base of all commitment exponentiations.
    pub fn g(&self) -> &GTElement {
        &self.g
    }

    /// P0 = kappa * P, the KGC public key.
    pub fn p0(&self) -> &G1Element {
        &self.p0
    }

    pub fn hash_suite(&self) -> u8 {
        self.hash_suite
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("unknown hash suite identifier {0}")]
    UnknownHashSuite(u8),
    #[error("parameter elements come from different parameter sets")]
    MixedCurves,
    #[error("generator elements must not be the identity")]
    IdentityGenerator,
    #[error("g does not equal e(P, P)")]
    InconsistentPairingBase,
}

/// The KGC master key.
#[derive(Clone, PartialEq, Eq)]
pub struct MasterKey {
    kappa: Scalar,
}

impl MasterKey {
    pub fn from_scalar(kappa: Scalar) -> Option<Self> {
        if kappa.is_zero() {
            None
        } else {
            Some(Self { kappa })
        }
    }

    pub fn kappa(&self) -> &Scalar {
        &self.kappa
    }
}

impl std::fmt::Debug for MasterKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("MasterKey(..)")
    }
}

/// A member identity: any nonempty byte string.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Identity(Vec<u8>);

impl Identity {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, RingError> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(RingError::EmptyIdentity);
        }
        Ok(Self(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match std::str::from_utf8(&self.0) {
            Ok(s) => write!(f, "Identity({s:?})"),
            Err(_) => write!(f, "Identity(0x{})", hex::encode(&self.0)),
        }
    }
}

/// KGC-issued half of a private key: D = kappa * H1(ID).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialPrivateKey {
    d: G1Element,
}

impl PartialPrivateKey {
    pub fn from_element(d: G1Element) -> Option<Self> {
        if d.is_identity() {
            None
        } else {
            Some(Self { d })
        }
    }

    pub fn element(&self) -> &G1Element {
        &self.d
    }
}

/// Self-chosen half of a private key: a nonzero scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct SecretValue {
    x: Scalar,
}

impl SecretValue {
    pub fn from_scalar(x: Scalar) -> Option<Self> {
        if x.is_zero() {
            None
        } else {
            Some(Self { x })
        }
    }

    pub fn scalar(&self) -> &Scalar {
        &self.x
    }
}

impl std::fmt::Debug for SecretValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("SecretValue(..)")
    }
}

/// Full private key: both halves. The key-replacement attack on the
/// generic composition works precisely because that construction fails to
/// bind these two halves to the same identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrivateKey {
    x: SecretValue,
    d: PartialPrivateKey,
}

impl PrivateKey {
    pub fn secret_value(&self) -> &SecretValue {
        &self.x
    }

    pub fn partial_key(&self) -> &PartialPrivateKey {
        &self.d
    }
}

/// Public key: P_i = x_i * P.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PublicKey {
    point: G1Element,
}

impl PublicKey {
    pub fn from_element(point: G1Element) -> Option<Self> {
        if point.is_identity() {
            None
        } else {
            Some(Self { point })
        }
    }

    pub fn element(&self) -> &G1Element {
        &self.point
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("identity list and public-key list have different lengths")]
    LengthMismatch,
    #[error("a ring must have at least one member")]
    Empty,
    #[error("identities must be nonempty byte strings")]
    EmptyIdentity,
    #[error("duplicate identity in ring")]
    DuplicateIdentity,
    #[error("ring members come from different parameter sets")]
    MixedCurves,
}

/// An ordered list of identities with their aligned public keys. Order is
/// significant: permuting members changes every transcript hash.
///
/// Rings of one member are permitted and behave as ordinary signatures;
/// anonymity is vacuous there, since the only candidate signer is the
/// signer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    identities: Vec<Identity>,
    public_keys: Vec<PublicKey>,
}

impl Ring {
    pub fn new(identities: Vec<Identity>, public_keys: Vec<PublicKey>) -> Result<Self, RingError> {
        if identities.len() != public_keys.len() {
            return Err(RingError::LengthMismatch);
        }
        if identities.is_empty() {
            return Err(RingError::Empty);
        }
        let mut seen = std::collections::HashSet::new();
        for id in &identities {
            if !seen.insert(id.as_bytes()) {
                return Err(RingError::DuplicateIdentity);
            }
        }
        let curve = public_keys[0].element().curve();
        if public_keys.iter().any(|pk| pk.element().curve() != curve) {
            return Err(RingError::MixedCurves);
        }
        Ok(Self {
            identities,
            public_keys,
        })
    }

    pub fn len(&self) -> usize {
        self.identities.len()
    }

    pub fn is_empty(&self) -> bool {
        false // enforced nonempty at construction
    }

    pub fn identities(&self) -> &[Identity] {
        &self.identities
    }

    pub fn public_keys(&self) -> &[PublicKey] {
        &self.public_keys
    }

    pub fn curve(&self) -> CurveId {
        self.public_keys[0].element().curve()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SignatureFormatError {
    #[error("a signature must carry at least one commitment")]
    Empty,
    #[error("commitment equals the target-group identity")]
    IdentityCommitment,
    #[error("duplicate commitment values")]
    DuplicateCommitment,
    #[error("signature elements come from different parameter sets")]
    MixedCurves,
}

/// A ring signature: one target-group commitment per member plus the
/// binding element V.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingSignature {
    y: Vec<GTElement>,
    v: G1Element,
}

impl RingSignature {
    /// Validating constructor; enforces the structural invariants that
    /// honest signing guarantees (no identity commitments, no duplicates).
    pub fn from_parts(y: Vec<GTElement>, v: G1Element) -> Result<Self, SignatureFormatError> {
        if y.is_empty() {
            return Err(SignatureFormatError::Empty);
        }
        let curve = v.curve();
        if y.iter().any(|yi| yi.curve() != curve) {
            return Err(SignatureFormatError::MixedCurves);
        }
        if y.iter().any(GTElement::is_one) {
            return Err(SignatureFormatError::IdentityCommitment);
        }
        for (i, yi) in y.iter().enumerate() {
            if y[..i].contains(yi) {
                return Err(SignatureFormatError::DuplicateCommitment);
            }
        }
        Ok(Self { y, v })
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        false // enforced nonempty at construction
    }

    pub fn commitments(&self) -> &[GTElement] {
        &self.y
    }

    pub fn v(&self) -> &G1Element {
        &self.v
    }

    pub fn curve(&self) -> CurveId {
        self.v.curve()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SignError {
    #[error("signer index {index} out of range for ring of {ring_size}")]
    IndexOutOfRange { index: usize, ring_size: usize },
    #[error("secret value does not match the signer's ring public key")]
    KeyMismatch,
    #[error("ring, key and parameters must share one parameter set")]
    CurveMismatch,
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error("could not draw a usable commitment after {0} attempts")]
    RedoExhausted(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("signature carries {got} commitments for a ring of {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("signature, ring and parameters must share one parameter set")]
    CurveMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AnonymityCheckError {
    #[error("member index {index} out of range for ring of {ring_size}")]
    IndexOutOfRange { index: usize, ring_size: usize },
    #[error("the diagnostic is only defined on valid signatures")]
    InvalidSignature,
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Generates system parameters and the KGC master key.
///
/// P is drawn freshly (any nonzero multiple of the base point generates
/// the subgroup), g = e(P, P) and P0 = kappa * P. Deterministic under a
/// seeded randomness source.
pub fn setup<R: RngCore + CryptoRng + ?Sized>(
    level: SecurityLevel,
    rng: &mut R,
) -> Result<(SystemParams, MasterKey), EntropyError> {
    let curve = level.curve();
    let u = random_scalar(rng)?;
    let p = g1_mul(&u, &G1Element::generator(curve));
    let g = pair(&p, &p);
    let kappa = random_scalar(rng)?;
    let p0 = g1_mul(&kappa, &p);
    let params = SystemParams {
        curve,
        p,
        g,
        p0,
        hash_suite: HASH_SUITE_SHA256,
    };
    let master = MasterKey { kappa };
    Ok((params, master))
}

/// KGC operation: D_i = kappa * H1(ID_i).
pub fn extract_partial_private_key(
    params: &SystemParams,
    master: &MasterKey,
    id: &Identity,
) -> PartialPrivateKey {
    let q_id = hash_to_g1(params.curve, TAG_IDENTITY_HASH, id.as_bytes());
    PartialPrivateKey {
        d: g1_mul(&master.kappa, &q_id),
    }
}

/// Public validity check for a partial key: e(D, P) = e(H1(ID), P0).
/// Anyone can run it; no secrets involved.
pub fn partial_key_is_valid(params: &SystemParams, id: &Identity, d: &PartialPrivateKey) -> bool {
    let q_id = hash_to_g1(params.curve, TAG_IDENTITY_HASH, id.as_bytes());
    pair(d.element(), &params.p) == pair(&q_id, &params.p0)
}

/// Member operation: draw the self-chosen secret value x in Z_q^*.
pub fn set_secret_value<R: RngCore + CryptoRng + ?Sized>(
    _params: &SystemParams,
    rng: &mut R,
) -> Result<SecretValue, EntropyError> {
    Ok(SecretValue {
        x: random_scalar(rng)?,
    })
}

/// Combines the two halves into the private key (x, D).
pub fn set_private_key(x: SecretValue, d: PartialPrivateKey) -> PrivateKey {
    PrivateKey { x, d }
}

/// Member operation: P_i = x_i * P (one counted G1 multiplication).
pub fn set_public_key(params: &SystemParams, x: &SecretValue) -> PublicKey {
    PublicKey {
        point: g1_mul(&x.x, &params.p),
    }
}

/// Canonical transcript prefix bound into every signature hash.
///
/// Injective by construction: a fixed tag, the curve code, the
/// length-prefixed message, the member count, the length-prefixed
/// identities in ring order, then the fixed-width public-key encodings in
/// ring order.
pub fn encode_context(message: &[u8], ring: &Ring) -> Vec<u8> {
    let mut out = Vec::with_capacity(64 + message.len());
    out.extend_from_slice(b"CLRCTX01");
    wire::put_u16(&mut out, ring.curve().code());
    wire::put_u64(&mut out, message.len() as u64);
    out.extend_from_slice(message);
    wire::put_u32(&mut out, ring.len() as u32);
    for id in ring.identities() {
        wire::put_bytes(&mut out, id.as_bytes());
    }
    for pk in ring.public_keys() {
        out.extend_from_slice(&pk.element().to_bytes());
    }
    out
}

/// The exact byte string fed to the challenge hash for commitment `y`:
/// the context followed by the canonical commitment encoding. The
/// programmable-oracle harness keys its table on the same bytes.
pub(crate) fn transcript_input(ctx: &[u8], y: &GTElement) -> Vec<u8> {
    let mut input = Vec::with_capacity(ctx.len() + y.curve().gt_encoded_len());
    input.extend_from_slice(ctx);
    input.extend_from_slice(&y.to_bytes());
    input
}

fn transcript_hash(ctx: &[u8], y: &GTElement) -> Scalar {
    hash_to_scalar(&transcript_input(ctx, y))
}

/// Signs `message` on behalf of `ring` as member `signer_index`.
///
/// Checks that the secret value matches the signer's ring slot before
/// signing (the partial key is not checked here: doing so would take two
/// extra pairings, and an inconsistent partial key merely yields a
/// signature that fails verification).
///
/// Operation budget per call, enforced by the accounting suite:
/// 2 pairings; 2n+3 G1 scalar multiplications (2(n-1) for the two hash
/// sums, one for the key-consistency check, one for (sum r_i)P, one for
/// x_s*U and two distributing h_s over D_s and x_s*U); n GT
/// exponentiations; n+1 MapToPoint hashes (every member identity plus the
/// transcript point U).
pub fn ring_sign<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    message: &[u8],
    ring: &Ring,
    signer_index: usize,
    key: &PrivateKey,
    rng: &mut R,
) -> Result<RingSignature, SignError> {
    sign_inner(params, message, ring, signer_index, key, rng, true)
}

/// Diagnostic variant of [`ring_sign`] that skips the key-consistency
/// check, so test suites can demonstrate that signatures produced with a
/// mismatched secret value or partial key fail verification. Performs one
/// fewer G1 multiplication than [`ring_sign`].
pub fn ring_sign_unchecked<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    message: &[u8],
    ring: &Ring,
    signer_index: usize,
    key: &PrivateKey,
    rng: &mut R,
) -> Result<RingSignature, SignError> {
    sign_inner(params, message, ring, signer_index, key, rng, false)
}

#[allow(clippy::too_many_arguments)]
fn sign_inner<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    message: &[u8],
    ring: &Ring,
    signer_index: usize,
    key: &PrivateKey,
    rng: &mut R,
    check_key: bool,
) -> Result<RingSignature, SignError> {
    let n = ring.len();
    if signer_index >= n {
        return Err(SignError::IndexOutOfRange {
            index: signer_index,
            ring_size: n,
        });
    }
    if ring.curve() != params.curve || key.d.element().curve() != params.curve {
        return Err(SignError::CurveMismatch);
    }
    if check_key {
        let expected = g1_mul(&key.x.x, &params.p);
        if &expected != ring.public_keys()[signer_index].element() {
            return Err(SignError::KeyMismatch);
        }
    }

    let ctx = encode_context(message, ring);
    // Hash every member identity (the signer's slot included, even though
    // only the others enter the sums below) and the transcript point U.
    let q_points: Vec<G1Element> = ring
        .identities()
        .iter()
        .map(|id| hash_to_g1(params.curve, TAG_IDENTITY_HASH, id.as_bytes()))
        .collect();
    let u = hash_to_g1(params.curve, TAG_TRANSCRIPT_HASH, &ctx);

    // Commitments y_i = g^{r_i} for every non-signer slot.
    let mut nonces: Vec<Option<Scalar>> = vec![None; n];
    let mut commitments: Vec<Option<GTElement>> = vec![None; n];
    for i in (0..n).filter(|&i| i != signer_index) {
        let r = random_scalar(rng)?;
        commitments[i] = Some(gt_exp(&params.g, &r));
        nonces[i] = Some(r);
    }

    // Transcript challenges for the non-signer slots.
    let mut challenges: Vec<Option<Scalar>> = vec![None; n];
    for i in (0..n).filter(|&i| i != signer_index) {
        challenges[i] = Some(transcript_hash(&ctx, commitments[i].as_ref().unwrap()));
    }

    // sum(h_i Q_i) and sum(h_i P_i) over the non-signer slots.
    let mut sum_hq = G1Element::identity(params.curve);
    let mut sum_hp = G1Element::identity(params.curve);
    for i in (0..n).filter(|&i| i != signer_index) {
        let h = challenges[i].as_ref().unwrap();
        sum_hq = &sum_hq + &g1_mul(h, &q_points[i]);
        sum_hp = &sum_hp + &g1_mul(h, ring.public_keys()[i].element());
    }

    // Both pairings are evaluated unconditionally (for n = 1 the sums are
    // the identity and the factors collapse to 1), keeping the pairing
    // count at two for every ring size.
    let base = pair(&-&params.p0, &sum_hq).mul(&pair(&-&u, &sum_hp));

    let taken: Vec<GTElement> = commitments.iter().flatten().cloned().collect();
    let (r_s, y_s, _) = draw_fresh_commitment(MAX_REDRAWS, &taken, || {
        let r = random_scalar(rng)?;
        let y = gt_exp(&params.g, &r).mul(&base);
        Ok::<_, EntropyError>((r, y))
    })
    .map_err(|e| match e {
        RetryError::Draw(err) => SignError::Entropy(err),
        RetryError::Exhausted(n) => SignError::RedoExhausted(n),
    })?;
    let h_s = transcript_hash(&ctx, &y_s);
    nonces[signer_index] = Some(r_s);
    commitments[signer_index] = Some(y_s);

    let r_sum = nonces
        .iter()
        .flatten()
        .fold(Scalar::zero(), |acc, r| acc.add(r));

    // V = (sum r_i)P + h_s*D_s + h_s*(x_s*U), distributing h_s over the
    // two key halves.
    let x_u = g1_mul(&key.x.x, &u);
    let v = &(&g1_mul(&r_sum, &params.p) + &g1_mul(&h_s, key.d.element()))
        + &g1_mul(&h_s, &x_u);

    let y: Vec<GTElement> = commitments.into_iter().map(Option::unwrap).collect();
    RingSignature::from_parts(y, v).map_err(|_| SignError::RedoExhausted(MAX_REDRAWS))
}

/// Verifies a ring signature: e(V, P) = (prod y_i) * e(sum h_i Q_i, P0) *
/// e(sum h_i P_i, U), with all challenges recomputed from the transcript.
///
/// Equation failure returns `Ok(false)`; structurally unusable input
/// (length or parameter-set mismatch) is an error, distinct from an
/// invalid signature.
///
/// Operation budget per call: 3 pairings, 2n G1 scalar multiplications,
/// no GT exponentiations, n+1 MapToPoint hashes.
pub fn verify(
    params: &SystemParams,
    message: &[u8],
    ring: &Ring,
    sig: &RingSignature,
) -> Result<bool, VerifyError> {
    let n = ring.len();
    if sig.len() != n {
        return Err(VerifyError::LengthMismatch {
            expected: n,
            got: sig.len(),
        });
    }
    if ring.curve() != params.curve || sig.curve() != params.curve {
        return Err(VerifyError::CurveMismatch);
    }

    let ctx = encode_context(message, ring);
    let u = hash_to_g1(params.curve, TAG_TRANSCRIPT_HASH, &ctx);

    let mut sum_hq = G1Element::identity(params.curve);
    let mut sum_hp = G1Element::identity(params.curve);
    let mut y_product = GTElement::one(params.curve);
    for i in 0..n {
        let h = transcript_hash(&ctx, &sig.y[i]);
        let q_i = hash_to_g1(params.curve, TAG_IDENTITY_HASH, ring.identities()[i].as_bytes());
        sum_hq = &sum_hq + &g1_mul(&h, &q_i);
        sum_hp = &sum_hp + &g1_mul(&h, ring.public_keys()[i].element());
        y_product = y_product.mul(&sig.y[i]);
    }

    let rhs = y_product
        .mul(&pair(&sum_hq, &params.p0))
        .mul(&pair(&sum_hp, &u));
    let lhs = pair(&sig.v, &params.p);
    Ok(lhs == rhs)
}

/// The candidate de-anonymization test, run for ring slot `j`:
///
///   (e(V,P) / ((prod y_i) e(P0, sum_{i!=j} h_i Q_i) e(U, sum_{i!=j} h_i P_i)))^(1/h_j)
///     =? e(Q_j, P0) e(P_j, U)
///
/// On a valid signature this holds for every j, so the test carries zero
/// information about which member actually signed. That is the anonymity
/// argument in executable form; this diagnostic exists so suites can
/// confirm it index by index.
pub fn anonymity_identity_check(
    params: &SystemParams,
    message: &[u8],
    ring: &Ring,
    sig: &RingSignature,
    j: usize,
) -> Result<bool, AnonymityCheckError> {
    let n = ring.len();
    if j >= n {
        return Err(AnonymityCheckError::IndexOutOfRange {
            index: j,
            ring_size: n,
        });
    }
    if !verify(params, message, ring, sig)? {
        return Err(AnonymityCheckError::InvalidSignature);
    }

    let ctx = encode_context(message, ring);
    let u = hash_to_g1(params.curve, TAG_TRANSCRIPT_HASH, &ctx);
    let q_points: Vec<G1Element> = ring
        .identities()
        .iter()
        .map(|id| hash_to_g1(params.curve, TAG_IDENTITY_HASH, id.as_bytes()))
        .collect();
    let challenges: Vec<Scalar> = sig.y.iter().map(|y| transcript_hash(&ctx, y)).collect();

    let mut sum_hq = G1Element::identity(params.curve);
    let mut sum_hp = G1Element::identity(params.curve);
    let mut y_product = GTElement::one(params.curve);
    for i in 0..n {
        y_product = y_product.mul(&sig.y[i]);
        if i == j {
            continue;
        }
        sum_hq = &sum_hq + &g1_mul(&challenges[i], &q_points[i]);
        sum_hp = &sum_hp + &g1_mul(&challenges[i], ring.public_keys()[i].element());
    }

    let denominator = y_product
        .mul(&pair(&params.p0, &sum_hq))
        .mul(&pair(&u, &sum_hp));
    let ratio = pair(&sig.v, &params.p).mul(&denominator.inverse());
    let h_j_inv = challenges[j]
        .invert()
        .expect("transcript hashes are nonzero");
    let lhs = gt_exp(&ratio, &h_j_inv);
    let rhs = pair(&q_points[j], &params.p0).mul(&pair(
        ring.public_keys()[j].element(),
        &u,
    ));
    Ok(lhs == rhs)
}
