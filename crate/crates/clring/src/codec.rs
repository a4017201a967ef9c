//! Canonical, versioned serialization for every artifact the toolkit
//! produces: parameters, keys, rings and signatures.
//!
//! Every file is one envelope: the magic `CLRS`, a format version, a kind
//! byte, a big-endian curve identifier, then the kind-specific payload.
//! There is exactly one encoding per object — decoders reject anything
//! non-canonical (wrong lengths, out-of-range field elements, alternate
//! point encodings, trailing bytes) with a typed error, and every group
//! element is revalidated for curve and subgroup membership before an
//! object is returned.

use thiserror::Error;

use crate::backend::{CurveId, G1Element, GTElement, Scalar};
use crate::scheme::{
    Identity, MasterKey, PartialPrivateKey, ParamsError, PrivateKey, PublicKey, Ring, RingError,
    RingSignature, SecretValue, SignatureFormatError, SystemParams, set_private_key,
};
use crate::wire::{self, Reader};
use crate::PointDecodeError;

pub const MAGIC: [u8; 4] = *b"CLRS";
pub const VERSION: u8 = 1;

/// Payload discriminant. Secret material (master key, secret value,
/// private key) carries its own kind byte so tooling can never mistake it
/// for public artifacts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Params = 1,
    MasterKey = 2,
    PartialKey = 3,
    SecretValue = 4,
    PrivateKey = 5,
    PublicKey = 6,
    Ring = 7,
    Signature = 8,
}

impl Kind {
    fn from_byte(byte: u8) -> Option<Self> {
        Some(match byte {
            1 => Kind::Params,
            2 => Kind::MasterKey,
            3 => Kind::PartialKey,
            4 => Kind::SecretValue,
            5 => Kind::PrivateKey,
            6 => Kind::PublicKey,
            7 => Kind::Ring,
            8 => Kind::Signature,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("malformed envelope: {0}")]
    Malformed(&'static str),
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported format version {0}")]
    UnknownVersion(u8),
    #[error("unknown object kind {0}")]
    UnknownKind(u8),
    #[error("unknown curve identifier {0}")]
    UnknownCurve(u16),
    #[error("expected a {expected:?} envelope, found {got:?}")]
    WrongKind { expected: Kind, got: Kind },
    #[error("group element rejected: {0}")]
    Element(#[from] PointDecodeError),
    #[error("scalar rejected: out of range or wrong length")]
    BadScalar,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("group element must not be the identity")]
    IdentityElement,
    #[error("parameter invariant violated: {0}")]
    Params(#[from] ParamsError),
    #[error("ring invariant violated: {0}")]
    Ring(#[from] RingError),
    #[error("signature invariant violated: {0}")]
    Signature(#[from] SignatureFormatError),
}

/// Any decodable artifact.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Object {
    Params(SystemParams),
    MasterKey(MasterKey),
    PartialKey(PartialPrivateKey),
    SecretValue(SecretValue),
    PrivateKey(PrivateKey),
    PublicKey(PublicKey),
    Ring(Ring),
    Signature(RingSignature),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Params(_) => Kind::Params,
            Object::MasterKey(_) => Kind::MasterKey,
            Object::PartialKey(_) => Kind::PartialKey,
            Object::SecretValue(_) => Kind::SecretValue,
            Object::PrivateKey(_) => Kind::PrivateKey,
            Object::PublicKey(_) => Kind::PublicKey,
            Object::Ring(_) => Kind::Ring,
            Object::Signature(_) => Kind::Signature,
        }
    }

    fn curve(&self) -> CurveId {
        match self {
            Object::Params(p) => p.curve(),
            // Scalars are curve-independent; stamp them with the demo set's
            // code so the envelope stays self-contained.
            Object::MasterKey(_) | Object::SecretValue(_) => CurveId::Demo256,
            Object::PartialKey(k) => k.element().curve(),
            Object::PrivateKey(k) => k.partial_key().element().curve(),
            Object::PublicKey(k) => k.element().curve(),
            Object::Ring(r) => r.curve(),
            Object::Signature(s) => s.curve(),
        }
    }
}

pub fn encode(object: &Object) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(object.kind() as u8);
    wire::put_u16(&mut out, object.curve().code());
    match object {
        Object::Params(p) => {
            out.push(p.hash_suite());
            out.extend_from_slice(&p.p().to_bytes());
            out.extend_from_slice(&p.p0().to_bytes());
            out.extend_from_slice(&p.g().to_bytes());
        }
        Object::MasterKey(k) => out.extend_from_slice(&k.kappa().to_be_bytes()),
        Object::PartialKey(k) => out.extend_from_slice(&k.element().to_bytes()),
        Object::SecretValue(v) => out.extend_from_slice(&v.scalar().to_be_bytes()),
        Object::PrivateKey(k) => {
            out.extend_from_slice(&k.secret_value().scalar().to_be_bytes());
            out.extend_from_slice(&k.partial_key().element().to_bytes());
        }
        Object::PublicKey(k) => out.extend_from_slice(&k.element().to_bytes()),
        Object::Ring(r) => {
            wire::put_u32(&mut out, r.len() as u32);
            for id in r.identities() {
                wire::put_bytes(&mut out, id.as_bytes());
            }
            for pk in r.public_keys() {
                out.extend_from_slice(&pk.element().to_bytes());
            }
        }
        Object::Signature(s) => {
            wire::put_u32(&mut out, s.len() as u32);
            for y in s.commitments() {
                out.extend_from_slice(&y.to_bytes());
            }
            out.extend_from_slice(&s.v().to_bytes());
        }
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<Object, CodecError> {
    let mut reader = Reader::new(bytes);
    let magic = reader
        .take(4)
        .ok_or(CodecError::Malformed("truncated before magic"))?;
    if magic != MAGIC {
        return Err(CodecError::BadMagic);
    }
    let version = reader
        .u8()
        .ok_or(CodecError::Malformed("truncated before version"))?;
    if version != VERSION {
        return Err(CodecError::UnknownVersion(version));
    }
    let kind_byte = reader
        .u8()
        .ok_or(CodecError::Malformed("truncated before kind"))?;
    let kind = Kind::from_byte(kind_byte).ok_or(CodecError::UnknownKind(kind_byte))?;
    let curve_code = reader
        .u16()
        .ok_or(CodecError::Malformed("truncated before curve id"))?;
    let curve = CurveId::from_code(curve_code).ok_or(CodecError::UnknownCurve(curve_code))?;

    let object = match kind {
        Kind::Params => {
            let suite = reader
                .u8()
                .ok_or(CodecError::Malformed("truncated hash suite"))?;
            let p = read_point(&mut reader, curve)?;
            let p0 = read_point(&mut reader, curve)?;
            let g = read_gt(&mut reader, curve)?;
            Object::Params(SystemParams::from_parts(p, g, p0, suite)?)
        }
        Kind::MasterKey => {
            let kappa = read_scalar(&mut reader)?;
            Object::MasterKey(MasterKey::from_scalar(kappa).ok_or(CodecError::ZeroScalar)?)
        }
        Kind::PartialKey => {
            let d = read_point(&mut reader, curve)?;
            Object::PartialKey(
                PartialPrivateKey::from_element(d).ok_or(CodecError::IdentityElement)?,
            )
        }
        Kind::SecretValue => {
            let x = read_scalar(&mut reader)?;
            Object::SecretValue(SecretValue::from_scalar(x).ok_or(CodecError::ZeroScalar)?)
        }
        Kind::PrivateKey => {
            let x = read_scalar(&mut reader)?;
            let d = read_point(&mut reader, curve)?;
            let x = SecretValue::from_scalar(x).ok_or(CodecError::ZeroScalar)?;
            let d = PartialPrivateKey::from_element(d).ok_or(CodecError::IdentityElement)?;
            Object::PrivateKey(set_private_key(x, d))
        }
        Kind::PublicKey => {
            let point = read_point(&mut reader, curve)?;
            Object::PublicKey(PublicKey::from_element(point).ok_or(CodecError::IdentityElement)?)
        }
        Kind::Ring => {
            let n = reader
                .u32()
                .ok_or(CodecError::Malformed("truncated member count"))?
                as usize;
            if n > MAX_RING_MEMBERS {
                return Err(CodecError::Malformed("implausible member count"));
            }
            let mut identities = Vec::with_capacity(n);
            for _ in 0..n {
                let id = reader
                    .bytes()
                    .ok_or(CodecError::Malformed("truncated identity"))?;
                identities.push(Identity::new(id.to_vec())?);
            }
            let mut public_keys = Vec::with_capacity(n);
            for _ in 0..n {
                let point = read_point(&mut reader, curve)?;
                public_keys
                    .push(PublicKey::from_element(point).ok_or(CodecError::IdentityElement)?);
            }
            Object::Ring(Ring::new(identities, public_keys)?)
        }
        Kind::Signature => {
            let n = reader
                .u32()
                .ok_or(CodecError::Malformed("truncated commitment count"))?
                as usize;
            if n > MAX_RING_MEMBERS {
                return Err(CodecError::Malformed("implausible commitment count"));
            }
            let mut y = Vec::with_capacity(n);
            for _ in 0..n {
                y.push(read_gt(&mut reader, curve)?);
            }
            let v = read_point(&mut reader, curve)?;
            Object::Signature(RingSignature::from_parts(y, v)?)
        }
    };

    if !reader.finish() {
        return Err(CodecError::Malformed("trailing bytes"));
    }
    Ok(object)
}

/// Upper bound on list lengths accepted by the decoder; prevents
/// attacker-controlled preallocation from hostile inputs.
pub const MAX_RING_MEMBERS: usize = 4096;

fn read_scalar(reader: &mut Reader<'_>) -> Result<Scalar, CodecError> {
    let bytes = reader.take(32).ok_or(CodecError::BadScalar)?;
    Scalar::from_be_bytes(bytes).ok_or(CodecError::BadScalar)
}

fn read_point(reader: &mut Reader<'_>, curve: CurveId) -> Result<G1Element, CodecError> {
    let bytes = reader
        .take(curve.g1_encoded_len())
        .ok_or(CodecError::Malformed("truncated group element"))?;
    Ok(G1Element::from_bytes(curve, bytes)?)
}

fn read_gt(reader: &mut Reader<'_>, curve: CurveId) -> Result<GTElement, CodecError> {
    let bytes = reader
        .take(curve.gt_encoded_len())
        .ok_or(CodecError::Malformed("truncated target-group element"))?;
    Ok(GTElement::from_bytes(curve, bytes)?)
}

macro_rules! typed_decoder {
    ($name:ident, $variant:ident, $ty:ty) => {
        pub fn $name(bytes: &[u8]) -> Result<$ty, CodecError> {
            match decode(bytes)? {
                Object::$variant(v) => Ok(v),
                other => Err(CodecError::WrongKind {
                    expected: Kind::$variant,
                    got: other.kind(),
                }),
            }
        }
    };
}

typed_decoder!(decode_params, Params, SystemParams);
typed_decoder!(decode_master_key, MasterKey, MasterKey);
typed_decoder!(decode_partial_key, PartialKey, PartialPrivateKey);
typed_decoder!(decode_secret_value, SecretValue, SecretValue);
typed_decoder!(decode_private_key, PrivateKey, PrivateKey);
typed_decoder!(decode_public_key, PublicKey, PublicKey);
typed_decoder!(decode_ring, Ring, Ring);
typed_decoder!(decode_signature, Signature, RingSignature);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HexError {
    #[error("hex strings must use lowercase [0-9a-f] only")]
    InvalidCharacter,
    #[error("hex strings must have even length")]
    OddLength,
}

/// Lowercase hex encoding of arbitrary bytes.
pub fn to_hex(bytes: &[u8]) -> String {
    hex::encode(bytes)
}

/// Strict lowercase hex decoding; uppercase digits are rejected.
pub fn from_hex(text: &str) -> Result<Vec<u8>, HexError> {
    if !text.len().is_multiple_of(2) {
        return Err(HexError::OddLength);
    }
    if !text.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
        return Err(HexError::InvalidCharacter);
    }
    hex::decode(text).map_err(|_| HexError::InvalidCharacter)
}

/// The JSON ring-file format: an ordered list of members, each an
/// identity string with the hex of its public-key envelope. Rings are
/// meant to be read and audited by people; binary payloads stay hex.
pub mod ring_file {
    use serde::{Deserialize, Serialize};

    use super::{decode_public_key, encode, from_hex, to_hex, CodecError, HexError, Object};
    use crate::scheme::{Identity, Ring, RingError, SystemParams};
    use thiserror::Error;

    #[derive(Debug, Clone, Serialize, Deserialize)]
    pub struct RingFile {
        pub members: Vec<Member>,
    }

    #[derive(Debug, Clone, Serialize, Deserialize)]
    pub struct Member {
        pub identity: String,
        pub public_key: String,
    }

    #[derive(Debug, Error)]
    pub enum RingFileError {
        #[error("ring file is not valid JSON: {0}")]
        Json(#[from] serde_json::Error),
        #[error("member {index}: {source}")]
        MemberHex {
            index: usize,
            #[source]
            source: HexError,
        },
        #[error("member {index}: {source}")]
        MemberKey {
            index: usize,
            #[source]
            source: CodecError,
        },
        #[error("member {index}: public key uses a different parameter set than params")]
        CurveMismatch { index: usize },
        #[error(transparent)]
        Ring(#[from] RingError),
    }

    /// Renders a ring to the JSON interchange form.
    pub fn to_json(ring: &Ring) -> String {
        let members = ring
            .identities()
            .iter()
            .zip(ring.public_keys())
            .map(|(id, pk)| Member {
                identity: String::from_utf8_lossy(id.as_bytes()).into_owned(),
                public_key: to_hex(&encode(&Object::PublicKey(pk.clone()))),
            })
            .collect();
        serde_json::to_string_pretty(&RingFile { members }).expect("ring file serializes")
    }

    /// Parses and fully validates a JSON ring file against `params`.
    pub fn from_json(bytes: &[u8], params: &SystemParams) -> Result<Ring, RingFileError> {
        let file: RingFile = serde_json::from_slice(bytes)?;
        let mut identities = Vec::with_capacity(file.members.len());
        let mut public_keys = Vec::with_capacity(file.members.len());
        for (index, member) in file.members.iter().enumerate() {
            let raw = from_hex(&member.public_key)
                .map_err(|source| RingFileError::MemberHex { index, source })?;
            let pk = decode_public_key(&raw)
                .map_err(|source| RingFileError::MemberKey { index, source })?;
            if pk.element().curve() != params.curve() {
                return Err(RingFileError::CurveMismatch { index });
            }
            identities.push(Identity::new(member.identity.as_bytes().to_vec())?);
            public_keys.push(pk);
        }
        Ok(Ring::new(identities, public_keys)?)
    }
}
