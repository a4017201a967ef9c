//! Codec tests: round-trip identity per kind, canonicity, strict
//! rejection of malformed input, hex, and the JSON ring file.

use clring::codec::{
    self, decode, decode_params, decode_ring, decode_signature, encode, from_hex, ring_file,
    to_hex, CodecError, HexError, Kind, Object,
};
use clring::scheme::{
    extract_partial_private_key, ring_sign, set_private_key, set_public_key, set_secret_value,
    setup, Identity, MasterKey, Ring, RingSignature, SecurityLevel, SystemParams,
};
use clring::CurveId;
use proptest::prelude::*;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn demo_setup(seed: u64) -> (SystemParams, MasterKey, ChaCha20Rng) {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let (params, master) = setup(SecurityLevel::Demo, &mut rng).unwrap();
    (params, master, rng)
}

fn sample_objects(seed: u64) -> Vec<Object> {
    let (params, master, mut rng) = demo_setup(seed);
    let id_a = Identity::new(format!("alice-{seed}")).unwrap();
    let id_b = Identity::new(format!("bob-{seed}")).unwrap();
    let x_a = set_secret_value(&params, &mut rng).unwrap();
    let x_b = set_secret_value(&params, &mut rng).unwrap();
    let pk_a = set_public_key(&params, &x_a);
    let pk_b = set_public_key(&params, &x_b);
    let d_a = extract_partial_private_key(&params, &master, &id_a);
    let key_a = set_private_key(x_a.clone(), d_a.clone());
    let ring = Ring::new(vec![id_a, id_b], vec![pk_a.clone(), pk_b]).unwrap();
    let sig = ring_sign(&params, b"codec sample", &ring, 0, &key_a, &mut rng).unwrap();
    vec![
        Object::Params(params),
        Object::MasterKey(master),
        Object::PartialKey(d_a),
        Object::SecretValue(x_a),
        Object::PrivateKey(key_a),
        Object::PublicKey(pk_a),
        Object::Ring(ring),
        Object::Signature(sig),
    ]
}

#[test]
fn round_trip_identity_every_kind() {
    for seed in 0..8u64 {
        for object in sample_objects(seed) {
            let bytes = encode(&object);
            let decoded = decode(&bytes).unwrap_or_else(|e| {
                panic!("decode failed for {:?}: {e}", object.kind());
            });
            assert_eq!(decoded, object, "round trip for {:?}", object.kind());
            // canonicity: re-encoding reproduces the exact bytes
            assert_eq!(encode(&decoded), bytes);
        }
    }
}

#[test]
fn typed_decoders_enforce_kind() {
    let objects = sample_objects(100);
    let params_bytes = encode(&objects[0]);
    let sig_bytes = encode(&objects[7]);

    assert!(decode_params(&params_bytes).is_ok());
    match decode_params(&sig_bytes) {
        Err(CodecError::WrongKind {
            expected: Kind::Params,
            got: Kind::Signature,
        }) => {}
        other => panic!("expected wrong-kind error, got {other:?}"),
    }
    assert!(decode_signature(&sig_bytes).is_ok());
}

#[test]
fn decode_rejects_structured_corruption() {
    let objects = sample_objects(101);
    let bytes = encode(&objects[0]);

    // bad magic
    let mut bad = bytes.clone();
    bad[0] ^= 0xff;
    assert!(matches!(decode(&bad), Err(CodecError::BadMagic)));

    // unknown version
    let mut bad = bytes.clone();
    bad[4] = 9;
    assert!(matches!(decode(&bad), Err(CodecError::UnknownVersion(9))));

    // unknown kind
    let mut bad = bytes.clone();
    bad[5] = 99;
    assert!(matches!(decode(&bad), Err(CodecError::UnknownKind(99))));

    // unknown curve
    let mut bad = bytes.clone();
    bad[6] = 0xab;
    bad[7] = 0xcd;
    assert!(matches!(decode(&bad), Err(CodecError::UnknownCurve(0xabcd))));

    // truncation anywhere must error, never panic
    for cut in 0..bytes.len() {
        assert!(decode(&bytes[..cut]).is_err(), "truncation at {cut} accepted");
    }

    // trailing garbage
    let mut bad = bytes.clone();
    bad.push(0);
    assert!(matches!(decode(&bad), Err(CodecError::Malformed(_))));
}

#[test]
fn decode_rejects_zero_secrets_and_identity_points() {
    let objects = sample_objects(102);
    // masterkey payload fully zeroed -> zero scalar
    let mut bad = encode(&objects[1]);
    for b in bad.iter_mut().skip(8) {
        *b = 0;
    }
    assert!(matches!(decode(&bad), Err(CodecError::ZeroScalar)));

    // public key set to the identity encoding
    let mut bad = encode(&objects[5]);
    for b in bad.iter_mut().skip(8) {
        *b = 0;
    }
    assert!(matches!(decode(&bad), Err(CodecError::IdentityElement)));
}

#[test]
fn decode_rejects_duplicate_ring_identities() {
    let (params, _, mut rng) = demo_setup(103);
    let x1 = set_secret_value(&params, &mut rng).unwrap();
    let x2 = set_secret_value(&params, &mut rng).unwrap();
    let ring = Ring::new(
        vec![
            Identity::new("same").unwrap(),
            Identity::new("diff").unwrap(),
        ],
        vec![set_public_key(&params, &x1), set_public_key(&params, &x2)],
    )
    .unwrap();
    let mut bytes = encode(&Object::Ring(ring));
    // rewrite "diff" to "same" in place
    let pos = bytes.windows(4).position(|w| w == b"diff").unwrap();
    bytes[pos..pos + 4].copy_from_slice(b"same");
    assert!(matches!(decode(&bytes), Err(CodecError::Ring(_))));
}

#[test]
fn hex_strictness() {
    assert_eq!(to_hex(&[0x00, 0xff, 0x1a]), "00ff1a");
    assert_eq!(from_hex("00ff1a").unwrap(), vec![0x00, 0xff, 0x1a]);
    assert_eq!(from_hex(""), Ok(vec![]));
    assert_eq!(from_hex("zz"), Err(HexError::InvalidCharacter));
    assert_eq!(from_hex("ABCD"), Err(HexError::InvalidCharacter));
    assert_eq!(from_hex("abc"), Err(HexError::OddLength));
}

#[test]
fn g1_hex_length_matches_curve() {
    let (params, _, _) = demo_setup(104);
    let hex_str = to_hex(&params.p().to_bytes());
    assert_eq!(hex_str.len(), 2 * CurveId::Demo256.g1_encoded_len());
    assert_eq!(hex_str.len() % 2, 0);
}

#[test]
fn ring_file_round_trip_and_validation() {
    let (params, master, mut rng) = demo_setup(105);
    let ids: Vec<Identity> = (0..3)
        .map(|i| Identity::new(format!("member-{i}")).unwrap())
        .collect();
    let mut pks = Vec::new();
    for _ in 0..3 {
        let x = set_secret_value(&params, &mut rng).unwrap();
        pks.push(set_public_key(&params, &x));
    }
    let _ = master;
    let ring = Ring::new(ids, pks).unwrap();

    let json = ring_file::to_json(&ring);
    let parsed = ring_file::from_json(json.as_bytes(), &params).unwrap();
    assert_eq!(parsed, ring);

    // invalid JSON
    assert!(ring_file::from_json(b"{not json", &params).is_err());
    // broken member hex
    let broken = json.replacen("\"public_key\": \"", "\"public_key\": \"zz", 1);
    assert!(ring_file::from_json(broken.as_bytes(), &params).is_err());
}

#[test]
fn random_byte_fuzzing_never_panics() {
    // a fast in-test slice of the larger acceptance fuzz run
    let mut rng = ChaCha20Rng::seed_from_u64(106);
    for _ in 0..20_000 {
        let len = (rng.next_u32() % 300) as usize;
        let mut data = vec![0u8; len];
        rng.fill_bytes(&mut data);
        assert!(decode(&data).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_hex_round_trip(bytes in proptest::collection::vec(any::<u8>(), 0..200)) {
        let text = to_hex(&bytes);
        prop_assert_eq!(from_hex(&text).unwrap(), bytes);
    }

    #[test]
    fn prop_decode_arbitrary_bytes_errors_cleanly(bytes in proptest::collection::vec(any::<u8>(), 0..160)) {
        // decoding wholly random bytes must reject without panicking
        prop_assert!(decode(&bytes).is_err());
    }

    #[test]
    fn prop_signature_round_trip(seed in 0u64..1u64 << 48) {
        let (params, master, mut rng) = demo_setup(seed);
        let id = Identity::new(format!("solo-{seed}")).unwrap();
        let x = set_secret_value(&params, &mut rng).unwrap();
        let pk = set_public_key(&params, &x);
        let d = extract_partial_private_key(&params, &master, &id);
        let key = set_private_key(x, d);
        let ring = Ring::new(vec![id], vec![pk]).unwrap();
        let sig = ring_sign(&params, b"prop", &ring, 0, &key, &mut rng).unwrap();
        let bytes = encode(&Object::Signature(sig.clone()));
        let decoded: RingSignature = decode_signature(&bytes).unwrap();
        prop_assert_eq!(decoded, sig);
        let ring_bytes = encode(&Object::Ring(ring.clone()));
        prop_assert_eq!(decode_ring(&ring_bytes).unwrap(), ring);
    }
}

#[test]
fn codec_module_constants() {
    assert_eq!(codec::MAGIC, *b"CLRS");
    assert_eq!(codec::VERSION, 1);
}
