//! Regenerates the seed corpus for the fuzz targets.
//!
//! Usage: cargo run -p clring --example gen_fuzz_corpus [-- <out_dir>]
//! (defaults to ./fuzz/corpus).

use std::fs;
use std::path::PathBuf;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

use clring::codec::{encode, ring_file, to_hex, Object};
use clring::scheme::{
    extract_partial_private_key, ring_sign, set_private_key, set_public_key, set_secret_value,
    setup, Identity, Ring, SecurityLevel,
};

fn main() {
    let out: PathBuf = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fuzz/corpus".into())
        .into();

    let mut rng = ChaCha20Rng::seed_from_u64(0);
    let (params, master) = setup(SecurityLevel::Demo, &mut rng).expect("setup");

    let id_a = Identity::new("corpus-alice").unwrap();
    let id_b = Identity::new("corpus-bob").unwrap();
    let x_a = set_secret_value(&params, &mut rng).unwrap();
    let x_b = set_secret_value(&params, &mut rng).unwrap();
    let pk_a = set_public_key(&params, &x_a);
    let pk_b = set_public_key(&params, &x_b);
    let d_a = extract_partial_private_key(&params, &master, &id_a);
    let key_a = set_private_key(x_a.clone(), d_a.clone());
    let ring = Ring::new(vec![id_a, id_b], vec![pk_a.clone(), pk_b]).unwrap();
    let sig = ring_sign(&params, b"corpus message", &ring, 0, &key_a, &mut rng).unwrap();

    let envelope_dir = out.join("decode_envelope");
    fs::create_dir_all(&envelope_dir).expect("mkdir");
    let objects: [(&str, Object); 8] = [
        ("params", Object::Params(params.clone())),
        ("masterkey", Object::MasterKey(master)),
        ("partialkey", Object::PartialKey(d_a)),
        ("secretvalue", Object::SecretValue(x_a)),
        ("privatekey", Object::PrivateKey(key_a)),
        ("publickey", Object::PublicKey(pk_a)),
        ("ring", Object::Ring(ring.clone())),
        ("signature", Object::Signature(sig.clone())),
    ];
    for (name, object) in &objects {
        fs::write(envelope_dir.join(name), encode(object)).expect("write seed");
    }

    let ring_dir = out.join("ring_json");
    fs::create_dir_all(&ring_dir).expect("mkdir");
    fs::write(ring_dir.join("ring"), ring_file::to_json(&ring)).expect("write seed");
    fs::write(ring_dir.join("empty"), b"{\"members\":[]}").expect("write seed");

    let hex_dir = out.join("hex_strict");
    fs::create_dir_all(&hex_dir).expect("mkdir");
    fs::write(hex_dir.join("signature_hex"), to_hex(&encode(&Object::Signature(sig))))
        .expect("write seed");
    fs::write(hex_dir.join("short"), b"00ff1a").expect("write seed");

    println!("corpus written under {}", out.display());
}
