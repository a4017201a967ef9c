#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use rand_chacha::rand_core::SeedableRng;

use clring::scheme::{setup, SecurityLevel, SystemParams};

fn params() -> &'static SystemParams {
    static PARAMS: OnceLock<SystemParams> = OnceLock::new();
    PARAMS.get_or_init(|| {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0);
        setup(SecurityLevel::Demo, &mut rng).expect("setup").0
    })
}

fuzz_target!(|data: &[u8]| {
    // Ring-file parsing of hostile JSON must reject cleanly, never panic.
    let _ = clring::codec::ring_file::from_json(data, params());
});
