#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // Decoding must never panic, and anything it accepts must re-encode
    // to the exact same bytes (single canonical encoding per object).
    if let Ok(object) = clring::codec::decode(data) {
        assert_eq!(clring::codec::encode(&object), data);
    }
});
