#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(bytes) = clring::codec::from_hex(text) {
            // accepted text is canonical: re-encoding reproduces it
            assert_eq!(clring::codec::to_hex(&bytes), text);
        }
    }
});
