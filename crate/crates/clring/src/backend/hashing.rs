//! Expand-and-reduce hashing primitive shared by the scalar and group hashes.

use sha2::{Digest, Sha256};

/// Produces `out_len` pseudorandom bytes from the given parts.
///
/// Each part is length-framed before hashing, so distinct part lists can
/// never collide by concatenation. Output blocks are SHA-256 in counter
/// mode over the framed input.
pub(crate) fn expand_message(out_len: usize, parts: &[&[u8]]) -> Vec<u8> {
    let mut framed = Vec::new();
    for part in parts {
        framed.extend_from_slice(&(part.len() as u64).to_be_bytes());
        framed.extend_from_slice(part);
    }
    let mut out = Vec::with_capacity(out_len + 32);
    let mut block: u32 = 0;
    while out.len() < out_len {
        let mut hasher = Sha256::new();
        hasher.update(block.to_be_bytes());
        hasher.update(&framed);
        out.extend_from_slice(&hasher.finalize());
        block += 1;
    }
    out.truncate(out_len);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_framed() {
        let a = expand_message(48, &[b"ab", b"c"]);
        let b = expand_message(48, &[b"ab", b"c"]);
        assert_eq!(a, b);
        // framing distinguishes ("ab","c") from ("a","bc") and ("abc")
        assert_ne!(a, expand_message(48, &[b"a", b"bc"]));
        assert_ne!(a, expand_message(48, &[b"abc"]));
    }

    #[test]
    fn extension_is_prefix_consistent() {
        let short = expand_message(16, &[b"seed"]);
        let long = expand_message(64, &[b"seed"]);
        assert_eq!(&long[..16], &short[..]);
    }
}
