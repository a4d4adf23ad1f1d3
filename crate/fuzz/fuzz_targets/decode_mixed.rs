//! Decodes arbitrary JSON as mixed almost periodic elements with rational coefficients; anything accepted must survive a
//! round trip through the encoder unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_mixed, encode_mixed};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(x) = decode_mixed(&v) {
        assert_eq!(decode_mixed(&encode_mixed(&x)).unwrap(), x);
    }
});
