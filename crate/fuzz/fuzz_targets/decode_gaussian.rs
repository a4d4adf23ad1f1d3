//! Decodes arbitrary JSON as Gaussian rationals; anything accepted must survive a
//! round trip through the encoder unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_gaussian, encode_gaussian};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(x) = decode_gaussian(&v) {
        assert_eq!(decode_gaussian(&encode_gaussian(&x)).unwrap(), x);
    }
});
