//! Decodes arbitrary JSON as scalar factorizations; anything accepted must survive a
//! round trip through the encoder unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_scalar_wh, encode_scalar_wh};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(x) = decode_scalar_wh(&v) {
        assert_eq!(decode_scalar_wh(&encode_scalar_wh(&x)).unwrap(), x);
    }
});
