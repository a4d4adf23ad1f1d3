//! Decodes arbitrary JSON as rational functions; anything accepted must survive a
//! round trip through the encoder unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_rational_function, encode_rational_function};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(x) = decode_rational_function(&v) {
        assert_eq!(decode_rational_function(&encode_rational_function(&x)).unwrap(), x);
    }
});
