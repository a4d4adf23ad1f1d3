//! Decodes arbitrary JSON as an almost periodic factorization and checks the
//! round trip of factors and indices.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_ap_factorization, encode_ap_factorization};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(f) = decode_ap_factorization(&v) {
        let back = decode_ap_factorization(&encode_ap_factorization(&f)).unwrap();
        assert_eq!(back, f);
    }
});
