//! Decodes arbitrary JSON as a matrix factorization. Factors and indices
//! must round-trip; the trace is not part of the decoded form.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_wh_factorization, encode_wh_factorization};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(f) = decode_wh_factorization(&v) {
        let back = decode_wh_factorization(&encode_wh_factorization(&f)).unwrap();
        assert_eq!((back.g_minus, back.partial_indices, back.g_plus), (f.g_minus, f.partial_indices, f.g_plus));
    }
});
