//! Decodes arbitrary JSON as determinant factorizations `γ₋ e_κ γ₊`; anything accepted must survive a
//! round trip through the encoder unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_ap_det, encode_ap_det};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(x) = decode_ap_det(&v) {
        assert_eq!(decode_ap_det(&encode_ap_det(&x)).unwrap(), x);
    }
});
