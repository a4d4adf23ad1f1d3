//! Decodes arbitrary JSON as a matrix of rational functions and checks the
//! round trip and the shape bounds.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_core::codec::{decode_matrix, decode_rational_function, encode_matrix, encode_rational_function, LIMITS};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(m) = decode_matrix(&v, decode_rational_function) {
        assert!(m.rows() <= LIMITS.max_dim && m.cols() <= LIMITS.max_dim);
        let back = decode_matrix(&encode_matrix(&m, encode_rational_function), decode_rational_function).unwrap();
        assert_eq!(back, m);
    }
});
