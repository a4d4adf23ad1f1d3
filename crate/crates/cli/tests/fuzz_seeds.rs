//! Replays the checked-in fuzz corpus through the same checks as the fuzz
//! targets, so regressions show up under `cargo test`.

use std::path::{Path, PathBuf};

use serde_json::Value;
use whfactor_cli::{execute, render, CommandName, Format, Mode, Settings};
use whfactor_core::codec::*;
use whfactor_core::rings::Half;

fn corpus(target: &str) -> Vec<(PathBuf, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds for {target}");
    files.into_iter().map(|p| {
        let bytes = std::fs::read(&p).unwrap();
        (p, bytes)
    }).collect()
}

fn json(bytes: &[u8]) -> Option<Value> {
    serde_json::from_slice(bytes).ok()
}

/// Decodes every seed; accepted values must round-trip. Returns how many
/// seeds decoded.
fn round_trip<T: PartialEq + std::fmt::Debug>(
    target: &str,
    decode: impl Fn(&Value) -> whfactor_core::Result<T>,
    encode: impl Fn(&T) -> Value,
) -> usize {
    let mut accepted = 0;
    for (path, bytes) in corpus(target) {
        let Some(v) = json(&bytes) else { continue };
        if let Ok(x) = decode(&v) {
            assert_eq!(decode(&encode(&x)).unwrap(), x, "{}", path.display());
            accepted += 1;
        }
    }
    accepted
}

#[test]
fn ring_decoders() {
    assert!(round_trip("decode_gaussian", decode_gaussian, encode_gaussian) > 0);
    assert!(round_trip("decode_polynomial", decode_polynomial, encode_polynomial) > 0);
    assert!(round_trip("decode_rational_function", decode_rational_function, encode_rational_function) > 0);
    assert!(round_trip("decode_factored", decode_factored, encode_factored) > 0);
    assert!(round_trip("decode_appoly", decode_appoly, encode_appoly) > 0);
    assert!(round_trip("decode_mixed", decode_mixed, encode_mixed) > 0);
    assert!(round_trip("decode_ap_det", decode_ap_det, encode_ap_det) > 0);
    assert!(round_trip("decode_scalar_wh", decode_scalar_wh, encode_scalar_wh) > 0);
    let matrices = round_trip(
        "decode_matrix",
        |v| decode_matrix(v, decode_rational_function),
        |m| encode_matrix(m, encode_rational_function),
    );
    assert!(matrices > 0);
}

#[test]
fn factorization_decoders() {
    let mut accepted = 0;
    for (path, bytes) in corpus("decode_wh_factorization") {
        let Some(v) = json(&bytes) else { continue };
        if let Ok(f) = decode_wh_factorization(&v) {
            let back = decode_wh_factorization(&encode_wh_factorization(&f)).unwrap();
            assert_eq!((back.g_minus, back.partial_indices, back.g_plus), (f.g_minus, f.partial_indices, f.g_plus), "{}", path.display());
            accepted += 1;
        }
    }
    assert!(accepted > 0);
    assert!(round_trip("decode_ap_factorization", decode_ap_factorization, encode_ap_factorization) > 0);
}

#[test]
fn cli_documents() {
    let mut ran = 0;
    for (path, bytes) in corpus("cli_execute") {
        let [cmd, flags, body @ ..] = &bytes[..] else { continue };
        let Some(doc) = json(body) else { continue };
        let name = CommandName::ALL[*cmd as usize % CommandName::ALL.len()];
        let settings = Settings {
            mode: [None, Some(Mode::Row), Some(Mode::Col), Some(Mode::Rh)][(*flags & 3) as usize],
            half: if flags & 4 == 0 { Half::Plus } else { Half::Minus },
            tolerance: 1e-9,
            grid: 256,
            omitted: None,
        };
        if let Ok(out) = execute(name, &doc, &settings) {
            assert!(!render(&out, Format::Text).is_empty(), "{}", path.display());
            render(&out, Format::Json);
            ran += 1;
        }
    }
    assert!(ran > 0);
}
