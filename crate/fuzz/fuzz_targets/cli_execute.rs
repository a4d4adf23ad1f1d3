//! Runs a CLI command on an arbitrary job document. The first byte picks the
//! command, the second the mode and half-plane; the rest is the JSON body.
//! Every outcome must be a value or a typed error, and values must render.

#![no_main]

use libfuzzer_sys::fuzz_target;
use whfactor_cli::{execute, render, CommandName, Format, Mode, Settings};
use whfactor_core::rings::Half;

fuzz_target!(|data: &[u8]| {
    let [cmd, flags, body @ ..] = data else {
        return;
    };
    let Ok(doc) = serde_json::from_slice::<serde_json::Value>(body) else {
        return;
    };
    let name = CommandName::ALL[*cmd as usize % CommandName::ALL.len()];
    let settings = Settings {
        mode: [None, Some(Mode::Row), Some(Mode::Col), Some(Mode::Rh)][(*flags & 3) as usize],
        half: if flags & 4 == 0 { Half::Plus } else { Half::Minus },
        tolerance: 1e-9,
        grid: 256,
        omitted: None,
    };
    if let Ok(out) = execute(name, &doc, &settings) {
        render(&out, Format::Json);
        render(&out, Format::Text);
    }
});
