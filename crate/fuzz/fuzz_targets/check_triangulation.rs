#![no_main]

//! A points file and a cell file separated by a `---` line, as fed to
//! `lextri check`. Validation runs only on small inputs.

use lextri::format::{parse_cells, parse_points};
use lextri::subdivide::{validate, Subdivision};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((points, cells)) = text.split_once("\n---\n") else {
        return;
    };
    let Ok(ps) = parse_points(points) else {
        return;
    };
    if ps.len() > 8 || ps.dim() > 3 {
        return;
    }
    if let Ok(cells) = parse_cells(cells, ps.len()) {
        if cells.len() <= 16 {
            let _ = validate(&ps, &Subdivision::from_cells(cells));
        }
    }
});
