#![no_main]

use lextri::format::parse_script;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(script) = parse_script(text, usize::from(n)) {
            // Printing and re-parsing must give the same script back.
            let again = parse_script(&script.to_string(), usize::from(n)).expect("reparse");
            assert_eq!(script, again);
        }
    }
});
