#![no_main]

use lextri::format::parse_rationals;
use lextri::rational::format_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(values) = parse_rationals(text) {
            let printed: Vec<String> = values.iter().map(format_rational).collect();
            assert_eq!(
                parse_rationals(&printed.join("\n")).expect("reparse"),
                values
            );
        }
    }
});
