#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::diagram::{evaluate_word, parse_word};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(word) = parse_word(s) {
        if let Ok(d) = evaluate_word(usize::from(n % 12), &word) {
            assert!(d.shape().is_basis());
        }
    }
});
