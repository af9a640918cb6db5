#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::cellular::CellLabel;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = s.parse::<CellLabel>() {
        assert_eq!(c.to_string().parse::<CellLabel>().unwrap(), c);
        // small ranks only; the basis grows like a binomial coefficient
        for n in 0..8 {
            let _ = c.basis(n);
        }
    }
});
