#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::poly::Poly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<Poly>() {
        let back: Poly = p.to_string().parse().expect("canonical text parses");
        assert_eq!(back, p);
    }
});
