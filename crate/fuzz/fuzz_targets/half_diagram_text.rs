#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::halfdiag::HalfDiagram;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = s.parse::<HalfDiagram>() {
        assert_eq!(d.to_string().parse::<HalfDiagram>().unwrap(), d);
    }
});
