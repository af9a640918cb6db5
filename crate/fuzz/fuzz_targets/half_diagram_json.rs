#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::halfdiag::HalfDiagram;

fuzz_target!(|data: &[u8]| {
    if let Ok(d) = serde_json::from_slice::<HalfDiagram>(data) {
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<HalfDiagram>(&s).unwrap(), d);
        let _ = d.assoc_seq();
    }
});
