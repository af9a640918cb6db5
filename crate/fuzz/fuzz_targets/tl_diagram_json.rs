#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::diagram::TLDiagram;

fuzz_target!(|data: &[u8]| {
    if let Ok(d) = serde_json::from_slice::<TLDiagram>(data) {
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<TLDiagram>(&s).unwrap(), d);
        let prod = d.multiply(&d).unwrap();
        assert!(prod.shape().is_basis());
    }
});
