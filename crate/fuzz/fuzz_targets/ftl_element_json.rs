#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::forked::{ftl_multiply, FtlElement};

fuzz_target!(|data: &[u8]| {
    if let Ok(e) = serde_json::from_slice::<FtlElement>(data) {
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<FtlElement>(&s).unwrap(), e);
        let _ = ftl_multiply(&e, &e).unwrap();
    }
});
