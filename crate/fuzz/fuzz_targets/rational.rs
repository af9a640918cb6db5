#![no_main]

use libfuzzer_sys::fuzz_target;
use tldkit::poly::RationalValue;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<RationalValue>() {
        assert_eq!(r.to_string().parse::<RationalValue>().unwrap(), r);
    }
});
