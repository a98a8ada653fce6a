#![no_main]

use kfact::{least_entries, least_entries_inverse, KFactorization};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = KFactorization::from_json(s) {
        assert_eq!(KFactorization::from_json(&f.to_json()).as_ref(), Ok(&f));
        assert_eq!(least_entries_inverse(&least_entries(&f)).as_ref(), Ok(&f));
    }
});
