#![no_main]

use kfact::KForest;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(forest) = KForest::from_json(s) {
        assert_eq!(KForest::from_json(&forest.to_json()).as_ref(), Ok(&forest));
        let _ = forest.stats();
    }
});
