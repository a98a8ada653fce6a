#![no_main]

use kfact::{jcdal, jcdal_inverse, KFactorization};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = KFactorization::from_text(s) {
        assert_eq!(KFactorization::from_text(&f.to_text()).as_ref(), Ok(&f));
        let forest = jcdal(&f).expect("accepted factorization maps to a forest");
        assert_eq!(jcdal_inverse(&forest).as_ref(), Ok(&f));
    }
});
