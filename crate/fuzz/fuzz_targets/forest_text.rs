#![no_main]

use kfact::{jcdal, jcdal_inverse, KForest};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (k, s) = input;
    if let Ok(forest) = KForest::from_text(s, usize::from(k % 8)) {
        assert_eq!(
            KForest::from_text(&forest.to_text(), forest.k()).as_ref(),
            Ok(&forest)
        );
        let f = jcdal_inverse(&forest).expect("every forest has a preimage");
        assert_eq!(jcdal(&f).as_ref(), Ok(&forest));
    }
});
