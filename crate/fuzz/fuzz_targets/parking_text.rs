#![no_main]

use kfact::{least_entries, least_entries_inverse, ParkingFunction};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (k, s) = input;
    if let Ok(p) = ParkingFunction::from_text(s, usize::from(k % 8)) {
        assert_eq!(
            ParkingFunction::from_text(&p.to_text(), p.k()).as_ref(),
            Ok(&p)
        );
        if p.n() > 0 {
            let f = least_entries_inverse(&p).expect("every parking function has a preimage");
            assert_eq!(least_entries(&f), p);
        }
    }
});
