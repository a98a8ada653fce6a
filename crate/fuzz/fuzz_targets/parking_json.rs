#![no_main]

use kfact::ParkingFunction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = ParkingFunction::from_json(s) {
        assert_eq!(ParkingFunction::from_json(&p.to_json()).as_ref(), Ok(&p));
        let _ = p.disp();
    }
});
