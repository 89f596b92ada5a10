#![no_main]

use equisig::diagram::{load, serialize};
use equisig::invariant::analyze;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(d) = load(text) else {
        return;
    };
    // anything that validates must survive a round trip
    let again = load(&serialize(&d)).expect("serialized diagram reloads");
    assert_eq!(serialize(&again), serialize(&d));
    if d.n() <= 64 {
        let _ = analyze(&d);
    }
});
