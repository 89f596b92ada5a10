#![no_main]

use equisig::algebra::{connect_sum, mirror};
use equisig::diagram::load;
use equisig::invariant::sigma_tilde;
use libfuzzer_sys::fuzz_target;

// Two diagrams separated by a NUL byte.
fuzz_target!(|data: &[u8]| {
    let Some(split) = data.iter().position(|&b| b == 0) else {
        return;
    };
    let (Ok(a), Ok(b)) = (
        std::str::from_utf8(&data[..split]),
        std::str::from_utf8(&data[split + 1..]),
    ) else {
        return;
    };
    let (Ok(d1), Ok(d2)) = (load(a), load(b)) else {
        return;
    };
    if d1.n() + d2.n() > 64 {
        return;
    }
    let (Ok(s1), Ok(s2)) = (sigma_tilde(&d1), sigma_tilde(&d2)) else {
        return;
    };
    let sum = connect_sum(&d1, &mirror(&d2)).expect("admissible summands connect");
    let s = sigma_tilde(&sum).expect("sum is admissible");
    assert_eq!(s.sigma_tilde, s1.sigma_tilde - s2.sigma_tilde);
});
