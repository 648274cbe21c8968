#![no_main]

use dichroma::patterns::{build, PatternTag};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(tag) = text.parse::<PatternTag>() else {
        return;
    };
    let shown = tag.to_string();
    assert_eq!(shown.parse::<PatternTag>().expect("displayed tags parse"), tag);
    if let Ok(p) = build(&tag) {
        assert_eq!(Some(p.n()), tag.vertex_count());
    }
});
