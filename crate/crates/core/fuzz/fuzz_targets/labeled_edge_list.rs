#![no_main]

use dichroma::constructions::LabeledConstruction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(c) = LabeledConstruction::from_edge_list(text) else {
        return;
    };
    let again = LabeledConstruction::from_edge_list(&c.to_edge_list()).expect("written constructions parse");
    assert_eq!(again, c);
    if c.graph.n() <= 64 {
        let _ = c.matches_rules();
    }
});
