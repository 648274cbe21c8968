#![no_main]

use dichroma::digraph::io::{parse_edge_list_document, write_edge_list_with_comments};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = parse_edge_list_document(text) else {
        return;
    };
    // Writing and reparsing must reproduce the same digraph and comments.
    let again = parse_edge_list_document(&write_edge_list_with_comments(&doc.graph, &doc.comments))
        .expect("written edge lists parse");
    assert_eq!(again.graph, doc.graph);
    assert_eq!(again.comments, doc.comments);
});
