//! Replays the checked-in fuzz seeds through the same round trips the fuzz
//! targets assert, plus inputs that once looked risky.

use std::fs;
use std::path::PathBuf;

use dichroma::constructions::LabeledConstruction;
use dichroma::decomposition::{bag_chain_failure, nice_set_failure, BagChain, BagMode, NiceSetCertificate};
use dichroma::digraph::io::{parse_edge_list_document, write_edge_list_with_comments};
use dichroma::patterns::{build, PatternTag};
use dichroma::solver::{verify_dicoloring, Dicoloring};
use dichroma::{Budget, Digraph};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut paths: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.into_iter().map(|p| fs::read(p).unwrap()).collect()
}

fn edge_list(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else {
        return false;
    };
    let Ok(doc) = parse_edge_list_document(text) else {
        return false;
    };
    let again = parse_edge_list_document(&write_edge_list_with_comments(&doc.graph, &doc.comments)).unwrap();
    assert_eq!(again.graph, doc.graph);
    assert_eq!(again.comments, doc.comments);
    true
}

fn labeled(data: &[u8]) -> bool {
    let Ok(c) = LabeledConstruction::from_edge_list(std::str::from_utf8(data).unwrap()) else {
        return false;
    };
    assert_eq!(LabeledConstruction::from_edge_list(&c.to_edge_list()).unwrap(), c);
    c.matches_rules()
}

fn tag(data: &[u8]) -> bool {
    let Ok(tag) = std::str::from_utf8(data).unwrap().parse::<PatternTag>() else {
        return false;
    };
    assert_eq!(tag.to_string().parse::<PatternTag>().unwrap(), tag);
    if let Ok(p) = build(&tag) {
        assert_eq!(Some(p.n()), tag.vertex_count());
    }
    true
}

#[test]
fn edge_list_seeds() {
    let parsed = seeds("edge_list").iter().filter(|s| edge_list(s)).count();
    assert!(parsed >= 5);
    for bad in [
        "",
        "3",
        "2 1\n0 0\n",
        "2 1\n0 5\n",
        "1 1\n",
        "99999999 0\n",
        "3 1\n0 1 2\n",
    ] {
        assert!(!edge_list(bad.as_bytes()), "{bad:?}");
    }
}

#[test]
fn labeled_edge_list_seeds() {
    for s in seeds("labeled_edge_list") {
        assert!(labeled(&s));
    }
    let f7 = String::from_utf8(seeds("labeled_edge_list").remove(1)).unwrap();
    assert!(!labeled(f7.replace("# params k=7", "# params k=6").as_bytes()));
    assert!(!labeled(f7.replacen("# label 0", "# label 99", 1).as_bytes()));
}

#[test]
fn pattern_tag_seeds() {
    for s in seeds("pattern_tag") {
        assert!(tag(&s), "{}", String::from_utf8_lossy(&s));
    }
    for odd in [
        "tt:0",
        "empty:0",
        "plus:0,tt:0",
        "path:",
        "delta:0,0,0",
        "join:(),1",
        "(((",
        "broom:r=0",
    ] {
        tag(odd.as_bytes());
    }
    assert!(!tag("tt:99999999999999999999999".as_bytes()));
    assert!(build(&"join:200,200".parse().unwrap()).is_err());
}

#[test]
fn certificate_json_seeds() {
    let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
    arcs.extend((0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
    arcs.push((6, 0));
    let d = Digraph::from_arcs(7, arcs).unwrap();
    let budget = Budget::nodes(100_000);
    let mut decoded = 0;
    for s in seeds("certificate_json") {
        if let Ok(cert) = serde_json::from_slice::<NiceSetCertificate>(&s) {
            decoded += 1;
            let _ = nice_set_failure(&d, &cert);
        }
        if let Ok(chain) = serde_json::from_slice::<BagChain>(&s) {
            decoded += 1;
            assert_eq!(bag_chain_failure(&d, &chain, BagMode::Exact, &budget), Ok(None));
        }
        if let Ok(f) = serde_json::from_slice::<Dicoloring>(&s) {
            decoded += 1;
            assert_eq!(verify_dicoloring(&d, &f), Ok(true));
        }
    }
    assert_eq!(decoded, 4);
}
