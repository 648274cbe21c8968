#![no_main]

use dichroma::decomposition::{bag_chain_failure, nice_set_failure, BagChain, BagMode, NiceSetCertificate};
use dichroma::solver::{verify_dicoloring, Dicoloring};
use dichroma::{Budget, Digraph};
use libfuzzer_sys::fuzz_target;

fn host() -> Digraph {
    let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
    arcs.extend((0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
    arcs.push((6, 0));
    Digraph::from_arcs(7, arcs).unwrap()
}

fuzz_target!(|data: &[u8]| {
    let d = host();
    let budget = Budget::nodes(100_000);
    if let Ok(cert) = serde_json::from_slice::<NiceSetCertificate>(data) {
        let _ = nice_set_failure(&d, &cert);
    }
    if let Ok(chain) = serde_json::from_slice::<BagChain>(data) {
        let _ = bag_chain_failure(&d, &chain, BagMode::Exact, &budget);
        let _ = bag_chain_failure(&d, &chain, BagMode::AtLeast, &budget);
    }
    if let Ok(f) = serde_json::from_slice::<Dicoloring>(data) {
        let _ = verify_dicoloring(&d, &f);
    }
});
