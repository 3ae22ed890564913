#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(g) = mvchroma::parse_graph(s) {
        let text = mvchroma::write_graph(&g);
        let again = mvchroma::parse_graph(&text).expect("written graphs parse");
        assert_eq!(mvchroma::write_graph(&again), text);
    }
});
