#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(loaded) = mvchroma::parse_coloring(s) {
        let text = mvchroma::write_coloring(&loaded.coloring);
        let again = mvchroma::parse_coloring(&text).expect("written colorings parse");
        assert_eq!(again.coloring, loaded.coloring);
    }
});
