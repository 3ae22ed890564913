#![no_main]
use libfuzzer_sys::fuzz_target;
use mvchroma::reduction::{normalize, parse_nae_formula, write_nae_formula, NormalizeOutcome};

fuzz_target!(|s: &str| {
    if let Ok(f) = parse_nae_formula(s) {
        let again = parse_nae_formula(&write_nae_formula(&f)).expect("written formulas parse");
        assert_eq!(again, f);
        if let NormalizeOutcome::Normalized(nf) = normalize(&f) {
            assert!(nf.is_normalized());
        }
    }
});
