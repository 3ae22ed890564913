//! Runs every checked-in fuzz seed through the same checks as the fuzz
//! targets, on stable.

use std::fs;
use std::path::PathBuf;

use mvchroma::reduction::{normalize, parse_nae_formula, write_nae_formula, NormalizeOutcome};
use mvchroma::{parse_coloring, parse_graph, write_coloring, write_graph};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let bytes = fs::read(&path).unwrap();
            (path.file_name().unwrap().to_string_lossy().into_owned(), String::from_utf8_lossy(&bytes).into_owned())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn graph_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("parse_graph") {
        if let Ok(g) = parse_graph(&text) {
            accepted += 1;
            let written = write_graph(&g);
            assert_eq!(write_graph(&parse_graph(&written).unwrap()), written, "{name}");
        }
    }
    assert!(accepted >= 1);
}

#[test]
fn coloring_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("parse_coloring") {
        if let Ok(loaded) = parse_coloring(&text) {
            accepted += 1;
            let again = parse_coloring(&write_coloring(&loaded.coloring)).unwrap();
            assert_eq!(again.coloring, loaded.coloring, "{name}");
        }
    }
    assert!(accepted >= 1);
}

#[test]
fn nae_formula_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("parse_nae_formula") {
        if let Ok(f) = parse_nae_formula(&text) {
            accepted += 1;
            assert_eq!(parse_nae_formula(&write_nae_formula(&f)).unwrap(), f, "{name}");
            if let NormalizeOutcome::Normalized(nf) = normalize(&f) {
                assert!(nf.is_normalized(), "{name}");
            }
        }
    }
    assert!(accepted >= 1);
}
