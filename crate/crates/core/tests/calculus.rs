use std::fs;
use std::path::PathBuf;

use mnm_core::calculus::{check_derivation, corpus, deduction_transform, parse_derivation};
use mnm_core::nmatrix::builtin;
use mnm_core::semantics::decide_consequence;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Set `MNM_BLESS=1` to rewrite the files from the builders.
#[test]
fn corpus_files_match_builders() {
    let bless = std::env::var("MNM_BLESS").is_ok_and(|v| v == "1");
    for e in corpus() {
        let path = corpus_dir().join(format!("{}.proof", e.name));
        let text = e.derivation.to_string();
        if bless {
            fs::write(&path, &text).unwrap();
        }
        let on_disk = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(on_disk, text, "{} is stale; rerun with MNM_BLESS=1", path.display());
        assert_eq!(parse_derivation(&on_disk).unwrap(), e.derivation);
    }
}

#[test]
fn corpus_checks_and_is_semantically_safe() {
    for e in corpus() {
        let d = &e.derivation;
        check_derivation(d.system, d).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        let nm = builtin(d.system);
        let concl = d.normal(d.conclusion().unwrap());
        let hyps: Vec<_> = d.hyps.iter().map(|h| d.normal(h)).collect();
        assert!(decide_consequence(&nm, &hyps, &concl).holds(), "{}", e.name);
    }
}

#[test]
fn discharging_every_hypothesis_keeps_derivations_valid() {
    for e in corpus() {
        let mut d = e.derivation.clone();
        while let Some(h) = d.hyps.last().cloned() {
            d = deduction_transform(&d, &h).unwrap();
            check_derivation(d.system, &d).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }
}
