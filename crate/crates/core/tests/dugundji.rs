use mnm_core::dugundji::{
    alpha, beta, build_delta, build_gamma, falsify, scan_matrices, substitution_lemma, t45md_agreement, ScanOptions,
};
use mnm_core::nmatrix::SystemId;
use mnm_core::syntax::{parse, Formula};
use mnm_core::values::TruthValue::*;

// Size-2 models per system, confirmed by a separate enumeration.
const MODELS: [(SystemId, u64); 12] = [
    (SystemId::Tm, 6),
    (SystemId::T4m, 6),
    (SystemId::T45m, 2),
    (SystemId::Dm, 8),
    (SystemId::D4m, 8),
    (SystemId::D45m, 4),
    (SystemId::Km, 10),
    (SystemId::K4m, 10),
    (SystemId::K45m, 6),
    (SystemId::Tmd, 4),
    (SystemId::T4md, 4),
    (SystemId::T45md, 2),
];

#[test]
fn pigeonhole_formulas_escape_the_nmatrices() {
    for n in 3..=6 {
        let d = build_delta(n).unwrap();
        let w = falsify(SystemId::T45m, &d.formula, 1).expect("delta falsified");
        for j in 1..=n {
            assert_eq!(w.leaf(&format!("p{j}")), Some(CPlus));
        }
        assert_eq!(w.get(&alpha(n)), Some(TPlus));
        for i in 1..=n {
            assert_eq!(w.get(&beta(n, i)), Some(CPlus));
        }
        for id in [SystemId::Tmd, SystemId::T4md] {
            let g = build_gamma(n).unwrap();
            let w = falsify(id, &g.formula, 2).expect("gamma falsified");
            assert!((1..=n).all(|j| w.leaf(&format!("p{j}")) == Some(CPlus)));
            assert_eq!(w.get(&Formula::boxed(alpha(n))), Some(FMinus));
        }
    }
}

#[test]
fn exhaustive_size_two_scans() {
    let d3 = build_delta(3).unwrap().formula;
    let g3 = build_gamma(3).unwrap().formula;
    for (id, models) in MODELS {
        for f in [&d3, &g3] {
            let r = scan_matrices(2, id, f, &ScanOptions::default()).unwrap();
            assert_eq!((r.candidates, r.classes, r.models), (2048, 1024, models), "{id}");
            assert!(r.violations.is_empty(), "{id}");
        }
    }
}

#[test]
fn repeated_atoms_collapse_alpha_onto_beta() {
    for (id, models) in MODELS {
        let r = substitution_lemma(id, 3).unwrap();
        assert_eq!(r.models, models);
        assert_eq!(r.checked, 18 * models);
        assert_eq!(r.failures, 0);
    }
}

#[test]
fn deterministic_t45md() {
    assert!(t45md_agreement(200, 9).disagreements.is_empty());
    assert!(falsify(SystemId::T45md, &parse("[]p -> [][]p").unwrap(), 1).is_none());
}
