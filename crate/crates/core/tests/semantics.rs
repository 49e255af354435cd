use mnm_core::calculus::axiom;
use mnm_core::dugundji::classical_valid;
use mnm_core::nmatrix::{builtin, is_submultialgebra, SystemId};
use mnm_core::random::{atom_names, random_formula, random_propositional, random_query, rng};
use mnm_core::semantics::{
    audit_axioms, audit_system, brute_force_consequence, check_witness, decide_consequence, decide_valid, decide_with,
    verify_lemma_suite, SearchOptions, Verdict,
};
use mnm_core::syntax::{parse, render, render_sugared, Formula};
use mnm_core::values::TruthValue;
use proptest::prelude::*;

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn system() -> impl Strategy<Value = SystemId> {
    proptest::sample::select(SystemId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_round_trips(seed in any::<u64>()) {
        let g = random_formula(&mut rng(seed), &atom_names(3), 6);
        prop_assert_eq!(parse(&render(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse(&render_sugared(&g)).unwrap(), g);
    }

    #[test]
    fn engine_agrees_with_enumeration(seed in any::<u64>(), id in system()) {
        let (prem, c) = random_query(&mut rng(seed), &atom_names(3), 5, 2, 9);
        let nm = builtin(id);
        let fast = decide_consequence(&nm, &prem, &c);
        let slow = brute_force_consequence(&nm, &prem, &c).unwrap();
        prop_assert_eq!(fast.holds(), slow.holds());
        if let Verdict::Fails(w) = &fast {
            prop_assert!(check_witness(&nm, &prem, &c, w).is_ok());
        }
    }

    #[test]
    fn extra_premises_keep_consequences(seed in any::<u64>(), id in system()) {
        let mut r = rng(seed);
        let atoms = atom_names(3);
        let (mut prem, c) = random_query(&mut r, &atoms, 4, 2, 14);
        let nm = builtin(id);
        if decide_consequence(&nm, &prem, &c).holds() {
            prem.push(random_formula(&mut r, &atoms, 3));
            prop_assert!(decide_consequence(&nm, &prem, &c).holds());
        }
    }

    #[test]
    fn propositional_fragment_is_classical(seed in any::<u64>(), id in system()) {
        let g = random_propositional(&mut rng(seed), &atom_names(3), 5);
        prop_assert_eq!(decide_valid(&builtin(id), &g).holds(), classical_valid(&g));
    }

    #[test]
    fn witnesses_transfer_to_larger_algebras(seed in any::<u64>()) {
        let (prem, c) = random_query(&mut rng(seed), &atom_names(2), 4, 2, 14);
        for small in SystemId::ALL {
            let a = builtin(small);
            let Verdict::Fails(w) = decide_consequence(&a, &prem, &c) else { continue };
            for big in SystemId::ALL {
                let b = builtin(big);
                if is_submultialgebra(&a.algebra, &b.algebra) && a.designated.is_subset(b.designated) {
                    prop_assert!(check_witness(&b, &prem, &c, &w).is_ok(), "{} -> {}", small, big);
                }
            }
        }
    }

    #[test]
    fn job_count_does_not_change_the_outcome(seed in any::<u64>()) {
        let (prem, c) = random_query(&mut rng(seed), &atom_names(3), 5, 2, 16);
        let km = builtin(SystemId::Km);
        let one = decide_with(&km, &prem, &c, &SearchOptions::default());
        let three = decide_with(&km, &prem, &c, &SearchOptions { jobs: 3, ..Default::default() });
        prop_assert_eq!(one, three);
    }
}

#[test]
fn chains_of_inclusions() {
    // Fewer values means fewer countermodels: the 4-valued Tm sits inside
    // the 6-valued Dm, which sits inside the 8-valued Km.
    let (tm, dm, km) = (builtin(SystemId::Tm), builtin(SystemId::Dm), builtin(SystemId::Km));
    assert!(is_submultialgebra(&tm.algebra, &dm.algebra));
    assert!(is_submultialgebra(&dm.algebra, &km.algebra));
    use SystemId::*;
    for chain in [[T4m, D4m, K4m], [T45m, D45m, K45m], [Tmd, Tm, Km], [T4md, T4m, K4m], [T45md, T45m, K45m]] {
        for pair in chain.windows(2) {
            let (a, b) = (builtin(pair[0]), builtin(pair[1]));
            assert!(is_submultialgebra(&a.algebra, &b.algebra), "{} in {}", pair[0], pair[1]);
        }
    }
}

#[test]
fn non_theorems() {
    for id in [SystemId::Km, SystemId::K4m, SystemId::K45m, SystemId::Dm, SystemId::D4m, SystemId::D45m] {
        assert!(!decide_valid(&builtin(id), &f("[]p -> p")).holds(), "{id}");
    }
    for id in [SystemId::Km, SystemId::K4m, SystemId::K45m] {
        assert!(!decide_valid(&builtin(id), &f("[]p -> <>p")).holds(), "{id}");
    }
    assert!(decide_valid(&builtin(SystemId::Dm), &f("[]p -> <>p")).holds());
}

#[test]
fn every_system_is_sound_for_its_axioms() {
    for id in SystemId::ALL {
        let report = audit_system(id);
        assert!(report.sound(), "{id}");
    }
    let k = audit_axioms(&builtin(SystemId::Km), &[axiom("K").unwrap().clone()]);
    let k = k.entry("K").unwrap();
    assert!(!k.holds);
    let w = k.witness.as_ref().unwrap();
    assert_eq!((w.leaf("a"), w.leaf("b")), (Some(TruthValue::IPlus), Some(TruthValue::CPlus)));
    assert!(verify_lemma_suite(SystemId::Km).all_hold());
}
