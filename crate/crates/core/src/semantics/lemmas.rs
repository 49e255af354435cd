//! Semantic checks of the basic equivalences and entailments between `□`,
//! `◇` and `¬` over an Nmatrix.

use serde::Serialize;

use super::decide_consequence;
use crate::nmatrix::{builtin, SystemId};
use crate::syntax::{parse, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub label: &'static str,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub system: SystemId,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Equivalences, each checked in both directions.
const EQUIVALENCES: &[(&str, &str, &str)] = &[
    ("eq-i", "<>~A", "~[]A"),
    ("eq-ii", "[]A", "~<>~A"),
    ("eq-iii", "[]~A", "~<>A"),
    ("eq-iv", "<>A", "<>~~A"),
];

const ENTAILMENTS: &[(&str, &[&str], &str)] = &[
    ("ent-i", &["[]A", "<>A", "<>~B"], "<>~(A -> B)"),
    ("ent-ii", &["<>A", "[]~B", "<>~B"], "<>~(A -> B)"),
    ("ent-iii", &["[]A", "<>A", "[]~B"], "[]~(A -> B)"),
    ("ent-iv", &["<>A", "<>B"], "<>(A -> B)"),
    ("ent-v", &["<>~A", "<>B"], "<>(A -> B)"),
    ("ent-vi", &["<>~A", "<>~B"], "<>(A -> B)"),
];

/// Runs the suite on skeletons over `id`'s Nmatrix: fourteen consequence
/// queries in all.
pub fn verify_lemma_suite(id: SystemId) -> LemmaReport {
    let nm = builtin(id);
    let sk = |s: &str| parse(s).expect("lemma formula").skeleton();
    let mut checks = Vec::new();
    let mut run = |label: &'static str, premises: Vec<Formula>, conclusion: Formula| {
        let holds = decide_consequence(&nm, &premises, &conclusion).holds();
        checks.push(LemmaCheck {
            label,
            premises,
            conclusion,
            holds,
        });
    };
    for (label, a, b) in EQUIVALENCES {
        run(label, vec![sk(a)], sk(b));
        run(label, vec![sk(b)], sk(a));
    }
    for (label, prem, c) in ENTAILMENTS {
        run(label, prem.iter().map(|p| sk(p)).collect(), sk(c));
    }
    LemmaReport { system: id, checks }
}
