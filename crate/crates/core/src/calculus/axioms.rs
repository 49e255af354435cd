//! Axiom schemas and the calculi built from them.

use std::sync::OnceLock;

use serde::Serialize;

use crate::nmatrix::SystemId;
use crate::syntax::{parse, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomSchema {
    pub name: &'static str,
    pub schema: Formula,
}

/// Every schema by name, in parser syntax. `A`, `B`, `C` are metavariables.
const CATALOGUE: &[(&str, &str)] = &[
    ("A1", "A -> (B -> A)"),
    ("A2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
    ("A3", "(~B -> ~A) -> ((~B -> A) -> B)"),
    ("K", "[](A -> B) -> ([]A -> []B)"),
    ("K1", "[](A -> B) -> (<>A -> <>B)"),
    ("K2", "<>(A -> B) -> ([]A -> <>B)"),
    ("M1", "~<>A -> [](A -> B)"),
    ("M2", "[]B -> [](A -> B)"),
    ("M3", "<>B -> <>(A -> B)"),
    ("M4", "<>~A -> <>(A -> B)"),
    ("T", "[]A -> A"),
    ("D", "[]A -> <>A"),
    ("4", "[]A -> [][]A"),
    ("5", "<>[]A -> []A"),
    ("DN1", "[]A -> []~~A"),
    ("DN2", "[]~~A -> []A"),
    ("K'", "<>A -> ([](A -> B) -> ([]A -> []B))"),
    ("K1'", "<>~B -> ([](A -> B) -> (<>A -> <>B))"),
    ("K2'", "<>A -> (<>(A -> B) -> ([]A -> <>B))"),
    ("M3'", "(<>A | <>~A) -> (<>B -> <>(A -> B))"),
    ("M4'", "<>~B -> (<>~A -> <>(A -> B))"),
    ("I1", "([]A & []~A) -> ([](A -> B) & []~(A -> B))"),
    ("I2", "([]B & []~B) -> ([](A -> B) & []~(A -> B))"),
    ("K''", "circ A -> ([](A -> B) -> ([]A -> []B))"),
    ("K1''", "circ B -> ([](A -> B) -> (<>A -> <>B))"),
    ("K2''", "circ A -> (<>(A -> B) -> ([]A -> <>B))"),
    ("M3''", "circ A -> (<>B -> <>(A -> B))"),
    ("M4''", "circ B -> (<>~A -> <>(A -> B))"),
    ("I1'", "bullet A -> bullet (A -> B)"),
    ("I2'", "bullet B -> bullet (A -> B)"),
    ("I1''", "circ (A -> B) -> circ A"),
    ("I2''", "circ (A -> B) -> circ B"),
    ("Kdet", "[](A -> B) -> (<>A -> []B)"),
];

fn catalogue_cache() -> &'static [AxiomSchema] {
    static CACHE: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    CACHE.get_or_init(|| {
        CATALOGUE
            .iter()
            .map(|(name, src)| AxiomSchema {
                name,
                schema: parse(src).expect("catalogue schemas parse"),
            })
            .collect()
    })
}

pub fn catalogue() -> &'static [AxiomSchema] {
    catalogue_cache()
}

pub fn axiom(name: &str) -> Option<&'static AxiomSchema> {
    catalogue_cache().iter().find(|a| a.name == name)
}

fn named(names: &[&str]) -> Vec<AxiomSchema> {
    names
        .iter()
        .map(|n| axiom(n).unwrap_or_else(|| panic!("no schema named {n}")).clone())
        .collect()
}

const PC: [&str; 3] = ["A1", "A2", "A3"];

fn with_pc(rest: &[&str]) -> Vec<AxiomSchema> {
    let mut names: Vec<&str> = PC.to_vec();
    names.extend_from_slice(rest);
    named(&names)
}

/// The axioms of `id`'s calculus, in a fixed order. Modus ponens is the
/// only rule.
pub fn axioms_of(id: SystemId) -> Vec<AxiomSchema> {
    use SystemId::*;
    let tm = ["K", "K1", "K2", "M1", "M2", "M3", "M4", "T", "DN1", "DN2"];
    let dm = ["K", "K1", "K2", "M1", "M2", "M3", "M4", "D", "DN1", "DN2"];
    let km = ["K'", "K1'", "K2'", "M3'", "M4'", "I1", "I2", "M1", "M2", "DN1", "DN2"];
    let tmd = ["K", "Kdet", "K2", "M1", "M2", "M3", "M4", "T", "DN1", "DN2"];
    let extend = |base: &[&str], extra: &[&str]| {
        let mut v = base.to_vec();
        v.extend_from_slice(extra);
        with_pc(&v)
    };
    match id {
        Tm => extend(&tm, &[]),
        T4m => extend(&tm, &["4"]),
        T45m => extend(&tm, &["4", "5"]),
        Dm => extend(&dm, &[]),
        D4m => extend(&dm, &["4"]),
        D45m => extend(&dm, &["4", "5"]),
        Km => extend(&km, &[]),
        K4m => extend(&km, &["4"]),
        K45m => extend(&km, &["4", "5"]),
        Tmd => extend(&tmd, &[]),
        T4md => extend(&tmd, &["4"]),
        T45md => extend(&tmd, &["4", "5"]),
    }
}

/// The alternative calculus for Km in which the guarded axioms are stated
/// with `∘` and `•`.
pub fn km_circ_axioms() -> Vec<AxiomSchema> {
    with_pc(&["K''", "K1''", "K2''", "M3''", "M4''", "I1'", "I2'", "M1", "M2", "DN1", "DN2"])
}

/// The two schemas equivalent over Km to the `•`-propagation axioms.
pub fn km_circ_retro_axioms() -> Vec<AxiomSchema> {
    named(&["I1''", "I2''"])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(id: SystemId, name: &str) -> bool {
        axioms_of(id).iter().any(|a| a.name == name)
    }

    #[test]
    fn system_membership() {
        assert!(has(SystemId::Tm, "T"));
        assert!(!has(SystemId::Km, "K"));
        assert!(has(SystemId::Km, "K'"));
        assert!(has(SystemId::T45md, "Kdet") && has(SystemId::T45md, "5"));
        assert!(!has(SystemId::Tmd, "K1"));
        assert!(has(SystemId::Dm, "D") && !has(SystemId::Dm, "T"));
        assert_eq!(axioms_of(SystemId::Km).len(), 14);
        assert_eq!(axioms_of(SystemId::K45m).len(), 16);
    }

    #[test]
    fn catalogue_parses_and_is_unique() {
        let names: Vec<_> = catalogue().iter().map(|a| a.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert_eq!(axiom("K").unwrap().schema.to_string(), "[](A -> B) -> []A -> []B");
    }
}
