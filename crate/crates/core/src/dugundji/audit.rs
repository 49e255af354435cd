//! Conservativity over classical logic and the T45md matrix agreement check.

use serde::Serialize;

use super::matrix::Program;
use super::t45md_matrix;
use crate::nmatrix::{builtin, SystemId};
use crate::random::{atom_names, random_formula, random_propositional, rng};
use crate::semantics::decide_valid;
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub formula: Formula,
    /// Verdict of the reference side (classical logic, or the matrix).
    pub reference: bool,
    /// Verdict of the Nmatrix.
    pub nmatrix: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConservativityReport {
    pub system: SystemId,
    pub samples: usize,
    pub max_depth: usize,
    pub seed: u64,
    pub classically_valid: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Two-valued truth-table validity. Panics on modal connectives.
pub fn classical_valid(f: &Formula) -> bool {
    fn eval(f: &Formula, atoms: &[std::sync::Arc<str>], bits: u64) -> bool {
        match f {
            Formula::Atom(n) | Formula::Meta(n) => {
                let i = atoms.iter().position(|a| a == n).expect("atom listed");
                bits >> i & 1 == 1
            }
            Formula::Neg(a) => !eval(a, atoms, bits),
            Formula::Imp(a, b) => !eval(a, atoms, bits) || eval(b, atoms, bits),
            Formula::Box(_) | Formula::Dia(_) => panic!("classical_valid on a modal formula"),
        }
    }
    let mut atoms = f.atoms();
    atoms.extend(f.metavars());
    (0..1u64 << atoms.len()).all(|bits| eval(f, &atoms, bits))
}

/// Random `{¬, →}` formulas over three atoms: classical validity against
/// validity over `id`'s Nmatrix.
pub fn conservativity_check(id: SystemId, samples: usize, max_depth: usize, seed: u64) -> ConservativityReport {
    let nm = builtin(id);
    let atoms = atom_names(3);
    let mut r = rng(seed);
    let mut report = ConservativityReport {
        system: id,
        samples,
        max_depth,
        seed,
        classically_valid: 0,
        discrepancies: Vec::new(),
    };
    for _ in 0..samples {
        let f = random_propositional(&mut r, &atoms, max_depth);
        let classical = classical_valid(&f);
        let modal = decide_valid(&nm, &f).holds();
        report.classically_valid += classical as usize;
        if classical != modal {
            report.discrepancies.push(Discrepancy {
                formula: f,
                reference: classical,
                nmatrix: modal,
            });
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub samples: usize,
    pub seed: u64,
    pub valid: usize,
    pub disagreements: Vec<Discrepancy>,
}

/// Random modal formulas over three atoms: validity in the four-element
/// Łukasiewicz matrix against validity over the T45md Nmatrix.
pub fn t45md_agreement(samples: usize, seed: u64) -> AgreementReport {
    let nm = builtin(SystemId::T45md);
    let m = t45md_matrix();
    let atoms = atom_names(3);
    let mut r = rng(seed);
    let mut report = AgreementReport {
        samples,
        seed,
        valid: 0,
        disagreements: Vec::new(),
    };
    for _ in 0..samples {
        let f = random_formula(&mut r, &atoms, 5);
        let det = Program::new(&f).valid_in(&m);
        let nd = decide_valid(&nm, &f).holds();
        report.valid += det as usize;
        if det != nd {
            report.disagreements.push(Discrepancy {
                formula: f,
                reference: det,
                nmatrix: nd,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dugundji::{build_delta, validate_det};
    use crate::syntax::parse;

    #[test]
    fn classical_examples() {
        assert!(classical_valid(&parse("p -> (q -> p)").unwrap()));
        assert!(!classical_valid(&parse("~p").unwrap()));
        let km = builtin(SystemId::Km);
        assert!(decide_valid(&km, &parse("p -> (q -> p)").unwrap()).holds());
        assert!(!decide_valid(&km, &parse("~p").unwrap()).holds());
    }

    #[test]
    fn small_runs_agree() {
        let r = conservativity_check(SystemId::Km, 100, 6, 1);
        assert!(r.discrepancies.is_empty());
        assert!(r.classically_valid > 0);
        let a = t45md_agreement(100, 1);
        assert!(a.disagreements.is_empty());
        let m = t45md_matrix();
        assert!(validate_det(&m, &parse("[]p -> [][]p").unwrap()));
        assert!(decide_valid(&builtin(SystemId::T45md), &parse("[]p -> [][]p").unwrap()).holds());
        let d3 = build_delta(3).unwrap().formula;
        assert_eq!(validate_det(&m, &d3), decide_valid(&builtin(SystemId::T45md), &d3).holds());
    }
}
