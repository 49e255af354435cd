//! Pigeonhole formulas, deterministic matrices and the experiments that
//! show the Nmatrix systems escape every small deterministic matrix.

mod audit;
mod lukasiewicz;
mod matrix;
mod scan;

use std::collections::HashMap;

use serde::Serialize;

use crate::nmatrix::{builtin, SystemId};
use crate::semantics::{decide_with, SearchOptions, Valuation};
use crate::syntax::Formula;
use crate::values::TruthValue;

pub use audit::{
    classical_valid, conservativity_check, t45md_agreement, AgreementReport, ConservativityReport, Discrepancy,
};
pub use lukasiewicz::{t45md_matrix, t45md_value, FloatChain, LukChain, RationalChain};
pub use matrix::{is_model, validate_det, DetMatrix, Program};
pub use scan::{
    candidate_count, scan_matrices, substitution_lemma, ScanOptions, ScanReport, SubstitutionReport, SAMPLE_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DugundjiError {
    #[error("n must be at least 3, got {0}")]
    BadN(usize),
    #[error("matrix size must be 2 or 3, got {0}")]
    BadSize(usize),
    #[error("{requested} samples requested, the cap is {cap}")]
    BudgetExceeded { requested: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Delta,
    Gamma,
}

/// `δ(n)` or `γ(n)` over the atoms `p1 … pn`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DugundjiFormula {
    pub n: usize,
    pub kind: Kind,
    pub formula: Formula,
}

fn atom(j: usize) -> Formula {
    Formula::atom(&format!("p{j}"))
}

/// `p1 ∨ … ∨ pn`, associated to the left.
pub fn alpha(n: usize) -> Formula {
    Formula::big_or((1..=n).map(atom)).expect("n >= 1")
}

/// `alpha(n)` without `p_i`.
pub fn beta(n: usize, i: usize) -> Formula {
    Formula::big_or((1..=n).filter(|&j| j != i).map(atom)).expect("n >= 2")
}

fn build(n: usize, kind: Kind) -> Result<DugundjiFormula, DugundjiError> {
    if n < 3 {
        return Err(DugundjiError::BadN(n));
    }
    let wrap = |f: Formula| match kind {
        Kind::Delta => Formula::boxed(f),
        Kind::Gamma => Formula::boxed(Formula::neg(Formula::boxed(f))),
    };
    let a = wrap(alpha(n));
    let formula = Formula::big_or((1..=n).map(|i| Formula::imp(a.clone(), wrap(beta(n, i))))).expect("n >= 3");
    Ok(DugundjiFormula { n, kind, formula })
}

pub fn build_delta(n: usize) -> Result<DugundjiFormula, DugundjiError> {
    build(n, Kind::Delta)
}

pub fn build_gamma(n: usize) -> Result<DugundjiFormula, DugundjiError> {
    build(n, Kind::Gamma)
}

impl DugundjiFormula {
    /// Search hints that steer towards the textbook countermodel: every atom
    /// `C+`; for `δ`, `α ↦ T+` and each `β_i ↦ C+`; for `γ`, `□α ↦ F−` and
    /// each `□β_i ↦ C−`.
    pub fn hints(&self) -> HashMap<Formula, TruthValue> {
        let n = self.n;
        let mut h: HashMap<Formula, TruthValue> = (1..=n).map(|j| (atom(j), TruthValue::CPlus)).collect();
        match self.kind {
            Kind::Delta => {
                h.insert(alpha(n), TruthValue::TPlus);
                for i in 1..=n {
                    h.insert(beta(n, i), TruthValue::CPlus);
                }
            }
            Kind::Gamma => {
                h.insert(Formula::boxed(alpha(n)), TruthValue::FMinus);
                for i in 1..=n {
                    h.insert(Formula::boxed(beta(n, i)), TruthValue::CMinus);
                }
            }
        }
        h
    }

    /// Recognizes `f` as `δ(n)` or `γ(n)` for `n` its number of atoms.
    pub fn recognize(f: &Formula) -> Option<DugundjiFormula> {
        let n = f.atoms().len();
        [build_delta(n), build_gamma(n)]
            .into_iter()
            .flatten()
            .find(|d| &d.formula == f)
    }
}

/// A falsifying valuation of `f` over `id`'s Nmatrix, or `None` if `f` is
/// valid. When `f` is a pigeonhole formula the search is seeded with
/// [`DugundjiFormula::hints`]; otherwise it runs unseeded.
pub fn falsify(id: SystemId, f: &Formula, jobs: usize) -> Option<Valuation> {
    let hints = DugundjiFormula::recognize(f).map(|d| d.hints()).unwrap_or_default();
    let out = decide_with(&builtin(id), &[], f, &SearchOptions { hints, jobs });
    out.verdict.witness().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use TruthValue::*;

    #[test]
    fn delta_three_matches_display() {
        let shown = "(([]((p1 | p2) | p3) -> [](p2 | p3)) | ([]((p1 | p2) | p3) -> [](p1 | p3))) \
                     | ([]((p1 | p2) | p3) -> [](p1 | p2))";
        let d = build_delta(3).unwrap();
        assert_eq!(d.formula, parse(shown).unwrap());
        assert_eq!(d.formula.atoms().len(), 3);
        assert_eq!(build_delta(2), Err(DugundjiError::BadN(2)));
        assert_eq!(build_gamma(1), Err(DugundjiError::BadN(1)));
    }

    // Splits a left-associated disjunction `¬(… ) → d` into its disjuncts.
    fn disjuncts(f: &Formula, n: usize) -> Vec<Formula> {
        let mut out = Vec::new();
        let mut cur = f.clone();
        for _ in 1..n {
            let Formula::Imp(l, r) = &cur else { panic!("not a disjunction") };
            let Formula::Neg(l) = l.as_ref() else { panic!("not a disjunction") };
            out.push(r.as_ref().clone());
            cur = l.as_ref().clone();
        }
        out.push(cur);
        out.reverse();
        out
    }

    #[test]
    fn gamma_shape() {
        let g = build_gamma(3).unwrap();
        let ds = disjuncts(&g.formula, 3);
        assert_eq!(ds[0], parse("[]~[]((p1 | p2) | p3) -> []~[](p2 | p3)").unwrap());
        for d in &ds {
            let Formula::Imp(a, _) = d else { panic!() };
            assert_eq!(a.modal_depth(), 2);
        }
        assert_eq!(DugundjiFormula::recognize(&g.formula), Some(g));
    }

    #[test]
    fn falsify_delta_in_t45m() {
        let d = build_delta(4).unwrap();
        let w = falsify(SystemId::T45m, &d.formula, 1).unwrap();
        for j in 1..=4 {
            assert_eq!(w.leaf(&format!("p{j}")), Some(CPlus));
        }
        assert_eq!(w.get(&alpha(4)), Some(TPlus));
        assert!(falsify(SystemId::Km, &parse("p -> p").unwrap(), 1).is_none());
    }

    #[test]
    fn falsify_gamma_in_tmd() {
        let g = build_gamma(4).unwrap();
        let w = falsify(SystemId::Tmd, &g.formula, 1).unwrap();
        assert_eq!(w.get(&Formula::boxed(alpha(4))), Some(FMinus));
        for i in 1..=4 {
            assert_eq!(w.get(&Formula::boxed(beta(4, i))), Some(CMinus));
        }
    }
}
