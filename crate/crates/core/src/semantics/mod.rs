//! Validity and consequence over an Nmatrix, with countermodels.

mod audit;
mod brute;
mod engine;
mod lemmas;

use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::nmatrix::Nmatrix;
use crate::syntax::{subformulas_of_all, Formula};
use crate::values::TruthValue;

pub use audit::{audit_axioms, audit_system, AuditEntry, AuditReport};
pub use brute::{brute_force_consequence, brute_force_consequence_with, DEFAULT_GUARD};
pub use lemmas::{verify_lemma_suite, LemmaCheck, LemmaReport};

use engine::Compiled;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("query has {nodes} subformulas, above the limit of {limit}")]
    TooLarge { nodes: usize, limit: usize },
}

/// A value for every subformula of a query, in subformula order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Valuation {
    pub entries: Vec<(Formula, TruthValue)>,
}

impl Valuation {
    pub fn get(&self, f: &Formula) -> Option<TruthValue> {
        self.entries.iter().find(|(g, _)| g == f).map(|(_, v)| *v)
    }

    /// Value of the atom or metavariable named `name`.
    pub fn leaf(&self, name: &str) -> Option<TruthValue> {
        self.entries.iter().find_map(|(f, v)| match f {
            Formula::Atom(n) | Formula::Meta(n) if &**n == name => Some(*v),
            _ => None,
        })
    }

    /// Values of the atoms and metavariables only.
    pub fn leaves(&self) -> impl Iterator<Item = (&Formula, TruthValue)> {
        self.entries.iter().filter(|(f, _)| f.is_leaf()).map(|(f, v)| (f, *v))
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (f, v) in &self.entries {
            map.serialize_entry(&f.to_string(), v)?;
        }
        map.end()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g} = {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Valuation),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Valuation> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// A verdict with the number of search nodes visited to reach it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Value to try first at a node, where it is a candidate.
    pub hints: HashMap<Formula, TruthValue>,
    /// Worker threads for the first branch point; 0 or 1 searches sequentially.
    pub jobs: usize,
}

pub fn decide_consequence(nm: &Nmatrix, premises: &[Formula], conclusion: &Formula) -> Verdict {
    decide_with(nm, premises, conclusion, &SearchOptions::default()).verdict
}

pub fn decide_valid(nm: &Nmatrix, f: &Formula) -> Verdict {
    decide_consequence(nm, &[], f)
}

/// Searches for a legal valuation designating every premise and not the
/// conclusion. The result does not depend on `opts.jobs`.
pub fn decide_with(nm: &Nmatrix, premises: &[Formula], conclusion: &Formula, opts: &SearchOptions) -> Outcome {
    let q = Compiled::new(nm, premises, Some(conclusion), &opts.hints);
    let Some(root) = q.root_state() else {
        return Outcome {
            verdict: Verdict::Holds,
            nodes_explored: 1,
        };
    };

    let found = if opts.jobs > 1 {
        search_split(&q, root, opts.jobs)
    } else {
        let mut explored = 0;
        let w = q.search(root, None, &mut explored);
        (w, explored)
    };
    let (witness, nodes_explored) = found;
    let verdict = match witness {
        None => Verdict::Holds,
        Some(values) => Verdict::Fails(Valuation {
            entries: q.nodes.iter().cloned().zip(values).collect(),
        }),
    };
    Outcome {
        verdict,
        nodes_explored,
    }
}

/// Searches each value of the first branch point on its own worker. Every
/// branch runs to completion; the lowest branch with a witness wins, and the
/// node count covers exactly the branches a sequential search would visit.
fn search_split(q: &Compiled<'_>, root: Vec<crate::values::ValueSet>, jobs: usize) -> (Option<Vec<TruthValue>>, u64) {
    use rayon::prelude::*;

    let Some(node) = q.split_node(&root) else {
        let mut explored = 0;
        return (q.search(root, None, &mut explored), explored);
    };
    let branches = q.split(&root).expect("has a branch point");
    let run = || {
        branches
            .into_par_iter()
            .map(|state| {
                let mut explored = 0;
                let w = q.search(state, Some(node), &mut explored);
                (w, explored)
            })
            .collect::<Vec<_>>()
    };
    let results = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut total = 1;
    for (w, explored) in results {
        total += explored;
        if w.is_some() {
            return (w, total);
        }
    }
    (None, total)
}

/// Re-checks a witness without the search machinery: every subformula of the
/// query has a domain value, every compound value is in its cell, premises
/// are designated and the conclusion is not.
pub fn check_witness(nm: &Nmatrix, premises: &[Formula], conclusion: &Formula, w: &Valuation) -> Result<(), String> {
    let mut roots = premises.to_vec();
    roots.push(conclusion.clone());
    let value = |f: &Formula| w.get(f).ok_or_else(|| format!("no value for {f}"));
    for f in subformulas_of_all(&roots) {
        let v = value(&f)?;
        if !nm.domain().contains(v) {
            return Err(format!("{f} = {v} is outside the domain"));
        }
        if let Some(c) = f.connective() {
            let args = f.children().iter().map(|ch| value(ch)).collect::<Result<Vec<_>, _>>()?;
            let cell = nm.apply(c, &args).map_err(|e| format!("{f}: {e}"))?;
            if !cell.contains(v) {
                return Err(format!("{f} = {v} is not in the cell {cell}"));
            }
        }
    }
    for p in premises {
        if !nm.is_designated(value(p)?) {
            return Err(format!("premise {p} is not designated"));
        }
    }
    if nm.is_designated(value(conclusion)?) {
        return Err(format!("conclusion {conclusion} is designated"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nmatrix::{builtin, SystemId};
    use crate::syntax::parse;
    use TruthValue::*;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn t_axiom_in_tm_and_km() {
        assert!(decide_valid(&builtin(SystemId::Tm), &f("[]p -> p")).holds());
        let km = builtin(SystemId::Km);
        let v = decide_valid(&km, &f("[]p -> p"));
        let w = v.witness().unwrap();
        assert_eq!(w.leaf("p"), Some(TMinus));
        assert!(km.is_designated(w.get(&f("[]p")).unwrap()));
    }

    #[test]
    fn k_fails_in_km_with_i_and_c() {
        let km = builtin(SystemId::Km);
        let prem = [f("[](p -> q)"), f("[]p")];
        let v = decide_consequence(&km, &prem, &f("[]q"));
        let w = v.witness().unwrap();
        assert_eq!((w.leaf("p"), w.leaf("q")), (Some(IPlus), Some(CPlus)));
        check_witness(&km, &prem, &f("[]q"), w).unwrap();

        let prem = [f("<>p"), f("[]p"), f("[](p -> q)")];
        assert!(decide_consequence(&km, &prem, &f("[]q")).holds());
    }

    #[test]
    fn parallel_search_matches_sequential() {
        let km = builtin(SystemId::Km);
        let queries = [
            (vec![f("[](p -> q)"), f("[]p")], f("[]q")),
            (vec![], f("p -> (q -> p)")),
            (vec![f("<>~p"), f("<>q")], f("[](p -> ~q)")),
        ];
        for (prem, c) in &queries {
            let seq = decide_with(&km, prem, c, &SearchOptions::default());
            for jobs in [2, 4] {
                let par = decide_with(&km, prem, c, &SearchOptions { jobs, ..Default::default() });
                assert_eq!(seq, par);
            }
        }
    }

    #[test]
    fn premise_equal_to_conclusion() {
        let km = builtin(SystemId::Km);
        assert!(decide_consequence(&km, &[f("[]p")], &f("[]p")).holds());
    }

    #[test]
    fn hints_steer_the_first_witness() {
        let km = builtin(SystemId::Km);
        let mut hints = HashMap::new();
        hints.insert(f("p"), CMinus);
        let out = decide_with(&km, &[], &f("p"), &SearchOptions { hints, jobs: 1 });
        assert_eq!(out.verdict.witness().unwrap().leaf("p"), Some(CMinus));
        assert_eq!(decide_valid(&km, &f("p")).witness().unwrap().leaf("p"), Some(TMinus));
    }
}
