//! Deterministic logical matrices over the values `0 … size-1`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::calculus::axioms_of;
use crate::nmatrix::SystemId;
use crate::syntax::{subformulas, Formula};

/// Every cell holds exactly one value. `imp` is indexed by `x * size + y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DetMatrix {
    pub size: usize,
    pub designated: Vec<bool>,
    pub neg: Vec<usize>,
    pub imp: Vec<usize>,
    #[serde(rename = "box")]
    pub boxt: Vec<usize>,
    pub dia: Vec<usize>,
}

impl DetMatrix {
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.size + y]
    }

    /// Checks shapes, ranges and that the designated set is a nonempty
    /// proper subset.
    pub fn well_formed(&self) -> bool {
        let s = self.size;
        let in_range = |t: &[usize], len: usize| t.len() == len && t.iter().all(|&v| v < s);
        let d = self.designated.iter().filter(|&&b| b).count();
        s > 0
            && self.designated.len() == s
            && (1..s).contains(&d)
            && in_range(&self.neg, s)
            && in_range(&self.imp, s * s)
            && in_range(&self.boxt, s)
            && in_range(&self.dia, s)
    }

    /// Tables in a fixed order, for comparing and canonicalizing.
    pub(crate) fn encoding(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.designated.iter().map(|&b| b as usize).collect();
        e.extend(&self.neg);
        e.extend(&self.imp);
        e.extend(&self.boxt);
        e.extend(&self.dia);
        e
    }

    /// The isomorphic copy in which value `x` is renamed `perm[x]`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> DetMatrix {
        let s = self.size;
        let mut m = DetMatrix {
            size: s,
            designated: vec![false; s],
            neg: vec![0; s],
            imp: vec![0; s * s],
            boxt: vec![0; s],
            dia: vec![0; s],
        };
        for x in 0..s {
            m.designated[perm[x]] = self.designated[x];
            m.neg[perm[x]] = perm[self.neg[x]];
            m.boxt[perm[x]] = perm[self.boxt[x]];
            m.dia[perm[x]] = perm[self.dia[x]];
            for y in 0..s {
                m.imp[perm[x] * s + perm[y]] = perm[self.imp(x, y)];
            }
        }
        m
    }

    /// Modus ponens keeps designation at the level of the `→` table.
    pub fn mp_preserves_designation(&self) -> bool {
        let s = self.size;
        (0..s).all(|x| {
            (0..s).all(|y| !(self.designated[x] && self.designated[self.imp(x, y)]) || self.designated[y])
        })
    }
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Leaf(usize),
    Neg(usize),
    Imp(usize, usize),
    Box(usize),
    Dia(usize),
}

/// A formula flattened into evaluation order, with its leaves (atoms and
/// metavariables) numbered.
#[derive(Clone, Debug)]
pub struct Program {
    ops: Vec<Op>,
    leaves: Vec<Arc<str>>,
    scratch_len: usize,
}

impl Program {
    pub fn new(f: &Formula) -> Program {
        let nodes = subformulas(f);
        let index: HashMap<&Formula, usize> = nodes.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut leaves = Vec::new();
        let ops = nodes
            .iter()
            .map(|g| match g {
                Formula::Atom(n) | Formula::Meta(n) => {
                    leaves.push(n.clone());
                    Op::Leaf(leaves.len() - 1)
                }
                Formula::Neg(a) => Op::Neg(index[a.as_ref()]),
                Formula::Imp(a, b) => Op::Imp(index[a.as_ref()], index[b.as_ref()]),
                Formula::Box(a) => Op::Box(index[a.as_ref()]),
                Formula::Dia(a) => Op::Dia(index[a.as_ref()]),
            })
            .collect::<Vec<_>>();
        Program {
            scratch_len: ops.len(),
            ops,
            leaves,
        }
    }

    pub fn leaves(&self) -> &[Arc<str>] {
        &self.leaves
    }

    /// Value of the whole formula when leaf `i` takes `assignment[i]`.
    pub fn eval(&self, m: &DetMatrix, assignment: &[usize]) -> usize {
        let mut vals = vec![0usize; self.scratch_len];
        self.eval_into(m, assignment, &mut vals)
    }

    fn eval_into(&self, m: &DetMatrix, assignment: &[usize], vals: &mut [usize]) -> usize {
        for (i, op) in self.ops.iter().enumerate() {
            vals[i] = match *op {
                Op::Leaf(l) => assignment[l],
                Op::Neg(a) => m.neg[vals[a]],
                Op::Imp(a, b) => m.imp(vals[a], vals[b]),
                Op::Box(a) => m.boxt[vals[a]],
                Op::Dia(a) => m.dia[vals[a]],
            };
        }
        vals[self.ops.len() - 1]
    }

    /// Whether the formula is designated under every assignment.
    pub fn valid_in(&self, m: &DetMatrix) -> bool {
        let mut vals = vec![0usize; self.scratch_len];
        let mut assignment = vec![0usize; self.leaves.len()];
        loop {
            if !m.designated[self.eval_into(m, &assignment, &mut vals)] {
                return false;
            }
            if !next_assignment(&mut assignment, m.size) {
                return true;
            }
        }
    }
}

/// Odometer step over `size^len` assignments; false after the last one.
pub(crate) fn next_assignment(a: &mut [usize], size: usize) -> bool {
    for slot in a.iter_mut().rev() {
        *slot += 1;
        if *slot < size {
            return true;
        }
        *slot = 0;
    }
    false
}

pub fn validate_det(m: &DetMatrix, f: &Formula) -> bool {
    Program::new(f).valid_in(m)
}

/// Every axiom skeleton of `id` is valid in `m` and `m`'s `→` preserves
/// designation under modus ponens.
pub fn is_model(m: &DetMatrix, id: SystemId) -> bool {
    let programs: Vec<Program> = axioms_of(id).iter().map(|a| Program::new(&a.schema)).collect();
    is_model_with(m, &programs)
}

pub(crate) fn is_model_with(m: &DetMatrix, axioms: &[Program]) -> bool {
    m.mp_preserves_designation() && axioms.iter().all(|p| p.valid_in(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    /// Two-valued Boolean matrix with the given `□` and `◇`.
    pub(crate) fn boolean(boxt: [usize; 2], dia: [usize; 2]) -> DetMatrix {
        DetMatrix {
            size: 2,
            designated: vec![false, true],
            neg: vec![1, 0],
            imp: vec![1, 1, 0, 1],
            boxt: boxt.to_vec(),
            dia: dia.to_vec(),
        }
    }

    #[test]
    fn boolean_identity_modalities() {
        let m = boolean([0, 1], [0, 1]);
        assert!(m.well_formed());
        assert!(is_model(&m, SystemId::Km));
        assert!(is_model(&m, SystemId::T45m));
        assert!(!validate_det(&m, &parse("p -> q").unwrap()));
        assert!(validate_det(&m, &parse("p -> (q -> p)").unwrap()));
    }

    #[test]
    fn constant_false_box() {
        // With `◇x = x`, (M1) `¬◇A → □(A → B)` is `1 → 0` at `A = 0`.
        assert!(!is_model(&boolean([0, 0], [0, 1]), SystemId::Tm));
        // With `◇x = 1` every Tm axiom holds, but (5) `◇□A → □A` is `1 → 0`.
        let m = boolean([0, 0], [1, 1]);
        assert!(is_model(&m, SystemId::Tm));
        assert!(!is_model(&m, SystemId::T45m));
        assert!(!is_model(&boolean([1, 1], [0, 1]), SystemId::Tm));
    }

    #[test]
    fn permutation_round_trip() {
        let m = boolean([0, 1], [1, 1]);
        let swapped = m.permuted(&[1, 0]);
        assert!(swapped.well_formed());
        assert_eq!(swapped.designated, vec![true, false]);
        assert_eq!(swapped.permuted(&[1, 0]), m);
        let f = parse("[]p -> <>p").unwrap();
        assert_eq!(validate_det(&m, &f), validate_det(&swapped, &f));
    }
}
