//! Backtracking search for a legal valuation over a subformula DAG.

use std::collections::HashMap;

use crate::nmatrix::{Nmatrix, Table};
use crate::syntax::{subformulas_of_all, Formula};
use crate::values::{TruthValue, ValueSet};

#[derive(Clone, Copy, Debug)]
pub(crate) enum NodeKind {
    Leaf,
    Unary(usize),
    Binary(usize, usize),
}

/// A query compiled to dense arrays: node `i`'s children have indices below `i`.
pub(crate) struct Compiled<'a> {
    pub nodes: Vec<Formula>,
    pub kind: Vec<NodeKind>,
    tables: Vec<Option<&'a Table>>,
    parents: Vec<Vec<usize>>,
    pub initial: Vec<ValueSet>,
    leaves: Vec<usize>,
    hints: Vec<Option<TruthValue>>,
}

impl<'a> Compiled<'a> {
    /// Restricts every premise to designated values and the conclusion (if
    /// any) to undesignated ones.
    pub fn new(
        nm: &'a Nmatrix,
        premises: &[Formula],
        conclusion: Option<&Formula>,
        hints: &HashMap<Formula, TruthValue>,
    ) -> Compiled<'a> {
        let mut roots: Vec<Formula> = premises.to_vec();
        roots.extend(conclusion.cloned());
        let nodes = subformulas_of_all(&roots);
        let index: HashMap<&Formula, usize> = nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();

        let mut kind = Vec::with_capacity(nodes.len());
        let mut tables = Vec::with_capacity(nodes.len());
        let mut parents = vec![Vec::new(); nodes.len()];
        for (i, f) in nodes.iter().enumerate() {
            let ch: Vec<usize> = f.children().iter().map(|c| index[*c]).collect();
            for &c in &ch {
                if !parents[c].contains(&i) {
                    parents[c].push(i);
                }
            }
            kind.push(match ch.as_slice() {
                [] => NodeKind::Leaf,
                [a] => NodeKind::Unary(*a),
                [a, b] => NodeKind::Binary(*a, *b),
                _ => unreachable!(),
            });
            tables.push(f.connective().map(|c| nm.table(c)));
        }

        let mut initial = vec![nm.domain(); nodes.len()];
        for p in premises {
            let i = index[p];
            initial[i] = initial[i].intersection(nm.designated);
        }
        if let Some(c) = conclusion {
            let i = index[c];
            initial[i] = initial[i].difference(nm.designated);
        }

        // Leaves in order of first occurrence, read left to right.
        let mut leaves = Vec::new();
        for r in &roots {
            collect_leaves(r, &index, &mut leaves);
        }
        let hints = nodes.iter().map(|f| hints.get(f).copied()).collect();

        Compiled {
            nodes,
            kind,
            tables,
            parents,
            initial,
            leaves,
            hints,
        }
    }

    fn cell(&self, j: usize, args: &[TruthValue]) -> ValueSet {
        self.tables[j].expect("compound node").get(args)
    }

    /// Narrows the sets of node `j` and its children to values that take part
    /// in some tuple satisfying `j`'s table. Returns the nodes that changed.
    fn revise(&self, j: usize, poss: &mut [ValueSet], changed: &mut Vec<usize>) {
        let mut update = |i: usize, s: ValueSet, poss: &mut [ValueSet]| {
            if s != poss[i] {
                poss[i] = s;
                changed.push(i);
            }
        };
        match self.kind[j] {
            NodeKind::Leaf => {}
            NodeKind::Unary(c) => {
                let mut up = ValueSet::EMPTY;
                let mut keep = ValueSet::EMPTY;
                for x in poss[c].iter() {
                    let cell = self.cell(j, &[x]).intersection(poss[j]);
                    if !cell.is_empty() {
                        up = up.union(cell);
                        keep.insert(x);
                    }
                }
                update(j, up, poss);
                update(c, keep, poss);
            }
            NodeKind::Binary(a, b) => {
                let mut up = ValueSet::EMPTY;
                let mut keep_a = ValueSet::EMPTY;
                let mut keep_b = ValueSet::EMPTY;
                for x in poss[a].iter() {
                    for y in poss[b].iter() {
                        if a == b && x != y {
                            continue;
                        }
                        let cell = self.cell(j, &[x, y]).intersection(poss[j]);
                        if !cell.is_empty() {
                            up = up.union(cell);
                            keep_a.insert(x);
                            keep_b.insert(y);
                        }
                    }
                }
                update(j, up, poss);
                update(a, keep_a, poss);
                if a != b {
                    update(b, keep_b, poss);
                }
            }
        }
    }

    /// Runs revisions to a fixpoint. `false` means some set became empty.
    fn propagate(&self, poss: &mut [ValueSet], mut queue: Vec<usize>) -> bool {
        let mut queued = vec![false; poss.len()];
        for &j in &queue {
            queued[j] = true;
        }
        let mut changed = Vec::new();
        while let Some(j) = queue.pop() {
            queued[j] = false;
            changed.clear();
            self.revise(j, poss, &mut changed);
            for &i in &changed {
                if poss[i].is_empty() {
                    return false;
                }
                let mut touch = |k: usize, queue: &mut Vec<usize>| {
                    if !matches!(self.kind[k], NodeKind::Leaf) && !queued[k] {
                        queued[k] = true;
                        queue.push(k);
                    }
                };
                touch(i, &mut queue);
                for &p in &self.parents[i] {
                    touch(p, &mut queue);
                }
            }
        }
        true
    }

    /// Node to branch on: the first undecided leaf, else the undecided
    /// compound node with the fewest candidates (lowest index on ties).
    fn choose(&self, poss: &[ValueSet]) -> Option<usize> {
        if let Some(&i) = self.leaves.iter().find(|&&i| poss[i].len() > 1) {
            return Some(i);
        }
        (0..poss.len())
            .filter(|&i| poss[i].len() > 1)
            .min_by_key(|&i| (poss[i].len(), i))
    }

    fn branch_values(&self, i: usize, set: ValueSet) -> Vec<TruthValue> {
        let mut vs: Vec<TruthValue> = set.iter().collect();
        if let Some(h) = self.hints[i] {
            if let Some(pos) = vs.iter().position(|&v| v == h) {
                let v = vs.remove(pos);
                vs.insert(0, v);
            }
        }
        vs
    }

    /// Initial sets after propagation, or `None` if already inconsistent.
    pub fn root_state(&self) -> Option<Vec<ValueSet>> {
        let mut poss = self.initial.clone();
        if poss.iter().any(|s| s.is_empty()) {
            return None;
        }
        let all: Vec<usize> = (0..poss.len())
            .filter(|&i| !matches!(self.kind[i], NodeKind::Leaf))
            .collect();
        if self.propagate(&mut poss, all) {
            Some(poss)
        } else {
            None
        }
    }

    /// The first branch point of a root state and the states it splits into.
    pub fn split(&self, poss: &[ValueSet]) -> Option<Vec<Vec<ValueSet>>> {
        let i = self.choose(poss)?;
        Some(
            self.branch_values(i, poss[i])
                .into_iter()
                .map(|v| {
                    let mut next = poss.to_vec();
                    next[i] = ValueSet::singleton(v);
                    next
                })
                .collect(),
        )
    }

    /// Depth-first search from `state` (not yet propagated after its last
    /// assignment). Counts every visited search node.
    pub fn search(&self, mut state: Vec<ValueSet>, assigned: Option<usize>, explored: &mut u64) -> Option<Vec<TruthValue>> {
        *explored += 1;
        if let Some(i) = assigned {
            let mut queue: Vec<usize> = self.parents[i].clone();
            if !matches!(self.kind[i], NodeKind::Leaf) {
                queue.push(i);
            }
            if !self.propagate(&mut state, queue) {
                return None;
            }
        }
        let Some(i) = self.choose(&state) else {
            return Some(state.iter().map(|s| s.single().expect("decided")).collect());
        };
        for v in self.branch_values(i, state[i]) {
            let mut next = state.clone();
            next[i] = ValueSet::singleton(v);
            if let Some(w) = self.search(next, Some(i), explored) {
                return Some(w);
            }
        }
        None
    }

    /// Index of the node whose value was fixed to produce a split state.
    pub fn split_node(&self, poss: &[ValueSet]) -> Option<usize> {
        self.choose(poss)
    }
}

fn collect_leaves(f: &Formula, index: &HashMap<&Formula, usize>, out: &mut Vec<usize>) {
    if f.is_leaf() {
        let i = index[f];
        if !out.contains(&i) {
            out.push(i);
        }
        return;
    }
    for c in f.children() {
        collect_leaves(c, index, out);
    }
}
