//! Exhaustive enumeration of legal valuations; the reference the search
//! engine is tested against.

use std::collections::HashMap;

use super::{SemanticsError, Valuation, Verdict};
use crate::nmatrix::Nmatrix;
use crate::syntax::{subformulas_of_all, Formula};
use crate::values::TruthValue;

pub const DEFAULT_GUARD: usize = 12;

pub fn brute_force_consequence(nm: &Nmatrix, premises: &[Formula], conclusion: &Formula) -> Result<Verdict, SemanticsError> {
    brute_force_consequence_with(nm, premises, conclusion, DEFAULT_GUARD)
}

/// Walks the product of domain values over the subformulas in order, dropping
/// a prefix as soon as a compound node's value falls outside its cell.
/// Designation is only tested on complete valuations.
pub fn brute_force_consequence_with(
    nm: &Nmatrix,
    premises: &[Formula],
    conclusion: &Formula,
    guard: usize,
) -> Result<Verdict, SemanticsError> {
    let mut roots = premises.to_vec();
    roots.push(conclusion.clone());
    let nodes = subformulas_of_all(&roots);
    if nodes.len() > guard {
        return Err(SemanticsError::TooLarge {
            nodes: nodes.len(),
            limit: guard,
        });
    }
    let index: HashMap<&Formula, usize> = nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let children: Vec<Vec<usize>> = nodes
        .iter()
        .map(|f| f.children().iter().map(|c| index[*c]).collect())
        .collect();
    let premise_ix: Vec<usize> = premises.iter().map(|p| index[p]).collect();
    let conclusion_ix = index[conclusion];
    let domain: Vec<TruthValue> = nm.domain().iter().collect();

    let mut values: Vec<TruthValue> = Vec::with_capacity(nodes.len());
    let mut choice = vec![0usize; nodes.len()];
    let mut depth = 0usize;
    loop {
        if depth == nodes.len() {
            let falsifies = premise_ix.iter().all(|&i| nm.is_designated(values[i]))
                && !nm.is_designated(values[conclusion_ix]);
            if falsifies {
                return Ok(Verdict::Fails(Valuation {
                    entries: nodes.into_iter().zip(values).collect(),
                }));
            }
            // Step back to the last node and try its next value.
            depth -= 1;
            values.pop();
            choice[depth] += 1;
            continue;
        }
        if choice[depth] == domain.len() {
            choice[depth] = 0;
            if depth == 0 {
                return Ok(Verdict::Holds);
            }
            depth -= 1;
            values.pop();
            choice[depth] += 1;
            continue;
        }
        let v = domain[choice[depth]];
        let legal = match nodes[depth].connective() {
            None => true,
            Some(c) => {
                let args: Vec<TruthValue> = children[depth].iter().map(|&i| values[i]).collect();
                nm.table(c).get(&args).contains(v)
            }
        };
        if legal {
            values.push(v);
            depth += 1;
        } else {
            choice[depth] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nmatrix::{builtin, SystemId};
    use crate::semantics::check_witness;
    use crate::syntax::parse;

    #[test]
    fn small_queries() {
        let km = builtin(SystemId::Km);
        let p = parse("p").unwrap();
        assert!(brute_force_consequence(&km, &[], &parse("p -> p").unwrap()).unwrap().holds());
        let boxed = parse("[]p").unwrap();
        let v = brute_force_consequence(&km, std::slice::from_ref(&p), &boxed).unwrap();
        check_witness(&km, &[p], &boxed, v.witness().unwrap()).unwrap();
    }

    #[test]
    fn guard() {
        let km = builtin(SystemId::Km);
        let big = parse("[][][][][][][][][][][][]p").unwrap();
        assert_eq!(
            brute_force_consequence(&km, &[], &big),
            Err(SemanticsError::TooLarge { nodes: 13, limit: 12 })
        );
    }
}
