//! Tables of composite connectives, obtained by composing multioperations.

use std::collections::HashMap;

use serde::Serialize;

use super::Nmatrix;
use crate::syntax::{subformulas, Formula};
use crate::values::{TruthValue, ValueSet};

/// For each assignment of domain values to the skeleton's variables, the
/// values the whole skeleton can take under some legal valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedTable {
    pub variables: Vec<String>,
    pub rows: Vec<(Vec<TruthValue>, ValueSet)>,
}

impl DerivedTable {
    pub fn get(&self, args: &[TruthValue]) -> Option<ValueSet> {
        self.rows.iter().find(|(a, _)| a == args).map(|(_, s)| *s)
    }
}

/// Computes the derived table of `skeleton`. The variables are its
/// metavariables followed by its atoms, each in order of first occurrence.
///
/// Shared subformulas receive one value per valuation, so the result is the
/// exact set of reachable values rather than a cell-by-cell composition.
pub fn derived_table(nm: &Nmatrix, skeleton: &Formula) -> DerivedTable {
    let mut leaves: Vec<Formula> = skeleton
        .metavars()
        .iter()
        .map(|n| Formula::Meta(n.clone()))
        .collect();
    leaves.extend(skeleton.atoms().iter().map(|n| Formula::Atom(n.clone())));
    let nodes = subformulas(skeleton);
    let index: HashMap<&Formula, usize> = nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let leaf_slots: Vec<usize> = leaves.iter().map(|l| index[l]).collect();

    let domain: Vec<TruthValue> = nm.domain().iter().collect();
    let mut rows = Vec::new();
    let mut tuple = vec![0usize; leaves.len()];
    loop {
        let args: Vec<TruthValue> = tuple.iter().map(|&i| domain[i]).collect();
        let mut values: Vec<Option<TruthValue>> = vec![None; nodes.len()];
        for (slot, v) in leaf_slots.iter().zip(&args) {
            values[*slot] = Some(*v);
        }
        let mut reach = ValueSet::EMPTY;
        extend(nm, &nodes, &index, 0, &mut values, &mut reach);
        rows.push((args, reach));

        // Advance the odometer, last variable fastest.
        let mut k = tuple.len();
        loop {
            if k == 0 {
                return DerivedTable {
                    variables: leaves.iter().map(|l| l.to_string()).collect(),
                    rows,
                };
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < domain.len() {
                break;
            }
            tuple[k] = 0;
        }
    }
}

fn extend(
    nm: &Nmatrix,
    nodes: &[Formula],
    index: &HashMap<&Formula, usize>,
    at: usize,
    values: &mut Vec<Option<TruthValue>>,
    reach: &mut ValueSet,
) {
    if at == nodes.len() {
        if let Some(root) = values[at - 1] {
            reach.insert(root);
        }
        return;
    }
    let node = &nodes[at];
    let Some(c) = node.connective() else {
        extend(nm, nodes, index, at + 1, values, reach);
        return;
    };
    let args: Vec<TruthValue> = node
        .children()
        .iter()
        .map(|ch| values[index[*ch]].expect("children precede parents"))
        .collect();
    for v in nm.table(c).get(&args).iter() {
        values[at] = Some(v);
        extend(nm, nodes, index, at + 1, values, reach);
    }
    values[at] = None;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nmatrix::{builtin, SystemId};
    use crate::syntax::{parse, Connective};
    use TruthValue::*;

    #[test]
    fn km_examples() {
        let km = builtin(SystemId::Km);
        let or = derived_table(&km, &parse("~A -> B").unwrap());
        assert_eq!(or.get(&[CPlus, CPlus]), Some(ValueSet::from([TPlus, CPlus])));
        let and = derived_table(&km, &parse("~(A -> ~B)").unwrap());
        assert_eq!(and.get(&[CPlus, CPlus]), Some(ValueSet::from([FPlus, CPlus])));
        let dia = derived_table(&km, &parse("~[]~A").unwrap());
        assert_eq!(dia.get(&[TPlus]), Some(ValueSet::from([TPlus, CPlus, FPlus, IPlus])));
    }

    #[test]
    fn diamond_is_composed_box_for_every_system() {
        for id in SystemId::ALL {
            let nm = builtin(id);
            let t = derived_table(&nm, &parse("~[]~A").unwrap());
            for x in nm.domain().iter() {
                assert_eq!(t.get(&[x]), Some(nm.table(Connective::Dia).unary(x)), "{id} {x}");
            }
        }
    }

    #[test]
    fn shared_subformulas_take_one_value() {
        // A -> A over Km at C+ may only use the diagonal of the → cell.
        let km = builtin(SystemId::Km);
        let t = derived_table(&km, &parse("A -> A").unwrap());
        assert_eq!(t.get(&[CPlus]), Some(ValueSet::from([TPlus, CPlus])));
        assert_eq!(t.rows.len(), 8);
    }
}
