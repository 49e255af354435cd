//! Cell-by-cell comparison of generated tables against the printed ones.

use serde::Serialize;

use super::printed::{printed_table, typographic_notes};
use super::{builtin, SystemId};
use crate::syntax::Connective;
use crate::values::{TruthValue, ValueSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DeviationKind {
    /// The printed cell differs from the generated one.
    Value,
    /// The printed cell is malformed but reads as the generated one.
    Typographic,
}

/// One printed cell that is not reproduced verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    pub kind: DeviationKind,
    /// The printed table the cell belongs to, such as `Tm imp`.
    pub table: String,
    /// Every system whose tables share that printed table.
    pub systems: Vec<SystemId>,
    pub args: Vec<TruthValue>,
    pub printed: String,
    pub coherent: ValueSet,
    pub note: String,
}

/// Name of the printed table that `id` takes its `c` table from.
pub fn printed_source(id: SystemId, c: Connective) -> String {
    use crate::values::DomainKind::*;
    let owner = match c {
        Connective::Neg => match id.domain_kind() {
            Dom4 => "Tm",
            Dom6 => "Dm",
            Dom8 => "Km",
        },
        Connective::Imp => match id {
            SystemId::Tmd | SystemId::T4md | SystemId::T45md => "Tmd",
            _ => match id.domain_kind() {
                Dom4 => "Tm",
                Dom6 => "Dm",
                Dom8 => "Km",
            },
        },
        Connective::Box | Connective::Dia => id.modal_twin().name(),
    };
    format!("{owner} {}", c.name())
}

/// Every printed cell of the given systems that the coherent built-ins do not
/// reproduce verbatim, merged across systems sharing a printed table.
pub fn deviation_report(systems: &[SystemId]) -> Vec<Deviation> {
    let mut out: Vec<Deviation> = Vec::new();
    let mut push = |d: Deviation| {
        if let Some(existing) = out
            .iter_mut()
            .find(|e| e.kind == d.kind && e.table == d.table && e.args == d.args)
        {
            for s in d.systems {
                if !existing.systems.contains(&s) {
                    existing.systems.push(s);
                }
            }
        } else {
            out.push(d);
        }
    };

    for &id in systems {
        let nm = builtin(id);
        for c in Connective::ALL {
            for pc in printed_table(id, c) {
                let coherent = nm.table(c).get(&pc.args);
                if coherent != pc.cell {
                    push(Deviation {
                        kind: DeviationKind::Value,
                        table: printed_source(id, c),
                        systems: vec![id],
                        args: pc.args.clone(),
                        printed: pc.cell.to_string(),
                        coherent,
                        note: String::new(),
                    });
                }
            }
        }
        for note in typographic_notes() {
            let shares = match Connective::from_name(note.table) {
                Some(c) => printed_source(id, c) == format!("{} {}", note.system, note.table),
                None => id.deterministic_implication() == note.system.deterministic_implication(),
            };
            if !shares {
                continue;
            }
            let coherent = match Connective::from_name(note.table) {
                Some(c) if note.args.len() == c.arity() => nm.table(c).get(&note.args),
                _ => ValueSet::EMPTY,
            };
            push(Deviation {
                kind: DeviationKind::Typographic,
                table: format!("{} {}", note.system, note.table),
                systems: vec![id],
                args: note.args.clone(),
                printed: note.printed.to_string(),
                coherent,
                note: note.note.to_string(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use TruthValue::*;

    #[test]
    fn known_value_deviations() {
        let report = deviation_report(&SystemId::ALL);
        let values: Vec<_> = report
            .iter()
            .filter(|d| d.kind == DeviationKind::Value)
            .map(|d| (d.table.as_str(), d.args.clone(), d.printed.as_str(), d.coherent))
            .collect();
        assert_eq!(
            values,
            vec![
                ("Tm imp", vec![CMinus, FMinus], "{C-}", ValueSet::from([CPlus])),
                ("Dm neg", vec![TPlus], "{T-}", ValueSet::from([FMinus])),
                ("Dm neg", vec![FPlus], "{F-}", ValueSet::from([TMinus])),
                ("D45m box", vec![TMinus], "{F-}", ValueSet::from([TPlus])),
            ]
        );
        let tm = report.iter().find(|d| d.table == "Tm imp" && d.kind == DeviationKind::Value).unwrap();
        assert_eq!(tm.systems, vec![SystemId::Tm, SystemId::T4m, SystemId::T45m]);
    }

    #[test]
    fn typographic_notes_are_reported_once_per_table() {
        let report = deviation_report(&SystemId::ALL);
        let typo: Vec<_> = report
            .iter()
            .filter(|d| d.kind == DeviationKind::Typographic)
            .map(|d| d.table.as_str())
            .collect();
        assert_eq!(typo, vec!["Tm imp", "K45m box", "Tmd imp", "Tmd or"]);
    }
}
