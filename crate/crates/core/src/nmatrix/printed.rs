//! Verbatim transcription of the published tables.
//!
//! Rows and columns follow the printed order. A cell is `+` or `-` (the
//! designated or undesignated half of the domain) or a comma-separated list
//! of values. Typographic defects that do not change a cell's reading are
//! listed in [`typographic_notes`].

use super::{Multialgebra, Nmatrix, SystemId, Table};
use crate::syntax::Connective;
use crate::values::{domain, DomainKind, TruthValue, ValueSet};

const ORDER4: &str = "T+ C+ C- F-";
const ORDER6: &str = "T+ C+ F+ T- C- F-";
const ORDER8: &str = "T+ C+ F+ I+ T- C- F- I-";

const TM_NEG: &str = "F- | C- | C+ | T+";
const TM_IMP: [&str; 4] = [
    "T+ | C+ | C- | F-",
    "T+ | +  | C- | C-",
    "T+ | +  | +  | C-",
    "T+ | T+ | T+ | T+",
];
const TM_BOX: &str = "+ | - | - | -";
const TM_DIA: &str = "+ | + | + | -";
const T4M_BOX: &str = "T+ | - | - | -";
const T4M_DIA: &str = "+ | + | + | F-";
const T45M_BOX: &str = "T+ | F- | F- | F-";
const T45M_DIA: &str = "T+ | T+ | T+ | F-";

const TMD_IMP: [&str; 4] = [
    "T+ | C+ | C- | F-",
    "T+ | C+ | C- | C-",
    "T+ | C+ | C+ | C+",
    "T+ | T+ | T+ | T+",
];
const TMD_OR: [&str; 4] = [
    "T+ | T+ | T+ | T+",
    "T+ | C+ | C+ | C+",
    "T+ | C+ | C- | C-",
    "T+ | C+ | C- | F-",
];

const DM_NEG: &str = "T- | C- | F- | F+ | C+ | T+";
const DM_IMP: [&str; 6] = [
    "T+ | C+    | F+ | T- | C-    | F-",
    "T+ | T+,C+ | C+ | T- | T-,C- | C-",
    "T+ | T+    | T+ | T- | T-    | T-",
    "T+ | C+    | F+ | T+ | C+    | F+",
    "T+ | T+,C+ | C+ | T+ | T+,C+ | C+",
    "T+ | T+    | T+ | T+ | T+    | T+",
];
const DM_BOX: &str = "+ | - | - | + | - | -";
const DM_DIA: &str = "+ | + | - | + | + | -";
const D4M_BOX: &str = "T+ | - | - | T+ | - | -";
const D4M_DIA: &str = "+ | + | F- | + | + | F-";
const D45M_BOX: &str = "T+ | F- | F- | F- | F- | F-";
const D45M_DIA: &str = "T+ | T+ | F- | T+ | T+ | F-";

const KM_NEG: &str = "F- | C- | T- | I- | F+ | C+ | T+ | I+";
const KM_IMP: [&str; 8] = [
    "T+ | C+    | F+ | I+ | T- | C-    | F- | I-",
    "T+ | T+,C+ | C+ | I+ | T- | T-,C- | C- | I-",
    "T+ | T+    | T+ | I+ | T- | T-    | T- | I-",
    "I+ | I+    | I+ | I+ | I- | I-    | I- | I-",
    "T+ | C+    | F+ | I+ | T+ | C+    | F+ | I+",
    "T+ | T+,C+ | C+ | I+ | T+ | T+,C+ | C+ | I+",
    "T+ | T+    | T+ | I+ | T+ | T+    | T+ | I+",
    "I+ | I+    | I+ | I+ | I+ | I+    | I+ | I+",
];
const KM_BOX: &str = "+ | - | - | + | + | - | - | +";
const KM_DIA: &str = "+ | + | - | - | + | + | - | -";
const K4M_BOX: &str = "T+,I+ | - | - | T+,I+ | T+,I+ | - | - | T+,I+";
const K4M_DIA: &str = "+ | + | F-,I- | F-,I- | + | + | F-,I- | F-,I-";
const K45M_BOX: &str = "T+,I+ | F-,I- | F-,I- | T+,I+ | T+,I+ | F-,I- | F-,I- | T+,I+";
const K45M_DIA: &str = "T+,I+ | T+,I+ | F-,I- | F-,I- | T+,I+ | T+,I+ | F-,I- | F-,I-";

const KM_OR: [&str; 8] = [
    "T+ | T+    | T+ | I+ | T+ | T+    | T+ | I+",
    "T+ | T+,C+ | C+ | I+ | T+ | T+,C+ | C+ | I+",
    "T+ | C+    | F+ | I+ | T+ | C+    | F+ | I+",
    "I+ | I+    | I+ | I+ | I+ | I+    | I+ | I+",
    "T+ | T+    | T+ | I+ | T- | T-    | T- | I-",
    "T+ | T+,C+ | C+ | I+ | T- | T-,C- | C- | I-",
    "T+ | C+    | F+ | I+ | T- | C-    | F- | I-",
    "I+ | I+    | I+ | I+ | I- | I-    | I- | I-",
];
const KM_AND: [&str; 8] = [
    "T+ | C+    | F+ | I+ | T- | C-    | F- | I-",
    "C+ | F+,C+ | F+ | I+ | C- | F-,C- | F- | I-",
    "F+ | F+    | F+ | I+ | F- | F-    | F- | I-",
    "I+ | I+    | I+ | I+ | I- | I-    | I- | I-",
    "T- | C-    | F- | I- | T- | C-    | F- | I-",
    "C- | F-,C- | F- | I- | C- | F-,C- | C- | I-",
    "F- | F-    | F- | I- | F- | F-    | F- | I-",
    "I- | I-    | I- | I- | I- | I-    | I- | I-",
];

/// A printed cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedCell {
    pub args: Vec<TruthValue>,
    pub cell: ValueSet,
}

/// A defect in the printed layout that leaves the cell's reading intact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypographicNote {
    pub system: SystemId,
    pub table: &'static str,
    pub args: Vec<TruthValue>,
    pub printed: &'static str,
    pub note: &'static str,
}

pub fn typographic_notes() -> Vec<TypographicNote> {
    use TruthValue::*;
    vec![
        TypographicNote {
            system: SystemId::Tm,
            table: "imp",
            args: vec![FMinus, CMinus],
            printed: "{T+",
            note: "closing brace missing; read as {T+}",
        },
        TypographicNote {
            system: SystemId::Tmd,
            table: "imp",
            args: vec![FMinus],
            printed: "C-",
            note: "fourth row labelled C- instead of F-; read as row F-",
        },
        TypographicNote {
            system: SystemId::Tmd,
            table: "or",
            args: vec![FMinus],
            printed: "C-",
            note: "fourth row labelled C- instead of F-; read as row F-",
        },
        TypographicNote {
            system: SystemId::K45m,
            table: "box",
            args: vec![IPlus],
            printed: "{T+ I+}",
            note: "comma missing; read as {T+,I+}",
        },
    ]
}

fn order(kind: DomainKind) -> Vec<TruthValue> {
    let s = match kind {
        DomainKind::Dom4 => ORDER4,
        DomainKind::Dom6 => ORDER6,
        DomainKind::Dom8 => ORDER8,
    };
    s.split_whitespace().map(|t| t.parse().unwrap()).collect()
}

fn parse_cell(token: &str, kind: DomainKind) -> ValueSet {
    let dom = domain(kind);
    match token.trim() {
        "+" => dom.designated(),
        "-" => dom.undesignated(),
        list => list
            .split(',')
            .map(|t| t.trim().parse::<TruthValue>().expect("transcription uses valid names"))
            .collect(),
    }
}

fn column(row: &str, kind: DomainKind) -> Vec<PrintedCell> {
    order(kind)
        .into_iter()
        .zip(row.split('|'))
        .map(|(x, tok)| PrintedCell {
            args: vec![x],
            cell: parse_cell(tok, kind),
        })
        .collect()
}

fn grid(rows: &[&str], kind: DomainKind) -> Vec<PrintedCell> {
    let ord = order(kind);
    ord.iter()
        .zip(rows)
        .flat_map(|(&x, row)| {
            ord.iter().zip(row.split('|')).map(move |(&y, tok)| PrintedCell {
                args: vec![x, y],
                cell: parse_cell(tok, kind),
            })
        })
        .collect()
}

/// The printed table of `c` for `id`, in printed order.
pub fn printed_table(id: SystemId, c: Connective) -> Vec<PrintedCell> {
    use SystemId::*;
    let kind = id.domain_kind();
    match c {
        Connective::Neg => column(
            match kind {
                DomainKind::Dom4 => TM_NEG,
                DomainKind::Dom6 => DM_NEG,
                DomainKind::Dom8 => KM_NEG,
            },
            kind,
        ),
        Connective::Imp => match id {
            Tmd | T4md | T45md => grid(&TMD_IMP, kind),
            Tm | T4m | T45m => grid(&TM_IMP, kind),
            Dm | D4m | D45m => grid(&DM_IMP, kind),
            Km | K4m | K45m => grid(&KM_IMP, kind),
        },
        Connective::Box | Connective::Dia => {
            let (b, d) = match id.modal_twin() {
                Tm => (TM_BOX, TM_DIA),
                T4m => (T4M_BOX, T4M_DIA),
                T45m => (T45M_BOX, T45M_DIA),
                Dm => (DM_BOX, DM_DIA),
                D4m => (D4M_BOX, D4M_DIA),
                D45m => (D45M_BOX, D45M_DIA),
                Km => (KM_BOX, KM_DIA),
                K4m => (K4M_BOX, K4M_DIA),
                K45m => (K45M_BOX, K45M_DIA),
                Tmd | T4md | T45md => unreachable!(),
            };
            column(if c == Connective::Box { b } else { d }, kind)
        }
    }
}

/// The printed `∨` table of Km.
pub fn printed_km_or() -> Vec<PrintedCell> {
    grid(&KM_OR, DomainKind::Dom8)
}

/// The printed `∧` table of Km.
pub fn printed_km_and() -> Vec<PrintedCell> {
    grid(&KM_AND, DomainKind::Dom8)
}

/// The printed `∨` table of the deterministic-implication systems.
pub fn printed_join_or() -> Vec<PrintedCell> {
    grid(&TMD_OR, DomainKind::Dom4)
}

/// An Nmatrix built from the printed tables only.
pub fn printed_nmatrix(id: SystemId) -> Nmatrix {
    let dom = domain(id.domain_kind());
    let build = |c: Connective| {
        let mut t = Table::new(c.arity());
        for pc in printed_table(id, c) {
            t.set(&pc.args, pc.cell);
        }
        t
    };
    Nmatrix {
        name: id.name().to_string(),
        algebra: Multialgebra::new(
            dom.members,
            build(Connective::Neg),
            build(Connective::Imp),
            build(Connective::Box),
            build(Connective::Dia),
        ),
        designated: dom.designated(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription_shapes() {
        for id in SystemId::ALL {
            let n = id_len(id);
            assert_eq!(printed_table(id, Connective::Neg).len(), n);
            assert_eq!(printed_table(id, Connective::Imp).len(), n * n);
            assert_eq!(printed_table(id, Connective::Box).len(), n);
            assert_eq!(printed_table(id, Connective::Dia).len(), n);
            printed_nmatrix(id).algebra.validate().unwrap();
        }
        assert_eq!(printed_km_or().len(), 64);
        assert_eq!(printed_km_and().len(), 64);
        assert_eq!(printed_join_or().len(), 16);
    }

    fn id_len(id: SystemId) -> usize {
        domain(id.domain_kind()).members.len()
    }
}
