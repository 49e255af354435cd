//! Multialgebras, Nmatrices and the twelve built-in systems.

mod builtin;
mod compare;
mod derived;
mod format;
pub mod printed;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::syntax::Connective;
use crate::values::{DomainKind, TruthValue, ValueSet};

pub use builtin::{builtin, builtin_with, Reading};
pub use compare::{deviation_report, Deviation, DeviationKind};
pub use derived::{derived_table, DerivedTable};
pub use format::{load, save};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NmatrixError {
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("line {line}: empty cell")]
    EmptyCell { line: usize },
    #[error("value {value} is outside the domain")]
    ValueOutsideDomain { value: TruthValue },
    #[error("missing cell {connective} {}", render_args(args))]
    MissingCell {
        connective: Connective,
        args: Vec<TruthValue>,
    },
    #[error("line {line}: duplicate cell")]
    DuplicateCell { line: usize },
    #[error("{connective} expects {expected} argument(s), got {got}")]
    ArityMismatch {
        connective: Connective,
        expected: usize,
        got: usize,
    },
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
}

fn render_args(args: &[TruthValue]) -> String {
    args.iter().map(|v| v.name()).collect::<Vec<_>>().join(" ")
}

/// The built-in systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    Tm,
    T4m,
    T45m,
    Dm,
    D4m,
    D45m,
    Km,
    K4m,
    K45m,
    Tmd,
    T4md,
    T45md,
}

/// Which of the three `□`/`◇` patterns a system uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModalVariant {
    Base,
    Four,
    FourFive,
}

impl SystemId {
    pub const ALL: [SystemId; 12] = [
        SystemId::Tm,
        SystemId::T4m,
        SystemId::T45m,
        SystemId::Dm,
        SystemId::D4m,
        SystemId::D45m,
        SystemId::Km,
        SystemId::K4m,
        SystemId::K45m,
        SystemId::Tmd,
        SystemId::T4md,
        SystemId::T45md,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::Tm => "Tm",
            SystemId::T4m => "T4m",
            SystemId::T45m => "T45m",
            SystemId::Dm => "Dm",
            SystemId::D4m => "D4m",
            SystemId::D45m => "D45m",
            SystemId::Km => "Km",
            SystemId::K4m => "K4m",
            SystemId::K45m => "K45m",
            SystemId::Tmd => "Tmd",
            SystemId::T4md => "T4md",
            SystemId::T45md => "T45md",
        }
    }

    pub fn domain_kind(self) -> DomainKind {
        use SystemId::*;
        match self {
            Tm | T4m | T45m | Tmd | T4md | T45md => DomainKind::Dom4,
            Dm | D4m | D45m => DomainKind::Dom6,
            Km | K4m | K45m => DomainKind::Dom8,
        }
    }

    pub fn modal_variant(self) -> ModalVariant {
        use SystemId::*;
        match self {
            Tm | Dm | Km | Tmd => ModalVariant::Base,
            T4m | D4m | K4m | T4md => ModalVariant::Four,
            T45m | D45m | K45m | T45md => ModalVariant::FourFive,
        }
    }

    /// Whether `→` is the single-valued join-based implication.
    pub fn deterministic_implication(self) -> bool {
        matches!(self, SystemId::Tmd | SystemId::T4md | SystemId::T45md)
    }

    /// The system of the same modal variant with the non-deterministic `→`
    /// whose `¬`, `□`, `◇` tables this one shares.
    pub fn modal_twin(self) -> SystemId {
        match self {
            SystemId::Tmd => SystemId::Tm,
            SystemId::T4md => SystemId::T4m,
            SystemId::T45md => SystemId::T45m,
            other => other,
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = NmatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let alias = match t {
            "Tm4d" => Some(SystemId::T4md),
            "Tm45d" => Some(SystemId::T45md),
            _ => None,
        };
        alias
            .or_else(|| {
                SystemId::ALL
                    .into_iter()
                    .find(|id| id.name() == t)
                    .or_else(|| SystemId::ALL.into_iter().find(|id| id.name().eq_ignore_ascii_case(t)))
            })
            .ok_or_else(|| NmatrixError::UnknownSystem(s.to_string()))
    }
}

impl Serialize for SystemId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One multioperation as a dense array of cells. Unary cells live at the
/// argument's ordinal, binary cells at `8 * x + y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Table {
    arity: u8,
    cells: [ValueSet; 64],
}

impl Table {
    pub fn new(arity: usize) -> Table {
        assert!(arity == 1 || arity == 2, "arity must be 1 or 2");
        Table {
            arity: arity as u8,
            cells: [ValueSet::EMPTY; 64],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    fn index(args: &[TruthValue]) -> usize {
        match args {
            [x] => x.ordinal(),
            [x, y] => x.ordinal() * 8 + y.ordinal(),
            _ => panic!("tables take one or two arguments"),
        }
    }

    pub fn get(&self, args: &[TruthValue]) -> ValueSet {
        self.cells[Self::index(args)]
    }

    pub fn set(&mut self, args: &[TruthValue], cell: ValueSet) {
        self.cells[Self::index(args)] = cell;
    }

    pub fn unary(&self, x: TruthValue) -> ValueSet {
        self.cells[x.ordinal()]
    }

    pub fn binary(&self, x: TruthValue, y: TruthValue) -> ValueSet {
        self.cells[x.ordinal() * 8 + y.ordinal()]
    }

    /// All argument tuples over `domain`, in canonical order.
    pub fn tuples(&self, domain: ValueSet) -> Vec<Vec<TruthValue>> {
        if self.arity == 1 {
            domain.iter().map(|x| vec![x]).collect()
        } else {
            domain
                .iter()
                .flat_map(|x| domain.iter().map(move |y| vec![x, y]))
                .collect()
        }
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for args in self.tuples(ValueSet::ALL) {
            let cell = self.get(&args);
            if !cell.is_empty() {
                m.entry(&render_args(&args), &cell);
            }
        }
        m.finish()
    }
}

/// A domain with one multioperation per connective.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multialgebra {
    pub domain: ValueSet,
    tables: [Table; 4],
}

impl Multialgebra {
    pub fn new(domain: ValueSet, neg: Table, imp: Table, boxt: Table, dia: Table) -> Multialgebra {
        Multialgebra {
            domain,
            tables: [neg, imp, boxt, dia],
        }
    }

    pub fn table(&self, c: Connective) -> &Table {
        &self.tables[c as usize]
    }

    pub fn table_mut(&mut self, c: Connective) -> &mut Table {
        &mut self.tables[c as usize]
    }

    /// Checks totality and nonemptiness over the domain, and that cells stay
    /// inside the domain.
    pub fn validate(&self) -> Result<(), NmatrixError> {
        for c in Connective::ALL {
            let t = self.table(c);
            if t.arity() != c.arity() {
                return Err(NmatrixError::ArityMismatch {
                    connective: c,
                    expected: c.arity(),
                    got: t.arity(),
                });
            }
            for args in t.tuples(self.domain) {
                let cell = t.get(&args);
                if cell.is_empty() {
                    return Err(NmatrixError::MissingCell { connective: c, args });
                }
                if let Some(v) = cell.difference(self.domain).iter().next() {
                    return Err(NmatrixError::ValueOutsideDomain { value: v });
                }
            }
        }
        Ok(())
    }
}

/// A multialgebra with a designated subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nmatrix {
    pub name: String,
    pub algebra: Multialgebra,
    pub designated: ValueSet,
}

impl Nmatrix {
    pub fn domain(&self) -> ValueSet {
        self.algebra.domain
    }

    pub fn table(&self, c: Connective) -> &Table {
        self.algebra.table(c)
    }

    pub fn is_designated(&self, v: TruthValue) -> bool {
        self.designated.contains(v)
    }

    /// The table cell for `c` at `args`.
    pub fn apply(&self, c: Connective, args: &[TruthValue]) -> Result<ValueSet, NmatrixError> {
        apply(&self.algebra, c, args)
    }
}

/// The cell of `c` at `args`, after checking arity and domain membership.
pub fn apply(m: &Multialgebra, c: Connective, args: &[TruthValue]) -> Result<ValueSet, NmatrixError> {
    if args.len() != c.arity() {
        return Err(NmatrixError::ArityMismatch {
            connective: c,
            expected: c.arity(),
            got: args.len(),
        });
    }
    if let Some(v) = args.iter().find(|v| !m.domain.contains(**v)) {
        return Err(NmatrixError::ValueOutsideDomain { value: *v });
    }
    Ok(m.table(c).get(args))
}

/// Domain inclusion plus cell-wise inclusion on every tuple over `a`'s domain.
pub fn is_submultialgebra(a: &Multialgebra, b: &Multialgebra) -> bool {
    a.domain.is_subset(b.domain)
        && Connective::ALL.iter().all(|&c| {
            let (ta, tb) = (a.table(c), b.table(c));
            ta.tuples(a.domain)
                .iter()
                .all(|args| ta.get(args).is_subset(tb.get(args)))
        })
}

/// For every designated `x` and undesignated `y`, no designated value lies in
/// `→(x, y)`: modus ponens then preserves designation.
pub fn mp_preserves_designation(nm: &Nmatrix) -> bool {
    let imp = nm.table(Connective::Imp);
    let dom = nm.domain();
    dom.intersection(nm.designated).iter().all(|x| {
        dom.difference(nm.designated)
            .iter()
            .all(|y| imp.binary(x, y).intersection(nm.designated).is_empty())
    })
}
