//! Rule-generated tables for the built-in systems.

use super::{printed, Multialgebra, ModalVariant, Nmatrix, SystemId, Table};
use crate::values::{domain, Mode, TruthValue, ValueSet};

/// Which cells to use where the printed tables and the flag rules disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reading {
    /// Rule-generated tables.
    #[default]
    Coherent,
    /// The printed tables, cell for cell.
    Printed,
}

/// The built-in Nmatrix of `id` with coherent cells.
pub fn builtin(id: SystemId) -> Nmatrix {
    builtin_with(id, Reading::Coherent)
}

pub fn builtin_with(id: SystemId, reading: Reading) -> Nmatrix {
    match reading {
        Reading::Coherent => generate(id),
        Reading::Printed => printed::printed_nmatrix(id),
    }
}

fn generate(id: SystemId) -> Nmatrix {
    let dom = domain(id.domain_kind());
    let values = dom.members;

    let mut neg = Table::new(1);
    let mut boxt = Table::new(1);
    let mut dia = Table::new(1);
    for x in values.iter() {
        neg.set(&[x], ValueSet::singleton(x.negate()));
        let (b, d) = modal_cells(id.modal_variant(), x, values);
        boxt.set(&[x], b);
        dia.set(&[x], d);
    }

    let mut imp = Table::new(2);
    for x in values.iter() {
        for y in values.iter() {
            let cell = if id.deterministic_implication() {
                ValueSet::singleton(join_implication(x, y))
            } else {
                implication_cell(x, y).intersection(values)
            };
            imp.set(&[x, y], cell);
        }
    }

    Nmatrix {
        name: id.name().to_string(),
        algebra: Multialgebra::new(values, neg, imp, boxt, dia),
        designated: dom.designated(),
    }
}

/// `□x` and `◇x`. `□` is designated exactly when `x` is necessary and `◇`
/// exactly when `x` is possible; the variants differ in which values inside
/// the designated or undesignated half are allowed.
fn modal_cells(variant: ModalVariant, x: TruthValue, values: ValueSet) -> (ValueSet, ValueSet) {
    let plus = values.designated();
    let minus = values.undesignated();
    let top = ValueSet::from([TruthValue::TPlus, TruthValue::IPlus]).intersection(values);
    let bottom = ValueSet::from([TruthValue::FMinus, TruthValue::IMinus]).intersection(values);
    let (n, p) = (x.necessary(), x.possible());
    match variant {
        ModalVariant::Base => (
            if n { plus } else { minus },
            if p { plus } else { minus },
        ),
        ModalVariant::Four => (
            if n { top } else { minus },
            if p { plus } else { bottom },
        ),
        ModalVariant::FourFive => (
            if n { top } else { bottom },
            if p { top } else { bottom },
        ),
    }
}

/// The non-deterministic `→` over all eight values. The sign is classical;
/// the mode follows the antecedent and consequent modes, with `I` absorbing.
pub fn implication_cell(x: TruthValue, y: TruthValue) -> ValueSet {
    let modes: &[Mode] = match (x.mode(), y.mode()) {
        (Mode::I, _) | (_, Mode::I) => &[Mode::I],
        (Mode::F, _) | (_, Mode::T) => &[Mode::T],
        (Mode::T, Mode::C) => &[Mode::C],
        (Mode::T, Mode::F) => &[Mode::F],
        (Mode::C, Mode::C) => &[Mode::T, Mode::C],
        (Mode::C, Mode::F) => &[Mode::C],
    };
    let sign = !x.actual() || y.actual();
    modes.iter().map(|&m| TruthValue::from_mode(m, sign)).collect()
}

/// Position on the chain `F− < C− < C+ < T+`.
fn chain_rank(v: TruthValue) -> u8 {
    match v {
        TruthValue::FMinus => 0,
        TruthValue::CMinus => 1,
        TruthValue::CPlus => 2,
        TruthValue::TPlus => 3,
        other => panic!("{other} is not on the four-element chain"),
    }
}

fn chain_value(rank: u8) -> TruthValue {
    [
        TruthValue::FMinus,
        TruthValue::CMinus,
        TruthValue::CPlus,
        TruthValue::TPlus,
    ][rank as usize]
}

/// `x → y = max(¬x, y)` on the four-element chain.
pub fn join_implication(x: TruthValue, y: TruthValue) -> TruthValue {
    chain_value((3 - chain_rank(x)).max(chain_rank(y)))
}
