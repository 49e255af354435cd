//! The eight modal truth-values and the 4-, 6- and 8-valued domains.
//!
//! Every value is a triple of flags `(necessary, possible, actual)`. The mode
//! (`T`, `C`, `F`, `I`) is read off the first two flags and the sign off the
//! third; a value is designated exactly when its `actual` flag is set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One of the eight truth-values.
///
/// The declaration order is the canonical value ordering used everywhere a
/// deterministic enumeration is needed (search order, file output, reports).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum TruthValue {
    TPlus = 0,
    CPlus = 1,
    FPlus = 2,
    IPlus = 3,
    TMinus = 4,
    CMinus = 5,
    FMinus = 6,
    IMinus = 7,
}

/// The modal part of a truth-value, ignoring its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Mode {
    /// necessary and possible
    T,
    /// possible but not necessary (contingent)
    C,
    /// neither necessary nor possible
    F,
    /// necessary but impossible
    I,
}

impl TruthValue {
    pub const ALL: [TruthValue; 8] = [
        TruthValue::TPlus,
        TruthValue::CPlus,
        TruthValue::FPlus,
        TruthValue::IPlus,
        TruthValue::TMinus,
        TruthValue::CMinus,
        TruthValue::FMinus,
        TruthValue::IMinus,
    ];

    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn from_ordinal(ordinal: usize) -> Option<TruthValue> {
        Self::ALL.get(ordinal).copied()
    }

    /// Builds the value with the given flags.
    pub fn from_flags(necessary: bool, possible: bool, actual: bool) -> TruthValue {
        let mode = match (necessary, possible) {
            (true, true) => Mode::T,
            (false, true) => Mode::C,
            (false, false) => Mode::F,
            (true, false) => Mode::I,
        };
        TruthValue::from_mode(mode, actual)
    }

    pub fn from_mode(mode: Mode, actual: bool) -> TruthValue {
        use TruthValue::*;
        match (mode, actual) {
            (Mode::T, true) => TPlus,
            (Mode::C, true) => CPlus,
            (Mode::F, true) => FPlus,
            (Mode::I, true) => IPlus,
            (Mode::T, false) => TMinus,
            (Mode::C, false) => CMinus,
            (Mode::F, false) => FMinus,
            (Mode::I, false) => IMinus,
        }
    }

    pub fn necessary(self) -> bool {
        matches!(self.mode(), Mode::T | Mode::I)
    }

    pub fn possible(self) -> bool {
        matches!(self.mode(), Mode::T | Mode::C)
    }

    pub fn actual(self) -> bool {
        self.ordinal() < 4
    }

    pub fn flags(self) -> (bool, bool, bool) {
        (self.necessary(), self.possible(), self.actual())
    }

    pub fn mode(self) -> Mode {
        match self.ordinal() % 4 {
            0 => Mode::T,
            1 => Mode::C,
            2 => Mode::F,
            _ => Mode::I,
        }
    }

    /// Designated values are exactly the actually true ones.
    pub fn designated(self) -> bool {
        self.actual()
    }

    /// Negation swaps necessity of the argument with impossibility of the
    /// result: `(n, p, a)` goes to `(¬p, ¬n, ¬a)`.
    pub fn negate(self) -> TruthValue {
        let (n, p, a) = self.flags();
        TruthValue::from_flags(!p, !n, !a)
    }

    pub fn name(self) -> &'static str {
        match self {
            TruthValue::TPlus => "T+",
            TruthValue::CPlus => "C+",
            TruthValue::FPlus => "F+",
            TruthValue::IPlus => "I+",
            TruthValue::TMinus => "T-",
            TruthValue::CMinus => "C-",
            TruthValue::FMinus => "F-",
            TruthValue::IMinus => "I-",
        }
    }
}

/// Free-function form of [`TruthValue::mode`].
pub fn mode(v: TruthValue) -> Mode {
    v.mode()
}

/// Free-function form of [`TruthValue::negate`].
pub fn negate_value(v: TruthValue) -> TruthValue {
    v.negate()
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown truth-value `{0}`")]
pub struct UnknownValue(pub String);

impl FromStr for TruthValue {
    type Err = UnknownValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = s.trim().replace(['−', '–'], "-").replace('⁺', "+").replace('⁻', "-");
        TruthValue::ALL
            .iter()
            .copied()
            .find(|v| v.name() == normalized)
            .ok_or_else(|| UnknownValue(s.to_string()))
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of truth-values, stored as a bitmask over value ordinals.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ValueSet(u8);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);
    pub const ALL: ValueSet = ValueSet(0xff);

    pub const fn from_bits(bits: u8) -> ValueSet {
        ValueSet(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn singleton(v: TruthValue) -> ValueSet {
        ValueSet(1 << v.ordinal())
    }

    pub fn contains(self, v: TruthValue) -> bool {
        self.0 & (1 << v.ordinal()) != 0
    }

    pub fn insert(&mut self, v: TruthValue) {
        self.0 |= 1 << v.ordinal();
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 & other.0)
    }

    pub fn difference(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ValueSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The only member, if there is exactly one.
    pub fn single(self) -> Option<TruthValue> {
        if self.len() == 1 {
            TruthValue::from_ordinal(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Members in canonical value order.
    pub fn iter(self) -> impl Iterator<Item = TruthValue> {
        TruthValue::ALL.into_iter().filter(move |v| self.contains(*v))
    }

    pub fn designated(self) -> ValueSet {
        self.intersection(ValueSet(0x0f))
    }

    pub fn undesignated(self) -> ValueSet {
        self.intersection(ValueSet(0xf0))
    }

    /// Members whose mode is one of `modes`.
    pub fn with_modes(self, modes: &[Mode]) -> ValueSet {
        self.iter().filter(|v| modes.contains(&v.mode())).collect()
    }

    /// Image of the set under a function on values.
    pub fn map(self, f: impl Fn(TruthValue) -> TruthValue) -> ValueSet {
        self.iter().map(f).collect()
    }
}

impl FromIterator<TruthValue> for ValueSet {
    fn from_iter<I: IntoIterator<Item = TruthValue>>(iter: I) -> Self {
        let mut set = ValueSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<const N: usize> From<[TruthValue; N]> for ValueSet {
    fn from(values: [TruthValue; N]) -> Self {
        values.into_iter().collect()
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(v.name())?;
        }
        f.write_str("}")
    }
}

impl Serialize for ValueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// The three value domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DomainKind {
    /// `n ≤ a ≤ p`: necessity implies actuality implies possibility.
    Dom4,
    /// `n ≤ p`: necessity implies possibility.
    Dom6,
    /// No constraint.
    Dom8,
}

/// A domain together with its member set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Domain {
    pub kind: DomainKind,
    pub members: ValueSet,
}

impl Domain {
    pub fn designated(&self) -> ValueSet {
        self.members.designated()
    }

    pub fn undesignated(&self) -> ValueSet {
        self.members.undesignated()
    }
}

pub fn domain(kind: DomainKind) -> Domain {
    let keep = |v: &TruthValue| {
        let (n, p, a) = v.flags();
        match kind {
            DomainKind::Dom4 => (!n || a) && (!a || p),
            DomainKind::Dom6 => !n || p,
            DomainKind::Dom8 => true,
        }
    };
    Domain {
        kind,
        members: TruthValue::ALL.iter().copied().filter(keep).collect(),
    }
}
