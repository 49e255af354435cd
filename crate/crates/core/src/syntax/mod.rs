//! Modal formulas over `¬`, `→`, `□`, `◇`, with parsing, printing and schemas.

mod parser;
mod render;
mod schema;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use parser::parse;
pub use render::{render, render_sugared};
pub use schema::{binding_of, instantiate, match_schema, Binding};

/// A formula tree. Children are reference counted, so clones are cheap and
/// subtrees may be shared; equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    /// Schema metavariable (an uppercase name such as `A`).
    Meta(Arc<str>),
    Neg(Arc<Formula>),
    Imp(Arc<Formula>, Arc<Formula>),
    Box(Arc<Formula>),
    Dia(Arc<Formula>),
}

/// A formula whose leaves may be metavariables.
pub type Schema = Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    Unexpected {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("no binding for metavariable `{0}`")]
    MissingBinding(String),
}

impl SyntaxError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            SyntaxError::Unexpected { offset, .. } => Some(*offset),
            SyntaxError::MissingBinding(_) => None,
        }
    }
}

/// The connectives that carry a table in an Nmatrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Connective {
    Neg,
    Imp,
    Box,
    Dia,
}

impl Connective {
    pub const ALL: [Connective; 4] = [
        Connective::Neg,
        Connective::Imp,
        Connective::Box,
        Connective::Dia,
    ];

    pub fn arity(self) -> usize {
        match self {
            Connective::Imp => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Connective::Neg => "neg",
            Connective::Imp => "imp",
            Connective::Box => "box",
            Connective::Dia => "dia",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Neg => "~",
            Connective::Imp => "->",
            Connective::Box => "[]",
            Connective::Dia => "<>",
        }
    }

    /// Accepts the file-format names, the ASCII symbols and the Unicode ones.
    pub fn from_name(s: &str) -> Option<Connective> {
        match s.trim() {
            "neg" | "~" | "¬" | "not" => Some(Connective::Neg),
            "imp" | "->" | "→" => Some(Connective::Imp),
            "box" | "[]" | "□" => Some(Connective::Box),
            "dia" | "<>" | "◇" => Some(Connective::Dia),
            _ => None,
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Arc::from(name))
    }

    pub fn meta(name: &str) -> Formula {
        Formula::Meta(Arc::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Arc::new(a))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Arc::new(a), Arc::new(b))
    }

    pub fn boxed(a: Formula) -> Formula {
        Formula::Box(Arc::new(a))
    }

    pub fn dia(a: Formula) -> Formula {
        Formula::Dia(Arc::new(a))
    }

    /// `a ∨ b` as `¬a → b`.
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::imp(Formula::neg(a), b)
    }

    /// `a ∧ b` as `¬(a → ¬b)`.
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::neg(Formula::imp(a, Formula::neg(b)))
    }

    /// `∘a` as `□a → ◇a`.
    pub fn circ(a: Formula) -> Formula {
        Formula::imp(Formula::boxed(a.clone()), Formula::dia(a))
    }

    /// `•a` as `¬(□a → ◇a)`.
    pub fn bullet(a: Formula) -> Formula {
        Formula::neg(Formula::circ(a))
    }

    /// `∘′a` as `(□a → a) ∧ (□¬a → ¬a)`.
    pub fn circ_prime(a: Formula) -> Formula {
        let na = Formula::neg(a.clone());
        Formula::and(
            Formula::imp(Formula::boxed(a.clone()), a),
            Formula::imp(Formula::boxed(na.clone()), na),
        )
    }

    /// Left-associated disjunction of a nonempty list.
    pub fn big_or(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::or)
    }

    /// The top connective, or `None` for leaves.
    pub fn connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) | Formula::Meta(_) => None,
            Formula::Neg(_) => Some(Connective::Neg),
            Formula::Imp(..) => Some(Connective::Imp),
            Formula::Box(_) => Some(Connective::Box),
            Formula::Dia(_) => Some(Connective::Dia),
        }
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) | Formula::Meta(_) => vec![],
            Formula::Neg(a) | Formula::Box(a) | Formula::Dia(a) => vec![a],
            Formula::Imp(a, b) => vec![a, b],
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Formula::Atom(_) | Formula::Meta(_))
    }

    /// Number of nodes in the tree, counting shared subtrees once per occurrence.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Maximum nesting of `□`/`◇`.
    pub fn modal_depth(&self) -> usize {
        let inner = self
            .children()
            .iter()
            .map(|c| c.modal_depth())
            .max()
            .unwrap_or(0);
        match self {
            Formula::Box(_) | Formula::Dia(_) => inner + 1,
            _ => inner,
        }
    }

    /// Distinct atom names in order of first occurrence (left to right).
    pub fn atoms(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out, false);
        out
    }

    /// Distinct metavariable names in order of first occurrence.
    pub fn metavars(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out, true);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Arc<str>>, metas: bool) {
        match self {
            Formula::Atom(n) if !metas => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            Formula::Meta(n) if metas => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            _ => {
                for c in self.children() {
                    c.collect_leaves(out, metas);
                }
            }
        }
    }

    /// Whether only `¬` and `→` occur.
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Meta(_) => true,
            Formula::Neg(a) => a.is_propositional(),
            Formula::Imp(a, b) => a.is_propositional() && b.is_propositional(),
            Formula::Box(_) | Formula::Dia(_) => false,
        }
    }

    /// Replaces every metavariable by the atom of the same name in lowercase.
    pub fn skeleton(&self) -> Formula {
        self.map_leaves(&|leaf| match leaf {
            Formula::Meta(n) => Formula::atom(&n.to_lowercase()),
            other => other.clone(),
        })
    }

    /// Rebuilds the tree with every leaf replaced by `f(leaf)`.
    pub fn map_leaves(&self, f: &dyn Fn(&Formula) -> Formula) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Meta(_) => f(self),
            Formula::Neg(a) => Formula::neg(a.map_leaves(f)),
            Formula::Imp(a, b) => Formula::imp(a.map_leaves(f), b.map_leaves(f)),
            Formula::Box(a) => Formula::boxed(a.map_leaves(f)),
            Formula::Dia(a) => Formula::dia(a.map_leaves(f)),
        }
    }

    /// Rewrites every `◇φ` as `¬□¬φ`.
    pub fn expand_diamonds(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Meta(_) => self.clone(),
            Formula::Neg(a) => Formula::neg(a.expand_diamonds()),
            Formula::Imp(a, b) => Formula::imp(a.expand_diamonds(), b.expand_diamonds()),
            Formula::Box(a) => Formula::boxed(a.expand_diamonds()),
            Formula::Dia(a) => {
                Formula::neg(Formula::boxed(Formula::neg(a.expand_diamonds())))
            }
        }
    }
}

/// Node of the tree `expand_diamonds` would build, without building it.
#[derive(Clone, Copy)]
enum Expanded<'a> {
    Real(&'a Formula),
    /// `□¬x`
    BoxNeg(&'a Formula),
    /// `¬x`
    NegOf(&'a Formula),
}

enum Head<'a> {
    Leaf(&'a Formula),
    Neg(Expanded<'a>),
    Box(Expanded<'a>),
    Imp(&'a Formula, &'a Formula),
}

fn head(n: Expanded<'_>) -> Head<'_> {
    match n {
        Expanded::Real(f) => match f {
            Formula::Atom(_) | Formula::Meta(_) => Head::Leaf(f),
            Formula::Neg(a) => Head::Neg(Expanded::Real(a)),
            Formula::Box(a) => Head::Box(Expanded::Real(a)),
            Formula::Dia(a) => Head::Neg(Expanded::BoxNeg(a)),
            Formula::Imp(a, b) => Head::Imp(a, b),
        },
        Expanded::BoxNeg(a) => Head::Box(Expanded::NegOf(a)),
        Expanded::NegOf(a) => Head::Neg(Expanded::Real(a)),
    }
}

fn expanded_eq(x: Expanded<'_>, y: Expanded<'_>) -> bool {
    if let (Expanded::Real(a), Expanded::Real(b)) = (x, y) {
        if std::ptr::eq(a, b) {
            return true;
        }
    }
    match (head(x), head(y)) {
        (Head::Leaf(a), Head::Leaf(b)) => a == b,
        (Head::Neg(a), Head::Neg(b)) | (Head::Box(a), Head::Box(b)) => expanded_eq(a, b),
        (Head::Imp(a1, b1), Head::Imp(a2, b2)) => {
            expanded_eq(Expanded::Real(a1), Expanded::Real(a2)) && expanded_eq(Expanded::Real(b1), Expanded::Real(b2))
        }
        _ => false,
    }
}

impl Formula {
    /// `a.expand_diamonds() == b.expand_diamonds()`, without allocating.
    pub fn eq_modulo_diamonds(&self, other: &Formula) -> bool {
        expanded_eq(Expanded::Real(self), Expanded::Real(other))
    }

    /// Structural equality that stops early on shared subtrees.
    pub fn eq_shared(&self, other: &Formula) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        match (self, other) {
            (Formula::Neg(a), Formula::Neg(b)) | (Formula::Box(a), Formula::Box(b)) | (Formula::Dia(a), Formula::Dia(b)) => {
                Arc::ptr_eq(a, b) || a.eq_shared(b)
            }
            (Formula::Imp(a1, b1), Formula::Imp(a2, b2)) => {
                (Arc::ptr_eq(a1, a2) || a1.eq_shared(a2)) && (Arc::ptr_eq(b1, b2) || b1.eq_shared(b2))
            }
            _ => self == other,
        }
    }
}

/// All distinct subformulas, children before parents.
pub fn subformulas(f: &Formula) -> Vec<Formula> {
    subformulas_of_all(std::slice::from_ref(f))
}

/// Distinct subformulas of several formulas, children before parents, in
/// order of first completion in a left-to-right post-order walk.
pub fn subformulas_of_all(fs: &[Formula]) -> Vec<Formula> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in fs {
        post_order(f, &mut seen, &mut out);
    }
    out
}

fn post_order(f: &Formula, seen: &mut HashSet<Formula>, out: &mut Vec<Formula>) {
    if seen.contains(f) {
        return;
    }
    for c in f.children() {
        post_order(c, seen, out);
    }
    seen.insert(f.clone());
    out.push(f.clone());
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", render(self))
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&render(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Premises and a conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Sequent {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Sequent {
        Sequent {
            premises,
            conclusion,
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prem: Vec<String> = self.premises.iter().map(render).collect();
        write!(f, "{} |= {}", prem.join(", "), render(&self.conclusion))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn subformula_order() {
        assert_eq!(subformulas(&p("[]p -> p")), vec![p("p"), p("[]p"), p("[]p -> p")]);
        assert_eq!(subformulas(&p("p")), vec![p("p")]);
        assert_eq!(subformulas(&p("~(p -> p)")), vec![p("p"), p("p -> p"), p("~(p -> p)")]);
    }

    #[test]
    fn atoms_in_first_occurrence_order() {
        let names: Vec<String> = p("q -> (p -> q)").atoms().iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["q", "p"]);
    }

    #[test]
    fn diamond_expansion() {
        assert_eq!(p("<>p -> <>~p").expand_diamonds(), p("~[]~p -> ~[]~~p"));
    }

    #[test]
    fn measures() {
        let f = p("[](p -> <>q)");
        assert_eq!(f.size(), 5);
        assert_eq!(f.depth(), 4);
        assert_eq!(f.modal_depth(), 2);
        assert!(!f.is_propositional());
        assert!(p("~p -> q").is_propositional());
    }
}
