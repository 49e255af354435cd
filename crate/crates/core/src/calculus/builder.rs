//! Programmatic construction of derivations, with a few classical lemmas.

use super::axioms::axioms_of;
use super::derivation::{deduction_transform, Derivation, Justification, Step};
use crate::nmatrix::SystemId;
use crate::syntax::{instantiate, Binding, Formula};

/// Appends steps to a derivation and returns their indices.
///
/// # Panics
///
/// The builder panics when asked for a step that would not check: an
/// unknown axiom, a missing binding, or an `mp` whose major premise has the
/// wrong shape. It is meant for writing proofs, where such a mistake is a bug.
#[derive(Clone, Debug)]
pub struct ProofBuilder {
    d: Derivation,
}

impl ProofBuilder {
    pub fn new(system: SystemId, hyps: Vec<Formula>) -> ProofBuilder {
        ProofBuilder {
            d: Derivation::new(system, hyps),
        }
    }

    pub fn with_diamond_abbrev(mut self) -> ProofBuilder {
        self.d.diamond_abbrev = true;
        self
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.d.steps[i].formula
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        self.d.steps.push(Step { formula, just });
        self.d.steps.len() - 1
    }

    pub fn hyp(&mut self, f: Formula) -> usize {
        assert!(
            self.d.hyps.iter().any(|h| self.d.same(h, &f)),
            "{f} is not a hypothesis"
        );
        self.push(f, Justification::Hyp)
    }

    pub fn ax(&mut self, name: &str, pairs: &[(&str, &Formula)]) -> usize {
        let schema = axioms_of(self.d.system)
            .into_iter()
            .find(|a| a.name == name)
            .unwrap_or_else(|| panic!("({name}) is not an axiom of {}", self.d.system));
        let binding: Binding = pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect();
        let f = instantiate(&schema.schema, &binding).expect("binding covers the schema");
        self.push(
            f,
            Justification::Ax {
                name: name.to_string(),
                binding: Some(binding),
            },
        )
    }

    /// From `a` at `i` and `a → b` at `j`, adds `b`.
    pub fn mp(&mut self, i: usize, j: usize) -> usize {
        let Formula::Imp(a, b) = self.formula(j).clone() else {
            panic!("step {} is not an implication", j + 1);
        };
        assert!(self.d.same(&a, self.formula(i)), "mp {} {}: antecedent mismatch", i + 1, j + 1);
        self.push((*b).clone(), Justification::Mp(i, j))
    }

    /// Rewrites the formula of step `i` as `f`, which must agree with it up
    /// to the diamond abbreviation.
    pub fn restate(&mut self, i: usize, f: Formula) -> usize {
        assert!(self.d.same(&f, self.formula(i)), "restate changes the formula");
        self.d.steps[i].formula = f;
        i
    }

    /// Copies the steps of `lemma`, whose hypotheses must be among this
    /// builder's, and returns the index of its conclusion.
    pub fn include(&mut self, lemma: &Derivation) -> usize {
        let base = self.d.steps.len();
        for s in &lemma.steps {
            let just = match &s.just {
                Justification::Mp(i, j) => Justification::Mp(base + i, base + j),
                other => other.clone(),
            };
            if just == Justification::Hyp {
                assert!(self.d.hyps.iter().any(|h| self.d.same(h, &s.formula)));
            }
            self.push(s.formula.clone(), just);
        }
        self.d.steps.len() - 1
    }

    /// From `b` at `i`, adds `a → b`.
    pub fn weaken(&mut self, i: usize, a: &Formula) -> usize {
        let b = self.formula(i).clone();
        let k = self.ax("A1", &[("A", &b), ("B", a)]);
        self.mp(i, k)
    }

    /// From `a → b` at `i` and `b → c` at `j`, adds `a → c`.
    pub fn chain(&mut self, i: usize, j: usize) -> usize {
        let (a, b) = split_imp(self.formula(i));
        let (_, c) = split_imp(self.formula(j));
        let w = self.weaken(j, &a);
        let a2 = self.ax("A2", &[("A", &a), ("B", &b), ("C", &c)]);
        let k = self.mp(w, a2);
        self.mp(i, k)
    }

    /// From `a → (b → c)` at `i` and `b` at `j`, adds `a → c`.
    pub fn skip(&mut self, i: usize, j: usize) -> usize {
        let (a, bc) = split_imp(self.formula(i));
        let (b, c) = split_imp(&bc);
        let a2 = self.ax("A2", &[("A", &a), ("B", &b), ("C", &c)]);
        let k = self.mp(i, a2);
        let w = self.weaken(j, &a);
        self.mp(w, k)
    }

    /// Applies a theorem `a → b` to `a` at `i`.
    pub fn apply(&mut self, i: usize, theorem: &Derivation) -> usize {
        let t = self.include(theorem);
        self.mp(i, t)
    }

    pub fn finish(self) -> Derivation {
        self.d
    }
}

fn split_imp(f: &Formula) -> (Formula, Formula) {
    match f {
        Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
        other => panic!("{other} is not an implication"),
    }
}

/// Discharges `hyps` from the end backwards, turning `Γ, h1, …, hn ⊢ β` into
/// `Γ ⊢ h1 → (… → (hn → β))`.
pub fn discharge_all(d: &Derivation, hyps: &[Formula]) -> Derivation {
    let mut out = d.clone();
    for h in hyps.iter().rev() {
        out = deduction_transform(&out, h).expect("derivation checks");
    }
    out
}

/// `⊢ a → a`.
pub fn imp_refl(system: SystemId, a: &Formula) -> Derivation {
    let mut b = ProofBuilder::new(system, vec![a.clone()]);
    b.hyp(a.clone());
    deduction_transform(&b.finish(), a).expect("derivation checks")
}

/// `⊢ ¬¬a → a`.
pub fn double_negation_elim(system: SystemId, a: &Formula) -> Derivation {
    let na = Formula::neg(a.clone());
    let nna = Formula::neg(na.clone());
    let mut b = ProofBuilder::new(system, vec![nna.clone()]);
    let h = b.hyp(nna.clone());
    let a3 = b.ax("A3", &[("A", &na), ("B", a)]);
    let w = b.weaken(h, &na);
    let k = b.mp(w, a3);
    let refl = b.include(&imp_refl(system, &na));
    b.mp(refl, k);
    deduction_transform(&b.finish(), &nna).expect("derivation checks")
}

/// `⊢ a → ¬¬a`.
pub fn double_negation_intro(system: SystemId, a: &Formula) -> Derivation {
    let na = Formula::neg(a.clone());
    let nna = Formula::neg(na.clone());
    let nnna = Formula::neg(nna.clone());
    let mut b = ProofBuilder::new(system, vec![a.clone()]);
    let h = b.hyp(a.clone());
    let dne = b.include(&double_negation_elim(system, &na));
    let a3 = b.ax("A3", &[("A", a), ("B", &nna)]);
    let k = b.mp(dne, a3);
    let w = b.weaken(h, &nnna);
    b.mp(w, k);
    deduction_transform(&b.finish(), a).expect("derivation checks")
}

/// `⊢ (a → b) → (¬b → ¬a)`.
pub fn contraposition(system: SystemId, a: &Formula, b: &Formula) -> Derivation {
    let ab = Formula::imp(a.clone(), b.clone());
    let nb = Formula::neg(b.clone());
    let na = Formula::neg(a.clone());
    let nna = Formula::neg(na.clone());
    let mut p = ProofBuilder::new(system, vec![ab.clone(), nb.clone()]);
    let h_ab = p.hyp(ab.clone());
    let h_nb = p.hyp(nb.clone());
    let a3 = p.ax("A3", &[("A", b), ("B", &na)]);
    let w = p.weaken(h_nb, &nna);
    let k = p.mp(w, a3);
    let dne = p.include(&double_negation_elim(system, a));
    let c = p.chain(dne, h_ab);
    p.mp(c, k);
    discharge_all(&p.finish(), &[ab, nb])
}

/// From `a → b` at `i`, adds `¬b → ¬a`.
pub fn contrapose_step(p: &mut ProofBuilder, i: usize) -> usize {
    let (a, b) = split_imp(p.formula(i));
    let system = p.d.system;
    let t = p.include(&contraposition(system, &a, &b));
    p.mp(i, t)
}

/// `⊢ ¬a → (a → b)`.
pub fn ex_falso(system: SystemId, a: &Formula, b: &Formula) -> Derivation {
    let (d, hyps) = contradiction(system, a, b);
    discharge_all(&d, &hyps)
}

/// `⊢ a → (¬a → b)`.
pub fn ex_falso_flipped(system: SystemId, a: &Formula, b: &Formula) -> Derivation {
    let (d, hyps) = contradiction(system, a, b);
    discharge_all(&d, &[hyps[1].clone(), hyps[0].clone()])
}

/// `¬a, a ⊢ b`.
fn contradiction(system: SystemId, a: &Formula, b: &Formula) -> (Derivation, Vec<Formula>) {
    let na = Formula::neg(a.clone());
    let nb = Formula::neg(b.clone());
    let mut p = ProofBuilder::new(system, vec![na.clone(), a.clone()]);
    let h_na = p.hyp(na.clone());
    let h_a = p.hyp(a.clone());
    let a3 = p.ax("A3", &[("A", a), ("B", b)]);
    let w1 = p.weaken(h_na, &nb);
    let k = p.mp(w1, a3);
    let w2 = p.weaken(h_a, &nb);
    p.mp(w2, k);
    (p.finish(), vec![na, a.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check_derivation;
    use crate::syntax::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn classical_lemmas_check() {
        let s = SystemId::Km;
        let a = f("[]p");
        let b = f("q -> r");
        for (d, concl) in [
            (imp_refl(s, &a), "[]p -> []p"),
            (double_negation_elim(s, &a), "~~[]p -> []p"),
            (double_negation_intro(s, &a), "[]p -> ~~[]p"),
            (contraposition(s, &a, &b), "([]p -> q -> r) -> ~(q -> r) -> ~[]p"),
            (ex_falso(s, &a, &b), "~[]p -> []p -> q -> r"),
            (ex_falso_flipped(s, &a, &b), "[]p -> ~[]p -> q -> r"),
        ] {
            check_derivation(s, &d).unwrap();
            assert!(d.hyps.is_empty());
            assert_eq!(d.conclusion().unwrap().to_string(), concl);
        }
    }

    #[test]
    fn chain_and_contrapose() {
        let s = SystemId::Tm;
        let mut p = ProofBuilder::new(s, vec![f("a -> b"), f("b -> c")]);
        let i = p.hyp(f("a -> b"));
        let j = p.hyp(f("b -> c"));
        let k = p.chain(i, j);
        let n = contrapose_step(&mut p, k);
        assert_eq!(p.formula(n).to_string(), "~c -> ~a");
        check_derivation(s, &p.finish()).unwrap();
    }
}
