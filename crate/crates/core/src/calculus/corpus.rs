//! The shipped derivations, built here and stored under `corpus/`.

use super::builder::{
    contrapose_step, contraposition, double_negation_elim, double_negation_intro, ex_falso_flipped, imp_refl,
    ProofBuilder,
};
use super::derivation::Derivation;
use crate::nmatrix::SystemId;
use crate::syntax::{parse, Formula};

pub struct CorpusEntry {
    /// File stem under `corpus/`.
    pub name: &'static str,
    pub derivation: Derivation,
}

fn f(s: &str) -> Formula {
    parse(s).expect("corpus formula")
}

const KM: SystemId = SystemId::Km;

fn theorem(name: &'static str, d: Derivation) -> CorpusEntry {
    CorpusEntry { name, derivation: d }
}

fn abbrev(hyps: &[&str]) -> ProofBuilder {
    ProofBuilder::new(KM, hyps.iter().map(|h| f(h)).collect()).with_diamond_abbrev()
}

/// From `¬□(x)` at `i`, adds `◇¬x`.
fn to_dia_neg(p: &mut ProofBuilder, i: usize, x: &Formula) -> usize {
    let dn2 = p.ax("DN2", &[("A", x)]);
    let c = contrapose_step(p, dn2);
    let k = p.mp(i, c);
    p.restate(k, Formula::dia(Formula::neg(x.clone())))
}

/// From `□¬x` at `i`, adds `¬◇x`.
fn to_neg_dia(p: &mut ProofBuilder, i: usize, x: &Formula) -> usize {
    let k = p.apply(i, &double_negation_intro(KM, &Formula::boxed(Formula::neg(x.clone()))));
    p.restate(k, Formula::neg(Formula::dia(x.clone())))
}

fn dia_neg_to_neg_box() -> Derivation {
    let p = f("p");
    let mut b = abbrev(&[]);
    let dn1 = b.ax("DN1", &[("A", &p)]);
    let k = contrapose_step(&mut b, dn1);
    b.restate(k, f("<>~p -> ~[]p"));
    b.finish()
}

fn neg_box_to_dia_neg() -> Derivation {
    let p = f("p");
    let mut b = abbrev(&[]);
    let dn2 = b.ax("DN2", &[("A", &p)]);
    let k = contrapose_step(&mut b, dn2);
    b.restate(k, f("~[]p -> <>~p"));
    b.finish()
}

fn box_to_neg_dia_neg() -> Derivation {
    let mut b = abbrev(&[]);
    let dn1 = b.ax("DN1", &[("A", &f("p"))]);
    let dni = b.include(&double_negation_intro(KM, &f("[]~~p")));
    let k = b.chain(dn1, dni);
    b.restate(k, f("[]p -> ~<>~p"));
    b.finish()
}

fn neg_dia_neg_to_box() -> Derivation {
    let mut b = abbrev(&[]);
    let dne = b.include(&double_negation_elim(KM, &f("[]~~p")));
    let dn2 = b.ax("DN2", &[("A", &f("p"))]);
    let k = b.chain(dne, dn2);
    b.restate(k, f("~<>~p -> []p"));
    b.finish()
}

fn box_neg_to_neg_dia() -> Derivation {
    let mut b = abbrev(&[]);
    let k = b.include(&double_negation_intro(KM, &f("[]~p")));
    b.restate(k, f("[]~p -> ~<>p"));
    b.finish()
}

fn neg_dia_to_box_neg() -> Derivation {
    let mut b = abbrev(&[]);
    let k = b.include(&double_negation_elim(KM, &f("[]~p")));
    b.restate(k, f("~<>p -> []~p"));
    b.finish()
}

fn dia_to_dia_neg_neg() -> Derivation {
    let mut b = abbrev(&[]);
    let dn2 = b.ax("DN2", &[("A", &f("~p"))]);
    let k = contrapose_step(&mut b, dn2);
    b.restate(k, f("<>p -> <>~~p"));
    b.finish()
}

fn dia_neg_neg_to_dia() -> Derivation {
    let mut b = abbrev(&[]);
    let dn1 = b.ax("DN1", &[("A", &f("~p"))]);
    let k = contrapose_step(&mut b, dn1);
    b.restate(k, f("<>~~p -> <>p"));
    b.finish()
}

/// `□p, ◇p, ◇¬q ⊢ ◇¬(p → q)`
fn box_dia_dianeg() -> Derivation {
    let (p, q, pq) = (f("p"), f("q"), f("p -> q"));
    let mut b = abbrev(&["[]p", "<>p", "<>~q"]);
    let h_box = b.hyp(f("[]p"));
    let h_dia = b.hyp(f("<>p"));
    let h_dneg = b.hyp(f("<>~q"));
    let k1 = b.ax("K'", &[("A", &p), ("B", &q)]);
    let k = b.mp(h_dia, k1);
    let k = b.skip(k, h_box);
    let k = contrapose_step(&mut b, k);
    let dn1 = b.ax("DN1", &[("A", &q)]);
    let c = contrapose_step(&mut b, dn1);
    let not_box_q = b.mp(h_dneg, c);
    let not_box_pq = b.mp(not_box_q, k);
    to_dia_neg(&mut b, not_box_pq, &pq);
    b.finish()
}

/// `◇p, □¬q, ◇¬q ⊢ ◇¬(p → q)`
fn dia_boxneg_dianeg() -> Derivation {
    let (p, q, pq) = (f("p"), f("q"), f("p -> q"));
    let mut b = abbrev(&["<>p", "[]~q", "<>~q"]);
    let h_dia = b.hyp(f("<>p"));
    let h_boxneg = b.hyp(f("[]~q"));
    let h_dneg = b.hyp(f("<>~q"));
    let k1 = b.ax("K1'", &[("A", &p), ("B", &q)]);
    let k = b.mp(h_dneg, k1);
    let k = b.skip(k, h_dia);
    let k = contrapose_step(&mut b, k);
    let not_dia_q = to_neg_dia(&mut b, h_boxneg, &q);
    let not_box_pq = b.mp(not_dia_q, k);
    to_dia_neg(&mut b, not_box_pq, &pq);
    b.finish()
}

/// `□p, ◇p, □¬q ⊢ □¬(p → q)`
fn box_dia_boxneg() -> Derivation {
    let (p, q, pq) = (f("p"), f("q"), f("p -> q"));
    let mut b = abbrev(&["[]p", "<>p", "[]~q"]);
    let h_box = b.hyp(f("[]p"));
    let h_dia = b.hyp(f("<>p"));
    let h_boxneg = b.hyp(f("[]~q"));
    let k2 = b.ax("K2'", &[("A", &p), ("B", &q)]);
    let k = b.mp(h_dia, k2);
    let k = b.skip(k, h_box);
    let k = contrapose_step(&mut b, k);
    let not_dia_q = to_neg_dia(&mut b, h_boxneg, &q);
    let not_dia_pq = b.mp(not_dia_q, k);
    let not_dia_pq = b.restate(not_dia_pq, f("~~[]~(p -> q)"));
    b.apply(not_dia_pq, &double_negation_elim(KM, &Formula::boxed(Formula::neg(pq))));
    b.finish()
}

/// `◇p, ◇q ⊢ ◇(p → q)`
fn dia_dia() -> Derivation {
    let (p, q) = (f("p"), f("q"));
    let mut b = abbrev(&["<>p", "<>q"]);
    let h_p = b.hyp(f("<>p"));
    let h_q = b.hyp(f("<>q"));
    let either = b.apply(h_p, &ex_falso_flipped(KM, &f("<>p"), &f("<>~p")));
    let m3 = b.ax("M3'", &[("A", &p), ("B", &q)]);
    let k = b.mp(either, m3);
    b.mp(h_q, k);
    b.finish()
}

/// `◇¬p, ◇q ⊢ ◇(p → q)`
fn dianeg_dia() -> Derivation {
    let (p, q) = (f("p"), f("q"));
    let mut b = abbrev(&["<>~p", "<>q"]);
    let h_np = b.hyp(f("<>~p"));
    let h_q = b.hyp(f("<>q"));
    let either = b.weaken(h_np, &f("~<>p"));
    let m3 = b.ax("M3'", &[("A", &p), ("B", &q)]);
    let k = b.mp(either, m3);
    b.mp(h_q, k);
    b.finish()
}

/// `◇¬p, ◇¬q ⊢ ◇(p → q)`
fn dianeg_dianeg() -> Derivation {
    let (p, q) = (f("p"), f("q"));
    let mut b = abbrev(&["<>~p", "<>~q"]);
    let h_np = b.hyp(f("<>~p"));
    let h_nq = b.hyp(f("<>~q"));
    let m4 = b.ax("M4'", &[("A", &p), ("B", &q)]);
    let k = b.mp(h_nq, m4);
    b.mp(h_np, k);
    b.finish()
}

/// `□p, ∘p ⊢ ◇p`: the recovery operator restores (D).
fn circ_restores_d() -> Derivation {
    let mut b = ProofBuilder::new(KM, vec![f("[]p"), f("circ p")]);
    let h = b.hyp(f("[]p"));
    let c = b.hyp(f("circ p"));
    b.mp(h, c);
    b.finish()
}

fn hypothetical_syllogism() -> Derivation {
    let mut b = ProofBuilder::new(KM, vec![f("p -> q"), f("q -> r")]);
    let i = b.hyp(f("p -> q"));
    let j = b.hyp(f("q -> r"));
    b.chain(i, j);
    b.finish()
}

pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        theorem("identity", imp_refl(KM, &f("p"))),
        theorem("double-negation-elim", double_negation_elim(KM, &f("p"))),
        theorem("double-negation-intro", double_negation_intro(KM, &f("p"))),
        theorem("contraposition", contraposition(KM, &f("p"), &f("q"))),
        theorem("hypothetical-syllogism", hypothetical_syllogism()),
        theorem("circ-restores-d", circ_restores_d()),
        theorem("dia-neg-to-neg-box", dia_neg_to_neg_box()),
        theorem("neg-box-to-dia-neg", neg_box_to_dia_neg()),
        theorem("box-to-neg-dia-neg", box_to_neg_dia_neg()),
        theorem("neg-dia-neg-to-box", neg_dia_neg_to_box()),
        theorem("box-neg-to-neg-dia", box_neg_to_neg_dia()),
        theorem("neg-dia-to-box-neg", neg_dia_to_box_neg()),
        theorem("dia-to-dia-neg-neg", dia_to_dia_neg_neg()),
        theorem("dia-neg-neg-to-dia", dia_neg_neg_to_dia()),
        theorem("box-dia-dianeg", box_dia_dianeg()),
        theorem("dia-boxneg-dianeg", dia_boxneg_dianeg()),
        theorem("box-dia-boxneg", box_dia_boxneg()),
        theorem("dia-dia", dia_dia()),
        theorem("dianeg-dia", dianeg_dia()),
        theorem("dianeg-dianeg", dianeg_dianeg()),
    ]
}
