//! Seeded generators for formulas and queries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{subformulas_of_all, Formula};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Atom names `p`, `q`, `r`, `s`, then `p4`, `p5`, ...
pub fn atom_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0..=3 => ["p", "q", "r", "s"][i].to_string(),
            _ => format!("p{i}"),
        })
        .collect()
}

/// A formula over `atoms` with at most `max_depth` nested connectives, using
/// `¬ → □ ◇`.
/// Below the top, a node is a leaf with probability 0.3.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[String], max_depth: usize) -> Formula {
    gen(rng, atoms, max_depth, true, true)
}

/// Like [`random_formula`], but only with `¬` and `→`.
pub fn random_propositional<R: Rng>(rng: &mut R, atoms: &[String], max_depth: usize) -> Formula {
    gen(rng, atoms, max_depth, false, true)
}

fn gen<R: Rng>(rng: &mut R, atoms: &[String], depth: usize, modal: bool, top: bool) -> Formula {
    if depth == 0 || (!top && rng.gen_bool(0.3)) {
        return Formula::atom(&atoms[rng.gen_range(0..atoms.len())]);
    }
    let choices = if modal { 5 } else { 3 };
    match rng.gen_range(0..choices) {
        0 => Formula::neg(gen(rng, atoms, depth - 1, modal, false)),
        1 | 2 => Formula::imp(
            gen(rng, atoms, depth - 1, modal, false),
            gen(rng, atoms, depth - 1, modal, false),
        ),
        3 => Formula::boxed(gen(rng, atoms, depth - 1, modal, false)),
        _ => Formula::dia(gen(rng, atoms, depth - 1, modal, false)),
    }
}

/// Premises (up to `max_premises`) and a conclusion whose distinct
/// subformulas number at most `max_nodes`. Oversized draws are redrawn.
pub fn random_query<R: Rng>(
    rng: &mut R,
    atoms: &[String],
    max_depth: usize,
    max_premises: usize,
    max_nodes: usize,
) -> (Vec<Formula>, Formula) {
    loop {
        let n = rng.gen_range(0..=max_premises);
        let premises: Vec<Formula> = (0..n).map(|_| random_formula(rng, atoms, max_depth)).collect();
        let conclusion = random_formula(rng, atoms, max_depth);
        let mut all = premises.clone();
        all.push(conclusion.clone());
        if subformulas_of_all(&all).len() <= max_nodes {
            return (premises, conclusion);
        }
    }
}
