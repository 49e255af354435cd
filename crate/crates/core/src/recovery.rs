//! Recovery operators and witnesses for derivability adjustment between the
//! eight-, six- and four-valued systems.

use rand::Rng;
use serde::Serialize;

use crate::calculus::axioms_of;
use crate::nmatrix::{builtin, derived_table, Nmatrix, SystemId};
use crate::random::random_formula;
use crate::semantics::{decide_consequence, Valuation, Verdict};
use crate::syntax::{parse, subformulas_of_all, Formula};
use crate::values::{TruthValue, ValueSet};

/// `□φ → ◇φ`
pub fn circ(f: &Formula) -> Formula {
    Formula::circ(f.clone())
}

/// `¬(□φ → ◇φ)`
pub fn bullet(f: &Formula) -> Formula {
    Formula::bullet(f.clone())
}

/// `(□φ → φ) ∧ (□¬φ → ¬φ)`, with `∧` written out.
pub fn circ_prime(f: &Formula) -> Formula {
    Formula::circ_prime(f.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DatKind {
    /// Dm into Km, marking with `∘`.
    Circ,
    /// Tm into Dm, marking with `∘′`.
    Circt,
    /// Tm into Km, marking with both.
    Both,
}

impl DatKind {
    pub fn source(self) -> SystemId {
        match self {
            DatKind::Circ => SystemId::Dm,
            DatKind::Circt | DatKind::Both => SystemId::Tm,
        }
    }

    pub fn target(self) -> SystemId {
        match self {
            DatKind::Circ | DatKind::Both => SystemId::Km,
            DatKind::Circt => SystemId::Dm,
        }
    }

    fn uses_circ(self) -> bool {
        self != DatKind::Circt
    }

    fn uses_circt(self) -> bool {
        self != DatKind::Circ
    }
}

impl std::str::FromStr for DatKind {
    type Err = String;

    fn from_str(s: &str) -> Result<DatKind, String> {
        match s {
            "circ" => Ok(DatKind::Circ),
            "circt" | "circ-prime" => Ok(DatKind::Circt),
            "both" => Ok(DatKind::Both),
            _ => Err(format!("unknown operator kind `{s}` (expected circ, circt or both)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatQuery {
    pub kind: DatKind,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

/// `Υ` is marked with `∘` and `Υ′` with `∘′`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct DatWitness {
    pub upsilon: Vec<Formula>,
    pub upsilon_prime: Vec<Formula>,
}

impl DatWitness {
    pub fn size(&self) -> usize {
        self.upsilon.len() + self.upsilon_prime.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatOutcome {
    Found(DatWitness),
    /// The source system does not validate the sequent, so no witness exists.
    SourceFails(Valuation),
    /// No witness among subsets of the pool up to the size limit.
    Exhausted,
}

/// The target-side premises: `Γ`, then `∘δ` for `Υ`, then `∘′γ` for `Υ′`.
pub fn marked_premises(q: &DatQuery, w: &DatWitness) -> Vec<Formula> {
    let mut out = q.premises.clone();
    out.extend(w.upsilon.iter().map(circ));
    out.extend(w.upsilon_prime.iter().map(circ_prime));
    out
}

/// Whether the marked sequent holds in the target system.
pub fn dat_verify(q: &DatQuery, w: &DatWitness) -> bool {
    if (!q.kind.uses_circ() && !w.upsilon.is_empty()) || (!q.kind.uses_circt() && !w.upsilon_prime.is_empty()) {
        return false;
    }
    let nm = builtin(q.kind.target());
    decide_consequence(&nm, &marked_premises(q, w), &q.conclusion).holds()
}

/// The subformulas of the query, children first.
pub fn default_pool(q: &DatQuery) -> Vec<Formula> {
    let mut all = q.premises.clone();
    all.push(q.conclusion.clone());
    subformulas_of_all(&all)
}

/// Every formula over `atoms` with at most `depth` nested connectives.
pub fn formulas_up_to_depth(atoms: &[Formula], depth: usize) -> Vec<Formula> {
    let mut levels: Vec<Formula> = atoms.to_vec();
    for _ in 0..depth {
        let mut next = levels.clone();
        for a in &levels {
            next.push(Formula::neg(a.clone()));
            next.push(Formula::boxed(a.clone()));
            next.push(Formula::dia(a.clone()));
            for b in &levels {
                next.push(Formula::imp(a.clone(), b.clone()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        next.retain(|f| seen.insert(f.clone()));
        levels = next;
    }
    levels
}

/// Finds a smallest marking set. Candidates are subsets of the pool (each
/// pool formula once per operator the kind uses, `∘` before `∘′`), tried by
/// size and then in lexicographic order of pool positions.
pub fn dat_search(q: &DatQuery, pool: Option<Vec<Formula>>, max_size: usize) -> DatOutcome {
    let source = builtin(q.kind.source());
    if let Verdict::Fails(w) = decide_consequence(&source, &q.premises, &q.conclusion) {
        return DatOutcome::SourceFails(w);
    }
    let pool = pool.unwrap_or_else(|| default_pool(q));
    let mut tagged: Vec<(bool, &Formula)> = Vec::new();
    if q.kind.uses_circ() {
        tagged.extend(pool.iter().map(|f| (false, f)));
    }
    if q.kind.uses_circt() {
        tagged.extend(pool.iter().map(|f| (true, f)));
    }
    let target = builtin(q.kind.target());
    let witness_of = |ix: &[usize]| {
        let mut w = DatWitness::default();
        for &i in ix {
            let (prime, f) = tagged[i];
            if prime {
                w.upsilon_prime.push(f.clone());
            } else {
                w.upsilon.push(f.clone());
            }
        }
        w
    };
    let holds = |ix: &[usize]| decide_consequence(&target, &marked_premises(q, &witness_of(ix)), &q.conclusion).holds();

    // Adding premises never breaks a consequence, so if marking the whole
    // pool fails, every subset fails too.
    let everything: Vec<usize> = (0..tagged.len()).collect();
    if !holds(&everything) {
        return DatOutcome::Exhausted;
    }
    for size in 0..=max_size.min(tagged.len()) {
        let mut ix: Vec<usize> = (0..size).collect();
        loop {
            if holds(&ix) {
                return DatOutcome::Found(witness_of(&ix));
            }
            if !next_combination(&mut ix, tagged.len()) {
                break;
            }
        }
    }
    DatOutcome::Exhausted
}

/// Advances `ix` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(ix: &mut [usize], n: usize) -> bool {
    let k = ix.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if ix[i] < n - k + i {
            ix[i] += 1;
            for j in i + 1..k {
                ix[j] = ix[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A sequent valid in `source`: a random axiom instance of `source`, some of
/// whose antecedents are moved into the premises and detached by modus
/// ponens, plus an occasional unrelated premise.
pub fn random_source_sequent<R: Rng>(rng: &mut R, source: SystemId, atoms: &[String]) -> (Vec<Formula>, Formula) {
    let axioms = axioms_of(source);
    let modal: Vec<_> = axioms.iter().filter(|a| !a.schema.is_propositional()).collect();
    let ax = if rng.gen_bool(0.85) {
        modal[rng.gen_range(0..modal.len())]
    } else {
        &axioms[rng.gen_range(0..axioms.len())]
    };
    let binding = ax
        .schema
        .metavars()
        .iter()
        .map(|m| (m.to_string(), random_formula(rng, atoms, 1)))
        .collect();
    let mut concl = crate::syntax::instantiate(&ax.schema, &binding).expect("binding covers the schema");
    let mut premises = Vec::new();
    while let Formula::Imp(a, b) = &concl {
        if !rng.gen_bool(0.5) {
            break;
        }
        premises.push((**a).clone());
        concl = (**b).clone();
    }
    if rng.gen_bool(0.2) {
        premises.push(random_formula(rng, atoms, 2));
    }
    (premises, concl)
}

/// How a value of the target system is marked: the set of values the
/// operator can give it, and whether that set lies in the designated half.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkingRow {
    pub value: TruthValue,
    pub cell: ValueSet,
    pub designated: bool,
}

/// The table of `op` (a one-variable skeleton such as `circ A`) over `nm`.
pub fn marking_table(nm: &Nmatrix, op: &str) -> Vec<MarkingRow> {
    let t = derived_table(nm, &parse(op).expect("operator skeleton"));
    t.rows
        .iter()
        .map(|(args, cell)| MarkingRow {
            value: args[0],
            cell: *cell,
            designated: cell.is_subset(nm.designated),
        })
        .collect()
}

/// `∘` over Km designates exactly the values outside `I`, and `∘′` over Dm
/// exactly the values of the four-valued domain. Returns the first
/// violation.
pub fn check_marking_laws() -> Result<(), String> {
    let checks = [
        (SystemId::Km, "circ A", SystemId::Dm),
        (SystemId::Dm, "circt A", SystemId::Tm),
    ];
    for (over, op, marks) in checks {
        let nm = builtin(over);
        let inner = builtin(marks).domain();
        for row in marking_table(&nm, op) {
            let undesignated = row.cell.is_subset(nm.domain().difference(nm.designated));
            let expect = inner.contains(row.value);
            if row.designated != expect || (!expect && !undesignated) {
                return Err(format!("{op} over {over} at {}: {}", row.value, row.cell));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{atom_names, rng};

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn q(kind: DatKind, prem: &[&str], c: &str) -> DatQuery {
        DatQuery {
            kind,
            premises: prem.iter().map(|p| f(p)).collect(),
            conclusion: f(c),
        }
    }

    #[test]
    fn operators() {
        assert_eq!(circ(&f("p")).to_string(), "[]p -> <>p");
        assert_eq!(bullet(&f("p")).to_string(), "~([]p -> <>p)");
        assert_eq!(circ_prime(&f("p")), f("([]p -> p) & ([]~p -> ~p)"));
        check_marking_laws().unwrap();
        let rows = marking_table(&builtin(SystemId::Dm), "circt A");
        let fp = rows.iter().find(|r| r.value == TruthValue::FPlus).unwrap();
        // Composing the coherent tables gives F- as well as T- and C-.
        let minus = ValueSet::from([TruthValue::TMinus, TruthValue::CMinus, TruthValue::FMinus]);
        assert_eq!(fp.cell, minus);
        let tm = rows.iter().find(|r| r.value == TruthValue::TMinus).unwrap();
        assert_eq!(tm.cell, minus);
    }

    #[test]
    fn verify_examples() {
        let dq = q(DatKind::Circ, &["[]p"], "<>p");
        assert!(dat_verify(&dq, &DatWitness { upsilon: vec![f("p")], ..Default::default() }));
        assert!(!dat_verify(&dq, &DatWitness::default()));
        let tq = q(DatKind::Circt, &[], "[]p -> p");
        assert!(dat_verify(&tq, &DatWitness { upsilon_prime: vec![f("p")], ..Default::default() }));
    }

    #[test]
    fn search_examples() {
        let found = |o: DatOutcome| match o {
            DatOutcome::Found(w) => w,
            other => panic!("{other:?}"),
        };
        let w = found(dat_search(&q(DatKind::Circ, &["[]p"], "<>p"), None, 3));
        assert_eq!(w.upsilon, vec![f("p")]);
        let w = found(dat_search(&q(DatKind::Circ, &["[](p -> q)", "[]p", "<>p"], "<>q"), None, 3));
        // Not Km-valid as it stands: the K2' form needs `<>(p -> q)`.
        assert!(!decide_consequence(&builtin(SystemId::Km), &[f("[](p -> q)"), f("[]p"), f("<>p")], &f("<>q")).holds());
        assert_eq!((w.upsilon, w.upsilon_prime), (vec![f("q")], vec![]));
        let w = found(dat_search(&q(DatKind::Both, &[], "[]p -> p"), None, 3));
        assert_eq!((w.upsilon.len(), w.upsilon_prime.clone()), (0, vec![f("p")]));
        assert!(matches!(dat_search(&q(DatKind::Circ, &[], "[]p -> p"), None, 3), DatOutcome::SourceFails(_)));
    }

    #[test]
    fn generated_sequents_are_source_valid() {
        let atoms = atom_names(3);
        let mut r = rng(3);
        for source in [SystemId::Dm, SystemId::Tm] {
            let nm = builtin(source);
            for _ in 0..30 {
                let (p, c) = random_source_sequent(&mut r, source, &atoms);
                assert!(decide_consequence(&nm, &p, &c).holds());
            }
        }
    }

    #[test]
    fn combinations() {
        let mut ix = vec![0, 1];
        let mut seen = vec![ix.clone()];
        while next_combination(&mut ix, 4) {
            seen.push(ix.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(formulas_up_to_depth(&[f("p")], 1).len(), 5);
    }
}
