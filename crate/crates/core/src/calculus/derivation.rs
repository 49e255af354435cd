//! Derivations, their text format and the checker.

use std::fmt;

use serde::Serialize;

use super::axioms::{axiom, axioms_of, AxiomSchema};
use crate::nmatrix::SystemId;
use crate::syntax::{instantiate, match_schema, parse, Binding, Formula, Sequent};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Hyp,
    /// An axiom instance; without a binding the checker infers one.
    Ax { name: String, binding: Option<Binding> },
    /// `Mp(i, j)`: step `j` is `step_i → this step`. Indices are 0-based.
    Mp(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub system: SystemId,
    /// When set, `◇a` and `¬□¬a` are interchangeable everywhere.
    pub diamond_abbrev: bool,
    pub hyps: Vec<Formula>,
    pub steps: Vec<Step>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepErrorReason {
    NotAnInstance,
    BadMP,
    IndexOutOfRange,
    NotAHypothesis,
}

/// A rejected step; `index` is 1-based, as in the text format.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("step {index}: {reason:?}: {detail}")]
pub struct StepError {
    pub index: usize,
    pub reason: StepErrorReason,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("invalid input derivation: {0}")]
    InvalidInput(StepError),
    #[error("`{0}` is not a hypothesis of the derivation")]
    NotDischargeable(String),
}

impl Derivation {
    pub fn new(system: SystemId, hyps: Vec<Formula>) -> Derivation {
        Derivation {
            system,
            diamond_abbrev: false,
            hyps,
            steps: Vec::new(),
        }
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    pub fn sequent(&self) -> Option<Sequent> {
        Some(Sequent::new(self.hyps.clone(), self.conclusion()?.clone()))
    }

    /// Whether the checker treats `a` and `b` as the same formula.
    pub fn same(&self, a: &Formula, b: &Formula) -> bool {
        if self.diamond_abbrev {
            a.eq_modulo_diamonds(b)
        } else {
            a.eq_shared(b)
        }
    }

    /// The formula with `◇` expanded when the abbreviation is on.
    pub fn normal(&self, f: &Formula) -> Formula {
        if self.diamond_abbrev {
            f.expand_diamonds()
        } else {
            f.clone()
        }
    }
}

pub fn check_derivation(id: SystemId, d: &Derivation) -> Result<(), StepError> {
    check_against(&axioms_of(id), d)
}

/// Checks `d` using `axioms` in place of a built-in calculus.
pub fn check_against(axioms: &[AxiomSchema], d: &Derivation) -> Result<(), StepError> {
    for (k, step) in d.steps.iter().enumerate() {
        let err = |reason, detail: String| StepError {
            index: k + 1,
            reason,
            detail,
        };
        let f = &step.formula;
        match &step.just {
            Justification::Hyp => {
                if !d.hyps.iter().any(|h| d.same(h, f)) {
                    return Err(err(StepErrorReason::NotAHypothesis, format!("{f} is not in the context")));
                }
            }
            Justification::Ax { name, binding } => {
                let Some(ax) = axioms.iter().find(|a| a.name == name) else {
                    let why = if axiom(name).is_some() {
                        format!("({name}) is not an axiom of this calculus")
                    } else {
                        format!("no axiom named ({name})")
                    };
                    return Err(err(StepErrorReason::NotAnInstance, why));
                };
                let ok = match binding {
                    Some(b) => instantiate(&ax.schema, b).is_ok_and(|inst| d.same(&inst, f)),
                    None => match_schema(&d.normal(&ax.schema), &d.normal(f)).is_some(),
                };
                if !ok {
                    return Err(err(
                        StepErrorReason::NotAnInstance,
                        format!("{f} is not an instance of ({name})"),
                    ));
                }
            }
            Justification::Mp(i, j) => {
                if *i >= k || *j >= k {
                    return Err(err(
                        StepErrorReason::IndexOutOfRange,
                        format!("mp {} {} must cite earlier steps", i + 1, j + 1),
                    ));
                }
                let ok = match &d.steps[*j].formula {
                    Formula::Imp(a, b) => d.same(a, &d.steps[*i].formula) && d.same(b, f),
                    _ => false,
                };
                if !ok {
                    return Err(err(
                        StepErrorReason::BadMP,
                        format!("step {} is not step {} -> step {}", j + 1, i + 1, k + 1),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Rewrites a derivation of `β` from `Γ ∪ {α}` into one of `α → β` from `Γ`.
/// Each step `φ` becomes a block ending in `α → φ`.
pub fn deduction_transform(d: &Derivation, alpha: &Formula) -> Result<Derivation, CalculusError> {
    check_derivation(d.system, d).map_err(CalculusError::InvalidInput)?;
    let pos = d
        .hyps
        .iter()
        .position(|h| d.same(h, alpha))
        .ok_or_else(|| CalculusError::NotDischargeable(alpha.to_string()))?;
    let mut hyps = d.hyps.clone();
    hyps.remove(pos);
    let mut out = Derivation {
        system: d.system,
        diamond_abbrev: d.diamond_abbrev,
        hyps,
        steps: Vec::new(),
    };

    let imp = Formula::imp;
    let push = |out: &mut Derivation, formula: Formula, just: Justification| {
        out.steps.push(Step { formula, just });
        out.steps.len() - 1
    };
    let ax = |name: &str, pairs: &[(&str, &Formula)]| Justification::Ax {
        name: name.to_string(),
        binding: Some(pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()),
    };

    // Index in `out` of the step `α → φ_k` for each input step k.
    let mut image: Vec<usize> = Vec::with_capacity(d.steps.len());
    for step in &d.steps {
        let phi = &step.formula;
        let at = if step.just == Justification::Hyp && d.same(phi, alpha) {
            let a = alpha;
            let aa = imp(a.clone(), a.clone());
            let s1 = push(
                &mut out,
                imp(imp(a.clone(), imp(aa.clone(), a.clone())), imp(imp(a.clone(), aa.clone()), aa.clone())),
                ax("A2", &[("A", a), ("B", &aa), ("C", a)]),
            );
            let s2 = push(&mut out, imp(a.clone(), imp(aa.clone(), a.clone())), ax("A1", &[("A", a), ("B", &aa)]));
            let s3 = push(&mut out, imp(imp(a.clone(), aa.clone()), aa.clone()), Justification::Mp(s2, s1));
            let s4 = push(&mut out, imp(a.clone(), aa.clone()), ax("A1", &[("A", a), ("B", a)]));
            push(&mut out, aa, Justification::Mp(s4, s3))
        } else {
            match &step.just {
                Justification::Hyp | Justification::Ax { .. } => {
                    let s1 = push(&mut out, phi.clone(), step.just.clone());
                    let s2 = push(
                        &mut out,
                        imp(phi.clone(), imp(alpha.clone(), phi.clone())),
                        ax("A1", &[("A", phi), ("B", alpha)]),
                    );
                    push(&mut out, imp(alpha.clone(), phi.clone()), Justification::Mp(s1, s2))
                }
                Justification::Mp(i, j) => {
                    let psi = &d.steps[*i].formula;
                    let a_psi = image[*i];
                    let a_psi_phi = image[*j];
                    let s1 = push(
                        &mut out,
                        imp(
                            imp(alpha.clone(), imp(psi.clone(), phi.clone())),
                            imp(imp(alpha.clone(), psi.clone()), imp(alpha.clone(), phi.clone())),
                        ),
                        ax("A2", &[("A", alpha), ("B", psi), ("C", phi)]),
                    );
                    let s2 = push(
                        &mut out,
                        imp(imp(alpha.clone(), psi.clone()), imp(alpha.clone(), phi.clone())),
                        Justification::Mp(a_psi_phi, s1),
                    );
                    push(&mut out, imp(alpha.clone(), phi.clone()), Justification::Mp(a_psi, s2))
                }
            }
        };
        image.push(at);
    }
    Ok(out)
}

fn format_err(line: usize, message: impl Into<String>) -> CalculusError {
    CalculusError::Format {
        line,
        message: message.into(),
    }
}

fn parse_formula(line: usize, s: &str) -> Result<Formula, CalculusError> {
    parse(s.trim()).map_err(|e| format_err(line, format!("`{}`: {e}", s.trim())))
}

/// Reads the text format:
///
/// ```text
/// system Km
/// diamond abbrev
/// hyp []p
/// 1. []p ; hyp
/// 2. []p -> []~~p ; ax DN1 [A=p]
/// 3. []~~p ; mp 1 2
/// ```
///
/// `diamond abbrev` is optional; `#` starts a comment.
pub fn parse_derivation(text: &str) -> Result<Derivation, CalculusError> {
    let mut system = None;
    let mut abbrev = false;
    let mut hyps = Vec::new();
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("system ") {
            let id: SystemId = rest.trim().parse().map_err(|_| format_err(line, format!("unknown system `{}`", rest.trim())))?;
            system = Some(id);
        } else if content == "diamond abbrev" {
            abbrev = true;
        } else if let Some(rest) = content.strip_prefix("hyp ") {
            hyps.push(parse_formula(line, rest)?);
        } else {
            let (num, rest) = content
                .split_once('.')
                .ok_or_else(|| format_err(line, "expected `<n>. <formula> ; <justification>`"))?;
            let n: usize = num.trim().parse().map_err(|_| format_err(line, "step number expected"))?;
            if n != steps.len() + 1 {
                return Err(format_err(line, format!("expected step {}, found {n}", steps.len() + 1)));
            }
            let (f, just) = rest
                .rsplit_once(" ; ")
                .or_else(|| rest.rsplit_once(';'))
                .ok_or_else(|| format_err(line, "missing `; <justification>`"))?;
            let formula = parse_formula(line, f)?;
            let just = parse_justification(line, just.trim())?;
            steps.push(Step { formula, just });
        }
    }
    let system = system.ok_or_else(|| format_err(0, "missing `system` line"))?;
    Ok(Derivation {
        system,
        diamond_abbrev: abbrev,
        hyps,
        steps,
    })
}

fn parse_justification(line: usize, s: &str) -> Result<Justification, CalculusError> {
    let mut words = s.splitn(2, char::is_whitespace);
    match words.next().unwrap_or("") {
        "hyp" => Ok(Justification::Hyp),
        "mp" => {
            let nums: Vec<usize> = words
                .next()
                .unwrap_or("")
                .split_whitespace()
                .map(|w| w.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| format_err(line, "`mp` takes two step numbers"))?;
            match nums.as_slice() {
                [i, j] if *i > 0 && *j > 0 => Ok(Justification::Mp(i - 1, j - 1)),
                _ => Err(format_err(line, "`mp` takes two step numbers")),
            }
        }
        "ax" => {
            let rest = words.next().unwrap_or("").trim();
            let (name, binding) = match rest.split_once(char::is_whitespace) {
                Some((n, b)) => (n, Some(b.trim())),
                None => (rest, None),
            };
            if name.is_empty() {
                return Err(format_err(line, "`ax` needs an axiom name"));
            }
            let binding = match binding {
                None => None,
                Some(b) => {
                    let inner = b
                        .strip_prefix('[')
                        .and_then(|b| b.strip_suffix(']'))
                        .ok_or_else(|| format_err(line, "binding must be `[A=<formula>; ...]`"))?;
                    let mut map = Binding::new();
                    for pair in inner.split(';').filter(|p| !p.trim().is_empty()) {
                        let (k, v) = pair
                            .split_once('=')
                            .ok_or_else(|| format_err(line, format!("`{}` is not `<var>=<formula>`", pair.trim())))?;
                        map.insert(k.trim().to_string(), parse_formula(line, v)?);
                    }
                    Some(map)
                }
            };
            Ok(Justification::Ax {
                name: name.to_string(),
                binding,
            })
        }
        other => Err(format_err(line, format!("unknown justification `{other}`"))),
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Hyp => write!(f, "hyp"),
            Justification::Mp(i, j) => write!(f, "mp {} {}", i + 1, j + 1),
            Justification::Ax { name, binding } => {
                write!(f, "ax {name}")?;
                if let Some(b) = binding {
                    let pairs: Vec<String> = b.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    write!(f, " [{}]", pairs.join("; "))?;
                }
                Ok(())
            }
        }
    }
}

/// The text format read by [`parse_derivation`].
impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system {}", self.system)?;
        if self.diamond_abbrev {
            writeln!(f, "diamond abbrev")?;
        }
        for h in &self.hyps {
            writeln!(f, "hyp {h}")?;
        }
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, s.formula, s.just)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P_IMP_P: &str = "system Km
1. (p -> ((p -> p) -> p)) -> ((p -> (p -> p)) -> (p -> p)) ; ax A2
2. p -> ((p -> p) -> p) ; ax A1 [A=p; B=p -> p]
3. (p -> (p -> p)) -> (p -> p) ; mp 2 1
4. p -> (p -> p) ; ax A1
5. p -> p ; mp 4 3
";

    #[test]
    fn identity_proof_checks() {
        let d = parse_derivation(P_IMP_P).unwrap();
        check_derivation(SystemId::Km, &d).unwrap();
        assert_eq!(d.conclusion().unwrap().to_string(), "p -> p");
        assert_eq!(parse_derivation(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn rejections() {
        let d = parse_derivation("system Km\n1. [](p -> q) -> ([]p -> []q) ; ax K\n").unwrap();
        let e = check_derivation(SystemId::Km, &d).unwrap_err();
        assert_eq!((e.index, e.reason), (1, StepErrorReason::NotAnInstance));
        assert!(check_derivation(SystemId::Tm, &d).is_ok());

        let d = parse_derivation("system Km\nhyp p\n1. q ; hyp\n").unwrap();
        assert_eq!(check_derivation(SystemId::Km, &d).unwrap_err().reason, StepErrorReason::NotAHypothesis);

        let d = parse_derivation("system Km\nhyp p\n1. p ; hyp\n2. p ; mp 1 3\n").unwrap();
        assert_eq!(check_derivation(SystemId::Km, &d).unwrap_err().reason, StepErrorReason::IndexOutOfRange);

        let d = parse_derivation("system Km\nhyp p\nhyp q\n1. p ; hyp\n2. q ; hyp\n3. q ; mp 1 2\n").unwrap();
        let e = check_derivation(SystemId::Km, &d).unwrap_err();
        assert_eq!((e.index, e.reason), (3, StepErrorReason::BadMP));

        let d = parse_derivation("system Km\n1. p -> (q -> p) ; ax A1 [A=q; B=p]\n").unwrap();
        assert_eq!(check_derivation(SystemId::Km, &d).unwrap_err().reason, StepErrorReason::NotAnInstance);
    }

    #[test]
    fn diamond_abbreviation() {
        let text = "system Km\nhyp <>p\n1. ~[]~p ; hyp\n";
        assert!(check_derivation(SystemId::Km, &parse_derivation(text).unwrap()).is_err());
        let text = "system Km\ndiamond abbrev\nhyp <>p\n1. ~[]~p ; hyp\n";
        check_derivation(SystemId::Km, &parse_derivation(text).unwrap()).unwrap();
    }

    #[test]
    fn transform_single_hypothesis() {
        let d = parse_derivation("system Km\nhyp a\n1. a ; hyp\n").unwrap();
        let out = deduction_transform(&d, &parse("a").unwrap()).unwrap();
        check_derivation(SystemId::Km, &out).unwrap();
        assert!(out.hyps.is_empty());
        assert_eq!(out.conclusion().unwrap().to_string(), "a -> a");
    }

    #[test]
    fn transform_modus_ponens() {
        let d = parse_derivation("system Km\nhyp a -> b\nhyp a\n1. a ; hyp\n2. a -> b ; hyp\n3. b ; mp 1 2\n").unwrap();
        let out = deduction_transform(&d, &parse("a").unwrap()).unwrap();
        check_derivation(SystemId::Km, &out).unwrap();
        assert_eq!(out.hyps, vec![parse("a -> b").unwrap()]);
        assert_eq!(out.conclusion().unwrap().to_string(), "a -> b");
        let out2 = deduction_transform(&out, &parse("a -> b").unwrap()).unwrap();
        check_derivation(SystemId::Km, &out2).unwrap();
        assert_eq!(out2.conclusion().unwrap().to_string(), "(a -> b) -> a -> b");
    }

    #[test]
    fn transform_rejects_bad_input() {
        let d = parse_derivation("system Km\n1. q ; hyp\n").unwrap();
        assert!(matches!(
            deduction_transform(&d, &parse("q").unwrap()),
            Err(CalculusError::InvalidInput(_))
        ));
        let d = parse_derivation("system Km\nhyp p\n1. p ; hyp\n").unwrap();
        assert!(matches!(
            deduction_transform(&d, &parse("q").unwrap()),
            Err(CalculusError::NotDischargeable(_))
        ));
    }
}
