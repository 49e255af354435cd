//! Soundness audits: every axiom skeleton valid, MP preserving designation.

use serde::Serialize;

use super::{decide_valid, Valuation, Verdict};
use crate::calculus::{axioms_of, AxiomSchema};
use crate::nmatrix::{builtin, mp_preserves_designation, Nmatrix, SystemId};
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub name: String,
    /// The schema with metavariables read as atoms.
    pub skeleton: Formula,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Valuation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub system: String,
    pub entries: Vec<AuditEntry>,
    pub mp_preserves_designation: bool,
}

impl AuditReport {
    pub fn sound(&self) -> bool {
        self.mp_preserves_designation && self.entries.iter().all(|e| e.holds)
    }

    pub fn entry(&self, name: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

pub fn audit_system(id: SystemId) -> AuditReport {
    audit_axioms(&builtin(id), &axioms_of(id))
}

/// Decides every schema's skeleton over `nm`. A valid skeleton makes every
/// instance valid, since a valuation of an instance induces one of the
/// skeleton.
pub fn audit_axioms(nm: &Nmatrix, axioms: &[AxiomSchema]) -> AuditReport {
    let entries = axioms
        .iter()
        .map(|a| {
            let skeleton = a.schema.skeleton();
            let verdict = decide_valid(nm, &skeleton);
            AuditEntry {
                name: a.name.to_string(),
                skeleton,
                holds: verdict.holds(),
                witness: match verdict {
                    Verdict::Holds => None,
                    Verdict::Fails(w) => Some(w),
                },
            }
        })
        .collect();
    AuditReport {
        system: nm.name.clone(),
        entries,
        mp_preserves_designation: mp_preserves_designation(nm),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::axiom;
    use crate::values::TruthValue;

    #[test]
    fn km_and_t45m_are_sound() {
        assert!(audit_system(SystemId::Km).sound());
        let t45 = audit_system(SystemId::T45m);
        assert!(t45.sound());
        assert!(t45.entry("5").unwrap().holds);
    }

    #[test]
    fn k_fails_over_km() {
        let r = audit_axioms(&builtin(SystemId::Km), &[axiom("K").unwrap().clone()]);
        let w = r.entries[0].witness.as_ref().unwrap();
        assert_eq!(w.leaf("a"), Some(TruthValue::IPlus));
        assert_eq!(w.leaf("b"), Some(TruthValue::CPlus));
    }
}
