//! Hilbert calculi: axioms, derivation checking and the deduction theorem.

mod axioms;
mod builder;
mod corpus;
mod derivation;

pub use axioms::{axiom, axioms_of, catalogue, km_circ_axioms, km_circ_retro_axioms, AxiomSchema};
pub use builder::{
    contrapose_step, contraposition, discharge_all, double_negation_elim, double_negation_intro, ex_falso,
    ex_falso_flipped, imp_refl, ProofBuilder,
};
pub use corpus::{corpus, CorpusEntry};
pub use derivation::{
    check_against, check_derivation, deduction_transform, parse_derivation, CalculusError, Derivation,
    Justification, Step, StepError, StepErrorReason,
};
