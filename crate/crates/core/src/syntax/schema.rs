use std::collections::BTreeMap;

use super::{Formula, SyntaxError};

/// Assignment of formulas to metavariable names.
pub type Binding = BTreeMap<String, Formula>;

/// Uniform substitution of every metavariable in `schema`.
pub fn instantiate(schema: &Formula, binding: &Binding) -> Result<Formula, SyntaxError> {
    Ok(match schema {
        Formula::Atom(_) => schema.clone(),
        Formula::Meta(name) => binding
            .get(name.as_ref())
            .cloned()
            .ok_or_else(|| SyntaxError::MissingBinding(name.to_string()))?,
        Formula::Neg(a) => Formula::neg(instantiate(a, binding)?),
        Formula::Imp(a, b) => Formula::imp(instantiate(a, binding)?, instantiate(b, binding)?),
        Formula::Box(a) => Formula::boxed(instantiate(a, binding)?),
        Formula::Dia(a) => Formula::dia(instantiate(a, binding)?),
    })
}

/// The unique binding under which `schema` becomes `f`, if any.
pub fn match_schema(schema: &Formula, f: &Formula) -> Option<Binding> {
    let mut binding = Binding::new();
    if match_into(schema, f, &mut binding) {
        Some(binding)
    } else {
        None
    }
}

fn match_into(schema: &Formula, f: &Formula, binding: &mut Binding) -> bool {
    match (schema, f) {
        (Formula::Meta(name), _) => match binding.get(name.as_ref()) {
            Some(bound) => bound == f,
            None => {
                binding.insert(name.to_string(), f.clone());
                true
            }
        },
        (Formula::Atom(a), Formula::Atom(b)) => a == b,
        (Formula::Neg(a), Formula::Neg(b))
        | (Formula::Box(a), Formula::Box(b))
        | (Formula::Dia(a), Formula::Dia(b)) => match_into(a, b, binding),
        (Formula::Imp(a1, b1), Formula::Imp(a2, b2)) => {
            match_into(a1, a2, binding) && match_into(b1, b2, binding)
        }
        _ => false,
    }
}

/// Convenience for building bindings in code.
pub fn binding_of(pairs: &[(&str, Formula)]) -> Binding {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}
