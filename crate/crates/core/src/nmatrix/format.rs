//! Line-based text format for Nmatrices.
//!
//! ```text
//! system Tm
//! values T+ C+ C- F-
//! designated T+ C+
//! op neg 1
//! T+ : F-
//! ...
//! op imp 2
//! T+ T+ : T+
//! ...
//! ```
//!
//! `#` starts a comment. Every tuple over the domain must appear exactly once
//! under each of the four operations.

use std::fmt::Write as _;

use super::{Multialgebra, Nmatrix, NmatrixError, Table};
use crate::syntax::Connective;
use crate::values::{TruthValue, ValueSet};

pub fn save(nm: &Nmatrix) -> String {
    let mut out = String::new();
    let names = |s: ValueSet| s.iter().map(|v| v.name()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "system {}", nm.name);
    let _ = writeln!(out, "values {}", names(nm.domain()));
    let _ = writeln!(out, "designated {}", names(nm.designated));
    for c in Connective::ALL {
        let t = nm.table(c);
        let _ = writeln!(out, "op {} {}", c.name(), c.arity());
        for args in t.tuples(nm.domain()) {
            let lhs: Vec<&str> = args.iter().map(|v| v.name()).collect();
            let _ = writeln!(out, "{} : {}", lhs.join(" "), names(t.get(&args)));
        }
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> NmatrixError {
    NmatrixError::ParseError {
        line,
        message: message.into(),
    }
}

fn parse_values(line: usize, words: &[&str]) -> Result<Vec<TruthValue>, NmatrixError> {
    words
        .iter()
        .map(|w| w.parse::<TruthValue>().map_err(|e| parse_err(line, e.to_string())))
        .collect()
}

pub fn load(text: &str) -> Result<Nmatrix, NmatrixError> {
    let mut name = None;
    let mut domain = None;
    let mut designated = None;
    let mut tables: [Option<Table>; 4] = [None; 4];
    let mut seen = [[false; 64]; 4];
    let mut current: Option<Connective> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "system" => {
                if words.len() != 2 {
                    return Err(parse_err(line, "expected `system <name>`"));
                }
                name = Some(words[1].to_string());
            }
            "values" => {
                let vs: ValueSet = parse_values(line, &words[1..])?.into_iter().collect();
                if vs.is_empty() {
                    return Err(parse_err(line, "empty domain"));
                }
                domain = Some(vs);
            }
            "designated" => {
                let dom = domain.ok_or_else(|| parse_err(line, "`designated` before `values`"))?;
                let vs: ValueSet = parse_values(line, &words[1..])?.into_iter().collect();
                if let Some(v) = vs.difference(dom).iter().next() {
                    return Err(NmatrixError::ValueOutsideDomain { value: v });
                }
                designated = Some(vs);
            }
            "op" => {
                if domain.is_none() {
                    return Err(parse_err(line, "`op` before `values`"));
                }
                if words.len() != 3 {
                    return Err(parse_err(line, "expected `op <neg|imp|box|dia> <arity>`"));
                }
                let c = Connective::from_name(words[1])
                    .ok_or_else(|| parse_err(line, format!("unknown connective `{}`", words[1])))?;
                let arity: usize = words[2]
                    .parse()
                    .map_err(|_| parse_err(line, "arity must be a number"))?;
                if arity != c.arity() {
                    return Err(NmatrixError::ArityMismatch {
                        connective: c,
                        expected: c.arity(),
                        got: arity,
                    });
                }
                if tables[c as usize].is_some() {
                    return Err(parse_err(line, format!("operation `{}` given twice", c.name())));
                }
                tables[c as usize] = Some(Table::new(arity));
                current = Some(c);
            }
            _ => {
                let c = current.ok_or_else(|| parse_err(line, "cell outside an `op` block"))?;
                let dom = domain.expect("checked at `op`");
                let (lhs, rhs) = content
                    .split_once(':')
                    .ok_or_else(|| parse_err(line, "expected `<args> : <values>`"))?;
                let lhs_words: Vec<&str> = lhs.split_whitespace().collect();
                let args = parse_values(line, &lhs_words)?;
                if args.len() != c.arity() {
                    return Err(NmatrixError::ArityMismatch {
                        connective: c,
                        expected: c.arity(),
                        got: args.len(),
                    });
                }
                let rhs_words: Vec<&str> = rhs.split_whitespace().collect();
                let cell: ValueSet = parse_values(line, &rhs_words)?.into_iter().collect();
                if cell.is_empty() {
                    return Err(NmatrixError::EmptyCell { line });
                }
                if let Some(v) = args.iter().copied().chain(cell.iter()).find(|v| !dom.contains(*v)) {
                    return Err(NmatrixError::ValueOutsideDomain { value: v });
                }
                let idx = args.iter().fold(0, |acc, v| acc * 8 + v.ordinal());
                if seen[c as usize][idx] {
                    return Err(NmatrixError::DuplicateCell { line });
                }
                seen[c as usize][idx] = true;
                tables[c as usize].as_mut().expect("opened at `op`").set(&args, cell);
            }
        }
    }

    let domain = domain.ok_or_else(|| parse_err(0, "missing `values` line"))?;
    let designated = designated.ok_or_else(|| parse_err(0, "missing `designated` line"))?;
    let mut built = Vec::with_capacity(4);
    for c in Connective::ALL {
        let t = tables[c as usize].unwrap_or_else(|| Table::new(c.arity()));
        for args in t.tuples(domain) {
            if t.get(&args).is_empty() {
                return Err(NmatrixError::MissingCell { connective: c, args });
            }
        }
        built.push(t);
    }
    let algebra = Multialgebra::new(domain, built[0], built[1], built[2], built[3]);
    algebra.validate()?;
    Ok(Nmatrix {
        name: name.unwrap_or_else(|| "custom".to_string()),
        algebra,
        designated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nmatrix::{builtin, builtin_with, Reading, SystemId};

    #[test]
    fn round_trip_every_builtin() {
        for id in SystemId::ALL {
            for reading in [Reading::Coherent, Reading::Printed] {
                let nm = builtin_with(id, reading);
                assert_eq!(load(&save(&nm)).unwrap(), nm, "{id}");
            }
        }
    }

    fn tiny(neg_t: &str, extra: &str) -> String {
        format!(
            "system tiny\nvalues T+ F-\ndesignated T+\nop neg 1\nT+ : {neg_t}\nF- : T+\n{extra}\
             op imp 2\nT+ T+ : T+\nT+ F- : F-\nF- T+ : T+\nF- F- : T+\n\
             op box 1\nT+ : T+\nF- : F-\nop dia 1\nT+ : T+\nF- : F-\n"
        )
    }

    #[test]
    fn accepts_a_two_valued_matrix() {
        let nm = load(&tiny("F-", "")).unwrap();
        assert_eq!(nm.domain().len(), 2);
        assert_eq!(nm.name, "tiny");
    }

    #[test]
    fn rejects_empty_cells() {
        assert_eq!(load(&tiny("", "")).unwrap_err(), NmatrixError::EmptyCell { line: 5 });
    }

    #[test]
    fn rejects_missing_cells() {
        let text = save(&builtin(SystemId::Tm)).replace("C+ C- : C-\n", "");
        assert!(matches!(load(&text), Err(NmatrixError::MissingCell { connective: Connective::Imp, .. })));
    }

    #[test]
    fn rejects_duplicates_and_foreign_values() {
        assert!(matches!(load(&tiny("F-", "F- : T+\n")), Err(NmatrixError::DuplicateCell { line: 7 })));
        assert!(matches!(
            load(&tiny("C+", "")),
            Err(NmatrixError::ValueOutsideDomain { value: TruthValue::CPlus })
        ));
        assert!(matches!(load("values T+\nop neg 1\nT+ :: X\n"), Err(NmatrixError::ParseError { .. })));
    }
}
