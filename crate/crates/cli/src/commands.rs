use std::fmt::Write as _;
use std::path::Path;

use mnm_core::calculus::{
    axiom, axioms_of, check_derivation, deduction_transform, km_circ_axioms, parse_derivation, AxiomSchema,
    CalculusError, Derivation,
};
use mnm_core::dugundji::{
    build_delta, build_gamma, conservativity_check, falsify, scan_matrices, t45md_agreement, DugundjiError,
    DugundjiFormula, Kind, ScanOptions,
};
use mnm_core::nmatrix::{builtin, builtin_with, deviation_report, derived_table, DeviationKind, save, SystemId};
use mnm_core::recovery::{
    dat_search, dat_verify, default_pool, formulas_up_to_depth, DatKind, DatOutcome, DatQuery, DatWitness,
};
use mnm_core::semantics::{
    audit_axioms, check_witness, decide_consequence, decide_with, verify_lemma_suite, SearchOptions, Valuation,
    Verdict,
};
use mnm_core::syntax::{render_sugared, Connective, Formula, Sequent};
use serde_json::{json, Value};

use crate::args::{AuditArgs, Command, DatArgs, DatCommand, DugundjiCommand, ProofCommand, QueryArgs};
use crate::grid::{derived_grid, table_grid, table_json};
use crate::{formula, CliError, Ctx, Report, Status};

pub fn run(ctx: &Ctx, command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Parse { formula: text } => parse_cmd(text),
        Command::Table { connective } => table(ctx, connective),
        Command::DeriveTable { skeleton } => derive_table(ctx, skeleton),
        Command::Valid { formula: text } => {
            let f = formula(text)?;
            query(ctx, &[], &f, false, ("valid", "not valid"))
        }
        Command::Entail(q) => {
            let (p, c) = read_query(q)?;
            query(ctx, &p, &c, false, ("holds", "fails"))
        }
        Command::Countermodel(q) => {
            let (p, c) = read_query(q)?;
            query(ctx, &p, &c, true, ("no countermodel", "countermodel"))
        }
        Command::Audit(a) => audit(ctx, a),
        Command::Lemmas => lemmas(ctx),
        Command::Proof(p) => proof(p),
        Command::Dat(d) => dat(d),
        Command::Dugundji(d) => dugundji(ctx, d),
        Command::ExportTables => export_tables(ctx),
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Fails
    }
}

fn to_json(v: &impl serde::Serialize) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Internal(e.to_string()))
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

/// A premise argument is a file of formulas (one per line, `#` comments) if
/// such a file exists, and a formula otherwise.
fn premises_of(arg: &str) -> Result<Vec<Formula>, CliError> {
    if Path::new(arg).is_file() {
        read_file(arg)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(formula)
            .collect()
    } else {
        Ok(vec![formula(arg)?])
    }
}

fn read_query(q: &QueryArgs) -> Result<(Vec<Formula>, Formula), CliError> {
    let mut premises = Vec::new();
    for p in &q.premises {
        premises.extend(premises_of(p)?);
    }
    Ok((premises, formula(&q.conclusion)?))
}

fn leaves_text(w: &Valuation) -> String {
    w.leaves().map(|(f, v)| format!("{f} = {v}")).collect::<Vec<_>>().join(", ")
}

fn full_text(w: &Valuation) -> String {
    let mut out = String::new();
    for (f, v) in &w.entries {
        let _ = writeln!(out, "  {v:<3} {f}");
    }
    out
}

fn parse_cmd(text: &str) -> Result<Report, CliError> {
    let f = formula(text)?;
    let atoms: Vec<String> = f.atoms().iter().map(|a| a.to_string()).collect();
    let json = json!({
        "input": text,
        "formula": f.to_string(),
        "sugared": render_sugared(&f),
        "atoms": atoms,
        "size": f.size(),
        "depth": f.depth(),
        "modal_depth": f.modal_depth(),
    });
    let text = format!(
        "{f}\nsugared: {}\natoms: {}\nsize {}, depth {}, modal depth {}\n",
        render_sugared(&f),
        atoms.join(" "),
        f.size(),
        f.depth(),
        f.modal_depth()
    );
    Ok(Report {
        status: Status::Ok,
        json,
        text,
    })
}

fn connective(name: &str) -> Result<Connective, CliError> {
    Connective::from_name(name)
        .ok_or_else(|| CliError::Usage(format!("unknown connective `{name}` (expected neg, imp, box or dia)")))
}

fn table(ctx: &Ctx, name: &str) -> Result<Report, CliError> {
    let c = connective(name)?;
    let (id, nm) = ctx.nmatrix()?;
    Ok(Report {
        status: Status::Ok,
        json: json!({ "system": id, "connective": c.name(), "rows": table_json(&nm, c) }),
        text: table_grid(&nm, c),
    })
}

fn derive_table(ctx: &Ctx, skeleton: &str) -> Result<Report, CliError> {
    let f = formula(skeleton)?;
    let (id, nm) = ctx.nmatrix()?;
    let t = derived_table(&nm, &f);
    Ok(Report {
        status: Status::Ok,
        json: json!({ "system": id, "skeleton": f.to_string(), "table": to_json(&t)? }),
        text: derived_grid(&t, nm.domain()),
    })
}

fn query(
    ctx: &Ctx,
    premises: &[Formula],
    conclusion: &Formula,
    full: bool,
    words: (&str, &str),
) -> Result<Report, CliError> {
    let (id, nm) = ctx.nmatrix()?;
    let opts = SearchOptions {
        jobs: ctx.jobs,
        ..Default::default()
    };
    let out = decide_with(&nm, premises, conclusion, &opts);
    let sequent = Sequent::new(premises.to_vec(), conclusion.clone()).to_string().trim().to_string();
    let (verdict, witness) = match &out.verdict {
        Verdict::Holds => ("holds", Value::Null),
        Verdict::Fails(w) => {
            check_witness(&nm, premises, conclusion, w).map_err(CliError::Internal)?;
            ("fails", to_json(w)?)
        }
    };
    let json = json!({
        "query": sequent,
        "system": id,
        "verdict": verdict,
        "witness": witness,
        "nodes_explored": out.nodes_explored,
    });
    let mut text = String::new();
    match &out.verdict {
        Verdict::Holds => {
            let _ = writeln!(text, "{}", words.0);
        }
        Verdict::Fails(w) => {
            let _ = writeln!(text, "{}", words.1);
            let _ = writeln!(text, "witness: {}", leaves_text(w));
            if full {
                text.push_str(&full_text(w));
            }
        }
    }
    Ok(Report {
        status: status(out.verdict.holds()),
        json,
        text,
    })
}

fn audit(ctx: &Ctx, a: &AuditArgs) -> Result<Report, CliError> {
    let (id, nm) = ctx.nmatrix()?;
    let axioms: Vec<AxiomSchema> = if !a.schemas.is_empty() {
        a.schemas
            .iter()
            .map(|n| axiom(n).cloned().ok_or_else(|| CliError::Usage(format!("unknown schema `{n}`"))))
            .collect::<Result<_, _>>()?
    } else if a.circ {
        km_circ_axioms()
    } else {
        axioms_of(id)
    };
    let report = audit_axioms(&nm, &axioms);
    let mut text = String::new();
    for e in &report.entries {
        match &e.witness {
            None => {
                let _ = writeln!(text, "{:<6} holds  {}", e.name, e.skeleton);
            }
            Some(w) => {
                let _ = writeln!(text, "{:<6} FAILS  {}  [{}]", e.name, e.skeleton, leaves_text(w));
            }
        }
    }
    let _ = writeln!(
        text,
        "modus ponens preserves designation: {}",
        if report.mp_preserves_designation { "yes" } else { "no" }
    );
    let _ = writeln!(text, "{}", if report.sound() { "sound" } else { "not sound" });
    let mut json = to_json(&report)?;
    json["sound"] = report.sound().into();
    Ok(Report {
        status: status(report.sound()),
        json,
        text,
    })
}

fn lemmas(ctx: &Ctx) -> Result<Report, CliError> {
    let report = verify_lemma_suite(ctx.system()?);
    let mut text = String::new();
    for c in &report.checks {
        let prem: Vec<String> = c.premises.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            text,
            "{:<8} {:<6} {} |= {}",
            c.label,
            if c.holds { "holds" } else { "FAILS" },
            prem.join(", "),
            c.conclusion
        );
    }
    let mut json = to_json(&report)?;
    json["all_hold"] = report.all_hold().into();
    Ok(Report {
        status: status(report.all_hold()),
        json,
        text,
    })
}

fn load_derivation(path: &str) -> Result<Derivation, CliError> {
    parse_derivation(&read_file(path)?).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

/// Semantic confirmation of a derivation's sequent over its system.
fn confirmed(d: &Derivation) -> bool {
    let Some(c) = d.conclusion() else { return true };
    let hyps: Vec<Formula> = d.hyps.iter().map(|h| d.normal(h)).collect();
    decide_consequence(&builtin(d.system), &hyps, &d.normal(c)).holds()
}

fn proof(p: &ProofCommand) -> Result<Report, CliError> {
    match p {
        ProofCommand::Check { file } => {
            let d = load_derivation(file)?;
            let sequent = d.sequent().map(|s| s.to_string());
            let (checked, error, semantic) = match check_derivation(d.system, &d) {
                Ok(()) => (true, Value::Null, Some(confirmed(&d))),
                Err(e) => (false, json!({ "index": e.index, "reason": e.reason, "detail": e.detail }), None),
            };
            let ok = checked && semantic == Some(true);
            let mut text = String::new();
            if checked {
                let _ = writeln!(text, "ok: {} steps in {}", d.steps.len(), d.system);
                if let Some(s) = &sequent {
                    let _ = writeln!(text, "proves {s}");
                }
                let _ = writeln!(
                    text,
                    "semantically {}",
                    if semantic == Some(true) { "confirmed" } else { "NOT confirmed" }
                );
            } else {
                let _ = writeln!(text, "rejected: {}", error["detail"].as_str().unwrap_or_default());
                let _ = writeln!(text, "at step {} ({})", error["index"], error["reason"].as_str().unwrap_or_default());
            }
            Ok(Report {
                status: status(ok),
                json: json!({
                    "system": d.system,
                    "steps": d.steps.len(),
                    "sequent": sequent,
                    "checked": checked,
                    "error": error,
                    "semantically_confirmed": semantic,
                }),
                text,
            })
        }
        ProofCommand::Dmt { file, discharge } => {
            let d = load_derivation(file)?;
            let alpha = match discharge {
                Some(t) => formula(t)?,
                None => d
                    .hyps
                    .last()
                    .cloned()
                    .ok_or_else(|| CliError::Usage("the derivation has no hypotheses".into()))?,
            };
            match deduction_transform(&d, &alpha) {
                Ok(out) => {
                    let checked = check_derivation(out.system, &out).is_ok();
                    let text = out.to_string();
                    Ok(Report {
                        status: status(checked),
                        json: json!({
                            "system": out.system,
                            "discharged": alpha.to_string(),
                            "steps": out.steps.len(),
                            "sequent": out.sequent().map(|s| s.to_string()),
                            "checked": checked,
                            "derivation": text,
                        }),
                        text,
                    })
                }
                Err(CalculusError::InvalidInput(e)) => Ok(Report {
                    status: Status::Fails,
                    json: json!({ "checked": false, "error": e.to_string() }),
                    text: format!("input derivation rejected: {e}\n"),
                }),
                Err(e) => Err(CliError::usage(e)),
            }
        }
    }
}

fn dat_query(d: &DatArgs) -> Result<DatQuery, CliError> {
    let kind: DatKind = d.kind.parse().map_err(CliError::Usage)?;
    let (premises, conclusion) = read_query(&d.query)?;
    Ok(DatQuery {
        kind,
        premises,
        conclusion,
    })
}

fn dat_json(q: &DatQuery, outcome: &str, w: &DatWitness, verified: bool) -> Value {
    json!({
        "source": q.kind.source(),
        "target": q.kind.target(),
        "kind": q.kind,
        "outcome": outcome,
        "upsilon": w.upsilon,
        "upsilon_prime": w.upsilon_prime,
        "verified": verified,
    })
}

fn list(fs: &[Formula]) -> String {
    let items: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn dat(d: &DatCommand) -> Result<Report, CliError> {
    match d {
        DatCommand::Search {
            dat,
            max_size,
            pool_depth,
        } => {
            let q = dat_query(dat)?;
            let pool = pool_depth.map(|depth| {
                let mut all = q.premises.clone();
                all.push(q.conclusion.clone());
                let atoms: Vec<Formula> = {
                    let mut names = Vec::new();
                    for f in &all {
                        for a in f.atoms() {
                            if !names.contains(&a) {
                                names.push(a);
                            }
                        }
                    }
                    names.iter().map(|n| Formula::atom(n)).collect()
                };
                let mut pool = default_pool(&q);
                for f in formulas_up_to_depth(&atoms, depth) {
                    if !pool.contains(&f) {
                        pool.push(f);
                    }
                }
                pool
            });
            let (src, tgt) = (q.kind.source(), q.kind.target());
            match dat_search(&q, pool, *max_size) {
                DatOutcome::Found(w) => {
                    let verified = dat_verify(&q, &w);
                    let text = format!(
                        "found ({src} into {tgt})\nupsilon: {}\nupsilon_prime: {}\nverified: {verified}\n",
                        list(&w.upsilon),
                        list(&w.upsilon_prime)
                    );
                    Ok(Report {
                        status: status(verified),
                        json: dat_json(&q, "found", &w, verified),
                        text,
                    })
                }
                DatOutcome::SourceFails(v) => {
                    let mut json = dat_json(&q, "source-fails", &DatWitness::default(), false);
                    json["witness"] = to_json(&v)?;
                    Ok(Report {
                        status: Status::Fails,
                        json,
                        text: format!("the sequent fails in {src}: {}\n", leaves_text(&v)),
                    })
                }
                DatOutcome::Exhausted => Ok(Report {
                    status: Status::Fails,
                    json: dat_json(&q, "exhausted", &DatWitness::default(), false),
                    text: format!("no marking with at most {max_size} formulas\n"),
                }),
            }
        }
        DatCommand::Verify {
            dat,
            upsilon,
            upsilon_prime,
        } => {
            let q = dat_query(dat)?;
            let w = DatWitness {
                upsilon: upsilon.iter().map(|s| formula(s)).collect::<Result<_, _>>()?,
                upsilon_prime: upsilon_prime.iter().map(|s| formula(s)).collect::<Result<_, _>>()?,
            };
            let verified = dat_verify(&q, &w);
            Ok(Report {
                status: status(verified),
                json: dat_json(&q, "given", &w, verified),
                text: format!("{}\n", if verified { "verified" } else { "not verified" }),
            })
        }
    }
}

fn pigeonhole(n: usize, gamma: bool) -> Result<DugundjiFormula, CliError> {
    let built = if gamma { build_gamma(n) } else { build_delta(n) };
    built.map_err(CliError::usage)
}

fn dugundji(ctx: &Ctx, d: &DugundjiCommand) -> Result<Report, CliError> {
    match d {
        DugundjiCommand::Delta { n } | DugundjiCommand::Gamma { n } => {
            let f = pigeonhole(*n, matches!(d, DugundjiCommand::Gamma { .. }))?;
            Ok(Report {
                status: Status::Ok,
                json: json!({ "n": f.n, "kind": f.kind, "formula": render_sugared(&f.formula) }),
                text: format!("{}\n", render_sugared(&f.formula)),
            })
        }
        DugundjiCommand::Falsify { n, gamma, formula: text } => {
            let id = ctx.system()?;
            let f = match (n, text) {
                (Some(n), None) => pigeonhole(*n, *gamma)?.formula,
                (None, Some(t)) => formula(t)?,
                _ => return Err(CliError::Usage("give -n or --formula".into())),
            };
            let w = falsify(id, &f, ctx.jobs);
            let mut text = String::new();
            let json = match &w {
                None => {
                    text.push_str("valid\n");
                    json!({ "system": id, "formula": render_sugared(&f), "verdict": "holds", "witness": null })
                }
                Some(w) => {
                    let _ = writeln!(text, "falsified\nwitness: {}", leaves_text(w));
                    if let Some(p) = DugundjiFormula::recognize(&f) {
                        for g in p.hints().keys().filter(|g| !g.is_leaf()) {
                            if let Some(v) = w.get(g) {
                                let _ = writeln!(text, "  {v:<3} {}", render_sugared(g));
                            }
                        }
                    }
                    json!({ "system": id, "formula": render_sugared(&f), "verdict": "fails", "witness": to_json(w)? })
                }
            };
            let mut lines: Vec<&str> = text.lines().collect();
            // Hint order comes from a hash map; sort the indented lines.
            let head = 2.min(lines.len());
            lines[head..].sort();
            Ok(Report {
                status: status(w.is_none()),
                json,
                text: lines.join("\n") + "\n",
            })
        }
        DugundjiCommand::Scan {
            size,
            n,
            gamma,
            samples,
        } => {
            let id = ctx.system()?;
            let f = pigeonhole(n.unwrap_or(size + 1), *gamma)?;
            let opts = ScanOptions {
                samples: *samples,
                seed: ctx.seed,
                jobs: ctx.jobs,
            };
            let r = scan_matrices(*size, id, &f.formula, &opts).map_err(|e| match e {
                DugundjiError::BadN(_) | DugundjiError::BadSize(_) | DugundjiError::BudgetExceeded { .. } => {
                    CliError::usage(e)
                }
            })?;
            let mut text = String::new();
            let kind = if f.kind == Kind::Gamma { "gamma" } else { "delta" };
            let _ = writeln!(
                text,
                "size {} ({}): {} candidates, {} classes, {} models of {}",
                r.size,
                if r.exhaustive { "exhaustive" } else { "sampled" },
                r.candidates,
                r.classes,
                r.models,
                id
            );
            let _ = writeln!(text, "violations of {kind}({}): {}", f.n, r.violations.len());
            Ok(Report {
                status: status(r.violations.is_empty()),
                json: to_json(&r)?,
                text,
            })
        }
        DugundjiCommand::Conserve { samples, max_depth } => {
            let id = ctx.system()?;
            let r = conservativity_check(id, *samples, *max_depth, ctx.seed);
            let mut text = format!(
                "{} formulas, {} classically valid, {} discrepancies\n",
                r.samples,
                r.classically_valid,
                r.discrepancies.len()
            );
            for d in &r.discrepancies {
                let _ = writeln!(text, "  {} classical {} {id} {}", d.formula, d.reference, d.nmatrix);
            }
            Ok(Report {
                status: status(r.discrepancies.is_empty()),
                json: to_json(&r)?,
                text,
            })
        }
        DugundjiCommand::Agree { samples } => {
            let r = t45md_agreement(*samples, ctx.seed);
            let mut text = format!(
                "{} formulas, {} valid, {} disagreements\n",
                r.samples,
                r.valid,
                r.disagreements.len()
            );
            for d in &r.disagreements {
                let _ = writeln!(text, "  {} matrix {} nmatrix {}", d.formula, d.reference, d.nmatrix);
            }
            Ok(Report {
                status: status(r.disagreements.is_empty()),
                json: to_json(&r)?,
                text,
            })
        }
    }
}

fn export_tables(ctx: &Ctx) -> Result<Report, CliError> {
    let reading = ctx.reading();
    let mut text = String::new();
    let mut systems = Vec::new();
    for id in SystemId::ALL {
        let nm = builtin_with(id, reading);
        let file = save(&nm);
        let _ = writeln!(text, "#### {id}\n");
        text.push_str(&file);
        text.push('\n');
        let mut tables = serde_json::Map::new();
        for c in Connective::ALL {
            text.push_str(&table_grid(&nm, c));
            text.push('\n');
            tables.insert(c.name().to_string(), table_json(&nm, c));
        }
        systems.push(json!({ "system": id, "nmatrix": file, "tables": tables }));
    }
    let deviations = deviation_report(&SystemId::ALL);
    let _ = writeln!(text, "#### deviations from the printed tables\n");
    for d in &deviations {
        let args: Vec<String> = d.args.iter().map(|v| v.to_string()).collect();
        let systems: Vec<String> = d.systems.iter().map(|s| s.to_string()).collect();
        let place = format!("{} ({}) [{}]", d.table, args.join(", "), systems.join(" "));
        let _ = match d.kind {
            DeviationKind::Value => writeln!(text, "value: {place} printed {} coherent {}", d.printed, d.coherent),
            DeviationKind::Typographic => writeln!(text, "typographic: {place} {}", d.note),
        };
    }
    let reading = if ctx.strict { "printed" } else { "coherent" };
    Ok(Report {
        status: Status::Ok,
        json: json!({ "reading": reading, "systems": systems, "deviations": to_json(&deviations)? }),
        text,
    })
}
