use std::process::{Command, Output};

use serde_json::Value;

fn mnm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnm"))
        .args(args)
        .env_remove("MNM_SYSTEM")
        .env_remove("MNM_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = mnm(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

#[test]
fn reflexivity_is_valid_in_tm() {
    let o = mnm(&["valid", "--system", "Tm", "[]p -> p"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid");
}

#[test]
fn k_fails_in_km() {
    let o = mnm(&["entail", "--system", "Km", "-p", "[](p->q)", "-p", "[]p", "-c", "[]q"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("fails"));
    assert!(out.contains("p = I+, q = C+"), "{out}");

    let (code, v) = json(&["entail", "--system", "Km", "-p", "[](p->q)", "-p", "[]p", "-c", "[]q"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fails");
    assert_eq!(v["witness"]["p"], "I+");
    assert_eq!(v["witness"]["q"], "C+");
    assert!(v.get("time_ms").is_none());
}

#[test]
fn delta_three_falls_in_t45m() {
    let o = mnm(&["dugundji", "falsify", "--system", "T45m", "-n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("p1 = C+, p2 = C+, p3 = C+"));
}

#[test]
fn premises_can_come_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gamma.txt");
    std::fs::write(&path, "# K premises\n[](p -> q)\n\n[]p\n").unwrap();
    let (code, v) = json(&["entail", "--system", "Km", "-p", path.to_str().unwrap(), "-c", "[]q"]);
    assert_eq!(code, 1);
    assert_eq!(v["query"], "[](p -> q), []p |= []q");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["valid", "p"],
        vec!["valid", "--system", "Xm", "p"],
        vec!["valid", "--system", "Km", "p ->"],
        vec!["table", "--system", "Km", "and"],
        vec!["dugundji", "delta", "-n", "2"],
        vec!["dugundji", "scan", "--system", "Km", "--size", "4"],
        vec!["nonsense"],
    ] {
        assert_eq!(mnm(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn system_can_come_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mnm"))
        .args(["valid", "[]p -> p"])
        .env("MNM_SYSTEM", "Km")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_output_is_deterministic() {
    let run = |jobs: &str| mnm(&["--json", "--jobs", jobs, "countermodel", "--system", "K45m", "-c", "<>p -> []<>p"]);
    let (a, b, c) = (run("1"), run("1"), run("4"));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let (_, scan1) = json(&["--seed", "3", "dugundji", "scan", "--system", "Km", "--size", "3", "--samples", "2000"]);
    let (_, scan2) = json(&["--seed", "3", "dugundji", "scan", "--system", "Km", "--size", "3", "--samples", "2000"]);
    assert_eq!(scan1, scan2);
}

#[test]
fn text_and_json_agree() {
    let queries: [&[&str]; 4] = [
        &["valid", "--system", "Dm", "[]p -> <>p"],
        &["valid", "--system", "Km", "[]p -> <>p"],
        &["entail", "--system", "Tmd", "-p", "p", "-c", "[]p"],
        &["entail", "--system", "T45md", "-p", "[]p", "-c", "[][]p"],
    ];
    for q in queries {
        let text = mnm(q);
        let (code, v) = json(q);
        assert_eq!(text.status.code(), Some(code), "{q:?}");
        let holds = v["verdict"] == "holds";
        assert_eq!(holds, code == 0, "{q:?}");
        assert_eq!(holds, !stdout(&text).contains("witness"), "{q:?}");
    }
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["--timing", "valid", "--system", "Tm", "p -> p"]);
    assert!(v["time_ms"].is_u64());
    let o = mnm(&["--timing", "valid", "--system", "Tm", "p -> p"]);
    assert!(stdout(&o).contains("time: "));
}

#[test]
fn tables_and_strict_reading() {
    let (_, coherent) = json(&["table", "--system", "Dm", "neg"]);
    let (_, printed) = json(&["--strict-paper", "table", "--system", "Dm", "neg"]);
    let cell = |v: &Value, arg: &str| {
        v["rows"].as_array().unwrap().iter().find(|r| r["args"][0] == arg).unwrap()["cell"].clone()
    };
    assert_eq!(cell(&coherent, "T+"), serde_json::json!(["F-"]));
    assert_eq!(cell(&printed, "T+"), serde_json::json!(["T-"]));

    let (code, v) = json(&["export-tables"]);
    assert_eq!(code, 0);
    assert_eq!(v["systems"].as_array().unwrap().len(), 12);
    assert_eq!(v["reading"], "coherent");
}

#[test]
fn derived_tables() {
    let o = mnm(&["derive-table", "--system", "Tm", "~(A -> ~B)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("A \\ B"));
}

#[test]
fn audits() {
    let o = mnm(&["audit", "--system", "Km", "--schema", "K"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("a = I+, b = C+"));
    for id in ["Km", "T45md", "D45m"] {
        assert_eq!(mnm(&["audit", "--system", id]).status.code(), Some(0), "{id}");
    }
    assert_eq!(mnm(&["audit", "--system", "Km", "--circ"]).status.code(), Some(0));
    assert_eq!(mnm(&["lemmas", "--system", "K4m"]).status.code(), Some(0));
}

#[test]
fn proofs() {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/corpus/");
    let hs = format!("{corpus}hypothetical-syllogism.proof");
    let o = mnm(&["proof", "check", &hs]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("semantically confirmed"));

    let (code, v) = json(&["proof", "dmt", &hs]);
    assert_eq!(code, 0);
    assert_eq!(v["checked"], true);
    assert_eq!(v["sequent"], "p -> q |= (q -> r) -> p -> r");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.proof");
    std::fs::write(&bad, "system Km\n1. p -> p ; ax A1 [A=p; B=p]\n").unwrap();
    assert_eq!(mnm(&["proof", "check", bad.to_str().unwrap()]).status.code(), Some(1));
    std::fs::write(&bad, "system Km\n1. p -> p\n").unwrap();
    assert_eq!(mnm(&["proof", "check", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn recovery_search_and_verify() {
    let (code, v) = json(&["dat", "search", "--kind", "both", "-c", "[]p -> p"]);
    assert_eq!(code, 0);
    assert_eq!(v["upsilon"], serde_json::json!([]));
    assert_eq!(v["upsilon_prime"], serde_json::json!(["p"]));
    let ok = mnm(&["dat", "verify", "--kind", "both", "-c", "[]p -> p", "--upsilon-prime", "p"]);
    assert_eq!(ok.status.code(), Some(0));
    let no = mnm(&["dat", "verify", "--kind", "both", "-c", "[]p -> p"]);
    assert_eq!(no.status.code(), Some(1));
}

#[test]
fn scans_and_audits_of_the_pigeonhole_formulas() {
    let (code, v) = json(&["dugundji", "scan", "--system", "T45m"]);
    assert_eq!(code, 0);
    assert_eq!((v["candidates"].as_u64(), v["models"].as_u64()), (Some(2048), Some(2)));
    let (code, v) = json(&["dugundji", "conserve", "--system", "Tm", "--samples", "200"]);
    assert_eq!(code, 0);
    assert_eq!(v["discrepancies"], serde_json::json!([]));
    let (code, _) = json(&["dugundji", "agree", "--samples", "100"]);
    assert_eq!(code, 0);
    let o = mnm(&["dugundji", "gamma", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[]"));
}
