use std::io::Write;
use std::process::{Command, Output};

use logsine::algebra::parse_expr;
use logsine::cli::{parse_query, EXIT_PARSE, EXIT_TABLE, EXIT_VERIFY};
use serde_json::Value;

fn lstoli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lstoli")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_table(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("lstoli-{}-{name}.table", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, "# logsine reduction table v1\n{body}").unwrap();
    path
}

#[test]
fn text_output() {
    let o = lstoli(&["Ls(5,2,2pi)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-13/45*Pi^5");

    let o = lstoli(&["-Ls(5,0,Pi/3)", "--heuristic"]);
    assert_eq!(stdout(&o).trim(), "1543/19440*Pi^5 - 6*Gl[{4,1},Pi/3]");

    let o = lstoli(&["LS[5,1,PI]", "--heuristic"]);
    let listing = parse_expr("6*Li[{3,1,1},-1] + (Pi^2*Zeta[3])/4 - (105*Zeta[5])/32").unwrap();
    assert_eq!(parse_expr(stdout(&o).trim()).unwrap(), listing);

    let o = lstoli(&["Ls(6,3,1/3*pi) - 2*Ls(6,1,pi/3)", "--heuristic"]);
    assert_eq!(stdout(&o).trim(), "313/204120*Pi^6");
}

#[test]
fn output_reparses_as_expression() {
    for (q, flags) in [("Ls(6,0,pi/3)", "--heuristic"), ("Ls(5,2,2pi/3)", "--no-reduce"), ("Lsh(4,1)", "--digits=30")] {
        let o = lstoli(&[q, flags]);
        assert!(o.status.success(), "{q}");
        let text = stdout(&o);
        let parsed = parse_query(text.trim()).unwrap();
        assert!(parsed.is_expr());
        assert_eq!(parsed.constant.to_string(), text.trim());
    }
}

#[test]
fn verify_and_json_schema() {
    let o = lstoli(&["Ls(5,2,2pi/3)", "--heuristic", "--verify", "--digits", "40", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let obj = v.as_object().unwrap();
    let mut keys: Vec<_> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["expression", "query", "reduced_mode", "verify", "weight"]);
    assert_eq!(v["query"], "Ls[5,2,2*Pi/3]");
    assert_eq!(v["weight"], 5);
    assert_eq!(v["reduced_mode"], "heuristic");
    assert_eq!(v["verify"]["digits"], 40);
    let residual: f64 = v["verify"]["residual"].as_str().unwrap().parse().unwrap();
    assert!(residual < 1e-35);
    for term in v["expression"].as_array().unwrap() {
        assert!(term["coeff"].is_string());
        for f in term["factors"].as_array().unwrap() {
            let f = f.as_object().unwrap();
            assert!(f["kind"].is_string() && f["power"].is_u64());
            assert!(f.keys().all(|k| ["kind", "index", "angle", "power"].contains(&k.as_str())));
            if f["kind"] == "Gl" || f["kind"] == "Cl" {
                assert_eq!(f["angle"], "2*Pi/3");
                assert!(f["index"].is_array());
            }
        }
    }

    let o = lstoli(&["Ls(4,1,pi)", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.get("verify").is_none());
    assert_eq!(v["reduced_mode"], "analytic");
}

#[test]
fn parse_and_domain_errors() {
    let o = lstoli(&["Ls(3,5,pi)"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k <= n-1"));

    let o = lstoli(&["Ls(3,1,pi"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at 9"));

    assert_eq!(lstoli(&["Ls(3,1,sqrt(2))"]).status.code(), Some(EXIT_PARSE));
    assert_eq!(lstoli(&["Ls(3,1,pi)", "--bogus"]).status.code(), Some(EXIT_PARSE));
}

#[test]
fn table_failures() {
    let corrupted = temp_table("corrupt", "Zeta[3,1] := 361/360*Pi^4 ; provenance=pslq ; digits=60 ; source=x\n");
    let o = lstoli(&["Ls(4,1,pi)", "--heuristic", "--table", corrupted.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_TABLE));

    let open = temp_table("open", "Zeta[3,1] := 1/360*Pi^4 + Zeta[5,1] ; provenance=pslq ; digits=60 ; source=x\n");
    assert_eq!(lstoli(&["Ls(4,1,pi)", "--table", open.to_str().unwrap()]).status.code(), Some(EXIT_TABLE));
    assert_eq!(lstoli(&["Ls(4,1,pi)", "--table", "/nonexistent/table"]).status.code(), Some(EXIT_TABLE));
}

#[test]
fn verification_failure_exit_code() {
    let wrong = temp_table("wrong", "Zeta[3,1] := 1/300*Pi^4 ; provenance=analytic ; digits=0 ; source=x\n");
    let o = lstoli(&["Ls(6,1,pi/3)", "--heuristic", "--verify", "--table", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_VERIFY));
    assert!(stdout(&o).contains("FAILED"));
}

#[test]
fn extended_angle_agrees() {
    let a = lstoli(&["Ls(6,2,5pi/3)", "--heuristic"]);
    let b = lstoli(&["Ls(6,2,5pi/3)", "--heuristic", "--extended-angle"]);
    assert_eq!(stdout(&a), stdout(&b));
}
