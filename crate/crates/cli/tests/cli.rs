use std::path::{Path, PathBuf};
use std::process::Command;

use latnoether::{load_document, run, CliError, DocKind, Document, EXIT_INPUT, EXIT_NO, EXIT_YES};
use lattice_core::LatticeDoc;
use monomial_action::MonomialDoc;
use paper_models::fixtures::fixtures_dir;

fn fixture(name: &str) -> String {
    fixtures_dir().join(name).display().to_string()
}

fn cli(args: &[&str]) -> latnoether::Outcome {
    run(std::iter::once("latnoether").chain(args.iter().copied()))
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("latnoether-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn loads_sign_lattice() {
    match load_document(Path::new(&fixture("sign.json"))).unwrap() {
        Document::Lattice(l) => {
            assert_eq!(l.rank(), 1);
            assert_eq!(l.action()[0], exact_linalg::IntMatrix::from_rows(&[[-1]]));
        }
        other => panic!("{:?}", other.kind()),
    }
}

#[test]
fn loads_case1_step2_table_verified() {
    match load_document(Path::new(&fixture("case1_step2_p3.json"))).unwrap() {
        Document::Monomial(a, v) => {
            assert!(v.holds());
            assert_eq!(a.nvars(), 6);
        }
        other => panic!("{:?}", other.kind()),
    }
}

#[test]
fn non_unimodular_document_is_rejected() {
    let p = temp_file("bad.json", r#"{"group": "C2", "rank": 1, "action": {"g": [[2]]}}"#);
    let err = load_document(&p).unwrap_err();
    assert!(matches!(err, CliError::Validation { .. }), "{err}");
    let out = cli(&["classify", "--lattice", p.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("not unimodular"), "{}", out.stderr);
}

#[test]
fn parse_errors_carry_location() {
    let p = temp_file("broken.json", "{\n  \"rank\": 1,\n  \"action\": [\n");
    match load_document(&p).unwrap_err() {
        CliError::Parse { line, .. } => assert_eq!(line, 4),
        e => panic!("{e}"),
    }
}

#[test]
fn wrong_document_kind() {
    let out = cli(&["classify", "--lattice", &fixture("case1_step2_p3.json")]);
    assert_eq!(out.code, EXIT_INPUT);
    let err = latnoether::input::load_lattice(Path::new(&fixture("case1_step2_p3.json"))).unwrap_err();
    assert!(matches!(err, CliError::WrongKind { expected: DocKind::Lattice, found: DocKind::Monomial, .. }));
}

#[test]
fn rho_of_case1_lattice() {
    let out = cli(&["rho", "--lattice", &fixture("case1_M_p3.json")]);
    assert_eq!(out.code, EXIT_YES, "{}", out.stderr);
    assert!(out.stdout.contains("reason: endo-miyata"));
    let out = cli(&["--json", "rho", "--lattice", &fixture("case1_M_p3.json")]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["reason"], "endo-miyata");
    assert_eq!(v["invertible"], true);
}

#[test]
fn classify_sign_is_not_flabby() {
    let out = cli(&["classify", "--lattice", &fixture("sign.json")]);
    assert_eq!(out.code, EXIT_NO);
    assert!(out.stdout.contains("flabby: no (H^-1 = ℤ/2 on subgroup 2.1)"), "{}", out.stdout);
    let out = cli(&["--json", "classify", "--lattice", &fixture("sign.json")]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["flabby"], false);
    assert_eq!(v["entries"][1]["hat_minus1"]["invariant_factors"][0], 2);
}

#[test]
fn classify_regular_passes() {
    assert_eq!(cli(&["classify", "--lattice", &fixture("regular.json")]).code, EXIT_YES);
    assert_eq!(cli(&["classify", "--catalog", "induced", "--param", "group=S3", "--param", "sub=t"]).code, EXIT_YES);
}

#[test]
fn case1_iso_prints_intertwiner() {
    let out = cli(&["paper", "case1", "--p", "5", "--verify-iso"]);
    assert_eq!(out.code, EXIT_YES);
    let rows: Vec<&str> = out.stdout.lines().skip_while(|l| !l.starts_with("unimodular intertwiner")).skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.trim().starts_with('[') && r.split_whitespace().count() >= 8));
}

#[test]
fn monomial_verify_verdicts() {
    assert_eq!(cli(&["monomial-verify", "--action", &fixture("case1_step3_p5.json")]).code, EXIT_YES);
    let out = cli(&["monomial-verify", "--action", &fixture("case3_step1_p3.json")]);
    assert_eq!(out.code, EXIT_NO);
    assert!(out.stdout.starts_with("case 3 step 1 table (p = 3)\n"));
    let out = cli(&[
        "monomial-verify",
        "--action",
        &fixture("case1_step6_p5.json"),
        "--expect-lattice",
        &fixture("case1_M_p5.json"),
    ]);
    assert_eq!(out.code, EXIT_YES);
    let out = cli(&[
        "monomial-verify",
        "--action",
        &fixture("case1_step6_p3.json"),
        "--expect-lattice",
        &fixture("lambda_p3.json"),
    ]);
    assert_eq!(out.code, EXIT_NO);
}

#[test]
fn reiner_and_cert() {
    let out = cli(&["--json", "reiner", "--catalog", "reiner_model", "--param", "a=2", "--param", "b=1", "--param", "c=1"]);
    assert_eq!(out.code, EXIT_YES);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["counts"], serde_json::json!({"a": 2, "b": 1, "c": 1}));
    assert_eq!(cli(&["reiner", "--lattice", &fixture("case1_M_p3.json")]).code, EXIT_INPUT);
    assert_eq!(cli(&["cert", "--lattice", &fixture("regular.json")]).code, EXIT_YES);
    assert_eq!(cli(&["cert", "--lattice", &fixture("sign.json")]).code, EXIT_NO);
}

#[test]
fn resolve_sign() {
    let out = cli(&["resolve", "--lattice", &fixture("sign.json")]);
    assert_eq!(out.code, EXIT_YES);
    assert!(out.stdout.contains("ranks: M = 1, P = 2, E = 1"));
    let out = cli(&["--json", "resolve", "--minimal", "--catalog", "trivial"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["exact"], true);
    assert_eq!(v["e_flabby"], true);
}

#[test]
fn cohomology_subgroup_filter() {
    let out = cli(&["--json", "cohomology", "--lattice", &fixture("sign.json"), "--subgroup", "2.1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(cli(&["cohomology", "--lattice", &fixture("sign.json"), "--subgroup", "9.9"]).code, EXIT_INPUT);
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(cli(&["classify", "--bogus"]).code, EXIT_INPUT);
    assert_eq!(cli(&["classify"]).code, EXIT_INPUT);
    assert_eq!(cli(&["classify", "--catalog", "nope"]).code, EXIT_INPUT);
    assert_eq!(cli(&["paper", "table", "--case", "4", "--step", "1", "--p", "3"]).code, EXIT_INPUT);
    assert_eq!(cli(&["paper", "cyclotomic", "--p", "9"]).code, EXIT_INPUT);
    assert_eq!(cli(&["--help"]).code, EXIT_YES);
}

#[test]
fn paper_table_exit_codes() {
    assert_eq!(cli(&["paper", "table", "--case", "1", "--step", "6", "--p", "3"]).code, EXIT_YES);
    let out = cli(&["paper", "table", "--case", "3", "--step", "1", "--p", "5"]);
    assert_eq!(out.code, EXIT_NO);
    assert!(out.stdout.contains("relation 14 (sigma3 sigma4 = sigma4 sigma2 sigma3) fails"));
    assert_eq!(cli(&["paper", "cyclotomic", "--p", "7"]).code, EXIT_YES);
    assert_eq!(cli(&["paper", "case3", "--p", "3"]).code, EXIT_YES);
}

#[test]
fn output_is_byte_stable_and_independent_of_jobs() {
    for args in [
        vec!["classify", "--lattice", "F:case1_M_p5.json"],
        vec!["paper", "tables"],
        vec!["--json", "rho", "--lattice", "F:case3_M_p3.json"],
        vec!["--json", "paper", "case3", "--p", "5"],
    ] {
        let args: Vec<String> = args.iter().map(|a| a.strip_prefix("F:").map(fixture).unwrap_or(a.to_string())).collect();
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = cli(&refs);
        let b = cli(&refs);
        assert_eq!(a, b);
        let mut with_jobs = vec!["--jobs", "3"];
        with_jobs.extend(&refs);
        assert_eq!(cli(&with_jobs), a);
    }
}

#[test]
fn binary_matches_library() {
    let exe = env!("CARGO_BIN_EXE_latnoether");
    let out = Command::new(exe).args(["classify", "--lattice", &fixture("sign.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_NO));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), cli(&["classify", "--lattice", &fixture("sign.json")]).stdout);
    let out = Command::new(exe).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
}

#[test]
fn every_fixture_round_trips() {
    let mut n = 0;
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        let doc = load_document(&path).unwrap();
        let text = match &doc {
            Document::Lattice(l) => serde_json::to_string(&LatticeDoc::from_lattice(l)).unwrap(),
            Document::Monomial(a, _) => serde_json::to_string(&MonomialDoc::from_action(a)).unwrap(),
            Document::Group(_) => continue,
        };
        let again = load_document(&temp_file("round.json", &text)).unwrap();
        match (&doc, &again) {
            (Document::Lattice(a), Document::Lattice(b)) => assert_eq!(a, b, "{}", path.display()),
            (Document::Monomial(a, v), Document::Monomial(b, w)) => {
                assert_eq!(a, b, "{}", path.display());
                assert_eq!(v, w);
            }
            _ => panic!("kind changed for {}", path.display()),
        }
        n += 1;
    }
    assert!(n >= 35);
}

#[test]
fn fixture_labels() {
    use latnoether::input::fixture_label;
    assert_eq!(fixture_label(Path::new("x/case2_step4b_p5.json")).as_deref(), Some("case 2 step 4b table (p = 5)"));
    assert_eq!(fixture_label(Path::new("case1_M_p3.json")), None);
    assert_eq!(fixture_label(Path::new("sign.json")), None);
}
