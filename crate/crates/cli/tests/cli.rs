use std::process::{Command, Output};

use acgroups::acmoves::{ACTransform, EndoMap};
use acgroups::fox::word_derivative;
use acgroups::json::{EndoJson, TaggedMatrix};
use acgroups::magnus::{bachmuth_jacobian, jacobian, nu};
use acgroups::relations::{verify_q_family, RelationFamily, RelationReport};
use acgroups::search::{ak_pair, bfs_trivialize, classify_small, ClassifyReport, SearchBudget, SearchResult, SearchStatus};
use acgroups::words::{Alphabet, Generator, Word};
use acgroups::{ZGroupRing, ZLaurent, ZProjectiveClass};
use serde_json::Value;

fn actool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actool")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let o = actool(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, code(&o))
}

fn from<T: serde::de::DeserializeOwned>(v: &Value) -> T {
    serde_json::from_value(v.clone()).unwrap()
}

fn schema(v: &Value) -> &str {
    v["schema"].as_str().unwrap()
}

#[test]
fn fox_of_inverse_generator() {
    let o = actool(&["fox", "--wrt", "x1", "--word", "x1^-1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "-x1^-1");

    let (v, c) = json(&["fox", "--wrt", "x1", "--word", "x2 x1^-1 x2"]);
    assert_eq!((c, schema(&v)), (0, "actool.fox.v1"));
    let got: ZGroupRing = from(&v["derivative"]);
    let expected = word_derivative::<acgroups::Integer>(Generator::x(1), &Word::parse_free("x2 x1^-1 x2").unwrap());
    assert_eq!(got, expected);
}

#[test]
fn act_applies_moves_left_to_right() {
    let o = actool(&["act", "--transform", "AC1(1,2)", "--tuple", "(x1, x2)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "(x1 x2, x2)");
    let o = actool(&["act", "--transform", "AC1(1,2); AC3(1)", "--tuple", "(x1, x2)"]);
    assert_eq!(stdout(&o).trim(), "(x2^-1 x1^-1, x2)");
}

#[test]
fn verify_q1_up_to_ten() {
    let o = actool(&["verify-relations", "--family", "q1", "--k-max", "10"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let (v, c) = json(&["verify-relations", "--family", "q1", "--k-max", "10"]);
    assert_eq!((c, schema(&v)), (0, "actool.verify-relations.v1"));
    let reports: Vec<RelationReport> = from(&v["reports"]);
    assert_eq!(reports.len(), 10);
    assert!(reports.iter().all(|r| r.holds && r.family == RelationFamily::Q1));
    assert_eq!(reports, verify_q_family(RelationFamily::Q1, 10).unwrap());
}

#[test]
fn other_relation_families_hold() {
    for fam in ["q2", "commutator", "a1m"] {
        let (v, c) = json(&["verify-relations", "--family", fam, "--k-max", "4"]);
        assert_eq!(c, 0, "{fam}");
        assert_eq!(v["all_hold"], Value::Bool(true));
        assert_eq!(v["family"], Value::from(fam));
    }
}

#[test]
fn failing_check_exits_one() {
    let (v, c) = json(&["verify-relations", "--family", "word", "--transform", "AC1(1,2)"]);
    assert_eq!(c, 1);
    let reports: Vec<RelationReport> = from(&v["reports"]);
    assert!(!reports[0].holds);
    assert_eq!(reports[0].family, RelationFamily::Word);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["fox", "--wrt", "x1", "--word", "x1 ^"],
        vec!["act", "--transform", "AC9(1,2)", "--tuple", "(x1, x2)"],
        vec!["search", "--pair", "x1 x3"],
        vec!["frobnicate"],
        vec!["fox", "--wrt", "x1", "--word", "x1", "--bogus"],
        vec!["verify-relations", "--family", "word"],
        vec!["search", "--max-nodes", "0"],
    ] {
        let o = actool(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn budget_hit_exits_three() {
    let (v, c) = json(&["ak", "--n", "3", "--max-len", "30", "--max-nodes", "20000"]);
    assert_eq!((c, schema(&v)), (3, "actool.ak.v1"));
    let r: SearchResult = from(&v["result"]);
    assert_eq!(r.status, SearchStatus::BudgetHit);
    assert_eq!(v["total_length"], Value::from(13));

    let (u, w) = ak_pair(3).unwrap();
    let direct = bfs_trivialize(&u, &w, &SearchBudget::new(30, 20_000)).unwrap();
    assert_eq!(r.stats.nodes_expanded, direct.stats.nodes_expanded);

    let (_, c) = json(&["search", "--entry", "ak3", "--max-len", "14"]);
    assert_eq!(c, 3);
}

#[test]
fn search_output_replays() {
    let (v, c) = json(&["search", "--pair", "x1 x2 x1 ; x1 x2", "--max-len", "10"]);
    assert_eq!((c, schema(&v)), (0, "actool.search.v1"));
    let r: SearchResult = from(&v["result"]);
    assert_eq!(r.status, SearchStatus::Found);
    let path = r.path.unwrap();
    assert_eq!(ACTransform::parse(v["result"]["path"].as_str().unwrap(), Alphabet::new(2, 0).unwrap()).unwrap(), path);
    let (p, q) = acgroups::search::replay(
        &Word::parse_free("x1 x2 x1").unwrap(),
        &Word::parse_free("x1 x2").unwrap(),
        &path,
    )
    .unwrap();
    assert_eq!((p.len(), q.len()), (1, 1));
}

#[test]
fn seed_makes_scrambles_reproducible() {
    let run = |seed: &str| {
        let (mut v, c) = json(&["--seed", seed, "search", "--scramble", "8"]);
        assert_eq!(c, 0);
        v["result"]["stats"]["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(run("9"), run("9"));
    let distinct: std::collections::HashSet<String> =
        (1..8).map(|s| run(&s.to_string())["pair"].to_string()).collect();
    assert!(distinct.len() > 1);
    let (default, _) = json(&["search", "--scramble", "8"]);
    assert_eq!(default["pair"], run("1")["pair"]);
}

#[test]
fn jacobian_json_matches_library() {
    let text = "AC1(1,2); C(2, y1); AC3(1)";
    let (v, c) = json(&["jacobian", "--transform", text]);
    assert_eq!((c, schema(&v)), (0, "actool.jacobian.v1"));
    let t = ACTransform::parse(text, Alphabet::new(2, 1).unwrap()).unwrap();
    let e: EndoMap = from::<EndoJson>(&v["endomorphism"]).try_into().unwrap();
    assert_eq!(e, t.to_endo());
    let j = from::<TaggedMatrix<ZGroupRing>>(&v["jacobian"]).into_matrix().unwrap();
    assert_eq!(j, jacobian(&e));
    let b = from::<TaggedMatrix<ZLaurent>>(&v["bachmuth"]).into_matrix().unwrap();
    assert_eq!(b, bachmuth_jacobian(&e));
}

#[test]
fn nu_json_matches_library() {
    let text = "AC2(1,2); C(1, y1^-1); AC1(2,1)";
    let (v, c) = json(&["nu", "--transform", text, "--m", "2", "--kappa", "2"]);
    assert_eq!((c, schema(&v)), (0, "actool.nu.v1"));
    let t = ACTransform::parse(text, Alphabet::new(2, 2).unwrap()).unwrap();
    let class: ZProjectiveClass = from(&v["class"]);
    assert_eq!(class, nu(&t, 2).unwrap());
    assert_eq!(v["identity"], Value::Bool(false));
}

#[test]
fn witness_reports_identity() {
    let (v, c) = json(&["witness", "--transform", "AC1(1,2); AC1(1,2)^-1"]);
    assert_eq!((c, schema(&v)), (0, "actool.witness.v1"));
    assert_eq!(v["identity"], Value::Bool(true));
    assert_eq!(v["witness_fixed"], Value::Bool(true));
    let (v, _) = json(&["witness", "--transform", "C(1, y1)"]);
    assert_eq!(v["identity"], Value::Bool(false));
    assert_eq!(v["witness_fixed"], Value::Bool(false));
}

#[test]
fn classify_json_matches_library() {
    let (v, c) = json(&["classify", "--max-len", "4", "--search-max-len", "10", "--max-nodes", "100000"]);
    assert_eq!((c, schema(&v)), (0, "actool.classify.v1"));
    let got: ClassifyReport = from(&v["report"]);
    assert_eq!(got, classify_small(4, &SearchBudget::new(10, 100_000)).unwrap());
}

#[test]
fn text_and_json_agree_on_status() {
    for args in [vec!["fox", "--wrt", "x2", "--word", "x2^3"], vec!["ak", "--max-len", "14"]] {
        let text = code(&actool(&args));
        let mut j = vec!["--output", "json"];
        j.extend_from_slice(&args);
        assert_eq!(text, code(&actool(&j)), "{args:?}");
    }
}
