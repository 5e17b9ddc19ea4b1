use jackleaf::algebra::{MultiPoly, RatFun, UniPoly};
use jackleaf::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jackleaf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn leaf_json() {
    let (code, out, _) = call(&["leaf", "--lambda", "7,3,3,1", "--mu", "4,3,1,1"]);
    assert_eq!(code, 0);
    let p: MultiPoly = serde_json::from_str(&out).unwrap();
    assert_eq!(p.to_unipoly().unwrap(), UniPoly::from_ints(&[60, 238, 275, 90, 9]));
}

#[test]
fn decompose_ascii() {
    let (code, out, _) = call(&["decompose", "--lambda", "8,7,3,3,1", "--mu", "8,4,3,1,1", "--format", "ascii"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    let (_, plain, _) = call(&["decompose", "--lambda", "7,3,3,1", "--mu", "4,3,1,1", "--format", "ascii", "--no-critical"]);
    assert_eq!(plain, "RJJRSSS\nNCC\nRSS\nN\n");
    let (_, marked, _) = call(&["decompose", "--lambda", "7,3,3,1", "--mu", "4,3,1,1", "--format", "ascii"]);
    assert_eq!(marked.lines().next(), Some("RJ*RSSS"));
}

#[test]
fn binomial_outside_is_zero() {
    let (code, out, _) = call(&["binomial", "--lambda", "2", "--mu", "1,1"]);
    assert_eq!(code, 0);
    let q: RatFun = serde_json::from_str(&out).unwrap();
    assert!(q.is_zero());
    let (_, out, _) = call(&["binomial", "--lambda", "2", "--mu", "1", "--eval", "r=1"]);
    assert_eq!(out.trim(), "\"2\"");
}

#[test]
fn json_round_trip_is_deterministic() {
    let (_, a, _) = call(&["stem", "--lambda", "6,5,3,1", "--mu", "6,2,1,1"]);
    let (_, b, _) = call(&["stem", "--lambda", "6,5,3,1", "--mu", "6,2,1,1"]);
    assert_eq!(a, b);
    let q: RatFun = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string(&q).unwrap(), a.trim());
}

#[test]
fn closed_form_options() {
    let (code, out, _) = call(&["closed-form", "--u", "3", "--d", "2", "--y", "1+r"]);
    assert_eq!(code, 0);
    let p: MultiPoly = serde_json::from_str(&out).unwrap();
    assert_eq!(p.to_unipoly().unwrap(), UniPoly::from_ints(&[60, 238, 275, 90, 9]));
    let (_, out, _) = call(&["closed-form", "--u", "3", "--d", "2", "--m", "1"]);
    let p: MultiPoly = serde_json::from_str(&out).unwrap();
    assert_eq!(p.to_unipoly().unwrap(), UniPoly::from_ints(&[0, 6]));
    let (code, out, _) = call(&["closed-form", "--u", "1", "--d", "1", "--y-symbolic"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"y\""));
    let (code, _, err) = call(&["closed-form", "--u", "1", "--d", "1", "--y", "1", "--y-symbolic"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["leaf", "--lambda", "2", "--bogus"]).0, 2);
    assert_eq!(call(&["leaf", "--lambda", "x"]).0, 2);
    let (code, _, err) = call(&["stem", "--lambda", "2", "--mu", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("not contained"));
    assert_eq!(call(&["closed-form", "--u", "1", "--d", "1", "--m", "2"]).0, 1);
    assert_eq!(call(&["verify", "--suite", "nope"]).0, 1);
    assert_eq!(call(&["table", "--n-max", "16"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = call(&[
        "verify", "--suite", "Q-recurrence", "--u-max", "3", "--d-max", "3", "--report", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().last().unwrap().ends_with("checks passed"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report["entries"].as_array().unwrap().iter().all(|e| e["pass"] == true));
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let (code, _, _) = call(&["table", "--n-max", "0", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("lambda,mu,u,d,m,y,K,L"));

    let (code, out, _) = call(&["table", "--n-max", "8", "--shape", "two-row"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    let single = rows.iter().find(|r| &r[0] == "2" && &r[1] == "1").unwrap();
    assert_eq!((&single[6], &single[7]), ("2", "1"));
    let gap = rows.iter().find(|r| &r[0] == "3,1" && &r[1] == "2").unwrap();
    assert_eq!((&gap[2], &gap[3], &gap[4], &gap[5]), ("1", "1", "0", "1"));
    assert!(rows.iter().all(|r| &r[8] == "true"));

    let (code, _, err) = call(&["table", "--n-max", "1", "--output", dir.path().join("missing/t.csv").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}
