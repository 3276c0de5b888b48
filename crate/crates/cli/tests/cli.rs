use serde_json::Value;
use stanley_cli::{run, EXIT_DOMAIN, EXIT_USAGE};
use stanley_series::{RationalSeries, SeriesJson};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stanley").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn pretty_examples() {
    let (code, out, _) = call(&["series", "--group", "so", "--k", "2", "--n", "4", "--format", "pretty"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(1+9t^2+9t^4+t^6)/(1-t^2)^7");
    let (code, out, _) = call(&["series", "--group", "gl", "--k", "0", "--p", "2", "--q", "2", "--format", "pretty"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");
}

#[test]
fn expansion_of_sp_covariants() {
    let v = json(&["covariants", "--group", "sp", "--k", "2", "--n", "6", "--sigma", "1,1", "--expand", "6"]);
    let c: Vec<i64> = serde_json::from_value(v["result"]["coefficients"].clone()).unwrap();
    assert_eq!(c, vec![0, 0, 15, 0, 210, 0, 1575]);
    assert_eq!(v["request"]["command"], "covariants");
    assert_eq!(v["request"]["parameters"]["sigma"], serde_json::json!([1, 1]));
}

#[test]
fn json_series_round_trips() {
    for args in [
        vec!["series", "--group", "sl", "--k", "3", "--p", "3", "--q", "4"],
        vec!["series", "--group", "o", "--k", "2", "--n", "4", "--semi", "pure"],
        vec!["covariants", "--group", "gl", "--k", "3", "--p", "4", "--q", "4", "--sigma-plus", "2,1"],
        vec!["covariants", "--group", "o", "--k", "3", "--n", "4", "--m", "2", "--painted"],
        vec!["wallach", "--pair", "e6"],
    ] {
        let v = json(&args);
        let parsed: SeriesJson = serde_json::from_value(v["result"]["series"].clone()).unwrap();
        let s = RationalSeries::from_json(&parsed).unwrap();
        assert_eq!(s.to_string(), v["result"]["display"].as_str().unwrap(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["facets", "--group", "o", "--k", "2", "--n", "4", "--painted", "1"];
    assert_eq!(call(&args), call(&args));
    let v = json(&args);
    let first = &v["result"]["facets"][0];
    assert!(first["paths"].is_array() && first["corners"].is_array() && first["painted"].is_array());
}

#[test]
fn oracle_flag_reports_checks() {
    let v = json(&["series", "--group", "gl", "--k", "2", "--p", "3", "--q", "3", "--oracle", "--oracle-degree", "6"]);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["passed"], true);
    let v = json(&["covariants", "--group", "o", "--k", "2", "--n", "3", "--m", "1", "--oracle"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn rsk_command() {
    let pair = r#"{"recording": [[1,1,1,2,3],[2,3,3],[4,4]], "insertion": [[1,1,2,2,3],[3,3,5],[5,5]]}"#;
    let v = json(&["rsk", "--tableau", pair]);
    let m: Vec<Vec<u64>> = serde_json::from_value(v["result"]["matrix"].clone()).unwrap();
    assert_eq!(m, vec![vec![1, 0, 0, 0, 2], vec![1, 0, 0, 0, 1], vec![0, 0, 3, 0, 0], vec![0, 2, 0, 0, 0]]);
    assert_eq!(v["result"]["width"], 3);
    assert_eq!(v["result"]["height"], 5);
    assert_eq!(v["result"]["peel"]["chains"].as_array().unwrap().len(), 3);
    let back = json(&["rsk", "--matrix", "[[1,0,0,0,2],[1,0,0,0,1],[0,0,3,0,0],[0,2,0,0,0]]"]);
    assert_eq!(back["result"]["tableaux"]["recording"]["rows"], serde_json::json!([[1, 1, 1, 2, 3], [2, 3, 3], [4, 4]]));
    let o = json(&["rsk", "--group", "o", "--tableau", "[[1,1,2,2],[2,2]]", "--n", "3"]);
    assert!(o["result"]["peel"]["chains_star"].as_array().unwrap().is_empty());
}

#[test]
fn oracle_command() {
    let v = json(&["oracle", "--group", "gl", "--k", "2", "--p", "4", "--q", "4", "--tensor"]);
    assert_eq!(v["result"]["tensor_invariants"], 14);
    let v = json(&["oracle", "--group", "o", "--k", "2", "--n", "4", "--degree", "4"]);
    assert_eq!(v["result"]["graded_dimensions"], serde_json::json!([1, 0, 10, 0, 55]));
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["series", "--group", "sl", "--k", "0", "--p", "2", "--q", "2"]);
    assert_eq!(code, EXIT_DOMAIN);
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "domain");
    assert_eq!(call(&["series", "--group", "gl", "--k", "1", "--nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["series", "--group", "gl", "--k", "1", "--p", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["wallach", "--pair", "e6", "--k", "2"]).0, EXIT_DOMAIN);
    let (code, _, _) = call(&["covariants", "--group", "gl", "--k", "1", "--p", "2", "--q", "2", "--sigma-plus", "1", "--sigma-minus", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn check_all_subset() {
    let (code, out, _) = call(&["check-all", "--only", "1,6", "--format", "pretty"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().all(|l| l.starts_with("[PASS]")));
}
