//! End-to-end checks of the `pfarc` binary: exit codes, report shape,
//! determinism, and the config-file path.

use std::path::Path;
use std::process::{Command, Output};

fn pfarc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfarc"))
        .args(args)
        .env_remove("PFARC_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn pfaffian_command_emits_polynomial_json() {
    let out = pfarc(&["pfaffian", "--rows", "2,1", "--order", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ring"], "X");
    assert_eq!(v["p"], 2);
    assert_eq!(v["terms"][0][0], "1");
    assert_eq!(v["terms"][0][1][0], serde_json::json!([1, 2, 0, 1]));
}

#[test]
fn pfaffian_command_applies_signs() {
    let out = pfarc(&["pfaffian", "--rows", "1,2", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["terms"][0][0], "-1");
}

#[test]
fn order_command_compares_sequences() {
    let out = pfarc(&["order", "--cmp", "j", "--lhs", "d^0|4,3,2,1|", "--rhs", "d^0|2,1|"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["lhs_prec_rhs"], true);
    assert_eq!(v["rhs_prec_lhs"], false);

    let out = pfarc(&[
        "order", "--cmp", "e", "--lhs", "|(2,0),(1,0)|", "--rhs", "|(2,1),(1,0)|",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["partial_le_lhs_rhs"], true);
    assert_eq!(v["total_prec_lhs_rhs"], true);
}

#[test]
fn enum_standard_counts() {
    let out = pfarc(&[
        "enum-standard", "--p", "3", "--h", "2", "--deg", "1", "--wt", "0", "--count-only",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["count"], 3);

    let out = pfarc(&["enum-standard", "--p", "2", "--h", "2", "--deg", "2", "--wt", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 1);
    assert_eq!(v["products"][0]["factors"][0], "d^0|2,1|");
    assert_eq!(v["products"][0]["factors"][1], "d^1|2,1|");
}

#[test]
fn verify_basis_small_grid_passes() {
    let dir = tempfile::tempdir().unwrap();
    let emit = dir.path().join("report.json");
    let out = pfarc(&[
        "verify-basis", "--p", "4", "--h", "2", "--deg-max", "2", "--wt-max", "1",
        "--emit", emit.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "pfarc-report/1");
    assert_eq!(v["claim"], "standard-monomial-z-basis");
    assert_eq!(v["overall_pass"], true);
    // the classical quadric cell is in the grid
    let classical = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["cell"]["degree"] == 2 && c["cell"]["weight"] == 0)
        .unwrap();
    assert_eq!(classical["dim_ambient"], 21);
    assert_eq!(classical["rank_ideal"], 1);
    assert_eq!(classical["n_standard"], 20);
    // the emitted file holds the same report
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&emit).unwrap()).unwrap();
    assert_eq!(file, v);
}

fn strip_timing(mut v: serde_json::Value) -> serde_json::Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let args = [
        "verify-basis", "--p", "3", "--h", "2", "--deg-max", "2", "--wt-max", "2",
    ];
    let a = strip_timing(stdout_json(&pfarc(&args)));
    let b = strip_timing(stdout_json(&pfarc(&args)));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn worker_pool_size_never_changes_the_report() {
    let base = [
        "verify-basis", "--p", "4", "--h", "2", "--deg-max", "2", "--wt-max", "1",
    ];
    let mut one = base.to_vec();
    one.extend(["--threads", "1"]);
    let mut four = base.to_vec();
    four.extend(["--threads", "4"]);
    let mut a = strip_timing(stdout_json(&pfarc(&one)));
    let mut b = strip_timing(stdout_json(&pfarc(&four)));
    // the pool size is echoed in the config; everything else must agree
    a["config"].as_object_mut().unwrap().remove("threads");
    b["config"].as_object_mut().unwrap().remove("threads");
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn config_file_supplies_the_grid() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("grid.cfg");
    std::fs::write(&cfg, "# test grid\np = 2,3\nh = 2\ndeg_max = 2\nwt_max = 1\nthreads = 2\n")
        .unwrap();
    let out = pfarc(&["verify-basis", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["config"]["p_list"], serde_json::json!([2, 3]));
    // 2 sizes x 1 rank x 3 degrees x 2 weights
    assert_eq!(v["cells"].as_array().unwrap().len(), 12);
}

#[test]
fn env_threads_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_pfarc"))
        .args(["verify-basis", "--p", "2", "--h", "2", "--deg-max", "1", "--wt-max", "1", "--threads", "4"])
        .env("PFARC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["threads"], 1);
}

#[test]
fn verify_leading_and_injectivity_and_invariance() {
    let out = pfarc(&["verify-leading", "--p", "2", "--h", "2", "--deg-max", "2", "--wt-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["claim"], "leading-tableau-law");

    let out = pfarc(&["verify-injectivity", "--p", "3", "--h", "2", "--deg-max", "2", "--wt-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["claim"], "jet-map-injectivity");

    let out = pfarc(&["verify-invariance", "--p", "2", "--h", "2", "--k-max", "1", "--m-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["claim"], "symplectic-jet-invariance");
    assert_eq!(v["cells"][0]["checks"], 12);
}

#[test]
fn relations_custom_instance() {
    let out = pfarc(&[
        "relations", "--upper", "2,1", "--lower", "4,3", "--i", "2", "--j", "1",
        "--k0", "1", "--m", "1", "--seed", "1", "--p", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["cells"][0]["in_ideal"], true);
    assert_eq!(v["cells"][0]["vanishes_identically"], false);
}

#[test]
fn qh_command_maps_products() {
    let out = pfarc(&["qh", "--p", "2", "--h", "2", "--expr", "d^0|2,1|"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ring"], "A");
    assert_eq!(v["h"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);

    // an oversized factor maps to zero
    let out = pfarc(&["qh", "--p", "4", "--h", "2", "--expr", "d^0|4,3,2,1|"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn straighten_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    // build input JSON with the pfaffian command: x^(1)_{12} * x^(0)_{12}
    let poly = pfarc(&["qh", "--p", "2", "--h", "0", "--expr", "d^1|2,1|"]);
    assert_eq!(poly.status.code(), Some(0)); // sanity: qh with h=0 gives zero
    let input = dir.path().join("poly.json");
    std::fs::write(
        &input,
        serde_json::json!({
            "ring": "X", "p": 2, "h": 0,
            "terms": [["3", [[1, 2, 0, 1], [1, 2, 1, 1]]]]
        })
        .to_string(),
    )
    .unwrap();
    let out = pfarc(&["straighten", "--p", "2", "--h", "2", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["coefficients"][0]["coeff"], "3");
    assert_eq!(
        v["coefficients"][0]["product"],
        serde_json::json!(["d^0|2,1|", "d^1|2,1|"])
    );
}

#[test]
fn usage_errors_exit_two() {
    // odd h
    let out = pfarc(&["verify-basis", "--p", "4", "--h", "3", "--deg-max", "1", "--wt-max", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    // malformed flag
    let out = pfarc(&["verify-basis", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    // missing required grid
    let out = pfarc(&["verify-basis"]);
    assert_eq!(out.status.code(), Some(2));

    // bad literal
    let out = pfarc(&["order", "--cmp", "j", "--lhs", "nope", "--rhs", "d^0|2,1|"]);
    assert_eq!(out.status.code(), Some(2));

    // bad comparison kind
    let out = pfarc(&["order", "--cmp", "x", "--lhs", "d^0|2,1|", "--rhs", "d^0|2,1|"]);
    assert_eq!(out.status.code(), Some(2));

    // out-of-bounds rows for the declared size
    let out = pfarc(&["pfaffian", "--rows", "5,1", "--order", "0", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // straighten on a missing file
    let out = pfarc(&["straighten", "--p", "2", "--h", "2", "--input", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(pfarc(&["--help"]).status.code(), Some(0));
    assert_eq!(pfarc(&["--version"]).status.code(), Some(0));
    assert!(!pfarc(&["--help"]).stdout.is_empty());
}

#[test]
fn golden_outputs_are_stable() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, &[&str]); 4] = [
        ("pfaffian_4321_order1.json", &["pfaffian", "--rows", "4,3,2,1", "--order", "1"]),
        ("enum_standard_p3_h2_d2_w1.json", &["enum-standard", "--p", "3", "--h", "2", "--deg", "2", "--wt", "1"]),
        ("qh_p2_h2_w1.json", &["qh", "--p", "2", "--h", "2", "--expr", "d^1|2,1|"]),
        ("order_e_compare.json", &["order", "--cmp", "e", "--lhs", "|(2,0),(1,0)|", "--rhs", "|(1,0),(2,1)|"]),
    ];
    for (file, args) in cases {
        let expected = std::fs::read(golden.join(file)).unwrap();
        let out = pfarc(args);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert_eq!(
            out.stdout,
            expected,
            "golden drift in {file}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn emitted_report_is_valid_json_file(){
    let dir = tempfile::tempdir().unwrap();
    let emit = dir.path().join("rel.json");
    let out = pfarc(&["relations", "--emit", emit.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(&emit).exists());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&emit).unwrap()).unwrap();
    assert_eq!(v["claim"], "two-factor-relations");
    assert!(v["cells"].as_array().unwrap().len() >= 20);
}
