use std::process::{Command, Output};

fn hopfinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfinv")).args(args).env_remove("HOPFINV_THREADS").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hopfinv(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    hopfinv(args).status.code().expect("exited normally")
}

#[test]
fn table_matches_fixture_byte_for_byte() {
    let expected = include_str!("fixtures/table.txt");
    assert_eq!(stdout(&["table"]), expected);
    assert_eq!(stdout(&["--sequential", "table"]), expected);
}

#[test]
fn table_json_lists_eighteen_rows() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["table", "--json"])).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 18);
    assert_eq!(rows[0]["algebra"], "G_1_2");
    assert_eq!(rows[1]["algebra"], "A_1_2_-");
}

#[test]
fn k8_degree_two_coefficients() {
    assert_eq!(stdout(&["invariant", "K8", "--degree", "2", "--format", "coeffs"]), "x^8-2x^6+2x^4-2x^2+1\n");
}

#[test]
fn dimension_eight_degree_two_factorizations() {
    assert_eq!(stdout(&["invariant", "D8", "-d", "2"]), "Phi4 Phi2^3 Phi1^3\n");
    assert_eq!(stdout(&["invariant", "Q8", "-d", "2", "--format", "coeffs"]), "x^8+2x^6-2x^2-1\n");
}

#[test]
fn compare_distinguishes_suzuki_from_group_algebra() {
    let out = stdout(&["compare", "A_1_2_-", "G_1_2", "--degree", "1"]);
    assert_eq!(out, "DISTINCT (witness root: -1); not monoidally Morita equivalent\n");
}

#[test]
fn compare_equal_invariants_are_inconclusive() {
    let out = stdout(&["compare", "A_1_3_+", "G_1_3", "-d", "1", "-d", "2"]);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("EQUAL at every compared degree; inconclusive"), "{out}");
    assert!(out.contains("d=1: equal") && out.contains("d=2: equal"));
}

#[test]
fn compare_json_reports_witness() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["compare", "D8", "Q8", "-d", "2", "--json"])).unwrap();
    assert_eq!(v["distinct"], true);
    assert!(v["degrees"][0]["witness"].is_string());
}

#[test]
fn both_paths_agree_on_cyclic_group() {
    let both = stdout(&["invariant", "C_5", "--degree", "1", "--path", "both"]);
    assert_eq!(both, stdout(&["invariant", "C_5", "--degree", "1", "--path", "closed"]));
    assert_eq!(both, stdout(&["invariant", "C_5", "--degree", "1", "--path", "generic"]));
    assert_eq!(both, "Phi5^4 Phi1^9\n");
}

#[test]
fn invariant_json_carries_path_and_degree() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["invariant", "G_1_2", "-d", "2", "--format", "json", "--path", "both"])).unwrap();
    assert_eq!(v["path"], "both");
    assert_eq!(v["degree"], 2);
    assert_eq!(v["algebra"], "G_1_2");
}

#[test]
fn module_invariant_by_label() {
    let out = stdout(&["invariant", "C_3", "--module", "chi_1", "--format", "roots"]);
    assert_eq!(out.split_whitespace().count(), 3, "{out}");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hopfinv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k8.txt");
    assert_eq!(stdout(&["invariant", "K8", "-d", "2", "--out", path.to_str().unwrap()]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["invariant", "K8", "-d", "2"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(exit_code(&["invariant", "Foo"]), 2);
    assert_eq!(exit_code(&["invariant", "G_2_2"]), 2);
    assert_eq!(exit_code(&["invariant", "G_7_8", "--path", "closed"]), 2);
    assert_eq!(exit_code(&["invariant", "K8", "--degree", "0"]), 2);
    assert_eq!(exit_code(&["invariant", "A_1_2_+", "-d", "1"]), 2);
    assert_eq!(exit_code(&["invariant", "K8", "--format", "latex"]), 2);
    assert_eq!(exit_code(&["selfdual", "K8"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
}

#[test]
fn oversized_algebras_are_refused_with_a_resource_message() {
    let out = hopfinv(&["describe", "CxC_15_15"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the limit 200"));
}

#[test]
fn bad_thread_environment_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfinv")).args(["table"]).env("HOPFINV_THREADS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_reports_every_check() {
    let out = stdout(&["validate", "K8"]);
    assert!(out.lines().any(|l| l.starts_with("ok   Hopf axioms")));
    assert!(out.ends_with("K8: 14 checks, 0 failed\n"), "{out}");
}

#[test]
fn repring_of_group_algebra_checks_presentation() {
    let out = stdout(&["repring", "A_1_2_-"]);
    assert!(out.starts_with("Rep(A_1_2_-): rank 5, commutative\n"));
    assert!(out.contains("presentation: ") && out.contains(" 0 failed"));
}

#[test]
fn selfdual_verdicts() {
    let out = stdout(&["selfdual", "A_3_4_+"]);
    assert!(out.starts_with(
        "A_3_4_+: not self-dual: G(A) = C2 x C6 = C2 x C2 x C3 is commutative, G(A*) = SA24 is noncommutative\n"
    ));
    assert!(stdout(&["selfdual", "A_1_2_-"]).contains("self-dual: braiding sigma"));
}

#[test]
fn list_is_sorted_and_deterministic() {
    let a = stdout(&["list", "--max-dim", "24"]);
    assert_eq!(a, stdout(&["--threads", "1", "list", "--max-dim", "24"]));
    let dims: Vec<usize> = a.lines().map(|l| l.split(' ').nth(1).unwrap().parse().unwrap()).collect();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    assert!(a.contains("A_3_2_- 24\n"));
}
