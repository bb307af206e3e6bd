use contact_lie::cli::run_args;

fn path(name: &str) -> String {
    format!("{}/../../configs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String) {
    let mut v = vec!["contact-lie".to_string()];
    v.extend(args.iter().map(|a| a.to_string()));
    let out = run_args(v);
    (out.code, out.report)
}

#[test]
fn validate_every_shipped_config() {
    for c in ["a", "a_sigma0", "b", "c", "mixed", "two_i1", "case_b", "d"] {
        let (code, report) = run(&["validate", "--config", &path(&format!("config_{c}.toml"))]);
        assert_eq!(code, 0, "{report}");
    }
}

#[test]
fn bracket_of_t0_and_x() {
    let (code, report) = run(&[
        "bracket",
        "--config",
        &path("config_a.toml"),
        "--u",
        &format!("@{}", path("element_t0.json")),
        "--v",
        &format!("@{}", path("element_x1.json")),
    ]);
    assert_eq!(code, 0);
    assert!(report.contains(r#"literal: [{"coeff":"-1","alpha":["0","1","0"],"i":[0,0,0]}]"#), "{report}");
}

#[test]
fn jacobi_run_is_deterministic() {
    let args = ["jacobi", "--config", &path("config_a.toml"), "--samples", "200", "--seed", "7"];
    let (code, first) = run(&args);
    assert_eq!(code, 0, "{first}");
    assert_eq!(run(&args).1, first);
    assert!(first.contains("config: sha256:"));
}

#[test]
fn oracle_compare_passes() {
    let (code, report) = run(&["oracle-compare", "--k", "1", "--cap", "4"]);
    assert_eq!(code, 0, "{report}");
    assert!(report.contains("1225 ordered pairs agree"));
}

#[test]
fn iso_certificates() {
    let verify =
        |cfg: &str, cert: &str| run(&["verify-iso", "--config", &path(cfg), "--cert", &path(cert), "--samples", "50"]);
    assert_eq!(verify("config_a.toml", "cert_a_golden.toml").0, 0);
    assert_eq!(verify("config_two_i1.toml", "cert_two_i1_swap.toml").0, 0);
    assert_eq!(verify("config_case_b.toml", "cert_case_b.toml").0, 0);
    let (code, report) = verify("config_a.toml", "cert_a_corrupt.toml");
    assert_eq!(code, 1);
    assert!(report.contains("counterexample: u = "), "{report}");
    let (code, report) = verify("config_d.toml", "cert_d_bad_h.toml");
    assert_eq!(code, 1);
    assert!(report.contains("FAIL h-rows"), "{report}");
    let (code, report) = run(&["build-iso", "--config", &path("config_a.toml"), "--cert", &path("cert_a_golden.toml")]);
    assert_eq!(code, 0);
    assert!(report.contains("theta(1·x^{(0,0,1),[0,0,0]}) = 1/2·x^{(0,0,2),[0,0,0]}"), "{report}");
}

#[test]
fn invariants_and_locfin() {
    let (code, report) = run(&["invariants", "--config", &path("config_a.toml"), "--other", &path("config_b.toml")]);
    assert_eq!(code, 0);
    assert!(report.contains("differ in layout, gamma_rank, iota3"), "{report}");
    let u = r#"[{"coeff":"1","alpha":["0","2","0"],"i":[0,0,0]}]"#;
    let (code, report) = run(&["locfin", "--config", &path("config_a.toml"), "--element", u, "--cap", "8"]);
    assert_eq!(code, 0);
    assert!(report.contains("growing dims [1,2,3,4,5,6,7,8,9]"), "{report}");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&["validate", "--config", &path("missing.toml")]).0, 2);
    let (code, report) = run(&["bracket", "--config", &path("config_a.toml"), "--u", "[{", "--v", "[]"]);
    assert_eq!(code, 2);
    assert!(report.contains("element literal: line 1"), "{report}");
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["oracle-compare", "--k", "0", "--cap", "2"]).0, 2);
}
