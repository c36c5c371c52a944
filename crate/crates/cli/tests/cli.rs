use std::process::{Command, Output};

fn dehnforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dehnforge"))
        .args(args)
        .env_remove("DEHNFORGE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dehnforge(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn reduce_and_check() {
    assert_eq!(stdout(&["reduce", "aAbcCd"]), "bd\n");
    assert_eq!(stdout(&["reduce", "sS"]), "\n");
    assert_eq!(
        stdout(&["check", "SbAsaB", "--metrics"]),
        "exponent_sum=0 balanced=1 null_homotopic=1\nP=undefined Q=1 R=1\n"
    );
    assert_eq!(
        stdout(&["check", "abAB"]),
        "exponent_sum=0 balanced=1 null_homotopic=0\n"
    );
    assert!(!dehnforge(&["check", "axb"]).status.success());
}

#[test]
fn fill_writes_a_valid_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hnn.trace");
    let p = path.to_str().unwrap();
    let line = stdout(&["fill", "SbAsaB", "--emit-trace", p]);
    assert!(line.starts_with("n=6 k=4 cost="), "{line}");
    assert!(line.trim_end().ends_with("rounds=2"), "{line}");
    let cost = line.split_whitespace().find_map(|f| f.strip_prefix("cost=")).unwrap();
    let verified = stdout(&["trace-verify", p, "--expect-end", ""]);
    assert_eq!(verified, format!("valid end= cost={cost}\n"));
    assert!(!dehnforge(&["trace-verify", p, "--expect-end", "ab"]).status.success());
}

#[test]
fn stages() {
    assert_eq!(stdout(&["fill", "abAB", "--stage", "alg3"]), "v=aCbAcB cost=2\n");
    assert!(stdout(&["fill", "bD", "--stage", "alg1"]).starts_with("v=bCcAaD "));
    assert!(stdout(&["fill", "sbDS", "--stage", "alg4"]).starts_with("v=bCcAaD "));
    assert!(!dehnforge(&["fill", "ab"]).status.success());
    assert!(!dehnforge(&["fill", "sbD", "--stage", "alg4"]).status.success());
}

#[test]
fn corrupted_trace_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.trace");
    std::fs::write(&path, "ab\nF 1\n").unwrap();
    let out = dehnforge(&["trace-verify", path.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn oracle_output() {
    assert_eq!(
        stdout(&["oracle", "ACac"]).split(" states=").next().unwrap(),
        "area=1 exhausted=0"
    );
    assert!(stdout(&["oracle", "ab"]).starts_with("area=unknown exhausted=0"));
}

#[test]
fn survey_is_reproducible_and_honours_the_seed_variable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = |p: &std::path::Path| {
        vec![
            "survey".to_string(),
            "--family".into(),
            "random".into(),
            "--n-max".into(),
            "64".into(),
            "--samples".into(),
            "2".into(),
            "--out".into(),
            p.to_str().unwrap().into(),
        ]
    };
    let run = |p: &std::path::Path, seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_dehnforge"));
        cmd.args(args(p)).env_remove("DEHNFORGE_SEED");
        if let Some(s) = seed {
            cmd.env("DEHNFORGE_SEED", s);
        }
        assert!(cmd.status().unwrap().success());
        std::fs::read_to_string(p).unwrap()
    };
    let first = run(&a, Some("11"));
    assert_eq!(first, run(&b, Some("11")));
    assert!(first.starts_with("family,seed,n,k,cost,bound,len_final\n"));
    assert!(first.lines().nth(1).unwrap().starts_with("random,11,"));
    assert_ne!(first, run(&b, None));
    for row in first.lines().skip(1) {
        let f: Vec<&str> = row.split(',').collect();
        let (cost, bound): (u128, u128) = (f[4].parse().unwrap(), f[5].parse().unwrap());
        assert!(cost <= bound, "{row}");
        assert_eq!(f[6], "0");
    }
}

#[test]
fn lemmas_report() {
    let report = stdout(&["lemmas", "--trials", "20", "--seed", "3"]);
    assert_eq!(report.lines().count(), 8);
    assert!(report.lines().all(|l| l.contains("failed=0")), "{report}");
    assert_eq!(report, stdout(&["lemmas", "--trials", "20", "--seed", "3"]));
    assert!(!dehnforge(&["lemmas", "--trials", "0"]).status.success());
}
