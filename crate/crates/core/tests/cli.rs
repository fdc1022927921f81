use std::process::{Command, Output};

use hodgediv::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodgediv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let rep = Report::from_json(&stdout(&o)).expect("valid report");
    (o.status.code().unwrap(), rep)
}

#[test]
fn derive_exit_codes() {
    let (code, rep) = json(&["derive", "--genus", "4"]);
    assert_eq!(code, 0);
    let v: Vec<String> = rep.vector.unwrap().into_values().collect();
    assert_eq!(v, ["-60", "114", "-10", "-21", "-28"]);
    assert_eq!(json(&["derive", "--genus", "2"]).0, 0);
    let o = run(&["derive", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("genus 1"));
}

#[test]
fn verify_examples() {
    let (code, rep) = json(&["verify-example", "--example", "quartic-pencil"]);
    assert_eq!(code, 0);
    let find = |q: &str, e: &str| {
        rep.rows
            .iter()
            .any(|r| r.quantity == q && r.expected.as_deref() == Some(e) && r.matched)
    };
    assert!(
        find("B.delta_0", "27")
            && find("B.lambda", "3")
            && find("deg eta", "1")
            && find("B.D", "18")
    );

    let (code, rep) = json(&["verify", "--example", "genus4-quadric"]);
    assert_eq!(code, 0);
    assert_eq!(
        rep.rows
            .iter()
            .filter(|r| r.quantity == "B.D" && r.computed == "56")
            .count(),
        3
    );

    assert_eq!(json(&["verify", "--example", "genus2-relation"]).0, 0);
    assert_eq!(run(&["verify", "--example", "nope"]).status.code(), Some(2));
}

#[test]
fn chow_and_teich() {
    let (_, rep) = json(&["chow", "eval", "(a+b)^2*(a+3b)*2b", "--dims", "1,3"]);
    assert_eq!(rep.pairing.as_deref(), Some("14"));
    let (_, rep) = json(&["chow", "eval", "x*y^3", "--dims", "1,3", "--gens", "x,y"]);
    assert_eq!(rep.pairing.as_deref(), Some("1"));
    assert_eq!(
        run(&["chow", "eval", "(a+", "--dims", "1,3"]).status.code(),
        Some(2)
    );

    let (code, rep) = json(&[
        "teich",
        "pair",
        "--kind",
        "quadratic",
        "--genus",
        "3",
        "--chi",
        "2",
        "--carea",
        "1/2",
    ]);
    assert_eq!((code, rep.pairing.as_deref()), (0, Some("-1")));
    let (_, rep) = json(&[
        "teich",
        "pair",
        "--kind",
        "abelian",
        "--genus",
        "5",
        "--chi",
        "3/2",
        "--lyapunov",
        "7/3",
    ]);
    assert_eq!(rep.pairing.as_deref(), Some("-1/2"));
    assert_eq!(
        run(&["teich", "pair", "--kind", "abelian", "--genus", "5", "--chi", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn threshold_and_certify() {
    let (code, rep) = json(&[
        "threshold",
        "--kind",
        "quadratic",
        "--genus",
        "2",
        "--a",
        "1",
        "--b",
        "1",
        "--c",
        "0",
        "--cmax",
        "1",
    ]);
    assert_eq!((code, rep.rows[0].computed.as_str()), (0, "72/235"));
    let base = [
        "certify", "--kind", "abelian", "--genus", "3", "--a", "1", "--b", "1", "--c", "0",
    ];
    assert_eq!(json(&base).0, 0);
    let mut doubled = base.to_vec();
    doubled.extend(["--d", "1/3"]);
    let (code, rep) = json(&doubled);
    assert_eq!(code, 1);
    assert!(rep
        .rows
        .iter()
        .any(|r| r.quantity.contains("L=3") && !r.matched));
    let neg = [
        "threshold",
        "--kind",
        "abelian",
        "--genus",
        "2",
        "--a",
        "-1",
        "--b",
        "1",
        "--c",
        "0",
    ];
    assert_eq!(run(&neg).status.code(), Some(2));
}

#[test]
fn catalog_write_check_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        json(&["catalog", "write", "--path", p, "--max-genus", "6"]).0,
        0
    );
    assert_eq!(json(&["catalog", "check", "--path", p]).0, 0);

    let (code, rep) = json(&["catalog", "list", "--genus", "5", "--path", p]);
    assert_eq!(code, 0);
    assert!(rep
        .rows
        .iter()
        .any(|r| r.quantity.starts_with("class D") && r.computed.starts_with("-120 eta")));
    assert!(rep.rows.iter().all(|r| !r.anchor.is_empty()));

    let text = std::fs::read_to_string(&path)
        .unwrap()
        .replacen("\"-120\"", "\"-121\"", 1);
    std::fs::write(&path, text).unwrap();
    assert_eq!(json(&["catalog", "check", "--path", p]).0, 1);

    // path from the environment
    let o = Command::new(env!("CARGO_BIN_EXE_hodgediv"))
        .args(["catalog", "check"])
        .env(
            hodgediv::catalog::CATALOG_ENV,
            dir.path().join("missing.json"),
        )
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--example", "genus4-quadric"][..],
        &["derive", "--genus", "7"],
        &[
            "catalog",
            "list",
            "--genus",
            "3",
            "--path",
            "/nonexistent/x.json",
        ],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout);
        let mut j = vec!["--json"];
        j.extend_from_slice(args);
        let s = stdout(&run(&j));
        assert_eq!(Report::from_json(&s).unwrap().to_json() + "\n", s);
    }
}
