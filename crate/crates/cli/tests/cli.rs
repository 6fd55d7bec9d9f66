use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotgroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn alexander_of_wirtinger_file() {
    let present = run(&["present", "--p", "3", "--form", "wirtinger"]);
    assert_eq!(present.status.code(), Some(0));
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&present.stdout).unwrap();
    let out = run(&["alexander", "--file", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 -1 0 1 0 -1 1\n");
}

#[test]
fn alexander_rejects_bad_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"rel: x\n").unwrap();
    let out = run(&["alexander", "--file", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let out = run(&["alexander", "--file", "/nonexistent/presentation.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn alexander_refuses_non_knot_groups() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"gens: x y\n").unwrap();
    let out = run(&["alexander", "--file", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn distinct_json() {
    let out = run(&["distinct", "--p", "2", "--k", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"phi_index\": 12"));
    assert!(text.contains("\"valid\": true"));
    assert_eq!(
        text,
        stdout(&run(&["distinct", "--p", "2", "--k", "3", "--json"]))
    );

    let unit = stdout(&run(&["distinct", "--p", "1", "--k", "2", "--json"]));
    assert!(unit.contains("\"mode\": \"unit_ideal\""));
}

#[test]
fn distinct_bad_pair_is_usage_error() {
    let out = run(&["distinct", "--p", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn distinct_range_is_sorted_and_deterministic() {
    let out = run(&["distinct-range", "--min", "1", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let pairs: Vec<(i64, i64)> = text
        .lines()
        .filter(|l| l.starts_with("p="))
        .map(|l| {
            let mut it = l.split_whitespace();
            let p = it.next().unwrap()[2..].parse().unwrap();
            let k = it.next().unwrap()[2..].parse().unwrap();
            (p, k)
        })
        .collect();
    assert_eq!(pairs.len(), 15);
    assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    assert!(text.contains("summary: 15 pairs, 15 valid"));
    assert_eq!(
        text,
        stdout(&run(&["distinct-range", "--min", "1", "--max", "6"]))
    );
}

#[test]
fn word_problem() {
    let out = run(&["wp", "--p", "2", "--q", "3", "--word", "x^2 y^-3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "normal form: 1\ntrivial: true\n");

    let out = run(&["wp", "--p", "2", "--q", "3", "--word", "x y x^-1 y^-1"]);
    assert_eq!(
        stdout(&out),
        "normal form: c^-2 x^1 y^1 x^1 y^2\ntrivial: false\n"
    );

    assert_eq!(
        run(&["wp", "--p", "2", "--q", "4", "--word", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["wp", "--p", "2", "--q", "3", "--word", "z"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["wp", "--p", "2", "--q", "3", "--word", "x^0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn tau_and_fold_checks() {
    let tau = run(&["verify-tau", "--p", "3"]);
    assert_eq!(tau.status.code(), Some(0));
    let text = stdout(&tau);
    assert!(text.contains("degree: 0"));
    assert!(text.contains("image nontrivial: true"));
    assert!(text.contains("quotient alexander polynomial: min_exp 0: 1\n"));

    let fold = run(&["fold", "--p", "4"]);
    assert_eq!(fold.status.code(), Some(0));
    assert!(stdout(&fold).contains("surjective: true"));

    assert_eq!(run(&["fold", "--p", "1"]).status.code(), Some(2));
}

#[test]
fn gamma_bundle() {
    let out = run(&["gamma", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("p-polynomial: min_exp 0: 1 -1 1"));
    assert!(text.contains("degree map: u=3 v=-2 x=3 y=-2"));
    assert!(text.contains("framing defect (recorded constant): 3"));
    assert!(text.ends_with("status: verified\n"));
}

#[test]
fn present_forms_parse_back() {
    for form in ["wirtinger", "standard", "gamma", "gamma-tab", "double"] {
        let out = run(&["present", "--p", "2", "--form", form]);
        assert_eq!(out.status.code(), Some(0), "{form}");
        knotgroup::parse_presentation(&stdout(&out)).unwrap();
    }
    assert_eq!(
        run(&["present", "--p", "1", "--form", "wirtinger"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["distinct", "--p", "two", "--k", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 8);
    assert!(text.contains("summary: 8/8 criteria passed"));
}
