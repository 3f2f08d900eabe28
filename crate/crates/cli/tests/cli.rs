use std::io::Cursor;

use rootbound_cli::cli::{EXIT_OK, EXIT_USAGE};
use rootbound_cli::report::CSV_HEADER;
use rootbound_cli::run;
use serde_json::Value;

fn exec(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["rootbound"];
    argv.extend_from_slice(args);
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str], stdin: &str) -> Value {
    let (code, out, err) = exec(args, stdin);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn cubic_json_report() {
    let v = json(&["bounds", "x^3 - x - 1", "--json"], "");
    assert_eq!(v["all_same_sign"], false);
    assert_eq!(v["zero_root_multiplicity"], 0);
    assert_eq!(v["rho"], 2.0);
    assert_eq!(v["rho_prime"], 2.0);
    assert_eq!(v["lagrange"], 2.0);
    let theorem = v["theorem"].as_f64().unwrap();
    assert!((theorem - 1.324_717_957_244_746).abs() < 1e-9);
    assert!(v.get("stage4").is_none());
    assert!(v.get("transform").is_none());
}

#[test]
fn stdin_and_descending_lists() {
    let a = json(&["bounds", "-", "--json"], "2x^4 + x^3 - 3x^2 + 5\n");
    let b = json(&["--descending", "bounds", "[2, 1, -3, 0, 5]", "--json"], "");
    let c = json(&["bounds", "[5, 0, -3, 1, 2]", "--json"], "");
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a["rho"], 4.5);
    assert_eq!(a["rho_prime"], 1.5);
}

#[test]
fn negative_transform() {
    let v = json(&["bounds", "x^2 - 4", "--json", "--negative"], "");
    assert_eq!(v["transform"], "negated_argument_lower_bounds");
    let theorem = v["theorem"].as_f64().unwrap();
    assert!((theorem + 2.0).abs() < 1e-9);
}

#[test]
fn same_sign_has_no_bounds() {
    let v = json(&["bounds", "x^2 + 1", "--json"], "");
    assert_eq!(v["all_same_sign"], true);
    assert!(v.get("rho").is_none());
    for poly in ["x^2 + 1", "7"] {
        let (code, out, _) = exec(&["bounds", poly], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("no positive roots"), "{out}");
    }
}

#[test]
fn zero_roots_are_reported() {
    let (code, out, _) = exec(&["parse", "x^4 - x^2"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("zero_root_multiplicity: 2"), "{out}");
    assert!(out.contains("normalized: x^2 - 1"), "{out}");
}

#[test]
fn verify_passes() {
    let (code, out, _) = exec(&["verify", "x^5 - 3x^3 + x - 7"], "");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("all bounds PASS"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn usage_errors() {
    for args in [
        &["bounds", "x^3 - - 1"][..],
        &["bounds", "0"],
        &["bounds", "x^2 - 1", "--tol", "0.5"],
        &["bench", "--seed", "1", "--count", "0", "--degrees", "3:5"],
        &["bench", "--seed", "1", "--count", "5", "--degrees", "5:3"],
        &["frobnicate"],
    ] {
        let (code, _, err) = exec(args, "");
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn bench_csv_schema() {
    let (code, out, _) = exec(
        &["bench", "--seed", "3", "--count", "40", "--degrees", "2:8", "--csv"],
        "",
    );
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let mut wins = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 5, "{line}");
        for f in &fields[1..4] {
            let r: f64 = f.parse().unwrap();
            assert!(r.is_nan() || r >= 1.0 - 1e-9, "{line}");
        }
        wins += fields[4].parse::<usize>().unwrap();
    }
    assert!(wins <= 40);
}

#[test]
fn bench_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tight.csv");
    let args = ["bench", "--seed", "7", "--count", "20", "--degrees", "3:6"];
    let (_, stdout_csv, _) = exec(&[&args[..], &["--csv"]].concat(), "");
    let mut with_path = args.to_vec();
    with_path.extend(["--csv", path.to_str().unwrap()]);
    let (code, table, _) = exec(&with_path, "");
    assert_eq!(code, EXIT_OK);
    assert!(table.contains("soundness violations 0"), "{table}");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout_csv);
}
