use std::process::Command;

use cayley_polygons::full_count::full_count_convolution;
use cayley_polygons::path_count::path_count_convolution;
use cayley_polygons::Count;
use cayley_polygons_cli::table::{CountTable, FamilyName};
use cayley_polygons_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use proptest::prelude::*;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cayley-polygons").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn single_count() {
    let (code, out, _) = call(&["count", "--family", "full", "-m", "3", "-n", "8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "429");
    assert_eq!(full_count_convolution::<Count>(8, 3).unwrap().to_string(), "429");
}

#[test]
fn path_coefficients_json() {
    let (code, out, _) = call(&["coeffs", "--family", "path", "-m", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "[1,-4,3]");
    let parsed: Vec<i64> = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed, vec![1, -4, 3]);
}

#[test]
fn catalan_prefix() {
    let (code, out, _) = call(&["catalan", "--max", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["1", "1", "2", "5", "14", "42", "132", "429"]);
}

#[test]
fn verify_with_oracle_passes() {
    let (code, out, err) = call(&["verify", "--family", "path", "--max-n", "10", "--max-m", "5", "--oracle"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("0 mismatch(es)"));
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn verify_full_identities() {
    let (code, _, err) = call(&["verify", "--family", "full", "--max-n", "30", "--max-m", "6"]);
    assert_eq!(code, EXIT_OK, "{err}");
}

#[test]
fn oeis_fixtures_pass() {
    let (code, out, _) = call(&["oeis-check"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| l.ends_with(" ok")).count(), 3);
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        &["count", "--family", "full", "-m", "0", "-n", "5"][..],
        &["count", "--family", "tree", "-m", "3", "-n", "5"],
        &["count", "--family", "full", "-m", "3"],
        &["coeffs", "--family", "path", "-m", "1"],
        &["nonsense"],
        &["asymptotics", "--family", "full", "-m", "3", "--n-from", "2", "--n-to", "5"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn oracle_above_cap_is_rejected() {
    let (code, _, err) = call(&["verify", "--family", "full", "--max-n", "40", "--max-m", "3", "--oracle"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
    assert_ne!(EXIT_OK, EXIT_MISMATCH);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cayley-polygons");
    let ok = Command::new(bin).args(["count", "--family", "path", "-m", "3", "-n", "6"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "75");
    let bad = Command::new(bin).args(["count", "--family", "path"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn large_counts_stay_exact() {
    let (_, out, _) = call(&["table", "--family", "full", "-m", "2", "--n-from", "200", "--n-to", "200", "--format", "csv"]);
    let line = out.lines().nth(1).unwrap();
    let want = full_count_convolution::<Count>(200, 2).unwrap().to_string();
    assert_eq!(line, format!("200,{want}"));
    assert!(want.len() > 100);
}

fn family() -> impl Strategy<Value = FamilyName> {
    prop_oneof![Just(FamilyName::Full), Just(FamilyName::Path)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tables_round_trip(fam in family(), m in 2usize..9, from in 0usize..40, len in 0usize..30, coeffs: bool) {
        let t = CountTable::build(fam, m, from, from + len, coeffs).unwrap();
        let json = CountTable::from_json(&t.to_json().unwrap()).unwrap();
        prop_assert_eq!(&json, &t);
        let csv = CountTable::from_csv(fam, m, &t.to_csv().unwrap()).unwrap();
        prop_assert_eq!(&csv.rows, &t.rows);
        for (n, c) in t.exact_rows().unwrap() {
            let want: Count = match fam {
                FamilyName::Full => full_count_convolution(n, m).unwrap(),
                FamilyName::Path => path_count_convolution(n, m).unwrap(),
            };
            prop_assert_eq!(c, want);
        }
    }
}
