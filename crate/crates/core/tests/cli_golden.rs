mod common;

use common::{check_goldens, weylbound};

#[test]
fn golden_files_match() {
    let bad = check_goldens();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["roots", "E6"][..], &["jantzen", "G2", "--p", "5", "--lam", "4,4", "--json"]] {
        let a = weylbound(args);
        let b = weylbound(args);
        assert_eq!(a.status, 0);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(weylbound(&["nonsense"]).status, 2);
    assert_eq!(weylbound(&["dlambda", "A2", "--p", "3"]).status, 2);
    assert_eq!(weylbound(&["--format", "xml", "maxd", "G2"]).status, 2);
    let help = weylbound(&["--help"]);
    assert_eq!(help.status, 0);
    assert!(help.stdout.contains("selftest"));
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["maxd", "E8", "--p", "7"][..],
        &["length", "closed", "--d", "2", "--b", "1", "--p", "3"],
        &["bound", "finite", "A3", "--p", "3", "--e", "5"],
        &["bound", "theorem-c", "--h", "1"],
        &["jantzen", "A2", "--p", "3", "--lam", "1,x"],
    ] {
        let run = weylbound(args);
        assert_eq!(run.status, 1, "{args:?}");
        assert!(run.stderr.starts_with("error: "), "{args:?}");
        assert!(run.stdout.is_empty());
    }
}

#[test]
fn selftest_passes() {
    let run = weylbound(&["selftest"]);
    assert_eq!(run.status, 0, "{}", run.stdout);
    assert!(!run.stdout.contains("FAIL"));
}

#[test]
fn growth_csv_has_fixed_header() {
    let run = weylbound(&["table", "growth", "--lmax", "3"]);
    let mut lines = run.stdout.lines();
    assert_eq!(lines.next(), Some("family,rank,h,log2_theorem_a,log2_theorem_c,ratio_a_l3logl,ratio_c_l2logl"));
    // A, B, C at ranks 2 and 3 (D starts at 4), then the exceptional types
    assert_eq!(lines.count(), 2 + 2 + 2 + 5);
}
