use std::process::Command;

fn g2chern(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_g2chern")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stderr_kind(err: &str) -> &str {
    assert_eq!(err.lines().count(), 1, "{err}");
    err.split(": ").nth(1).unwrap()
}

#[test]
fn tables_match_golden_files() {
    for (which, golden) in [
        ("z", include_str!("golden/table_z.tsv")),
        ("q", include_str!("golden/table_q.tsv")),
    ] {
        let (code, out, err) = g2chern(&["--format", "tsv", "table", which]);
        assert_eq!((code, err.as_str()), (0, ""));
        assert_eq!(out, golden);
        assert!(!out.contains('\r'));
        assert_eq!(g2chern(&["--format", "tsv", "table", which]).1, out);
    }
}

#[test]
fn table_z_rows() {
    let (_, out, _) = g2chern(&["--format", "tsv", "table", "z"]);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows[0], ["monomial", "Z", "N"]);
    let z: Vec<&str> = rows[1..].iter().map(|r| r[1]).collect();
    let n: Vec<&str> = rows[1..].iter().map(|r| r[2]).collect();
    assert_eq!(z, ["6", "4374", "2106", "594", "90", "1014", "286"]);
    assert_eq!(n, ["6", "-18", "-6", "18", "18", "-2", "6"]);
    assert_eq!(rows[3][0], "c1^3c2");
}

#[test]
fn rigidity_table() {
    let (code, out, _) = g2chern(&["--format", "tsv", "rigidity"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/rigidity.tsv"));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "d\tverdict\tfail_reason\tlhs\trhs");
    assert_eq!(lines.len(), 9);
    let pass: Vec<&str> = lines[1..].iter().filter(|l| l.contains("\tpass\t")).copied().collect();
    assert_eq!(pass, ["3\tpass\t-\t594\t594"]);
    let (_, text, _) = g2chern(&["rigidity"]);
    assert!(text.contains("survivors: 3\n"));
}

#[test]
fn subcommands_succeed() {
    for args in [
        &["spaces"][..],
        &["chern", "Z"],
        &["chern", "S6"],
        &["numbers", "X"],
        &["numbers", "PT*S6"],
        &["hilbert", "--samples", "3"],
        &["flip", "Q", "--fiber", "FiberQS6"],
        &["flip", "Q", "--fiber", "1+3*h+3*h^2"],
        &["square"],
        &["square", "--t", "h"],
        &["eval", "c1^5", "--space", "Z"],
        &["check", "all"],
        &["audit"],
        &["--format", "tsv", "audit"],
    ] {
        let (code, out, err) = g2chern(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(!out.is_empty() && err.is_empty(), "{args:?}");
    }
}

#[test]
fn command_values() {
    let (_, out, _) = g2chern(&["eval", "c1^2*c3", "--space", "PTS6"]);
    assert_eq!(out, "number: 18\n");
    let (_, out, _) = g2chern(&["--format", "tsv", "eval", "c1^0", "--space", "X"]);
    assert_eq!(out, "kind\tvalue\nelement\t1\n");
    let (_, out, _) = g2chern(&["--format", "tsv", "flip", "Z", "--fiber", "1+L"]);
    assert!(out.contains("c\t1 + L + 1/3*L^2 - L^3 - L^4 - 1/3*L^5\n"));
    assert!(out.ends_with("orientation\t-1\n"));
    let (_, out, _) = g2chern(&["chern", "Z"]);
    assert!(out.contains("agrees with the rigidity reconstruction at d = 3"));
    let (_, out, _) = g2chern(&["--format", "tsv", "hilbert", "--samples", "2"]);
    assert_eq!(
        out,
        "r\tP(r)\tproduct(r)\tchi(rL)\n0\t1\t1\t1\n1\t14\t14\t14\n2\t77\t77\t77\n"
    );
    let (_, out, _) = g2chern(&["--format", "tsv", "square"]);
    assert!(out.contains("C\t1 - 3*h + 3*h^2 - h^3 + 3*h^4 - 3*h^5\t-1\t"));
}

#[test]
fn audit_reports_corrections() {
    let (code, out, _) = g2chern(&["--format", "tsv", "audit"]);
    assert_eq!(code, 0);
    assert!(out.contains("ch2(Z)\t1/6*L^2\t1/2*L^2\tcorrected\n"));
    assert!(out.contains("c1^5(Z)\t4374\t4373\ttypo\n"));
    assert!(out.contains("c3(S6) = 2"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = g2chern(&["bogus"]);
    assert_eq!((code, stderr_kind(&err)), (1, "usage_error"));
    let (code, _, err) = g2chern(&["numbers", "Nowhere"]);
    assert_eq!((code, stderr_kind(&err)), (1, "usage_error"));
    let (code, _, err) = g2chern(&["numbers", "CP6"]);
    assert_eq!((code, stderr_kind(&err)), (1, "usage_error"));
    let (code, _, err) = g2chern(&["eval", "c1^^2", "--space", "Z"]);
    assert_eq!((code, stderr_kind(&err)), (2, "parse_error"));
    let (code, _, err) = g2chern(&["eval", "q^2", "--space", "Z"]);
    assert_eq!((code, stderr_kind(&err)), (2, "parse_error"));
    assert!(err.contains("1:1: unknown_symbol"));
    let (code, _, err) = g2chern(&["square", "--t", "0"]);
    assert_eq!((code, stderr_kind(&err)), (3, "check_failure"));
    let (code, _, err) = g2chern(&["flip", "Q", "--fiber", "1+h", "--rank", "2"]);
    assert_eq!(code, 3, "{err}");
    assert_eq!(g2chern(&["--help"]).0, 0);
    assert_eq!(g2chern(&["--version"]).0, 0);
}

fn temp_defs(name: &str, src: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("g2chern-{}-{name}.spaces", std::process::id()));
    std::fs::write(&p, src).unwrap();
    p
}

#[test]
fn defs_override() {
    let p = temp_defs(
        "bad",
        "space A {\n  generator x: 4;\n  generator y: 2;\n  relation y^3 = x;\n}\n",
    );
    let (code, _, err) = g2chern(&["--defs", p.to_str().unwrap(), "spaces"]);
    assert_eq!((code, stderr_kind(&err)), (2, "parse_error"));
    assert!(err.contains("4:18: degree_mismatch"), "{err}");

    let (code, _, err) = g2chern(&["--defs", "/nonexistent/defs.spaces", "spaces"]);
    assert_eq!((code, stderr_kind(&err)), (1, "usage_error"));

    let wrong = g2chern::dsl::BUILTIN.replace("chern 1 + 3*L + 13/3*L^2", "chern 1 + 3*L + 10/3*L^2");
    assert_ne!(wrong, g2chern::dsl::BUILTIN);
    let p = temp_defs("wrong", &wrong);
    let (code, _, err) = g2chern(&["--defs", p.to_str().unwrap(), "table", "z"]);
    assert_eq!((code, stderr_kind(&err)), (3, "check_failure"));
    let (code, out, err) = g2chern(&["--defs", p.to_str().unwrap(), "check", "all"]);
    assert_eq!((code, stderr_kind(&err)), (3, "check_failure"));
    assert!(out.contains("fail"));
    let (code, _, _) = g2chern(&["--defs", p.to_str().unwrap(), "chern", "Z"]);
    assert_eq!(code, 3);

    let p = temp_defs("builtin", g2chern::dsl::BUILTIN);
    assert_eq!(g2chern(&["--defs", p.to_str().unwrap(), "check", "all"]).0, 0);
}

#[test]
fn non_integral_table_refused() {
    let src = "space F {\n  generator h: 2;\n  relation h^6 = 0;\n  fundamental h^5 = 1;\n  orientation +1;\n  chern 1 + 1/2*h;\n}\n";
    let p = temp_defs("frac", src);
    let (code, out, err) = g2chern(&["--defs", p.to_str().unwrap(), "numbers", "F"]);
    assert_eq!((code, stderr_kind(&err), out.as_str()), (3, "check_failure", ""));
}
