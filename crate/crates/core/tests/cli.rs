use std::path::PathBuf;

use invring::cli::{
    run, EXIT_CAP, EXIT_ENGINE, EXIT_IO, EXIT_NOT_INVARIANT, EXIT_OK, EXIT_PARSE, EXIT_USAGE,
};

fn group(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("groups");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn invring(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("invring").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn check_reports_invariance() {
    let swap = group("swap.json");
    assert_eq!(
        invring(&["check", &swap, "x1+x2"]),
        (EXIT_OK, "invariant\n".into(), String::new())
    );
    let (code, out, _) = invring(&["check", &swap, "x1-x2"]);
    assert_eq!(code, EXIT_NOT_INVARIANT);
    assert_eq!(out, "not invariant: moved by A2\n");
}

#[test]
fn rewrite_prints_certificate_and_verification() {
    let (code, out, _) = invring(&["rewrite", &group("swap.json"), "x1*x2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "certificate: (1/2)*J[1,1]\nverified: realization matches\n"
    );

    let (code, out, _) = invring(&["rewrite", &group("swap.json"), "x1*x2", "--basis", "g"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("verified: realization matches\n"), "{}", out);

    let (code, _, err) = invring(&["rewrite", &group("swap.json"), "x1"]);
    assert_eq!(code, EXIT_ENGINE);
    assert!(err.contains("not invariant"), "{}", err);
}

#[test]
fn closure_and_cap() {
    let (code, out, _) = invring(&["closure", &group("c3.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "order h = 3\nA1 = [[1, 0], [0, 1]]\nA2 = [[0, -1], [1, -1]]\nA3 = [[-1, 1], [-1, 0]]\n"
    );
    let (code, _, err) = invring(&["closure", &group("shear.json")]);
    assert_eq!(code, EXIT_CAP);
    assert!(err.contains("1000"), "{}", err);
    // the command line cap wins over the file
    let (code, _, err) = invring(&["--cap", "20", "closure", &group("shear.json")]);
    assert_eq!(code, EXIT_CAP);
    assert!(err.contains("20"), "{}", err);
    assert_eq!(
        invring(&["closure", &group("s3.json"), "--cap", "5"]).0,
        EXIT_CAP
    );
}

#[test]
fn generator_tables() {
    let (code, out, _) = invring(&["generators", &group("swap.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "J-system: 5 generators, |mu| <= h = 2\n\
         J[1,0] = x1 + x2\n\
         J[0,1] = x1 + x2  # duplicate of J[1,0]\n\
         J[2,0] = x1^2 + x2^2\n\
         J[1,1] = 2*x1*x2\n\
         J[0,2] = x1^2 + x2^2  # duplicate of J[2,0]\n"
    );
    let (_, out, _) = invring(&["generators", &group("c2.json")]);
    assert!(out.contains("J[1] = 0  # zero\n"), "{}", out);
    let (code, out, _) = invring(&["generators", &group("swap.json"), "--system", "g"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.starts_with("G-system: 5 nonzero resolvent coefficients, h = 2\nG[1;1,0] = x1 + x2\n"),
        "{}",
        out
    );
}

#[test]
fn reduce_reynolds_rationalize() {
    let swap = group("swap.json");
    let (code, out, _) = invring(&["reduce", &swap, "3,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "J[3,0] = J[2,0]*J[1,0] - (1/2)*J[1,1]*J[1,0]\nverified: realization matches\n"
    );
    assert_eq!(invring(&["reduce", &swap, "[3, 0]"]).1, out);
    assert_eq!(invring(&["reduce", &swap, "1,0"]).0, EXIT_ENGINE);
    assert_eq!(invring(&["reduce", &swap, "3"]).0, EXIT_PARSE);

    assert_eq!(
        invring(&["reynolds", &swap, "x1^2"]).1,
        "1/2*x1^2 + 1/2*x2^2\n"
    );
    assert_eq!(invring(&["reynolds", &swap, "-x1"]).1, "-1/2*x1 - 1/2*x2\n");

    let (code, out, _) = invring(&["rationalize", &swap, "x1*(x1+x2)", "x1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "P = x1^2*x2 + x1*x2^2\nQ = x1*x2\n");
    assert_eq!(invring(&["rationalize", &swap, "x1", "0"]).0, EXIT_ENGINE);
}

#[test]
fn selfcheck_passes_on_bundled_groups() {
    for name in ["c2.json", "swap.json", "c3.json", "c4.json"] {
        let (code, out, err) = invring(&["selfcheck", &group(name)]);
        assert_eq!(code, EXIT_OK, "{}: {}{}", name, out, err);
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn error_exit_codes() {
    let swap = group("swap.json");
    let (code, _, err) = invring(&["check", &swap, "x1 +"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("line 1"), "{}", err);
    assert_eq!(invring(&["check", &swap, "x3"]).0, EXIT_PARSE);
    assert_eq!(
        invring(&["check", "/nonexistent/group.json", "x1"]).0,
        EXIT_IO
    );
    assert_eq!(invring(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        invring(&["generators", &swap, "--system", "k"]).0,
        EXIT_USAGE
    );

    let dir = std::env::temp_dir().join(format!("invring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"dimension": 2, "generators": [[["1", "x"], ["0", "1"]]]}"#,
    )
    .unwrap();
    let (code, _, err) = invring(&["closure", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("row 1, column 2"), "{}", err);
    std::fs::write(
        &bad,
        r#"{"dimension": 2, "generators": [[["1", "0"], ["0", "0"]]]}"#,
    )
    .unwrap();
    assert_eq!(invring(&["closure", bad.to_str().unwrap()]).0, EXIT_ENGINE);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = invring(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("rewrite"));
}
