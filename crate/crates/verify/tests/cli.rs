use std::process::Command;

fn schub(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schub"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn verify_exit_codes() {
    let (code, out) = schub(&[
        "verify",
        "--claim",
        "theorem-main",
        "--n",
        "4",
        "--parallel",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS theorem-main n=4"));
    assert_eq!(schub(&["verify", "--claim", "nope", "--n", "4"]).0, 2);
    assert_eq!(
        schub(&["verify", "--claim", "theorem-main", "--n", "9"]).0,
        2
    );
    assert_eq!(schub(&["frobnicate"]).0, 2);
}

#[test]
fn verify_json_is_byte_identical() {
    let args = [
        "verify",
        "--claim",
        "prop-main1",
        "--n",
        "4",
        "--json",
        "--no-timing",
    ];
    let (code, first) = schub(&args);
    assert_eq!(code, 0);
    assert_eq!(first, schub(&args).1);
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["checked"], 213);
}

#[test]
fn check_pair_worked_example() {
    let (code, out) = schub(&["check-pair", "--w", "35142", "--x", "21345", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["smooth"], true);
    assert_eq!(value["tight"], true);
    assert_eq!(value["influential"], true);
    assert_eq!(value["ess(w)"], "{(1,3),(3,1),(3,3)}");
    assert_eq!(value["X"], "{(1,1),(1,3),(1,4),(3,1),(4,1)}");
    assert_eq!(schub(&["check-pair", "--w", "123", "--x", "321"]).0, 2);
    assert_eq!(schub(&["check-pair", "--w", "1223", "--x", "1234"]).0, 2);
}

#[test]
fn essential_render_enumerate() {
    assert_eq!(schub(&["essential", "--w", "4231"]).1.trim(), "{(2,2)}");
    let (_, out) = schub(&["render", "--w", "12", "--x", "12"]);
    assert_eq!(out, "  |  1  2\n--+------\n1 | B.  .\n2 |  . B.\n");
    let (_, out) = schub(&["enumerate", "--n", "3"]);
    assert_eq!(out.lines().count(), 19);
    let (_, out) = schub(&["enumerate", "--n", "4", "--smooth-only"]);
    assert_eq!(out.lines().count(), 207);
}
