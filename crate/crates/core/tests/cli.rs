//! End-to-end transcripts of the `monoideal` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monoideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn text(args: &[&str]) -> (i32, String, String) {
    let out = run(args, None);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn golden_text_transcripts() {
    let cases: &[(&[&str], &str)] = &[
        (&["closure", "-i", "x^4, y^6, x^2*y^3"], "x^4, x^3*y^2, x^2*y^3, x*y^5, y^6\n"),
        (&["factor", "-i", "x^3, x*y, y^3"], "(x, y^2)^1 · (x^2, y)^1\n"),
        (&["colength", "-i", "x^3, x*y, y^3"], "5\n"),
        (&["gens", "-i", "x^3, x*y, y^3"], "3\n"),
        (&["maxideal", "-i", "x^3, x*y, y^3"], "3m^2 + 1/2n^2 + 2mn + 2m + 1/2n\n"),
        (&["bhatt", "-i", "x, y", "-j", "x, y"], "1/2m^2 + 1/2n^2 + mn + 1/2m + 1/2n\n"),
        (&["hilbert", "-i", "x, y", "--max-m", "2"], "m=0: 1\nm=1: 2\nm=2: 3\n"),
        (&["fiber", "-i", "x^3, x*y, y^3", "--max-m", "2"], "m=0: 1\nm=1: 3\nm=2: 5\n"),
    ];
    for (args, expected) in cases {
        let (code, stdout, stderr) = text(args);
        assert_eq!((code, stdout.as_str(), stderr.as_str()), (0, *expected, ""), "{args:?}");
    }
}

#[test]
fn json_and_text_agree() {
    let i = "x^5, x^2*y, y^4";
    for cmd in ["closure", "colength", "gens", "maxideal", "factor"] {
        let (_, stdout, _) = text(&["--autoclose", cmd, "-i", i]);
        let v = json(&["--autoclose", cmd, "-i", i]);
        assert_eq!(v["command"], cmd);
        let result = &v["result"];
        let payload = match cmd {
            "colength" => result["colength"].to_string(),
            "gens" => result["min_generators"].to_string(),
            "maxideal" | "closure" => result["rendered"].as_str().unwrap().to_string(),
            _ => stdout.trim_end().to_string(),
        };
        assert_eq!(stdout.trim_end(), payload, "{cmd}");
        // closure does not need a complete input, so it never warns
        let warnings = if cmd == "closure" { vec![] } else { vec!["input not complete; closed"] };
        assert_eq!(v["warnings"], serde_json::json!(warnings), "{cmd}");
    }
}

#[test]
fn autoclose_warns_on_stderr() {
    let (code, stdout, stderr) = text(&["--autoclose", "colength", "-i", "x^2, y^3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "5\n");
    assert_eq!(stderr, "warning: input not complete; closed\n");
}

#[test]
fn exit_codes() {
    assert_eq!(text(&["colength", "-i", "x^2, y^3"]).0, 2);
    assert_eq!(text(&["colength", "-i", "x*y"]).0, 2);
    assert_eq!(text(&["colength", "-i", "x^-1"]).0, 1);
    assert_eq!(text(&["colength", "-i", "x^2 +"]).0, 1);
    assert_eq!(text(&["nonsense"]).0, 1);
    assert_eq!(text(&["colength"]).0, 1);
    assert_eq!(text(&["verify", "-i", "x^3, x*y, y^3", "--max-m", "1", "--max-n", "1"]).0, 0);
    assert_eq!(text(&["verify", "-i", "x^3, x*y, y^3", "--inject-fault"]).0, 3);
}

#[test]
fn json_input_and_stdin() {
    let out = run(&["colength", "-i", "-"], Some("[[3,0],[1,1],[0,3]]"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "5\n");
    let out = run(&["colength", "-i", "-"], Some("x^3, x*y, y^3\n"));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "5\n");
}

#[test]
fn random_verify_passes() {
    let (code, stdout, _) = text(&["verify", "--random", "10", "--seed", "7", "--max-exponent", "9"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().last().unwrap().ends_with("PASS"), "{stdout}");
}
