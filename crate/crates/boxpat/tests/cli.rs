//! End-to-end tests of the `boxpat` binary: output text, JSON, and the
//! exit-code contract (0 ok, 1 verify mismatch, 2 parse, 3 bound, 4
//! precondition).

use std::process::{Command, Output};

fn boxpat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxpat"))
        .args(args)
        .env_remove("BOXPAT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn stat_examples() {
    let out = boxpat(&["stat", "perm", "214365", "box1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "6\n");

    let out = boxpat(&["stat", "word", "--alphabet", "4", "113", "box1"]);
    assert_eq!(stdout(&out), "2\n");

    let out = boxpat(&["stat", "sperm", "-2,1,3,-4", "badpairs"]);
    assert_eq!(stdout(&out), "0\n");

    let out = boxpat(&["stat", "perm", "214365", "rect:1,1"]);
    assert_eq!(stdout(&out), "6\n");

    let out = boxpat(&["--json", "stat", "perm", "214365", "box1"]);
    assert_eq!(stdout(&out), "{\"value\":6}\n");
}

#[test]
fn stat_parse_errors_exit_2() {
    assert_eq!(code(&boxpat(&["stat", "perm", "21x", "box1"])), 2);
    assert_eq!(code(&boxpat(&["stat", "perm", "123", "nosuch"])), 2);
    assert_eq!(code(&boxpat(&["stat", "word", "113", "box1"])), 2, "missing --alphabet");
    assert_eq!(code(&boxpat(&["stat", "sperm", "1,2", "box1"])), 2, "stat not defined on sperm");
}

#[test]
fn series_text_and_json() {
    let out = boxpat(&["series", "kbond", "3", "1", "--order", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("t^2: 2+7x"), "got: {text}");

    let out = boxpat(&["--json", "series", "rect1k", "5", "2", "--order", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[2]["t_order"], 2);
    // t^2 coefficient of the 5-letter (1,2) series is 6 + 19x^2.
    assert_eq!(v[2]["coeffs"], serde_json::json!(["6", "0", "19"]));

    let out = boxpat(&["series", "box2", "3", "--order", "1"]);
    assert!(stdout(&out).contains("t^1: 3"));
}

#[test]
fn series_order_env_and_bounds() {
    let out = Command::new(env!("CARGO_BIN_EXE_boxpat"))
        .args(["series", "kbond", "3", "1"])
        .env("BOXPAT_ORDER", "3")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4, "orders 0..=3:\n{text}");

    assert_eq!(code(&boxpat(&["series", "kbond", "3", "1", "--order", "65"])), 2);
    assert_eq!(code(&boxpat(&["series", "nosuch", "3", "1"])), 2);
}

#[test]
fn gf_text_json_and_bounds() {
    let out = boxpat(&["gf", "kbond", "1", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("num = "), "got: {text}");
    assert!(text.contains("den = "));

    let out = boxpat(&["--json", "gf", "kbond", "3", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["num"]["0,0"], "1");

    // No closed form is offered for the 2-box system.
    assert_eq!(code(&boxpat(&["gf", "box2", "4"])), 3);
}

#[test]
fn verify_targets_and_exit_codes() {
    let out = boxpat(&["verify", "mathar"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("mathar: pass"));

    let out = boxpat(&["verify", "hardin-5"]);
    assert_eq!(code(&out), 0, "documented finding is not a failure");
    assert!(stdout(&out).contains("FINDING"));

    assert_eq!(code(&boxpat(&["verify", "nosuch"])), 2);

    let out = boxpat(&["--json", "verify", "barker"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn verify_all_passes() {
    let out = boxpat(&["verify", "all"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    for target in ["hardin-3", "riordan", "fibonacci"] {
        assert!(text.contains(&format!("{target}: pass")), "missing {target} in:\n{text}");
    }
}

#[test]
fn bfile_format() {
    let out = boxpat(&["bfile", "hertzsprung", "5"]);
    assert_eq!(stdout(&out), "0 1\n1 1\n2 0\n3 0\n4 2\n");

    let out = boxpat(&["bfile", "avoider-count", "6"]);
    assert_eq!(stdout(&out), "0 1\n1 2\n2 6\n3 34\n4 262\n5 2562\n");

    let out = boxpat(&["bfile", "maxbox", "8"]);
    assert_eq!(stdout(&out), "0 1\n1 1\n2 2\n3 2\n4 8\n5 14\n6 54\n7 128\n");

    let out = boxpat(&["bfile", "walls", "3"]);
    assert_eq!(stdout(&out), "1 5\n2 12\n3 30\n");

    assert_eq!(code(&boxpat(&["bfile", "nosuch", "3"])), 2);
    assert_eq!(code(&boxpat(&["bfile", "hertzsprung", "999"])), 3);
}

#[test]
fn lego_actions() {
    let out = boxpat(&["lego", "7", "2", "count"]);
    assert_eq!(stdout(&out), "12\n");

    let out = boxpat(&["lego", "7", "1", "list"]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| !l.is_empty()).count(), 5, "five rows:\n{text}");

    let out = boxpat(&["lego", "7", "0", "encode", "135"]);
    assert_eq!(code(&out), 0);
    let wall = stdout(&out);
    assert_eq!(wall.lines().count(), 3);

    let dir = std::env::temp_dir().join("boxpat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wall.txt");
    std::fs::write(&path, &wall).unwrap();
    let out = boxpat(&["lego", "7", "0", "decode", path.to_str().unwrap()]);
    assert_eq!(stdout(&out), "135\n");

    // A word with a 1-box match violates the encode precondition.
    assert_eq!(code(&boxpat(&["lego", "7", "0", "encode", "112"])), 4);
    assert_eq!(code(&boxpat(&["lego", "7", "1", "badaction"])), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["series", "rect1k", "4", "2", "--order", "6"][..],
        &["gf", "rect1k", "4", "1"],
        &["verify", "maxbox"],
        &["lego", "7", "3", "list"],
    ] {
        let a = boxpat(args);
        let b = boxpat(args);
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}
