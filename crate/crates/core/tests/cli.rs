use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use symrank::cli::run;

const CHACON: &str = r#"{"kind":"rank_construction","arity0":1,"steps":[{"buildings":[[[1,0],[1,1],[1,null]]]}],"schedule":{"type":"periodic","cycle_len":1}}"#;
const ODOMETER: &str =
    r#"{"kind":"bratteli","levels":[{"size":1},{"size":1,"incoming":[[1,1]]},{"size":1,"incoming":[[1,1,1]]}]}"#;
const THUE_MORSE: &str = r#"{"kind":"sadic","alphabets":[2,2],"morphisms":[{"rules":[[1,2],[2,1]]}]}"#;

fn file(dir: &Path, name: &str, body: &str) -> String {
    let p: PathBuf = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn cli(args: &[&str]) -> symrank::cli::Outcome {
    run(std::iter::once("symrank").chain(args.iter().copied()))
}

#[test]
fn check_proper_on_chacon() {
    let dir = tempfile::tempdir().unwrap();
    let path = file(dir.path(), "chacon.json", CHACON);
    let o = cli(&["check", "--file", &path, "proper", "--depth", "5"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("proper: true"), "{}", o.stdout);
}

#[test]
fn generate_level_two() {
    let o = cli(&["generate", "--file", "gallery:chacon", "--level", "2"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("0010001010010"), "{}", o.stdout);
}

#[test]
fn distance_to_itself_is_bounded_only() {
    let o = cli(&["distance", "gallery:chacon", "gallery:chacon"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("d_L ≤ 2^-20"), "{}", o.stdout);
    let o = cli(&["distance", "gallery:chacon", "gallery:zero_spacer"]);
    assert!(o.stdout.contains("d_L = 2^-1"), "{}", o.stdout);
}

#[test]
fn odometer_conversion_names_the_length_bound() {
    let dir = tempfile::tempdir().unwrap();
    let path = file(dir.path(), "odometer.json", ODOMETER);
    let o = cli(&["convert", "--file", &path, "bratteli", "--rank", "2"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("2n+4j+3"), "{}", o.stderr);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = file(
        dir.path(),
        "bad.json",
        "{\"kind\":\"rank_construction\",\n\"arity0\":\"x\"}",
    );
    let o = cli(&["check", "--file", &bad, "proper"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    assert_eq!(cli(&["check", "--file", "/nonexistent/x.json", "proper"]).code, 2);
    assert_eq!(cli(&["gallery", "no_such_entry"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
}

#[test]
fn validate_round_trips_every_kind() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [("c.json", CHACON), ("d.json", ODOMETER), ("s.json", THUE_MORSE)] {
        let path = file(dir.path(), name, &format!("{body}\n"));
        let o = cli(&["check", "--file", &path, "validate"]);
        assert_eq!(o.code, 0, "{name}: {}", o.stderr);
        let doc = symrank::cli::parse_document(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(symrank::cli::write_document(&doc), format!("{body}\n"), "{name}");
    }
}

#[test]
fn gallery_lists_names() {
    let o = cli(&["gallery"]);
    assert_eq!(o.code, 0);
    for name in symrank::transforms::GALLERY_NAMES {
        assert!(o.stdout.contains(name), "{name}");
    }
}

#[test]
fn vershik_orbit_on_odometer() {
    let dir = tempfile::tempdir().unwrap();
    let path = file(dir.path(), "odometer.json", ODOMETER);
    let o = cli(&["vershik", "--file", &path, "orbit", "--steps", "6"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("period: 6"), "{}", o.stdout);
}

#[test]
fn mef_digit_wraps_negative_positions() {
    let o = cli(&["mef-digit", "--a", "8,26", "--level", "0", "--at", "-3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("digit: 6"), "{}", o.stdout);
}

#[test]
fn binary_matches_library_entry_point() {
    let out = Command::new(env!("CARGO_BIN_EXE_symrank"))
        .args(["generate", "--file", "gallery:chacon", "--level", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let lib = cli(&["generate", "--file", "gallery:chacon", "--level", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    let out = Command::new(env!("CARGO_BIN_EXE_symrank"))
        .args(["gallery", "nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn converted_cover_is_written_and_good() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cover.json");
    let out = out.to_str().unwrap();
    let o = cli(&["convert", "--file", "gallery:chacon", "--out", out, "good-cover"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let text = fs::read_to_string(out).unwrap();
    assert!(symrank::cli::parse_construction(&text).is_ok());
    let o = cli(&["check", "--file", out, "good", "--level", "1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("good: true"), "{}", o.stdout);
}
