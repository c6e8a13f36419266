use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brocard-nine")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn report(sides: &str) -> Value {
    let o = run(&["report", "--sides", sides]);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).expect("json")
}

fn keys(v: &Value, prefix: &str, out: &mut BTreeSet<String>) {
    if let Value::Object(m) = v {
        for (k, child) in m {
            let path = format!("{prefix}.{k}");
            keys(child, &path, out);
            out.insert(path);
        }
    }
}

#[test]
fn report_json_matches_golden_fixture() {
    let errs = brocard_nine::golden::compare(&brocard_nine::golden::fixture_654(), &report("6,5,4"), 1e-12);
    assert!(errs.is_empty(), "{errs:?}");
}

#[test]
fn report_schema_is_stable() {
    let mut base = BTreeSet::new();
    keys(&report("6,5,4"), "", &mut base);
    for sides in ["7,8,9", "13,11,9", "5/2,3,7/2"] {
        let mut other = BTreeSet::new();
        keys(&report(sides), "", &mut other);
        assert_eq!(other, base, "{sides}");
    }
}

#[test]
fn obtuse_report_keeps_top_level_keys() {
    let acute = report("6,5,4");
    let obtuse = report("4,3,2");
    let top = |v: &Value| v.as_object().unwrap().keys().cloned().collect::<Vec<_>>();
    assert_eq!(top(&acute), top(&obtuse));
    assert_eq!(obtuse["triangle"]["acute"], Value::Bool(false));
    assert_eq!(obtuse["float"]["unsigned_for_obtuse"], Value::Bool(true));
    assert!(obtuse["float"]["angles"]["H"].is_object());
}

#[test]
fn report_text_format() {
    let o = run(&["report", "--sides", "6,5,4", "--format", "text"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("1575"), "{text}");
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn input_errors_exit_2() {
    let o = run(&["report", "--sides", "5,5,5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("scalene triangle required"));

    let o = run(&["report", "--sides", "1,2,10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("triangle inequality violated"));

    assert_eq!(run(&["report", "--sides", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--random", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--random", "3", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_fixed_triangle_with_golden() {
    let o = run(&["verify", "--sides", "6,5,4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("golden fixture (6,5,4): ok"), "{out}");
    assert!(out.contains("14 suites passed"), "{out}");
}

#[test]
fn verify_random_is_reproducible() {
    let a = run(&["verify", "--random", "5", "--seed", "7", "--include-obtuse"]);
    let b = run(&["verify", "--random", "5", "--seed", "7", "--include-obtuse"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_isosceles_skips_everything() {
    let o = run(&["verify", "--sides", "5,5,6"]);
    let out = stdout(&o);
    assert!(out.contains("every suite skipped"), "{out}");
}

#[test]
fn render_writes_well_formed_svg() {
    let dir = tempfile::tempdir().unwrap();
    for (what, circles, paths, markers) in [("nine-circles", 10, 0, 6), ("six-triangles", 0, 6, 9)] {
        let path = dir.path().join(format!("{what}.svg"));
        let o = run(&["render", "--sides", "6,5,4", "--what", what, "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
        let svg = std::fs::read_to_string(&path).unwrap();
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
        assert_eq!(count("circle"), circles, "{what}");
        assert_eq!(count("path"), paths, "{what}");
        let marks = doc.descendants().filter(|n| n.attribute("class") == Some("marker")).count();
        assert_eq!(marks, markers, "{what}");
        assert_eq!(count("polygon"), 1);

        let again = dir.path().join(format!("{what}-again.svg"));
        run(&["render", "--sides", "6,5,4", "--what", what, "--out", again.to_str().unwrap()]);
        assert_eq!(std::fs::read(&again).unwrap(), svg.as_bytes());
    }
}

#[test]
fn render_to_unwritable_path_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.svg");
    let o = run(&["render", "--sides", "6,5,4", "--what", "nine-circles", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
