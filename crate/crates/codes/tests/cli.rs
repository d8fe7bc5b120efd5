use std::process::{Command, Output};

use cubic_codes::codefile;
use cubic_core::code::TABLE;
use cubic_core::CubicCode;

fn cubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cubic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enumerate_counts() {
    for (args, n) in [
        (vec!["enumerate", "--kind", "css"], 17),
        (vec!["enumerate", "--kind", "noncss"], 1),
        (vec!["enumerate", "--kind", "css", "--m", "1"], 0),
    ] {
        let o = cubic(&args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(data_rows(&o).len(), n, "{args:?}");
    }
}

#[test]
fn ktable_matches_closed_form() {
    let o = cubic(&["ktable", "--code", "1", "--L", "2", "--L-max", "12"]);
    assert!(o.status.success());
    let rows = data_rows(&o);
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r[3] == "yes"));
}

#[test]
fn ktable_without_formula_reports_na() {
    let o = cubic(&["ktable", "--code", "17", "--L", "3", "--L-max", "4"]);
    assert!(o.status.success());
    assert!(data_rows(&o).iter().all(|r| r[2] == "n/a" && r[3] == "n/a"));
}

#[test]
fn corrupted_code_file_fails_the_table() {
    let good = codefile::emit(&CubicCode::table(1).unwrap());
    // Swap two corner operators while keeping the claimed id.
    let bad = good.replacen("B  ZZ", "B  IZ", 1).replacen("C  IZ", "C  ZZ", 1);
    assert_ne!(good, bad);
    let path = temp_file("corrupt.code", &bad);
    let o = cubic(&["ktable", "--code-file", path.to_str().unwrap(), "--L", "2", "--L-max", "6"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(data_rows(&o).iter().any(|r| r[3] == "no"));

    let path = temp_file("good.code", &good);
    let o = cubic(&["ktable", "--code-file", path.to_str().unwrap(), "--L", "2", "--L-max", "6"]);
    assert!(o.status.success());
}

#[test]
fn code_files_round_trip_and_emit_catalog_rows() {
    for (id, row) in TABLE.iter().enumerate() {
        let c = CubicCode::table(id as u8).unwrap();
        assert_eq!(codefile::table_row(&c), *row);
        let back = codefile::parse(&codefile::emit(&c)).unwrap();
        assert_eq!(back.generators, c.generators);
        assert_eq!(back.id, c.id);
    }
}

#[test]
fn code_file_errors_name_the_line() {
    let text = "kind css\nm 2\nA ZI\nC ZZ\n";
    match codefile::parse(text) {
        Err(codefile::CodeFileError::Syntax { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(codefile::parse("m 2\n"), Err(codefile::CodeFileError::MissingHeader("kind"))));
}

#[test]
fn verify_identity_and_string() {
    let o = cubic(&["verify", "--code", "1", "--L", "4", "--op", "I"]);
    assert!(o.status.success());
    let r = &data_rows(&o)[0];
    assert_eq!((r[2].as_str(), r[3].as_str()), ("yes", "yes"));

    let o = cubic(&["verify", "--code", "11", "--L", "5", "--op", "ZZ[z](0,0,0) ZI[z](1,0,0)"]);
    let r = &data_rows(&o)[0];
    assert_eq!((r[2].as_str(), r[3].as_str()), ("yes", "no"));
    assert_ne!(r[4], "-");

    let o = cubic(&["verify", "--code", "1", "--L", "5", "--op", "sigma[1,0,0]_IX(0,0,0)"]);
    let r = &data_rows(&o)[0];
    assert_eq!((r[2].as_str(), r[3].as_str()), ("yes", "no"));
}

#[test]
fn parse_errors_report_a_column() {
    let o = cubic(&["verify", "--code", "1", "--L", "4", "--op", "ZZ[z](0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
}

#[test]
fn segments_respect_bounds() {
    let o = cubic(&["segments", "--code", "2", "--width", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let rows = data_rows(&o);
    assert!(rows.iter().all(|r| r[2] == "z"));
    assert!(rows.iter().filter(|r| r[3].parse::<usize>().unwrap() > 6).all(|r| r[4] == "disconnectable"));

    let o = cubic(&["segments", "--code", "0", "--width", "3", "--certify"]);
    assert!(o.status.success());
    let rows = data_rows(&o);
    assert!(rows.iter().filter(|r| r[3].parse::<usize>().unwrap() > 9).all(|r| r[4] == "disconnectable" && r[5] != "-"));
}

#[test]
fn code0_report() {
    let o = cubic(&["code0", "--L", "3", "--L-max", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped"));
    let rows = data_rows(&o);
    let l8 = rows.iter().find(|r| r[0] == "8").unwrap();
    assert_eq!(l8[4], "4");
    assert!(rows.iter().all(|r| r[8] == "yes"));
}

#[test]
fn output_is_deterministic_across_threads() {
    let a = cubic(&["code0", "--L", "5", "--L-max", "9", "--threads", "1", "--format", "json"]);
    let b = cubic(&["code0", "--L", "5", "--L-max", "9", "--threads", "4", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "cubic-report/1");
    assert_eq!(v["ok"], true);
}

#[test]
fn memory_budget_is_enforced() {
    let o = cubic(&["ktable", "--code", "1", "--L", "2", "--mem", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cubic(&["ktable", "--code", "0", "--L", "40", "--mem", "256"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn syndrome_and_distance() {
    let o = cubic(&["syndrome", "--code", "1", "--L", "4", "--op", "XI(0,0,0)"]);
    assert!(o.status.success());
    assert_eq!(data_rows(&o).len(), 4);

    let o = cubic(&["distance", "--code", "2", "--L", "2"]);
    assert!(o.status.success());
    let rows = data_rows(&o);
    assert_eq!(rows[0][1], rows[1][1]);
}

#[test]
fn out_flag_writes_file() {
    let path = temp_file("out.tsv", "");
    let o = cubic(&["ktable", "--code", "2", "--L", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("# Code 2"));
}
