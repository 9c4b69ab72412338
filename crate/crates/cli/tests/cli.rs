use std::process::{Command, Output};

use srep_core::cayley::{self, AppendixReport};
use srep_core::ferus::FerusCertificate;
use srep_core::orbits::{self, OrbitReport, OrbitSpec, Rule};
use srep_core::pairdb::{PairDb, Params};
use srep_core::report::{self, Table1Grid, Table1Row};
use srep_core::Family;

fn srep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srep"))
        .args(args)
        .output()
        .expect("run srep")
}

fn stdout(args: &[&str]) -> String {
    let out = srep(args);
    assert!(
        out.status.success(),
        "srep {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn md_cells(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| l.starts_with('|') && !l.starts_with("| ---"))
        .map(split_md_row)
        .collect()
}

/// Splits a markdown row on unescaped pipes.
fn split_md_row(line: &str) -> Vec<String> {
    let inner = line
        .trim()
        .strip_prefix('|')
        .unwrap()
        .strip_suffix('|')
        .unwrap();
    let mut cells = vec![String::new()];
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => match chars.next() {
                Some('|') => cells.last_mut().unwrap().push('|'),
                Some(o) => cells.last_mut().unwrap().extend(['\\', o]),
                None => cells.last_mut().unwrap().push('\\'),
            },
            '|' => cells.push(String::new()),
            _ => cells.last_mut().unwrap().push(c),
        }
    }
    cells.into_iter().map(|c| c.trim().to_string()).collect()
}

fn csv_cells(text: &str) -> Vec<Vec<String>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    rdr.records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn table1_check_passes() {
    let out = stdout(&["table1", "--check"]);
    assert!(
        out.contains("31 symbolic and 134 numeric rows match"),
        "{out}"
    );
}

#[test]
fn table1_check_fails_on_a_tampered_database() {
    let text = PairDb::embedded_text().replacen(
        "\nmult = all: 8\nflags = none\ndim_g = 78",
        "\nmult = all: 6\nflags = none\ndim_g = 72",
        1,
    );
    assert_ne!(text, PairDb::embedded_text());
    let dir = std::env::temp_dir().join(format!("srep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pairs.dat");
    std::fs::write(&path, text).unwrap();
    let out = srep(&["--pairs", path.to_str().unwrap(), "table1", "--check"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("e6"), "{stderr}");

    let inconsistent = PairDb::embedded_text().replacen("\nmult = all: 8", "\nmult = all: 6", 1);
    std::fs::write(&path, inconsistent).unwrap();
    let out = srep(&["--pairs", path.to_str().unwrap(), "table1", "--check"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(srep(&["--help"]).status.code(), Some(0));
    assert_eq!(srep(&["--version"]).status.code(), Some(0));
    assert_eq!(srep(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(srep(&["table1", "--p", "6..2"]).status.code(), Some(1));
    assert_eq!(
        srep(&["classify", "--pair", "nope|nope", "--root", "long"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        srep(&["classify", "--pair", "g2|so(4)", "--root", "1,x,0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        srep(&["classify", "--pair", "g2|so(4)", "--root", "long", "--xi", "1,0,-1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(srep(&["ferus"]).status.code(), Some(1));
    assert_eq!(
        srep(&["appendix", "--algebra", "e8"]).status.code(),
        Some(0)
    );
    assert_eq!(
        srep(&["appendix", "--algebra", "a2"]).status.code(),
        Some(1)
    );
}

#[test]
fn classify_examples() {
    let run = |pair: &str, root: &str| -> OrbitReport {
        serde_json::from_str(&stdout(&[
            "classify", "--pair", pair, "--root", root, "--format", "json",
        ]))
        .unwrap()
    };
    let g2 = run("g2|so(4)", "short");
    assert!(g2.degenerate);
    assert_eq!(g2.rule, Rule::G2ShortRoot);
    assert_eq!((g2.l, g2.r), (5, 4));

    let e6 = run("e6|f4", "1,1,0");
    assert!(!e6.degenerate);
    assert_eq!(e6.rule, Rule::NotParallelToRoot);

    let f4 = run("f4|su(2)+sp(3)", "short");
    assert!(!f4.degenerate);
    assert_eq!(f4.nullity, 0);

    let so = run("so(7)|so(2)+so(5)", "highest");
    assert!(so.degenerate);
    assert_eq!((so.l, so.r), (7, 6));
}

#[test]
fn classify_parameters_on_the_command_line() {
    let out = stdout(&[
        "classify",
        "--pair",
        "sp(2p)|sp(p)+sp(p)",
        "--p",
        "3",
        "--root",
        "long",
        "--format",
        "csv",
    ]);
    let cells = csv_cells(&out);
    assert_eq!(cells[1][0], "sp(6)|sp(3)+sp(3)");
    assert_eq!(&cells[1][3..5], ["19", "16"]);
    let fixed = srep(&[
        "classify",
        "--pair",
        "sp(6)|sp(3)+sp(3)",
        "--p",
        "3",
        "--root",
        "long",
    ]);
    assert_eq!(fixed.status.code(), Some(1));
}

#[test]
fn classify_json_round_trips_with_spectrum() {
    let out = stdout(&[
        "classify", "--pair", "g2|so(4)", "--root", "long", "--xi", "1,-1,0", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rep: OrbitReport = serde_json::from_value(v["report"].clone()).unwrap();
    let db = PairDb::embedded().unwrap();
    let pair = db
        .lookup("g2|so(4)")
        .unwrap()
        .instantiate(Params::NONE)
        .unwrap();
    assert_eq!(rep, orbits::classify_spec(&pair, &OrbitSpec::Long).unwrap());
    let spectrum: orbits::CurvatureSpectrum =
        serde_json::from_value(v["spectrum"].clone()).unwrap();
    assert_eq!(spectrum.total(), rep.l);
    assert_eq!(spectrum.kernel_dimension(), rep.nullity);
}

#[test]
fn table1_json_round_trips() {
    let out = stdout(&["table1", "--p", "2..3", "--n", "1..2", "--format", "json"]);
    let rows: Vec<Table1Row> = serde_json::from_str(&out).unwrap();
    let db = PairDb::embedded().unwrap();
    let grid = Table1Grid { p: 2..=3, n: 1..=2 };
    assert_eq!(rows, report::table1_numeric(&db, &grid).unwrap());
}

#[test]
fn table1_examples() {
    let out = stdout(&["table1", "--p", "2..3", "--n", "1", "--format", "csv"]);
    let rows = report::parse_rows(&out).unwrap();
    let find = |g: &str| rows.iter().find(|r| r.g == g).unwrap();
    let g2 = find("g2");
    assert_eq!((g2.l.as_str(), g2.r.as_str(), g2.degeneracy), ("5", "4", 1));
    let bc = rows
        .iter()
        .find(|r| r.g == "su(5)" && r.rstype == "BC")
        .unwrap();
    assert_eq!((bc.l.as_str(), bc.r.as_str()), ("7", "6"));
    let c = find("sp(6)");
    assert_eq!((c.l.as_str(), c.r.as_str(), c.degeneracy), ("19", "16", 3));
}

#[test]
fn csv_and_markdown_agree() {
    for args in [
        &["table1", "--p", "2..4", "--n", "1..2"][..],
        &["table1"][..],
        &["ferus", "--scan", "--p-max", "5", "--n-max", "3"][..],
        &["pairs", "list"][..],
        &["appendix", "--algebra", "e7"][..],
    ] {
        let md = stdout(&[args, &["--format", "md"]].concat());
        let csv = stdout(&[args, &["--format", "csv"]].concat());
        assert_eq!(md_cells(&md), csv_cells(&csv), "{args:?}");
    }
}

#[test]
fn ferus_certificates() {
    for (l, f) in [(5, 4), (10, 8), (24, 16), (57, 56)] {
        let out = stdout(&["ferus", "--l", &l.to_string(), "--format", "json"]);
        let cert: FerusCertificate = serde_json::from_str(&out).unwrap();
        assert_eq!(cert.f, f, "F({l})");
    }
}

#[test]
fn ferus_identities() {
    let out = stdout(&[
        "ferus",
        "--verify-identities",
        "--qmax",
        "9",
        "--format",
        "csv",
    ]);
    let cells = csv_cells(&out);
    assert_eq!(cells.len(), 1 + 3 + 9);
    assert!(cells[1..].iter().all(|r| r[1] == "true"));
}

#[test]
fn ferus_scan_flags_the_exceptional_examples() {
    let out = stdout(&["ferus", "--scan", "--only-equal", "--format", "csv"]);
    let keys: Vec<String> = csv_cells(&out)[1..].iter().map(|r| r[0].clone()).collect();
    for k in ["e8|so(16)", "e6|f4", "g2|so(4)"] {
        assert!(keys.iter().any(|x| x == k), "{k}");
    }
    assert!(!keys.iter().any(|x| x == "f4|su(2)+sp(3)"));
}

#[test]
fn appendix_json_round_trips() {
    for (name, family) in [
        ("f4", Family::F4),
        ("e6", Family::E6),
        ("e7", Family::E7),
        ("e8", Family::E8),
        ("g2", Family::G2),
    ] {
        let out = stdout(&["appendix", "--algebra", name, "--format", "json"]);
        let rep: AppendixReport = serde_json::from_str(&out).unwrap();
        assert!(rep.verified);
        assert_eq!(rep, cayley::appendix(family).unwrap());
    }
}

#[test]
fn pairs_list_covers_the_database() {
    let out = stdout(&["pairs", "list", "--format", "csv"]);
    assert_eq!(csv_cells(&out).len(), 1 + 31);
}
