//! Golden files: computed complexes must serialize byte-for-byte to the
//! files in `tests/golden`, and those files must agree with the displayed
//! tables, transcribed here and read with a small notation parser that does
//! not use the library renderer.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use flopcalc_core::resolution::{build_complex, weyman_resolution, GradedTermList, SpringerDatum};
use flopcalc_core::window::{generate, WindowFamily};
use flopcalc_core::{ComplexKind, RChargeConvention};
use serde_json::Value;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn read(name: &str) -> String {
    fs::read_to_string(golden_path(name)).unwrap()
}

/// Canonical form: sorted keys, pretty-printed, trailing newline.
fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(&serde_json::to_value(v).unwrap()).unwrap();
    s.push('\n');
    s
}

/// `O`, `S1^∨⊗S2`, `Sym^2 S2`, `Sym^2 S1^∨`, each with an optional
/// `(a,b)` twist meaning `(det S1)^a (det S2)^b`.
fn parse_planes(s: &str) -> (Vec<i32>, Vec<i32>) {
    let (body, twist) = match s.find('(') {
        Some(i) => {
            let inner = &s[i + 1..s.len() - 1];
            let (a, b) = inner.split_once(',').unwrap();
            (&s[..i], (a.parse::<i32>().unwrap(), b.parse::<i32>().unwrap()))
        }
        None => (s, (0, 0)),
    };
    let (s1, s2) = match body {
        "O" => ([0, 0], [0, 0]),
        "S1^∨⊗S2" => ([0, -1], [1, 0]),
        "Sym^2 S2" => ([0, 0], [2, 0]),
        "Sym^2 S1^∨" => ([0, -2], [0, 0]),
        other => panic!("unknown bundle {other}"),
    };
    (
        s1.iter().map(|x| x + twist.0).collect(),
        s2.iter().map(|x| x + twist.1).collect(),
    )
}

fn parse_ambient(s: &str) -> Vec<i32> {
    match s {
        "O" => vec![0; 4],
        "(det H)^-1" => vec![-1; 4],
        "(det H)^-2" => vec![-2; 4],
        "H^∨(det H)^-1" => vec![-1, -1, -1, -2],
        "Λ^3 H^∨" => vec![0, -1, -1, -1],
        other => panic!("unknown bundle {other}"),
    }
}

/// Golden complex as `column -> sorted list of (s1 + twist, s2 + twist)`,
/// with columns renumbered from zero.
fn golden_columns(name: &str, key: &str) -> Vec<Vec<Vec<Vec<i32>>>> {
    let v: Value = serde_json::from_str(&read(name)).unwrap();
    let mut cols: BTreeMap<i64, Vec<Vec<Vec<i32>>>> = BTreeMap::new();
    for col in v["columns"].as_array().unwrap() {
        for t in col["terms"].as_array().unwrap() {
            let pos = match key {
                "column" => col["column"].as_i64().unwrap(),
                _ => t["hdeg"].as_i64().unwrap(),
            };
            let twist: Vec<i32> = serde_json::from_value(t["twist"].clone()).unwrap();
            let mut full = Vec::new();
            for (i, f) in ["s1", "s2"].iter().enumerate() {
                if t[f].is_null() {
                    continue;
                }
                let parts: Vec<i32> = serde_json::from_value(t[f].clone()).unwrap();
                full.push(parts.iter().map(|p| p + twist[i]).collect());
            }
            cols.entry(pos).or_default().push(full);
        }
    }
    let (lo, hi) = (*cols.keys().next().unwrap(), *cols.keys().last().unwrap());
    (lo..=hi)
        .map(|c| {
            let mut col = cols.remove(&c).unwrap_or_default();
            col.sort();
            col
        })
        .collect()
}

fn planes_table(t: &[&[&str]]) -> Vec<Vec<Vec<Vec<i32>>>> {
    t.iter()
        .map(|col| {
            let mut c: Vec<Vec<Vec<i32>>> = col
                .iter()
                .map(|s| {
                    let (a, b) = parse_planes(s);
                    vec![a, b]
                })
                .collect();
            c.sort();
            c
        })
        .collect()
}

const SYM: [&str; 2] = ["Sym^2 S2(-1,0)", "Sym^2 S1^∨(0,1)"];

#[test]
fn i2_table() {
    let want = planes_table(&[
        &["O(-2,2)"],
        &["S1^∨⊗S2(-1,1)"],
        &SYM,
        &["S1^∨⊗S2"],
        &["O"],
    ]);
    assert_eq!(golden_columns("I2.json", "column"), want);
}

#[test]
fn i0_table() {
    let want = planes_table(&[
        &["O"],
        &["S1^∨⊗S2"],
        &SYM,
        &["S1^∨⊗S2(-1,1)"],
        &["O(-2,2)"],
    ]);
    assert_eq!(golden_columns("I0.json", "column"), want);
}

#[test]
fn i1_table() {
    let middle: &[&str] = &["O", SYM[0], SYM[1], "O(-1,1)", "O(-2,2)"];
    let want = planes_table(&[
        &["O(-1,1)"],
        middle,
        &["S1^∨⊗S2", "S1^∨⊗S2", "S1^∨⊗S2(-1,1)", "S1^∨⊗S2(-1,1)"],
        middle,
        &["O(-1,1)"],
    ]);
    assert_eq!(golden_columns("I1.json", "column"), want);
}

#[test]
fn oc_tables() {
    // With R-charge taken into account.
    let by_column = planes_table(&[
        &["O", "O(-1,1)"],
        &["S1^∨⊗S2"],
        &["S1^∨⊗S2"],
        &["O", "O(-1,1)"],
    ]);
    assert_eq!(golden_columns("OC.json", "column"), by_column);
    // Plain homological layout: F3 on the left.
    let by_hdeg = planes_table(&[
        &["O(-1,1)"],
        &["S1^∨⊗S2", "O(-1,1)"],
        &["O", "S1^∨⊗S2"],
        &["O"],
    ]);
    assert_eq!(golden_columns("OC.json", "hdeg"), by_hdeg);
}

#[test]
fn delta_bar_table() {
    let want = planes_table(&[
        &["O", "O(-1,1)"],
        &["S1^∨⊗S2", "O", "O(-1,1)"],
        &["S1^∨⊗S2", "S1^∨⊗S2"],
        &["O", "O(-1,1)", "S1^∨⊗S2"],
        &["O", "O(-1,1)"],
    ]);
    assert_eq!(golden_columns("DeltaBar.json", "column"), want);
}

#[test]
fn weyman_table() {
    let t: &[&[&str]] = &[
        &["(det H)^-2"],
        &["H^∨(det H)^-1", "(det H)^-1"],
        &["(det H)^-1", "Λ^3 H^∨"],
        &["O"],
    ];
    let want: Vec<Vec<Vec<Vec<i32>>>> = t
        .iter()
        .map(|col| {
            let mut c: Vec<_> = col.iter().map(|s| vec![parse_ambient(s)]).collect();
            c.sort();
            c
        })
        .collect();
    assert_eq!(golden_columns("weyman.json", "hdeg"), want);
}

#[test]
fn computed_complexes_match_golden_bytes() {
    for kind in ComplexKind::ALL {
        let list = build_complex(kind, RChargeConvention::STANDARD).unwrap();
        assert_eq!(pretty(&list), read(&format!("{}.json", kind.label())), "{kind}");
    }
    let w = weyman_resolution(&SpringerDatum::planes(2)).unwrap();
    assert_eq!(pretty(&w), read("weyman.json"));
}

#[test]
fn golden_complexes_round_trip() {
    for name in ["I0", "I1", "I2", "OC", "DeltaBar", "weyman"] {
        let raw = read(&format!("{name}.json"));
        let list: GradedTermList = serde_json::from_str(&raw).unwrap();
        assert_eq!(pretty(&list), raw);
    }
}

#[test]
fn window_golden_files() {
    for (family, name) in [
        (WindowFamily::GflopW, "W"),
        (WindowFamily::MukaiWPrime, "Wprime"),
        (WindowFamily::Tseu, "Tseu"),
    ] {
        let v: Value = serde_json::from_str(&read(&format!("window_{name}_2_5.json"))).unwrap();
        let members: Vec<Vec<i32>> = serde_json::from_value(v["members"].clone()).unwrap();
        assert_eq!(members, generate(family, 2, 5).unwrap().sorted_list());
        // closed forms: 0 ≤ b ≤ a ≤ n − 2 for W, ≤ n − 1 for the others
        let bound = if family == WindowFamily::GflopW { 3 } else { 4 };
        let mut closed = Vec::new();
        for a in 0..=bound {
            for b in 0..=a {
                closed.push(vec![a, b]);
            }
        }
        assert_eq!(members, closed);
    }
}
