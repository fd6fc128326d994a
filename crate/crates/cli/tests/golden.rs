//! Runs every command recorded under `tests/golden/` and compares the JSON
//! output and exit code. Annotated exceptions are re-derived by brute force.

use std::path::Path;
use std::process::Command;

use serde_json::Value;
use unsharp_core::{Fixture, MeetSemilattice};

fn run_json(args: &[String]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_unsharp"))
        .arg("--json")
        .args(args)
        .output()
        .unwrap();
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

/// `Max{z | a ∧ z <= b}` by scanning every element, as names.
fn brute_imp(s: &MeetSemilattice, a: &str, b: &str) -> Vec<String> {
    let (a, b) = (s.index_of(a).unwrap(), s.index_of(b).unwrap());
    let n = s.len();
    let sols: Vec<usize> = (0..n).filter(|&z| s.leq(s.meet(a, z), b)).collect();
    sols.iter()
        .filter(|&&z| !sols.iter().any(|&w| w != z && s.leq(z, w)))
        .map(|&z| s.name(z).to_owned())
        .collect()
}

/// `Max{z | x ∧ z = 0}` by scanning.
fn brute_neg(s: &MeetSemilattice, x: &str) -> Vec<usize> {
    let x = s.index_of(x).unwrap();
    let sols: Vec<usize> = (0..s.len())
        .filter(|&z| s.meet(x, z) == s.bottom())
        .collect();
    sols.iter()
        .copied()
        .filter(|&z| !sols.iter().any(|&w| w != z && s.leq(z, w)))
        .collect()
}

/// Members of `A ∧ B`, as sorted names.
fn brute_meet(s: &MeetSemilattice, a: &[usize], b: &[usize]) -> Vec<String> {
    let mut out: Vec<usize> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .map(|(x, y)| s.meet(x, y))
        .collect();
    out.sort();
    out.dedup();
    out.into_iter().map(|i| s.name(i).to_owned()).collect()
}

fn check_exception(name: &str, output: &Value, exc: &Value) {
    if let Some(cell) = exc.get("cell") {
        // implication table cell
        let s = Fixture::Fig1.build();
        let (a, b) = (cell[0].as_str().unwrap(), cell[1].as_str().unwrap());
        let row = s.index_of(a).unwrap();
        let col = s.index_of(b).unwrap();
        let printed = output["cells"][row][col].as_str().unwrap();
        assert_eq!(printed, exc["computed"], "{name}");
        assert_ne!(printed, exc["reference"], "{name}");
        let members: String = brute_imp(&s, a, b).concat();
        assert_eq!(members, printed, "{name}: oracle disagrees");
    } else {
        // failing binding whose right-hand side was written with another name
        let s = Fixture::Fig3.build();
        let binding = &exc["binding"];
        let ce = output["counterexamples"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| &c["binding"] == binding)
            .unwrap_or_else(|| panic!("{name}: binding not listed"));
        assert_eq!(ce["rhs"], exc["computed"], "{name}");
        let x = binding["x"].as_str().unwrap();
        let y = binding["y"].as_str().unwrap();
        let rhs = brute_meet(&s, &brute_neg(&s, x), &brute_neg(&s, y));
        assert_eq!(
            Value::from(rhs),
            exc["computed"],
            "{name}: oracle disagrees"
        );
        let written = brute_meet(&s, &brute_neg(&s, "e"), &brute_neg(&s, "f"));
        assert_ne!(Value::from(written), exc["computed"], "{name}");
    }
    assert!(
        exc["note"].as_str().is_some_and(|n| !n.is_empty()),
        "{name}: missing note"
    );
}

#[test]
fn golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut count = 0;
    let mut entries: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    entries.sort();
    for path in entries {
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let args: Vec<String> = doc["args"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| a.as_str().unwrap().to_owned())
            .collect();
        let (code, output) = run_json(&args);
        assert_eq!(Value::from(code), doc["exit"], "{name}: exit code");
        assert_eq!(output, doc["output"], "{name}: output differs");
        for exc in doc["exceptions"].as_array().into_iter().flatten() {
            check_exception(&name, &output, exc);
        }
        count += 1;
    }
    assert!(count >= 15, "only {count} golden files found");
}
