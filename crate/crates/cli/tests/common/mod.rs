#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// `(golden name, arguments)` for the worked examples of every subcommand.
pub const CASES: &[(&str, &[&str])] = &[
    ("analyze_cusp", &["analyze", "y^2 - x^3"]),
    ("analyze_node", &["analyze", "x*y"]),
    ("analyze_off_curve", &["analyze", "1 + x"]),
    ("deform_section", &["deform", "y^2", "y", "--section", "0", "1/2"]),
    ("deform_inadmissible", &["deform", "y^2", "x"]),
    ("deform_node", &["deform", "x*y", "y"]),
    ("sections_line", &["sections", "y^2", "y"]),
    ("sections_point", &["sections", "x*y", "y"]),
    ("sections_empty", &["sections", "y^2", "x"]),
    ("p2_nodal_cubic", &["p2", "x*y + x^3 + y^3", "--degree", "3"]),
    ("p2_cusp", &["p2", "y^2 - x^3", "--degree", "3"]),
    ("p2_degree_violated", &["p2", "x*y", "--degree", "1"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run_bin(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_equimult"))
        .args(args)
        .output()
        .expect("spawn equimult");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

/// Mismatches between the binary's output and the golden files, in both
/// text and JSON modes. Empty when everything matches.
pub fn golden_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (name, args) in CASES {
        for (ext, json) in [("txt", false), ("json", true)] {
            let mut full: Vec<&str> = args.to_vec();
            if json {
                full.push("--json");
            }
            let path = golden_dir().join(format!("{name}.{ext}"));
            let expected = std::fs::read_to_string(&path).unwrap_or_default();
            let got = run_bin(&full).stdout;
            if got != expected {
                bad.push(format!("{}: output differs\n--- expected\n{expected}--- got\n{got}", path.display()));
            }
        }
    }
    bad
}
