//! Fixture corpus of command lines with their expected exit codes.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

pub fn nervekit(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nervekit"));
    cmd.current_dir(fixtures()).args(args).env_remove("NERVEKIT_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run { stdout: out.stdout, stderr: out.stderr, code: out.status.code().expect("exited normally") }
}

const HOMOLOGY_FILES: [&str; 8] = [
    "circle.json",
    "tetra_boundary.json",
    "torus7.json",
    "rp2.json",
    "octahedron.json",
    "banded_torus.json",
    "graph_example.json",
    "random_coloured.json",
];

/// Every invocation with the exit code it must produce.
pub fn invocations() -> Vec<(Vec<String>, i32)> {
    let mut out: Vec<(Vec<&str>, i32)> = Vec::new();
    for f in HOMOLOGY_FILES {
        for field in ["f2", "f3", "f5", "q"] {
            out.push((vec!["homology", "--field", field, f], 0));
        }
    }
    out.extend([
        (vec!["--json", "homology", "--field", "f2", "rp2.json"], 0),
        (vec!["nerve", "--k", "-1", "--l", "1", "--field", "q", "circle.json", "arcs.cover"], 0),
        (vec!["--json", "nerve", "--k", "-1", "--l", "1", "circle.json", "arcs.cover"], 0),
        (vec!["nerve", "--k", "0", "--l", "1", "circle.json", "arcs.cover"], 0),
        (vec!["nerve", "--k", "1", "--l", "2", "--field", "f2", "circle.json", "arcs.cover"], 0),
        (vec!["nerve", "--k", "-1", "--l", "1", "cut_circle.json", "cut_circle.cover"], 1),
        (vec!["nerve", "--k", "2", "--l", "1", "circle.json", "arcs.cover"], 2),
        (vec!["nerve", "--max-members", "2", "circle.json", "arcs.cover"], 2),
        (vec!["nerve", "circle.json", "half_circle.cover"], 2),
        (vec!["nerve", "circle.json", "outside.cover"], 2),
        (vec!["helly", "--k", "0", "circle.json", "arcs.cover"], 1),
        (vec!["helly", "--k", "-1", "circle.json", "half_circle.cover"], 2),
        (vec!["helly", "--k", "0", "cut_circle.json", "cut_circle.cover"], 1),
        (vec!["helly", "--embedded-union", "-d", "1", "circle.json", "arcs.cover"], 1),
        (vec!["helly", "--embedded-inter", "-d", "1", "circle.json", "arcs.cover"], 1),
        (vec!["helly", "--embedded-inter", "-d", "2", "circle.json", "arcs.cover"], 2),
        (vec!["--json", "helly", "--k", "1", "circle.json", "arcs.cover"], 1),
        (vec!["meshulam", "path_coloured.json"], 0),
        (vec!["meshulam", "--isolated", "1", "path_coloured.json"], 0),
        (vec!["meshulam", "--isolated", "0", "path_coloured.json"], 0),
        (vec!["meshulam", "--discrete", "path_coloured.json"], 0),
        (vec!["meshulam", "--k", "-1", "path_coloured.json"], 0),
        (vec!["meshulam", "two_points.json"], 1),
        (vec!["meshulam", "--field", "f2", "octahedron.json"], 0),
        (vec!["meshulam", "--k", "-1", "--field", "f2", "banded_torus.json"], 1),
        (vec!["meshulam", "--k", "-1", "--field", "f2", "graph_example.json"], 0),
        (vec!["meshulam", "--k", "1", "--field", "q", "random_coloured.json"], 0),
        (vec!["--json", "meshulam", "--k", "0", "octahedron.json"], 0),
        (vec!["meshulam", "--k", "3", "octahedron.json"], 2),
        (vec!["meshulam", "--isolated", "9", "path_coloured.json"], 2),
        (vec!["meshulam", "--discrete", "banded_torus.json"], 2),
        (vec!["meshulam", "circle.json"], 2),
        (vec!["polytopal", "--field", "f2", "octahedron.json", "boundary_delta2.json"], 0),
        (vec!["--json", "polytopal", "--field", "q", "octahedron.json", "boundary_delta2.json"], 0),
        (vec!["polytopal", "octahedron.json", "tetra_boundary.json"], 2),
        (vec!["polytopal", "banded_torus.json", "boundary_delta2.json"], 1),
        (vec!["kill", "-d", "2", "--field", "f2", "circle.json"], 0),
        (vec!["kill", "-d", "1", "torus7.json"], 0),
        (vec!["kill", "-d", "2", "--field", "f3", "rp2.json"], 0),
        (vec!["--json", "kill", "-d", "1", "cut_circle.json"], 0),
        (vec!["generate", "simplex-boundary", "--m", "3"], 0),
        (vec!["generate", "torus7"], 0),
        (vec!["generate", "rp2"], 0),
        (vec!["generate", "octahedron"], 0),
        (vec!["generate", "banded-torus"], 0),
        (vec!["generate", "banded-torus", "--rows", "4", "--bands", "2,1,1"], 0),
        (vec!["generate", "random", "--n", "6", "-d", "2", "--p", "0.3", "--seed", "4"], 0),
        (vec!["generate", "random-coloured", "--n", "7", "-d", "2", "--m", "2", "--p", "0.6", "--seed", "3"], 0),
        (vec!["generate", "cut-circle-host"], 0),
        (vec!["generate", "cut-circle-cover"], 0),
        (vec!["generate", "graph-example", "--seed", "7"], 0),
        (vec!["generate", "simplex-boundary", "--m", "0"], 2),
        (vec!["generate", "banded-torus", "--bands", "1,1"], 2),
        (vec!["search", "--trials", "5"], 0),
        (vec!["search", "--trials", "20", "--theorem", "mixed", "--seed", "3"], 0),
        (vec!["--json", "search", "--trials", "3", "--theorem", "meshulam"], 0),
        (vec!["search", "--theorem", "nope"], 2),
        (vec!["homology", "bad_partition.json"], 2),
        (vec!["homology", "bad_overlap.json"], 2),
        (vec!["homology", "empty_facet.json"], 2),
        (vec!["homology", "not_json.json"], 2),
        (vec!["homology", "missing.json"], 2),
        (vec!["homology", "--field", "f4", "circle.json"], 2),
        (vec!["frobnicate"], 2),
    ]);
    out.into_iter().map(|(a, c)| (a.into_iter().map(String::from).collect(), c)).collect()
}
