//! End-to-end runs of the wellspread binary: output shapes, exit codes,
//! and byte-for-byte determinism of everything that is not a timing.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_wellspread")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn wellspread")
}

fn ok(args: &[&str]) {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wellspread-cli-{}-{}", name, std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn generated_families_have_the_right_shape() {
    let dir = scratch("gen");
    let k4 = dir.join("k4.graph");
    let k4s = k4.to_str().unwrap();
    ok(&["gen", "--type", "k4", "--out", k4s]);
    let text = fs::read_to_string(&k4) .unwrap();
    assert!(text.starts_with("4 6\n"));
    assert_eq!(text.lines().count(), 7);

    ok(&["gen", "--type", "petersen", "--out", k4s]);
    assert!(fs::read_to_string(&k4).unwrap().starts_with("10 15\n"));

    ok(&["gen", "--type", "prism", "--k", "5", "--out", k4s]);
    assert!(fs::read_to_string(&k4).unwrap().starts_with("10 15\n"));

    ok(&["gen", "--type", "random", "--n", "60", "--seed", "9", "--out", k4s]);
    assert!(fs::read_to_string(&k4).unwrap().starts_with("60 90\n"));
}

#[test]
fn truncating_k4_gives_the_18_edge_cubic_graph() {
    let dir = scratch("trunc");
    let k4 = dir.join("k4.graph");
    let tk4 = dir.join("tk4.graph");
    ok(&["gen", "--type", "k4", "--out", k4.to_str().unwrap()]);
    let out = run(&[
        "gen",
        "--type",
        "truncate",
        "--input",
        k4.to_str().unwrap(),
        "--out",
        tk4.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&tk4).unwrap();
    assert!(text.starts_with("12 18\n"), "got header {:?}", text.lines().next());
    assert_eq!(text.lines().count(), 19);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = scratch("det");
    let g = dir.join("in.graph");
    let gs = g.to_str().unwrap();
    let a = dir.join("a.graph");
    let b = dir.join("b.graph");
    ok(&["gen", "--type", "random", "--n", "300", "--seed", "11", "--out", a.to_str().unwrap()]);
    ok(&["gen", "--type", "random", "--n", "300", "--seed", "11", "--out", b.to_str().unwrap()]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap(), "gen is not deterministic");
    fs::rename(&a, &g).unwrap();

    for sub in ["match", "cactus", "pair", "verify"] {
        let (x, y) = if sub == "verify" {
            // verify needs a matching to check
            let m = dir.join("m.txt");
            let matching: String = stdout_of(&["match", gs])
                .lines()
                .filter(|l| !l.starts_with('#'))
                .map(|l| format!("{}\n", l))
                .collect();
            fs::write(&m, matching).unwrap();
            let ms = m.to_str().unwrap();
            (run(&[sub, gs, ms]), run(&[sub, gs, ms]))
        } else {
            (run(&[sub, gs]), run(&[sub, gs]))
        };
        assert!(x.status.success(), "{} failed", sub);
        assert_eq!(x.stdout, y.stdout, "{} stdout differs between runs", sub);
    }
}

#[test]
fn match_output_round_trips_through_verify() {
    let dir = scratch("roundtrip");
    let g = dir.join("pet.graph");
    let gs = g.to_str().unwrap();
    ok(&["gen", "--type", "petersen", "--out", gs]);

    let out = stdout_of(&["match", gs]);
    let ids: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(ids.len(), 5, "a perfect matching of 10 vertices has 5 edges");
    let trailer = out.lines().find(|l| l.starts_with('#')).expect("summary trailer");
    assert!(trailer.contains("\"perfect\":true"));
    assert!(trailer.contains("\"well_spread\":true"));

    let m = dir.join("pet.matching");
    fs::write(&m, format!("{}\n", ids.join("\n"))).unwrap();
    let report: serde_json::Value =
        serde_json::from_str(&stdout_of(&["verify", gs, m.to_str().unwrap()])).unwrap();
    assert_eq!(report["perfect"], serde_json::Value::Bool(true));
    assert_eq!(report["well_spread"], serde_json::Value::Bool(true));
    assert_eq!(report["violated_cuts"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_lists_the_cut_a_bad_matching_overloads() {
    let dir = scratch("badmatch");
    let g = dir.join("prism.graph");
    let gs = g.to_str().unwrap();
    ok(&["gen", "--type", "prism", "--k", "3", "--out", gs]);
    // the three rungs of the prism form a perfect matching that takes all
    // of the cut separating the two triangles
    let m = dir.join("rungs.matching");
    fs::write(&m, "6\n7\n8\n").unwrap();
    let out = run(&["verify", gs, m.to_str().unwrap()]);
    assert!(out.status.success(), "verify reports, it does not fail");
    let report: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(report["perfect"], serde_json::Value::Bool(true));
    assert_eq!(report["well_spread"], serde_json::Value::Bool(false));
    let cuts = report["violated_cuts"].as_array().unwrap();
    assert_eq!(cuts.len(), 1);
    assert_eq!(cuts[0]["cut_edges"], serde_json::json!([6, 7, 8]));
    assert_eq!(cuts[0]["intersection"], serde_json::json!(3));
    assert_eq!(cuts[0]["side_size"], serde_json::json!(3));
}

#[test]
fn cactus_of_petersen_is_a_star() {
    let dir = scratch("star");
    let g = dir.join("pet.graph");
    let gs = g.to_str().unwrap();
    ok(&["gen", "--type", "petersen", "--out", gs]);
    let model: serde_json::Value = serde_json::from_str(&stdout_of(&["cactus", gs])).unwrap();
    assert_eq!(model["n"], serde_json::json!(10));
    assert_eq!(model["nodes"].as_array().unwrap().len(), 11);
    assert_eq!(model["edges"].as_array().unwrap().len(), 10);
    let phi: Vec<u64> =
        model["phi"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(phi, (0..10).collect::<Vec<_>>());

    let dot = stdout_of(&["cactus", gs, "--format", "dot"]);
    assert!(dot.starts_with("graph cuts {"));
    assert!(dot.trim_end().ends_with('}'));
    assert!(dot.contains("label=\"v0\""));
}

#[test]
fn pair_reports_overlap_within_bound() {
    let dir = scratch("pair");
    let g = dir.join("pet.graph");
    let gs = g.to_str().unwrap();
    ok(&["gen", "--type", "petersen", "--out", gs]);
    let pair: serde_json::Value = serde_json::from_str(&stdout_of(&["pair", gs])).unwrap();
    assert_eq!(pair["n"], serde_json::json!(10));
    assert_eq!(pair["bound"], serde_json::json!(1));
    assert_eq!(pair["shared_count"], serde_json::json!(1));
    assert_eq!(pair["m1"].as_array().unwrap().len(), 5);
    assert_eq!(pair["m2"].as_array().unwrap().len(), 5);
    let shared: Vec<u64> =
        pair["shared"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let m1: Vec<u64> =
        pair["m1"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let m2: Vec<u64> =
        pair["m2"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    for s in &shared {
        assert!(m1.contains(s) && m2.contains(s));
    }
}

#[test]
fn bench_grid_is_well_formed() {
    let dir = scratch("bench");
    let csv = dir.join("grid.csv");
    let out = run(&[
        "bench",
        "--sizes",
        "50,100",
        "--seeds",
        "1,2",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,seed,cactus_ms,decompose_ms,assemble_ms,total_ms,verified"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    for (row, want) in rows.iter().zip(["50,1", "50,2", "100,1", "100,2"]) {
        assert!(row.starts_with(want), "row order: {}", row);
        assert!(row.ends_with(",true"), "unverified row: {}", row);
    }
    assert!(String::from_utf8_lossy(&out.stderr).contains("slope "));
}

#[test]
fn bad_inputs_exit_with_the_documented_codes() {
    let dir = scratch("codes");
    let p = dir.join("bad.graph");
    let ps = p.to_str().unwrap();

    fs::write(&p, "not a header\n").unwrap();
    assert_eq!(run(&["match", ps]).status.code(), Some(2), "malformed header");

    fs::write(&p, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n").unwrap();
    assert_eq!(run(&["match", ps]).status.code(), Some(2), "wrong edge count");

    // two disjoint K4s
    let mut two = String::from("8 12\n");
    for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        two.push_str(&format!("{} {}\n", u, v));
    }
    for (u, v) in [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)] {
        two.push_str(&format!("{} {}\n", u, v));
    }
    fs::write(&p, &two).unwrap();
    assert_eq!(run(&["match", ps]).status.code(), Some(3), "disconnected");
    assert_eq!(run(&["pair", ps]).status.code(), Some(3), "disconnected pair");
    assert_eq!(run(&["cactus", ps]).status.code(), Some(3), "disconnected cactus");

    // two K4-minus-an-edge blocks joined by a 2-edge cut: cubic but only
    // 2-edge-connected
    let mut thin = String::from("8 12\n");
    for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
        thin.push_str(&format!("{} {}\n", u, v));
    }
    for (u, v) in [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7)] {
        thin.push_str(&format!("{} {}\n", u, v));
    }
    thin.push_str("2 6\n3 7\n");
    fs::write(&p, &thin).unwrap();
    assert_eq!(run(&["match", ps]).status.code(), Some(3), "2-edge-connected");

    let missing = dir.join("missing.graph");
    assert_eq!(run(&["match", missing.to_str().unwrap()]).status.code(), Some(2));

    assert_eq!(
        run(&["gen", "--type", "random", "--n", "101", "--seed", "1"]).status.code(),
        Some(2),
        "odd n"
    );
    assert_eq!(
        run(&["gen", "--type", "truncate"]).status.code(),
        Some(2),
        "truncate without input"
    );
}

#[test]
fn theta_graph_is_accepted() {
    // the one multigraph in scope: two vertices joined by three edges
    let dir = scratch("theta");
    let g = dir.join("theta.graph");
    let gs = g.to_str().unwrap();
    fs::write(&g, "2 3\n0 1\n0 1\n0 1\n").unwrap();
    let out = stdout_of(&["match", gs]);
    let ids: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(ids.len(), 1);
    let pair: serde_json::Value = serde_json::from_str(&stdout_of(&["pair", gs])).unwrap();
    assert_eq!(pair["shared_count"], serde_json::json!(0), "the second matching takes a parallel edge");
}
