use std::process::Command;

use pdrecon::cli;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["pdrecon"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn gen_formats() {
    let (code, out, _) = run(&["gen", "path:3"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "3 2\n0 1\n1 2\n");
    let (_, out, _) = run(&["gen", "cycle:3", "--format", "json"], "");
    assert_eq!(out, "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]],\"name\":\"C3\"}\n");
    let (_, out, _) = run(&["gen", "path:2", "--format", "dot"], "");
    assert!(out.starts_with("graph \"P2\" {"));
}

#[test]
fn numbers_and_sets() {
    let (code, out, _) = run(&["pd", "complete_bipartite:3,5"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "power_domination: 2\nupper: 4\n");
    let (_, out, _) = run(&["zf", "path:4"], "");
    assert_eq!(out, "zero_forcing: 1\nupper: 2\n");
    let (_, out, _) = run(&["dom", "cycle:6", "--sets", "minimum"], "");
    assert_eq!(out.lines().count(), 3);

    // minimum PDSs of K23(C5) are the minimum vertex covers of C5
    let (_, graph, _) = run(&["gen", "k23:cycle:5"], "");
    let (code, out, _) = run(&["pd", "-", "--sets", "minimum"], &graph);
    assert_eq!(code, 0);
    let sets: Vec<&str> = out.lines().collect();
    assert_eq!(sets, ["{0,1,3}", "{0,2,3}", "{0,2,4}", "{1,2,4}", "{1,3,4}"]);

    let (_, out, _) = run(&["pd", "star_edge:5", "--sets", "minimal", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sets"].as_array().unwrap().len(), 7);
    assert_eq!(v["role"], "minimal");

    let (_, out, _) = run(&["pd", "complete_bipartite:2,4", "--sets", "upper"], "");
    assert_eq!(out.lines().collect::<Vec<_>>(), ["{2,3,4}", "{2,3,5}", "{2,4,5}", "{3,4,5}"]);
}

#[test]
fn tar_and_tj() {
    let (code, out, _) = run(&["tar", "paper_Gn:4", "--thresholds"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "x_number: 3\nunder_x0: 6\nx0: 6\n");

    let (_, out, _) = run(&["tar", "complete_bipartite:3,3", "--metrics"], "");
    assert!(out.contains("order: 57\n") && out.contains("max_degree: 6\n"));
    assert!(out.contains("min_degree: 4\n") && out.contains("diameter: 6\n"));

    let (_, out, _) = run(&["tar", "cycle:4", "--k", "2", "--format", "edgelist"], "");
    assert_eq!(out.lines().next(), Some("10 12"));

    let (code, _, err) = run(&["tar", "complete_bipartite:3,3", "--k", "1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("below"));

    // a 3-side makes same-side pairs minimum as well: order 15, not 9
    let (_, out, _) = run(&["tj", "complete_bipartite:3,3", "--metrics"], "");
    assert!(out.contains("order: 15\n"), "{out}");
    let (_, out, _) = run(&["tj", "complete_bipartite:4,4", "--metrics"], "");
    assert!(out.contains("order: 16\n") && out.contains("max_degree: 6\n"));
    assert!(out.contains("min_degree: 6\n"));

    let (_, out, _) = run(&["tj", "paper_Gn:3", "--metrics", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["component_count"], 2);
    assert_eq!(v["diameter"], serde_json::Value::Null);
}

#[test]
fn iso_exit_codes() {
    let (code, out, _) = run(&["iso", "grid:2,2", "cycle:4"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("isomorphic"));
    let (code, out, _) = run(&["iso", "path:4", "star:3"], "");
    assert_eq!(code, 1);
    assert_eq!(out, "not isomorphic\n");
}

#[test]
fn unique_search() {
    let (code, out, _) = run(&["unique", "complete_bipartite:2,4", "--n", "6"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("2 graph(s)"), "{out}");
    let (_, out, _) = run(&["unique", "complete_bipartite:3,3", "--n", "6", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn usage_and_cap_errors() {
    assert_eq!(run(&["gen"], "").0, 2);
    assert_eq!(run(&["gen", "path:3", "--bogus"], "").0, 2);
    assert_eq!(run(&["gen", "banana:3"], "").0, 2);
    assert_eq!(run(&["pd", "/nonexistent/graph.txt"], "").0, 2);
    assert_eq!(run(&["pd", "-"], "3 1\n0 0\n").0, 2);
    assert_eq!(run(&["tar", "cycle:4", "--cap", "0"], "").0, 2);
    assert_eq!(run(&["export", "path:3"], "").0, 2);
    let (code, _, err) = run(&["tar", "cycle:12", "--cap", "100"], "");
    assert_eq!(code, 3);
    assert!(err.contains("cap"));
    assert_eq!(run(&["verify", "--only", "NOPE"], "").0, 2);
    assert_eq!(run(&["--help"], "").0, 0);
}

#[test]
fn verify_selection() {
    let (code, out, _) = run(&["verify", "--only", "K33_ORDER,GN_THEOREM_N3"], "");
    assert_eq!(code, 0, "{out}");
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(rows[0].starts_with("GN_THEOREM_N3") && rows[1].starts_with("K33_ORDER"));
    let (code, out, _) = run(&["verify", "--only", "K33_ORDER", "--format", "json"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["observed"], "|TAR(K3,3)| = 57");
    let (_, out, _) = run(&["verify", "--list"], "");
    assert_eq!(out.lines().count(), 14);
}

#[test]
fn export_and_reimport() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = run(&["export", "star_pendant:3", "--format", "json", "--output", p], "");
    assert_eq!(code, 0);
    let (_, out, _) = run(&["pd", p], "");
    assert_eq!(out, "power_domination: 1\nupper: 2\n");

    let (_, out, _) = run(&["export", "cycle:4", "--recon", "tj", "--format", "json"], "");
    let r = pdrecon::io::read_recon_json(&out).unwrap();
    assert_eq!(r.verts().len(), 4);

    let (_, out, _) = run(&["export", "path:3", "--recon", "tar", "--format", "dot"], "");
    assert!(out.contains("[label=\"{0,1,2}\"]"));
}

#[test]
fn binary_smoke() {
    let out = Command::new(env!("CARGO_BIN_EXE_pdrecon"))
        .args(["pd", "wheel:7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "power_domination: 1\nupper: 1\n");

    let out = Command::new(env!("CARGO_BIN_EXE_pdrecon"))
        .args(["tar", "cycle:10"])
        .env("PDRECON_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
