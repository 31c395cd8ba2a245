use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncsmooth")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_names_every_preset() {
    let o = run(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in ["cliffordC", "polynomial(n)", "quantum_plane(q)", "li_wang(", "two_gen_gk5", "wang_wu_347"] {
        assert!(text.contains(name), "{name} missing from\n{text}");
    }
}

#[test]
fn show_prints_a_loadable_spec() {
    let o = run(&["show", "quantum_plane(2)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("[algebra]\nname = quantum_plane(2)\n"), "{text}");
    assert!(text.contains("# oriented rules (deglex)\n# y*x -> 2*x*y\n"), "{text}");
    ncsmooth::front::parse_spec(&text).unwrap();
}

#[test]
fn nf_reduces_expressions() {
    let o = run(&["nf", "cliffordC", "--expr", "x3*x2"]);
    assert_eq!(stdout(&o), "-x2*x3\n");
    let o = run(&["nf", "polynomial(2)", "--expr", "y*x - x*y + 2"]);
    assert_eq!(stdout(&o), "2\n");
    let o = run(&["nf", "cliffordC", "--expr", "x9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown identifier `x9`"));
}

#[test]
fn hilbert_marks_upper_bounds() {
    let o = run(&["hilbert", "li_wang", "--max-degree", "3"]);
    assert_eq!(stdout(&o), "irreducible: [1, 4, 11, 26] (upper bound only)\n");
    let o = run(&["hilbert", "polynomial(3)", "--max-degree", "3"]);
    assert_eq!(stdout(&o), "irreducible: [1, 3, 6, 10]\n");
}

#[test]
fn gkdim_output() {
    let o = run(&["gkdim", "polynomial(3)", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("gkdim estimate: 3\n"), "{text}");
    assert!(text.starts_with("dimensions: [1, 3, 6, 10, 15"), "{text}");
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["check", "polynomial(2)", "--max-degree", "3"]).status.code(), Some(0));
    assert_eq!(run(&["check", "cliffordC_derived", "--max-degree", "2"]).status.code(), Some(0));
    assert_eq!(run(&["check", "cliffordC", "--max-degree", "2"]).status.code(), Some(2));
    assert_eq!(run(&["check", "two_gen_gk5", "--max-degree", "2"]).status.code(), Some(2));
    let o = run(&["check", "polynomial(2)", "--max-degree", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verdict: inconclusive\n"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["check", "cliffordC"]).status.code(), Some(1));
    assert_eq!(run(&["check", "no_such_preset", "--max-degree", "2"]).status.code(), Some(1));
    assert_eq!(run(&["check", "polynomial(2)", "--max-degree", "2", "--format", "xml"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn spec_files_and_report_paths() {
    let dir = std::env::temp_dir().join(format!("ncsmooth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("plane.spec");
    std::fs::write(&spec, "[algebra]\nname = plane\ngenerators = a, b\ngkdim = 2\n[relations]\nb*a - a*b\n[twist]\n1 1\n1 1\n").unwrap();
    let out = dir.join("report.json");
    let o = run(&[
        "check",
        spec.to_str().unwrap(),
        "--max-degree",
        "3",
        "--report",
        out.to_str().unwrap(),
        "--fixed-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).ends_with("verdict: smooth-evidence(3)\n"));
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(json["algebra"], "plane");
    assert_eq!(json["verdict"], "smooth-evidence(3)");
    assert_eq!(json["degree_bound"], 3);

    let bad = dir.join("bad.spec");
    std::fs::write(&bad, "[algebra]\nname = bad\ngenerators = a\n[relations]\na*q\n").unwrap();
    let o = run(&["check", bad.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("5:3"), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_report_shape() {
    let o = run(&["check", "cliffordC", "--max-degree", "2", "--format", "json", "--fixed-timestamp"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["engine"], "ncsmooth 0.1.0");
    assert_eq!(json["verdict"], "axiom-failure");
    let checks = json["checks"].as_array().unwrap();
    let dsq = checks.iter().find(|c| c["name"] == "d_squared").unwrap();
    assert_eq!(dsq["status"], "fail");
    assert_eq!(dsq["witness"]["element"], "x1*x2");
    assert_eq!(dsq["witness"]["value"], "-2*dx1^dx2");
    let obs = checks.iter().find(|c| c["name"] == "obstruction").unwrap();
    assert!(obs["witness"].is_null());
}
