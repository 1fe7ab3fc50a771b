use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehrgraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn arg(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn ehrhart_of_dumbbell() {
    let d = data("dumbbell.g13");
    let o = run(&["ehrhart", arg(&d), "--polytope", "Q"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "period 1; t³/6 + t² + 11t/6 + 1");
    let o = run(&["ehrhart", arg(&d), "--polytope", "P", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["period"], 2);
    assert_eq!(v["constituents"][1][0], "1/4");
}

#[test]
fn count_and_points() {
    let d = data("dumbbell.g13");
    assert_eq!(stdout(&run(&["count", arg(&d), "--polytope", "Q", "--t", "2"])).trim(), "10");
    let csv = std::env::temp_dir().join(format!("ehrgraph-points-{}.csv", std::process::id()));
    let o = run(&["points", arg(&d), "--polytope", "Q", "--t", "2", "--csv", arg(&csv)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    std::fs::remove_file(&csv).ok();
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().any(|l| l == "1,1,2,2,2"));
}

#[test]
fn stats_and_cosets() {
    let d = data("dumbbell.g13");
    assert_eq!(stdout(&run(&["stats", arg(&d)])), "h 0\nk 2\nn 2\nm 3\nN_G 4\n");
    let vols: Vec<String> =
        stdout(&run(&["cosets", arg(&d), "--t", "2"])).lines().map(|l| l.split('\t').nth(1).unwrap().to_string()).collect();
    assert_eq!(vols, ["4", "2", "2", "2"]);
}

#[test]
fn nni_and_canonicalize() {
    let o = run(&["nni", arg(&data("dumbbell.g13")), "--trail", "0 2 1 0"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let g = ehrgraph::MultiGraph::parse_g13(&stdout(&o)).unwrap();
    assert!(ehrgraph::multigraph::are_isomorphic(&g, &ehrgraph::multigraph::theta()).unwrap());
    let o = run(&["canonicalize", arg(&data("k4.g13"))]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("# nni ")));
}

#[test]
fn tree_commands() {
    let s = data("star.g13");
    assert_eq!(stdout(&run(&["tree-vertices", arg(&s)])).lines().count(), 4);
    assert_eq!(stdout(&run(&["skeleton", arg(&s)])).lines().count(), 6);
    assert_eq!(run(&["skeleton", arg(&data("k4.g13"))]).status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--suite", "loop-lemma", "--grid", "small"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let a = run(&["verify", "--suite", "delta", "--suite", "binomial", "--jobs", "1", "--json"]);
    let b = run(&["verify", "--suite", "delta", "--suite", "binomial", "--jobs", "4", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn error_exit_codes() {
    let bad = std::env::temp_dir().join(format!("ehrgraph-bad-{}.g13", std::process::id()));
    std::fs::write(&bad, "0 1\n1 2\n").unwrap();
    assert_eq!(run(&["stats", arg(&bad)]).status.code(), Some(3));
    std::fs::remove_file(&bad).ok();
    assert_eq!(run(&["count", arg(&data("k4.g13")), "--polytope", "R", "--t", "1"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ehrgraph"))
        .args(["count", arg(&data("k4.g13")), "--polytope", "Q", "--t", "6"])
        .env("EHRGRAPH_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn arrangements_svg() {
    let svg = std::env::temp_dir().join(format!("ehrgraph-{}.svg", std::process::id()));
    let o = run(&["arrangements", arg(&data("tetrahedron.tri")), "--t", "1", "--svg", arg(&svg), "--point", "2,2,2,2,2,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "8");
    let text = std::fs::read_to_string(&svg).unwrap();
    std::fs::remove_file(&svg).ok();
    assert!(text.contains("<path"));
    // Dual cube: N = 2^5 Eulerian subgraphs, one point of 1P.
    assert_eq!(stdout(&run(&["arrangements", arg(&data("octahedron.tri")), "--t", "1"])).trim(), "32");
    let o = run(&["arrangements", arg(&data("octahedron.tri")), "--t", "1", "--svg", arg(&svg)]);
    assert_eq!(o.status.code(), Some(3));
}
