use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn zmono(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zmono").chain(args.iter().copied());
    let code = zmono_cli::run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = zmono(args);
    assert_eq!(o.code, 0, "{args:?} failed: {}", o.stderr);
    o.stdout
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

/// Appends `'` to every label of a trig text.
fn primed(trig: &str) -> String {
    trig.lines()
        .map(|l| {
            l.split_whitespace()
                .map(|v| format!("{v}'"))
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

fn gen_file(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let p = dir.path().join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path_str(&p)]);
    ok(&full);
    p
}

fn bp6_sum(dir: &TempDir) -> PathBuf {
    let bp6 = gen_file(dir, "bp6.trig", &["bipyramid", "6"]);
    let bp6p = write(dir, "bp6p.trig", &primed(&fs::read_to_string(&bp6).unwrap()));
    let sum = dir.path().join("bp6_sum.trig");
    ok(&[
        "sum",
        path_str(&bp6),
        path_str(&bp6p),
        "--face1",
        "a,1,2",
        "--face2",
        "a',1',2'",
        "--map",
        "a=2',1=a',2=1'",
        "-o",
        path_str(&sum),
    ]);
    sum
}

#[test]
fn report_on_bp3() {
    let dir = TempDir::new().unwrap();
    let bp3 = gen_file(&dir, "bp3.trig", &["bipyramid", "3"]);
    let text = ok(&["report", path_str(&bp3)]);
    assert!(text.contains("z-knotted=true"));
    assert!(text.contains("zigzags: 1 pair(s), lengths [18]"));
    assert!(text.contains("types: M3:6\n"));
    assert!(text.contains("G1: forest, 0 node(s), 0 link(s)\n"));
    assert!(text.contains("G2: forest, 0 node(s), 0 link(s)\n"));
}

#[test]
fn report_json_schema() {
    let dir = TempDir::new().unwrap();
    let bp3 = gen_file(&dir, "bp3.trig", &["bipyramid", "3"]);
    let v: serde_json::Value = serde_json::from_str(&ok(&["report", "--json", path_str(&bp3)])).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["z_knotted"], true);
    assert_eq!(v["histogram"], serde_json::json!([0, 0, 6, 0, 0, 0, 0]));
    assert_eq!(v["zigzags"]["lengths"], serde_json::json!([18]));
    assert_eq!(v["monodromy"][0]["type"], "M3");
    assert_eq!(v["g1"]["verdict"], "forest");
}

#[test]
fn report_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let t = gen_file(
        &dir,
        "r.trig",
        &["random", "--base", "torus-k7", "--steps", "40", "--seed", "11"],
    );
    for flags in [&[][..], &["--json"][..]] {
        let mut args = vec!["report", path_str(&t)];
        args.extend_from_slice(flags);
        assert_eq!(ok(&args), ok(&args));
    }
}

#[test]
fn check_rejects_pinched_surface() {
    let dir = TempDir::new().unwrap();
    // Two tetrahedra sharing the vertex `a`.
    let pinched = write(
        &dir,
        "pinched.trig",
        "a b c\na c d\na d b\nb c d\na x y\na y z\na z x\nx y z\n",
    );
    let o = zmono(&["check", path_str(&pinched)]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("VertexLinkNotSingleCycle"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn check_reports_invariants() {
    let dir = TempDir::new().unwrap();
    let rp2 = gen_file(&dir, "rp2.trig", &["rp2"]);
    assert_eq!(
        ok(&["check", path_str(&rp2)]),
        "valid: V=6 E=15 F=10 chi=1 non-orientable\n"
    );
}

#[test]
fn forests_on_bp6_sum() {
    let dir = TempDir::new().unwrap();
    let sum = bp6_sum(&dir);
    let prefix = dir.path().join("bp6_sum");
    let dual = dir.path().join("dual.dot");
    let text = ok(&[
        "forests",
        path_str(&sum),
        "--dot",
        path_str(&prefix),
        "--dual-dot",
        path_str(&dual),
    ]);
    assert_eq!(
        text,
        "G1: forest, 10 node(s), 5 link(s): P2 P2 P2 P2 P2\nG2: forest, 12 node(s), 8 link(s): P2 P2 P4 P4\n"
    );
    let g1 = fs::read_to_string(dir.path().join("bp6_sum.g1.dot")).unwrap();
    assert!(g1.starts_with("graph g1 {"));
    assert_eq!(g1.matches(" -- ").count(), 5);
    let g2 = fs::read_to_string(dir.path().join("bp6_sum.g2.dot")).unwrap();
    assert_eq!(g2.matches(" -- ").count(), 8);
    let d = fs::read_to_string(dual).unwrap();
    assert_eq!(d.matches(" -- ").count(), 33);
}

#[test]
fn monodromy_table_and_single_face() {
    let dir = TempDir::new().unwrap();
    let sum = bp6_sum(&dir);
    let table = ok(&["monodromy", path_str(&sum)]);
    assert_eq!(table.lines().count(), 22);
    assert!(table.contains("2-3-a M1 local=true\n"));
    let one = ok(&["monodromy", path_str(&sum), "--face", "a,3,2"]);
    assert_eq!(one, "face 2-3-a: M1 local=true\nM_F = id\n");
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["monodromy", "--json", path_str(&sum), "--face", "b,1,2"])).unwrap();
    assert_eq!(v[0]["type"], "M2");
    let missing = zmono(&["monodromy", path_str(&sum), "--face", "a,b,c"]);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.contains("FaceNotInTriangulation"));
}

#[test]
fn zigzags_listing() {
    let dir = TempDir::new().unwrap();
    let oct = gen_file(&dir, "oct.trig", &["octahedron"]);
    let text = ok(&["zigzags", path_str(&oct)]);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.ends_with("length 6")));
    let full = ok(&["zigzags", "--full", "--shadow", path_str(&oct)]);
    assert_eq!(full.matches("  traversal: ").count(), 4);
    assert_eq!(full.matches("  shadow: ").count(), 4);
    let v: serde_json::Value = serde_json::from_str(&ok(&["zigzags", "--json", path_str(&oct)])).unwrap();
    assert_eq!(v["pair_count"], 4);
}

#[test]
fn find_sum_writes_a_z_knotted_sum() {
    let dir = TempDir::new().unwrap();
    let bp3 = gen_file(&dir, "bp3.trig", &["bipyramid", "3"]);
    let bp5 = gen_file(&dir, "bp5.trig", &["bipyramid", "5"]);
    let bp5p = write(&dir, "bp5p.trig", &primed(&fs::read_to_string(&bp5).unwrap()));
    let out = dir.path().join("sum.trig");
    let text = ok(&["find-sum", path_str(&bp3), path_str(&bp5p), "-o", path_str(&out)]);
    assert!(text.contains("z-knotted=true"), "{text}");
    assert!(ok(&["report", path_str(&out)]).contains("z-knotted=true"));
    // Without -o the whole of stdout is itself a loadable triangulation.
    let inline = ok(&["find-sum", path_str(&bp3), path_str(&bp5p)]);
    let copy = write(&dir, "copy.trig", &inline);
    let body: String = inline
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(body, fs::read_to_string(&out).unwrap());
    assert!(ok(&["check", path_str(&copy)]).starts_with("valid: V=9 E=21 F=14 chi=2"));
}

#[test]
fn find_sum_rejects_non_knotted_input() {
    let dir = TempDir::new().unwrap();
    let oct = gen_file(&dir, "oct.trig", &["octahedron"]);
    let bp3 = gen_file(&dir, "bp3.trig", &["bipyramid", "3"]);
    let o = zmono(&["find-sum", path_str(&oct), path_str(&bp3)]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("InputNotZKnotted"));
}

#[test]
fn random_generation_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let log = dir.path().join("moves.log");
    let args = [
        "gen",
        "random",
        "--base",
        "rp2#torus-k7",
        "--steps",
        "25",
        "--seed",
        "7",
    ];
    let a = ok(&args);
    let mut with_log = args.to_vec();
    with_log.extend_from_slice(&["--log", path_str(&log)]);
    assert_eq!(ok(&with_log), a);
    let text = fs::read_to_string(&log).unwrap();
    assert!(text.starts_with("base rp2#torus-k7\nseed 7\nsteps 25\n"));
    let o = zmono(&["gen", "octahedron", "--log", path_str(&log)]);
    assert_eq!(o.code, 1);
}

#[test]
fn domain_errors_exit_one() {
    let o = zmono(&["gen", "bipyramid", "2"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("InvalidParameter"));
    let o = zmono(&["check", "/nonexistent/file.trig"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("IoError"));
}

#[test]
fn usage_errors_exit_two() {
    let o = zmono(&["report", "x.trig", "--bogus"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("--bogus"));
    let o = zmono(&["monodromy", "x.trig", "--face", "1,2"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("--face"));
    assert_eq!(zmono(&["frobnicate"]).code, 2);
    assert_eq!(zmono(&[]).code, 2);
    assert_eq!(zmono(&["--help"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_zmono");
    let status = Command::new(bin).args(["gen", "tetrahedron"]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert_eq!(String::from_utf8(status.stdout).unwrap().lines().count(), 4);
    let status = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
