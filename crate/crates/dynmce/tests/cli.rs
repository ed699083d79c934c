use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn dynmce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynmce"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SQUARE: &str = "0 0\n1 0\n0 1\n1 1\n2 2\n";

#[test]
fn bootstrap_path() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "# path\n0 1\n1 2\n");
    let o = dynmce(&["bootstrap", "--edges", &p3]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0 1\n1 2\n");
    let o = dynmce(&["bootstrap", "--edges", &p3, "--k", "1"]);
    assert_eq!(stdout(&o), "0\n1\n2\n");
}

#[test]
fn insert_updates_enumeration_and_graph() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "0 1\n1 2\n");
    let en = write(&dir, "p3.enum", "0 1\n1 2\n");
    let out = path(&dir, "g.txt");
    let o = dynmce(&[
        "insert",
        "--graph",
        &p3,
        "--enum",
        &en,
        "--edge",
        "2",
        "0",
        "--graph-out",
        &out,
        "--no-timing",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "0 1 2\n");
    let stats = String::from_utf8(o.stderr).unwrap();
    assert!(
        stats.ends_with("1,0,2,proposed,0,1,1,1,2,1,0,,,\n"),
        "{stats}"
    );
    assert_eq!(fs::read_to_string(out).unwrap(), "0 1\n0 2\n1 2\n");
}

#[test]
fn insert_rejects_inconsistent_enumeration() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "0 1\n1 2\n");
    let en = write(&dir, "bad.enum", "0 1 2\n");
    let o = dynmce(&["insert", "--graph", &p3, "--enum", &en, "--edge", "0", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stream_then_verify() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.txt", SQUARE);
    let en = path(&dir, "out.enum");
    let stats = path(&dir, "stats.csv");
    for parallel in ["off", "conservative", "aggressive"] {
        let o = dynmce(&[
            "stream",
            "--points",
            &pts,
            "--enum-out",
            &en,
            "--stats-out",
            &stats,
            "--parallel",
            parallel,
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(fs::read_to_string(&en).unwrap(), "0 1 2 3 4\n");
        let rows = fs::read_to_string(&stats).unwrap();
        assert_eq!(rows.lines().count(), 1 + 10);
        let o = dynmce(&["verify", "--points", &pts, "--enum", &en]);
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn stream_k_and_verify_k() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.txt", SQUARE);
    let en = path(&dir, "k3.enum");
    let o = dynmce(&["stream", "--points", &pts, "--k", "3", "--enum-out", &en]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&en).unwrap().lines().count(), 10);
    let o = dynmce(&["verify", "--points", &pts, "--enum", &en, "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = dynmce(&["verify", "--points", &pts, "--enum", &en]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_reports_mismatch() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "0 1\n1 2\n");
    let en = write(&dir, "wrong.enum", "0 1 2\n");
    let o = dynmce(&["verify", "--edges", &p3, "--enum", &en]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("- 0 1") && err.contains("+ 0 1 2"), "{err}");
}

#[test]
fn bench_proposed_never_generates_more() {
    let o = dynmce(&["bench", "--n", "30", "--dim", "2", "--seed", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let (p, e) = (col("proposed_candidates"), col("existing_candidates"));
    let mut rows = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        let p: usize = rec[p].parse().unwrap();
        let e: usize = rec[e].parse().unwrap();
        assert!(p <= e, "{rec:?}");
        rows += 1;
    }
    assert_eq!(rows, 30 * 29 / 2);
}

#[test]
fn outputs_are_byte_deterministic_without_timing() {
    let dir = TempDir::new().unwrap();
    let run = |tag: &str| {
        let stats = path(&dir, &format!("{tag}.csv"));
        let en = path(&dir, &format!("{tag}.enum"));
        let o = dynmce(&[
            "bench",
            "--n",
            "12",
            "--seed",
            "3",
            "--no-timing",
            "--stats-out",
            &stats,
            "--enum-out",
            &en,
        ]);
        assert!(o.status.success());
        (fs::read(stats).unwrap(), fs::read(en).unwrap())
    };
    assert_eq!(run("a"), run("b"));
}

#[test]
fn exit_codes_for_bad_input_and_io() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "0 0\n");
    assert_eq!(
        dynmce(&["bootstrap", "--edges", &bad]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("missing.txt");
    assert!(!Path::new(&missing).exists());
    let o = dynmce(&["bootstrap", "--edges", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(dynmce(&["bootstrap"]).status.code(), Some(2));
    assert_eq!(dynmce(&["bench", "--k", "0"]).status.code(), Some(2));
    let pts = write(&dir, "ragged.txt", "0 0\n1\n");
    assert_eq!(dynmce(&["stream", "--points", &pts]).status.code(), Some(2));
}
