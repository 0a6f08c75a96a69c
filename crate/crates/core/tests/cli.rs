use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_cactus-contract");

fn k4(k: usize) -> String {
    format!("c K4\np contract 4 6 {k}\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn solve_k4() {
    let dir = TempDir::new().unwrap();
    let yes = file(&dir, "yes.txt", &k4(1));
    let o = run(&["solve", arg(&yes), "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["contracted_edges"].as_array().unwrap().len(), 1);
    assert_eq!(v["quotient_edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["mode"], "det");

    let no = file(&dir, "no.txt", &k4(0));
    assert_eq!(code(&run(&["solve", arg(&no)])), 1);
    let o = run(&["solve", arg(&yes), "--mode", "rand", "--seed", "7", "--json"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn malformed_input_is_an_error() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "p contract 3 2 1\ne 1 2\n");
    let o = run(&["solve", arg(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    let disconnected = file(&dir, "dis.txt", "p contract 4 2 1\ne 1 2\ne 3 4\n");
    assert_eq!(code(&run(&["solve", arg(&disconnected)])), 2);
    assert_eq!(code(&run(&["solve", "/nonexistent/instance"])), 2);
}

#[test]
fn verify_outcomes() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "k4.txt", &k4(1));
    let good = file(&dir, "good.sol", "e 1 2\n");
    assert_eq!(code(&run(&["verify", arg(&inst), arg(&good)])), 0);
    let empty = file(&dir, "empty.sol", "");
    assert_eq!(code(&run(&["verify", arg(&inst), arg(&empty)])), 1);
    let over = file(&dir, "over.sol", "e 1 2\ne 3 4\n");
    assert_eq!(code(&run(&["verify", arg(&inst), arg(&over)])), 1);
    let foreign = file(&dir, "foreign.sol", "e 1 5\n");
    assert_eq!(code(&run(&["verify", arg(&inst), arg(&foreign)])), 2);
}

#[test]
fn generate_round_trip() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for out in [&a, &b] {
        let o = run(&["generate", "--n", "20", "--k", "2", "--seed", "3", "--out", arg(out)]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let sol = dir.path().join("a.txt.sol");
    assert_eq!(code(&run(&["verify", arg(&a), arg(&sol)])), 0);
    assert_eq!(code(&run(&["solve", arg(&a)])), 0);

    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let first = strip(run(&["solve", arg(&a), "--json"]));
    let second = strip(run(&["solve", arg(&a), "--json"]));
    assert_eq!(first, second);
    assert_eq!(code(&run(&["generate", "--n", "2", "--k", "2", "--out", arg(&a)])), 2);
}

#[test]
fn oracle_command() {
    let dir = TempDir::new().unwrap();
    let o = run(&["oracle", arg(&file(&dir, "k4.txt", &k4(3)))]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "1");

    let c5 = "p contract 5 5 2\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
    let o = run(&["oracle", arg(&file(&dir, "c5.txt", c5))]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "0");

    let mut k5 = String::from("p contract 5 10 1\n");
    for u in 1..=5 {
        for v in u + 1..=5 {
            k5.push_str(&format!("e {u} {v}\n"));
        }
    }
    let o = run(&["oracle", arg(&file(&dir, "k5.txt", &k5))]);
    assert_eq!(code(&o), 1);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "UNSAT within 1");
}
