use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BRP: &str = env!("CARGO_BIN_EXE_brp");

const RUNNING_INSTANCE: &str = "3 5 3\n2 1 3\n2 2 4\n1 5\n";
const RUNNING_SOLUTION: &str = "R 1 2\nV 1\nR 2 3\nR 2 1\nV 2\nV 3\nV 1\nV 3\n";

fn brp(args: &[&str]) -> Output {
    Command::new(BRP).args(args).env_remove("UBRP_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn validate_running_example() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "i.txt", RUNNING_INSTANCE);
    let sol = write(dir.path(), "s.txt", RUNNING_SOLUTION);
    let out = brp(&["validate", &inst, &sol]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("R = 3"));

    let bad = write(dir.path(), "bad.txt", "V 2\n");
    let out = brp(&["validate", &inst, &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("invalid"));
}

#[test]
fn improve_reaches_two() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "i.txt", RUNNING_INSTANCE);
    let sol = write(dir.path(), "s.txt", RUNNING_SOLUTION);
    let improved = dir.path().join("out.txt");
    let out = brp(&["improve", &inst, &sol, "-o", improved.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(&improved).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with('R')).count(), 2);
    let check = brp(&["validate", &inst, improved.to_str().unwrap()]);
    assert!(check.status.success());

    let plain = brp(&["improve", &inst, &sol, "--no-upper-bound", "--no-useless-eval", "--no-aspiration"]);
    assert_eq!(stdout(&plain), text);
}

#[test]
fn solve_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "i.txt", RUNNING_INSTANCE);
    let out = brp(&["solve", &inst]);
    assert!(out.status.success());
    let sol = write(dir.path(), "g.txt", &stdout(&out));
    assert!(brp(&["validate", &inst, &sol]).status.success());

    let random = brp(&["solve", &inst, "--heuristic", "random2", "--seed", "5"]);
    assert!(random.status.success());

    let exact = brp(&["oracle", &inst]);
    assert_eq!(stdout(&exact).trim(), "optimum R = 2");
    let per = brp(&["oracle", &inst, &write(dir.path(), "s.txt", RUNNING_SOLUTION), "--container", "3"]);
    assert!(per.status.success());
    assert!(stdout(&per).contains("explicit graph = 1, dp = 1"));
}

#[test]
fn generate_is_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = brp(&[
            "generate", "--height", "3", "--width", "4", "--policy", "H+2", "--seed", "8", "--count", "3", "-o",
            d.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 3);
    assert_eq!(names[0], "h3_w4_hp2_s8_001.txt");
    for n in names {
        assert_eq!(fs::read(a.path().join(&n)).unwrap(), fs::read(b.path().join(&n)).unwrap());
    }
}

#[test]
fn bench_csv() {
    let dir = tempfile::tempdir().unwrap();
    let extremes = dir.path().join("bbwa.csv");
    let args = [
        "bench", "--class", "3x3", "--count", "5", "--seed", "4", "--no-timing", "--extremes",
        extremes.to_str().unwrap(),
    ];
    let first = brp(&args);
    assert!(first.status.success());
    let csv = stdout(&first);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "H,W,policy,seed,instance,heuristic,R_before,R_after,gap_pct,improved,cpu_s,timeout");
    assert_eq!(lines.len(), 7);
    assert!(lines[6].starts_with("3,3,unlimited,4,AVG,greedy,"));
    assert_eq!(fs::read_to_string(&extremes).unwrap().lines().count(), 6);

    let mut jobs = Command::new(BRP);
    jobs.args(args).env("UBRP_JOBS", "3");
    assert_eq!(stdout(&jobs.output().unwrap()), csv);
}

#[test]
fn usage_errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "i.txt", "3 5 3\n2 1 3\n2 2 4\n1 6\n");
    let out = brp(&["solve", &broken]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    assert!(!brp(&["bench", "--class", "3by3"]).status.success());
    assert!(!brp(&["solve", "/nonexistent/file"]).status.success());
}
