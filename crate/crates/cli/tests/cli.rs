use std::process::{Command, Output};

fn braided(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braided"))
        .args(args)
        .output()
        .expect("run braided")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn example_dumps_are_byte_stable() {
    let a = braided(&["example", "anyonic-line:2"]);
    assert_eq!(a.status.code(), Some(0));
    let b = braided(&["example", "anyonic-line:2"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["object"][0]["basis"].as_array().unwrap().len(), 2);
    assert_eq!(v["kind"], "hopf");
    for k in ["mu", "eta", "Delta", "eps", "S", "Sinv", "variant"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    let q = braided(&["example", "kZn:2"]);
    let v: serde_json::Value = serde_json::from_slice(&q.stdout).unwrap();
    assert_eq!(v["object"][0]["basis"].as_array().unwrap().len(), 2);
    for k in ["Delta_bar", "R", "Rinv", "gamma", "theta"] {
        assert!(v.get(k).is_some(), "{k}");
    }
}

#[test]
fn dump_load_dump() {
    let dir = std::env::temp_dir().join(format!("braided-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.json");
    let p = path.to_str().unwrap();
    let o = braided(&["example", "bosonization:kZ2-fermion", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let e = braided(&["eval", "--file", p, "Delta ; (S | id) ; mu"]);
    assert_eq!(e.status.code(), Some(0), "{}", stderr(&e));
    // η∘ε: ε is 1 on 1⊗1 and g⊗1 only
    assert_eq!(stdout(&e), "kZ⊗B -> kZ⊗B\n0 0 1\n0 2 1\n");
    let r = braided(&[
        "eval",
        "--context",
        "bosonization:kZ2-fermion",
        "Delta ; (S | id) ; mu",
    ]);
    assert_eq!(r.stdout, e.stdout);
    let again = braided(&["example", "bosonization:kZ2-fermion"]);
    assert_eq!(std::fs::read(&path).unwrap(), again.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_names_are_usage_errors() {
    assert_eq!(braided(&["example", "nope"]).status.code(), Some(2));
    assert_eq!(
        braided(&["example", "anyonic-line:x"]).status.code(),
        Some(2)
    );
    assert_eq!(braided(&["check", "nope"]).status.code(), Some(2));
    assert_eq!(
        braided(&["check", "line", "--example", "anyonic-line:2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(braided(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(braided(&[]).status.code(), Some(2));
    assert_eq!(
        braided(&["normal-order", "--q", "root:1", "y*x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn checks() {
    let o = braided(&["check", "hopf", "--example", "anyonic-line:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("passed\n"));
    let o = braided(&["check", "hopf", "--example", "broken-antipode"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failed antipode.convolution-inverse-left"));
    let o = braided(&["check", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = braided(&["check", "quiver", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn eval() {
    let o = braided(&[
        "eval",
        "--context",
        "anyonic-line:2",
        "Delta ; (S | id) ; mu",
    ]);
    assert_eq!(stdout(&o), "A -> A\n0 0 1\n");
    let o = braided(&["eval", "id[A]"]);
    assert_eq!(stdout(&o), "A -> A\n0 0 1\n1 1 1\n");
    let o = braided(&["eval", "Psi(A,A) ; mu"]);
    assert_eq!(o.status.code(), Some(0));
    let o = braided(&["eval", "mu ; mu"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("type error in `mu`"));
    let o = braided(&["eval", "Delta ; (S | "]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("syntax error at 13"));
}

#[test]
fn normal_order() {
    let o = braided(&["normal-order", "y*x"]);
    assert_eq!(stdout(&o), "q*x*y + q*t - q\n");
    let o = braided(&["normal-order", "y*t^-1*t"]);
    assert_eq!(stdout(&o), "y\n");
    let o = braided(&["normal-order", "--q", "root:3", "y*x"]);
    assert_eq!(o.status.code(), Some(0));
    let o = braided(&["normal-order", "y*z"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("parse error at byte 2"));
}
