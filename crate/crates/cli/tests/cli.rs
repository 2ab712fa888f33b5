use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wznw-fusion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn golden_product_all_methods() {
    let o = run(&[
        "fuse", "--n", "3", "--k", "4", "--lambda", "3,1", "--mu", "3,2", "--method", "all",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("{0: 1, 2,1: 2, 3: 1, 3,3: 1, 4,2: 1}"), "{s}");
    assert!(s.contains("AGREE(4/4)"), "{s}");
}

#[test]
fn vacuum_is_identity() {
    let o = run(&[
        "fuse", "--n", "3", "--k", "4", "--lambda", "0", "--mu", "3,2",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "{3,2: 1}");
}

#[test]
fn five_term_example() {
    let o = run(&[
        "fuse", "--n", "5", "--k", "4", "--lambda", "3", "--mu", "2,2,1",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "{3,2,2,1: 1, 4,2,1,1: 1, 4,2,2: 1}");
}

#[test]
fn json_output_parses() {
    let o = run(&[
        "fuse", "--n", "3", "--k", "4", "--lambda", "3,1", "--mu", "3,2", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    let total: u64 = terms.iter().map(|t| t["coeff"].as_u64().unwrap()).sum();
    assert_eq!(total, 6);
}

#[test]
fn verify_exits_zero() {
    for (n, k) in [("3", "2"), ("2", "0")] {
        let o = run(&["verify", "--n", n, "--k", k]);
        assert!(o.status.success(), "n={n} k={k}: {}", stdout(&o));
        assert_eq!(stdout(&o).lines().last(), Some("PASS"));
    }
}

#[test]
fn smatrix_level_one() {
    let o = run(&["smatrix", "--n", "3", "--k", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("+0.577350"));
}

#[test]
fn paths_agree_with_hook_content() {
    let o = run(&[
        "paths", "--n", "3", "--k", "2", "--mu", "2,1", "--nu", "1", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], true);
    for d in v["degrees"].as_array().unwrap() {
        assert_eq!(d["paths"], d["hook_content"]);
    }
}

#[test]
fn table_prints_matrices() {
    let o = run(&["table", "--n", "2", "--k", "1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("N_(1):") && s.contains("N_(0):"), "{s}");
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &[
            "fuse", "--n", "3", "--k", "4", "--lambda", "3,x", "--mu", "3,2",
        ][..],
        &["fuse", "--n", "3", "--k", "1", "--lambda", "3", "--mu", "0"],
        &["fuse", "--n", "3"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert!(run(&["--help"]).status.success());
}
