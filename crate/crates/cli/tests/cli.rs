use std::process::{Command, Output};

fn hooklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hooklab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn count_reports_agreement_of_all_routes() {
    let out = hooklab(&["count", "432/2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("enumeration 12"));
    assert!(text.contains("hook-formula-B 12"));
    assert!(text.contains("hook-formula-D 12"));
    assert!(text.contains("agree true"));
}

#[test]
fn json_output_is_deterministic_and_tagged() {
    let a = hooklab(&["--json", "count", "432/2"]);
    let b = hooklab(&["--json", "count", "432/2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid json");
    assert_eq!(v["schema"], "hooklab/1");
    assert_eq!(v["enumeration"], "12");
    assert_eq!(v["agree"], true);
}

#[test]
fn hooks_lists_every_cell_with_its_weighted_hook() {
    let out = hooklab(&["hooks", "6532", "--kind", "b"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(2,2) hook 5 "));
    assert!(text.contains("(1,1) hook 6 "));
    assert_eq!(text.lines().count(), 1 + 16);
}

#[test]
fn verify_subcommands_exit_zero_on_success() {
    for args in [
        vec!["verify", "theorem1", "432/2"],
        vec!["verify", "lemw", "865321/431"],
        vec!["verify", "bijection", "432/2", "--kind", "B"],
        vec!["verify", "sieve", "32/2"],
        vec!["verify", "weighted", "432/2"],
        vec!["verify", "zidentity", "321/1", "--samples", "2"],
        vec!["verify", "complexity", "--min", "1", "--max", "4"],
    ] {
        let out = hooklab(&args);
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).contains("pass"), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = hooklab(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_shapes_exit_with_code_one() {
    let out = hooklab(&["count", "2/3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn trace_replays_a_repeated_insertion() {
    let tableau = serde_json::json!({
        "shape": [4, 3, 1],
        "kind": "B",
        "rows": [
            [{"v": 0, "c": "b"}, {"v": 0, "c": "r"}, {"v": 1, "c": "r"}, {"v": 1, "c": "r"}],
            [{"v": 1, "c": "b"}, {"v": 2, "c": "b"}, {"v": 2, "c": "b"}],
            [{"v": 2, "c": "b"}],
        ],
    });
    let dir = std::env::temp_dir().join("hooklab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t431.json");
    std::fs::write(&path, tableau.to_string()).unwrap();

    let out = hooklab(&["trace", "865321", "-k", "1", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("step cell=(1,1) dir=R k=1 pot=2"));
    assert!(text.contains("insertions 3"));
    assert!(text.contains("final 0 0 r1 r1 / 0 r1 1 / 1 2"));

    let json = hooklab(&[
        "--json",
        "trace",
        "865321",
        "-k",
        "1",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert!(json.status.success());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["insertions"], 3);
    assert_eq!(v["rounds"].as_array().unwrap().len(), 3);
    assert_eq!(v["rounds"][2]["member"], true);
}

#[test]
fn bench_confirms_the_doubling_family() {
    let out = hooklab(&["bench", "--min", "1", "--max", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("m=1 insertions=2 expected=2 ok=true"));
    assert!(text.contains("m=3 insertions=8 expected=8 ok=true"));
    assert!(!text.contains("elapsed"), "timings belong on stderr");
}

#[test]
fn excited_lists_diagrams_with_hook_products() {
    let out = hooklab(&["excited", "432/2", "--kind", "D"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("count 4"));
    assert!(text.contains("cells (1,2) (1,3) product 42"));
}

#[test]
fn bicolored_count_only_reports_both_kinds() {
    let out = hooklab(&["bicolored", "865321/431", "--count-only"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kind B skew 865321/431 count 4992"));
    assert!(text.contains("kind D skew 865321/431 count 9472"));
}
