use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_partdual"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8(b.to_vec()).unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../partdual/tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("partdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn taft_pipeline_emits_golden_left_dual() {
    let pams = run(&["example", "taft4", "--lambda", "1", "--field", "Q"], None);
    assert!(pams.status.success());
    assert_eq!(text(&pams.stdout), golden("taft4_lambda1_pams.json"));
    let left = run(&["partial-dual", "left"], Some(&text(&pams.stdout)));
    assert!(left.status.success(), "{}", text(&left.stderr));
    assert_eq!(text(&left.stdout), golden("taft4_lambda1_left.json"));

    let verify = run(&["verify-quasi-hopf", "-"], Some(&text(&left.stdout)));
    assert_eq!(verify.status.code(), Some(0));
    let report = text(&verify.stdout);
    for name in ["pentagon", "quasi-coassociativity", "φ counit normalized", "counit axiom"] {
        assert!(report.lines().any(|l| l == format!("pass  {name}")), "{name}\n{report}");
    }
    assert!(!report.contains("FAIL"));

    let right = run(&["partial-dual", "right"], Some(&text(&pams.stdout)));
    assert!(right.status.success());
    assert_eq!(text(&right.stdout), golden("taft4_lambda1_right.json"));
    let verify = run(&["verify-quasi-hopf"], Some(&text(&right.stdout)));
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn corrupted_pams_fails_with_named_identity() {
    let good = golden("taft4_lambda1_pams.json");
    let ok = run(&["pams", "verify"], Some(&good));
    assert_eq!(ok.status.code(), Some(0));
    // ζ(g) = 1 + x becomes ζ(g) = 1 + 2x without touching γ
    let needle = "    \"zeta\": {\n      \"shape\": [2,4],\n      \"entries\": [\n        [[0,0],\"1\"],\n        [[0,1],\"1\"],\n        [[1,1],\"1\"]";
    assert!(good.contains(needle));
    let bad = good.replace(needle, &needle.replace("[[1,1],\"1\"]", "[[1,1],\"2\"]"));
    let out = run(&["pams", "verify"], Some(&bad));
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stdout).contains("FAIL"));
    assert!(text(&out.stderr).contains("first failure: "));
}

#[test]
fn usage_and_input_errors_exit_nonzero() {
    assert_ne!(run(&["partial-dual", "sideways"], None).status.code(), Some(0));
    assert_ne!(run(&["example", "taft4"], None).status.code(), Some(0));
    let out = run(&["verify-hopf"], Some("{ not json"));
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("line 1"));
    let out = run(&["example", "taft4", "--lambda", "1", "--field", "Fp:2"], None);
    assert_eq!(out.status.code(), Some(2));
}

const TAFT_IOTA: &str = r#"{
  "format": "partdual/1",
  "field": "Q",
  "kind": "linear-map",
  "dims": {"cols":2,"rows":4},
  "tensors": {
    "map": {"shape": [4,2], "entries": [[[0,0],"1"], [[2,1],"1"]]}
  }
}"#;

#[test]
fn search_is_deterministic_in_the_seed() {
    let taft = scratch("taft.json", &text(&run(&["example", "taft4-hopf"], None).stdout));
    let iota = scratch("iota.json", TAFT_IOTA);
    let (taft, iota) = (taft.to_str().unwrap(), iota.to_str().unwrap());
    let ci = run(&["coideal", taft, "--iota", iota], None);
    assert!(ci.status.success(), "{}", text(&ci.stderr));
    let find = |seed: &str| run(&["pams", "find", taft, "--coideal", iota, "--seed", seed], None);
    let a = find("7");
    let b = find("7");
    assert!(a.status.success(), "{}", text(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let verify = run(&["pams", "verify"], Some(&text(&a.stdout)));
    assert_eq!(verify.status.code(), Some(0));
    let induced = run(&["pams", "induce", "--kind", "dual-biop"], Some(&text(&a.stdout)));
    assert!(induced.status.success());
}

#[test]
fn matched_pair_and_split_projection_commands() {
    let bis = run(&["example", "bismash", "s3"], None);
    assert!(bis.status.success());
    let left = run(&["partial-dual", "left"], Some(&text(&run(&["example", "matched-pair", "s3"], None).stdout)));
    assert!(left.status.success());
    let verify = run(&["verify-hopf"], Some(&text(&bis.stdout)));
    assert_eq!(verify.status.code(), Some(0));
    let pair = scratch("pair.json", &text(&run(&["example", "matched-pair", "s3", "--pair"], None).stdout));
    let again = run(&["example", "bismash", pair.to_str().unwrap()], None);
    assert_eq!(again.stdout, bis.stdout);
    let dual = run(&["dual"], Some(&text(&bis.stdout)));
    assert!(dual.status.success());

    let h = scratch("c2xc3.json", &text(&run(&["example", "group", "c6"], None).stdout));
    let a = scratch("c3.json", &text(&run(&["example", "group", "c3"], None).stdout));
    // c6 → c3, k ↦ k mod 3, with section k ↦ 4k
    let mut pi = String::new();
    for k in 0..6 {
        pi += &format!("{}[[{},{}],\"1\"]", if k == 0 { "" } else { ", " }, k % 3, k);
    }
    let pi = scratch("pi.json", &map_doc(3, 6, &pi));
    let gamma = scratch("gamma.json", &map_doc(6, 3, r#"[[0,0],"1"], [[2,2],"1"], [[4,1],"1"]"#));
    let out = run(
        &[
            "example",
            "split-projection",
            h.to_str().unwrap(),
            "--target",
            a.to_str().unwrap(),
            "--pi",
            pi.to_str().unwrap(),
            "--gamma",
            gamma.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success(), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("\"B\":2"));
}

fn map_doc(rows: usize, cols: usize, entries: &str) -> String {
    format!(
        "{{\"format\": \"partdual/1\", \"field\": \"Q\", \"kind\": \"linear-map\", \"dims\": {{\"cols\":{cols},\"rows\":{rows}}}, \"tensors\": {{\"map\": {{\"shape\": [{rows},{cols}], \"entries\": [{entries}]}}}}}}"
    )
}
