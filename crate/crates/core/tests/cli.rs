mod common;

use common::corpus_dir;
use twistlink::cli::run;

fn path(name: &str) -> String {
    corpus_dir().join(format!("{name}.tld")).to_string_lossy().into_owned()
}

fn tool(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["twistlink"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = tool(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn onefoil_invariants_json() {
    let v = json(&["invariants", &path("onefoil"), "--json"]);
    assert_eq!(v["schema"], "twistlink/1");
    assert_eq!(v["twisted_jones"], serde_json::json!([[-6, 0, 1], [-2, 0, 1], [-2, 2, -1]]));
    assert_eq!(v["jones"], serde_json::json!([[0, 0, 1]]));
}

#[test]
fn dangling_edge_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.tld");
    std::fs::write(&f, "X 1 -a +b +c -d\n").unwrap();
    let (code, _, err) = tool(&["validate", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("edge multiplicity"), "{err}");
}

#[test]
fn torus_groups() {
    for level in ["upper", "lower"] {
        let v = json(&["group", &path("torus1212"), "--level", level, "--homs", "3,4", "--json"]);
        assert_eq!(v["abelianization"], serde_json::json!([0]));
        assert_eq!(v["homs"], serde_json::json!([[3, 6], [4, 24]]), "{level}");
    }
    let v = json(&["group", &path("torus1212"), "--homs", "3,4", "--json"]);
    assert_eq!(v["level"], "twisted");
    assert_eq!(v["homs"], serde_json::json!([[3, 36], [4, 576]]));
}

#[test]
fn usage_errors() {
    assert_eq!(tool(&[]).0, 2);
    assert_eq!(tool(&["frobnicate"]).0, 2);
    assert_eq!(tool(&["group", &path("trefoil"), "--level", "middle"]).0, 2);
    assert_eq!(tool(&["walk", &path("trefoil"), "--seed", "x", "--steps", "3"]).0, 2);
    assert_eq!(tool(&["validate", "/nonexistent/file.tld"]).0, 2);
    assert_eq!(tool(&["moves-apply", &path("trefoil"), "--site", "Q9 expand a"]).0, 2);
    assert_eq!(tool(&["--help"]).0, 0);
}

#[test]
fn stale_site_is_a_domain_error() {
    let (code, _, err) = tool(&["moves-apply", &path("unknot"), "--site", "R2 reduce a b"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["walk", &path("onefoil"), "--seed", "5", "--steps", "6"],
        vec!["invariants", &path("twofoil"), "--json"],
        vec!["moves-list", &path("trefoil")],
        vec!["realize", &path("torus1212")],
    ]
    .iter()
    .map(|a| a.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = tool(&a);
        assert_eq!(first.0, 0, "{}", first.2);
        assert_eq!(first, tool(&a));
    }
}

#[test]
fn walk_output_replays() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = tool(&["walk", &path("trefoil"), "--seed", "9", "--steps", "5"]);
    assert_eq!(code, 0);
    let seq: String = out.lines().filter_map(|l| l.strip_prefix("# ")).map(|l| format!("{l}\n")).collect();
    assert_eq!(seq.lines().count(), 5);
    let seq_file = dir.path().join("walk.seq");
    std::fs::write(&seq_file, &seq).unwrap();
    let dest = dir.path().join("end.tld");
    let (code, _, err) =
        tool(&["moves-apply", &path("trefoil"), "--sequence", seq_file.to_str().unwrap(), "--out", dest.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let replayed = twistlink::diagram::parse_tld(&std::fs::read_to_string(dest).unwrap()).unwrap();
    assert_eq!(replayed, twistlink::diagram::parse_tld(&out).unwrap());
}

#[test]
fn equiv_reports_the_path() {
    let (code, out, _) = tool(&["equiv", &path("unknot"), &path("unknot-barred-3"), "--depth", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("found 3 moves\nT2 expand"), "{out}");
    let (code, out, _) = tool(&["equiv", &path("unknot"), &path("trefoil"), "--depth", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("no sequence"), "{out}");
}
