use icosa::cli::{run, selftest};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("icosa").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(s: &str) -> Vec<serde_json::Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn traces_match_golden() {
    let (code, out, _) = call(&["ico", "traces", "--max-norm", "500"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/ico_traces_500.ndjson"));
}

#[test]
fn traces_are_byte_identical_across_runs() {
    let a = call(&["ico", "traces", "--max-norm", "300"]);
    let b = call(&["ico", "traces", "--max-norm", "300"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--help"]).0, 0);
    let (code, _, err) = call(&["ico", "traces", "--bogus"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(call(&["no-such-command"]).0, 2);
    // 2 is excluded
    let (code, out, _) = call(&["curve", "reduce", "--ideal", "2:0"]);
    assert_eq!(code, 1);
    assert!(records(&out)[0].get("error").is_some());
}

#[test]
fn csv_output_has_header_and_rows() {
    let (code, out, _) = call(&["--csv", "dirichlet", "frobenius", "--max-p", "30"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    assert!(rdr.headers().unwrap().iter().any(|h| h == "p"));
    assert_eq!(rdr.records().count(), 10);
}

#[test]
fn point_count_of_e0_at_3() {
    let (code, out, _) = call(&["curve", "count", "--ideal", "3:0"]);
    assert_eq!(code, 0);
    assert_eq!(records(&out)[0]["count"], 8);
}

#[test]
fn klein_solve_certifies_e0() {
    let (code, out, _) = call(&["klein", "solve", "--embedding", "both"]);
    assert_eq!(code, 0);
    let r = records(&out);
    for e in [1, -1] {
        assert!(r.iter().any(|x| x["embedding"] == e && x["exact_j"] == "86048 - 38496*sqrt5"), "{out}");
    }
}

#[test]
fn klein_transform_of_the_source_quintic() {
    let (code, out, _) = call(&["klein", "transform", "--poly", "1;0;10;-10;35;-18", "--map", "1,1;10,-30;2;35,5"]);
    assert_eq!(code, 0, "{out}");
    let r = &records(&out)[0];
    assert_eq!(r["principal"], true);
    assert_eq!(r["C"], "-6681875 - 1390625*sqrt5");
}

#[test]
fn config_file_is_honoured() {
    let dir = std::env::temp_dir().join(format!("icosa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("icosa.conf");
    std::fs::write(&path, "format = csv\n").unwrap();
    let (code, out, _) = call(&["--config", path.to_str().unwrap(), "dirichlet", "frobenius", "--max-p", "10"]);
    assert_eq!(code, 0);
    assert!(!out.starts_with('{'));
    std::fs::write(&path, "colour = red\n").unwrap();
    assert_eq!(call(&["--config", path.to_str().unwrap(), "selftest"]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selftest_passes() {
    assert!(selftest().iter().all(|(_, ok)| *ok));
    assert_eq!(call(&["selftest"]).0, 0);
}
