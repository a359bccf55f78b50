use std::process::{Command, Output};

fn dold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dold"))
        .args(args)
        .env("OEIS_BASE_URL", "http://127.0.0.1:9")
        .env("DOLD_CACHE_DIR", std::env::temp_dir().join("dold-cli-test-cache"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dold(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classical_table() {
    let out = stdout(&["classical", "--upto", "4"]);
    assert!(out.lines().any(|l| l.split_whitespace().eq(["4", "1385", "1", "240", "30"])), "{out}");
}

#[test]
fn e_at_61_json_witness() {
    let out = stdout(&["localscan", "e", "--prime", "61", "--upto", "20", "--criterion", "dold", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let local = &v["local"][0];
    assert_eq!(local["prime"], 61);
    assert_eq!(local["status"], "fail-at");
    assert_eq!(local["witness"]["n"], 9);
    assert_eq!(local["witness"]["value"], -60);
    assert!(v["annotations"].as_array().unwrap().iter().any(|a| a.as_str().unwrap().starts_with("not nilpotently")));
}

#[test]
fn b_passes_everywhere() {
    let out = stdout(&["localscan", "b", "--upto", "60", "--primes", "40", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for c in v["checks"].as_array().unwrap().iter().chain(v["local"].as_array().unwrap()) {
        assert_eq!(c["status"], "pass-up-to", "{c}");
    }
}

#[test]
fn csv_has_one_row_per_prime() {
    let out = stdout(&["localscan", "delannoy", "--primes", "100", "--format", "csv"]);
    assert_eq!(out.lines().count(), 1 + 25);
}

#[test]
fn survey_lists_in_table() {
    let out = stdout(&["localscan", "apery2", "--primes", "160"]);
    assert!(out.contains("not realizable at: 3, 7, 11, 19, 31, 71, 83, 139, 157\n"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(dold(&["fetch", "A999999"]).status.code(), Some(5));
    assert_eq!(dold(&["check", "no-such-thing"]).status.code(), Some(2));
    assert_eq!(dold(&["localscan", "e", "--prime", "9"]).status.code(), Some(3));
    assert_eq!(dold(&["fetch", "A001067", "--offset-policy", "strict", "--upto", "3"]).status.code(), Some(0));
    assert_eq!(dold(&["check", "A001067"]).status.code(), Some(4));
    assert_eq!(dold(&["check", "A000364", "--offset-policy", "strict"]).status.code(), Some(4));
    assert_eq!(dold(&["check", "A001067", "--abs"]).status.code(), Some(0));
    // network is never touched without --online
    assert_eq!(dold(&["fetch", "A000045"]).status.code(), Some(5));
    assert_eq!(dold(&["fetch", "A000045", "--online"]).status.code(), Some(6));
}

#[test]
fn offline_output_is_deterministic() {
    let commands: &[&[&str]] = &[
        &["localscan", "lucas", "--format", "json", "--max-shift", "3"],
        &["localscan", "e", "--upto", "120", "--format", "csv"],
        &["regular", "--kind", "euler", "--primes", "120"],
        &["groups", "--group", "d8"],
        &["magical", "clf"],
        &["oracle", "all", "--primes", "13", "--upto", "20"],
    ];
    for args in commands {
        let first = stdout(args);
        for threads in ["1", "3"] {
            let out = Command::new(env!("CARGO_BIN_EXE_dold"))
                .args(*args)
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .unwrap();
            assert_eq!(String::from_utf8(out.stdout).unwrap(), first, "{args:?} with {threads} threads");
        }
    }
}

#[test]
fn group_tables_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.tbl");
    std::fs::write(&path, stdout(&["groups", "--group", "q8", "--export"])).unwrap();
    let from_file = stdout(&["groups", "--table", path.to_str().unwrap(), "--upto", "6"]);
    assert_eq!(from_file, stdout(&["groups", "--group", "q8", "--upto", "6"]));
    assert_eq!(from_file.lines().count(), 1 + 28);
}

#[test]
fn ell_and_regular() {
    let out = stdout(&["ell", "--k", "3", "--m", "1", "--p", "7", "--upto", "6"]);
    assert!(out.contains("matches                   true"), "{out}");
    let out = stdout(&["regular", "--primes", "70"]);
    let irregular: Vec<&str> =
        out.lines().filter(|l| l.contains("irregular")).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(irregular, ["37", "59", "67"]);
}

#[test]
fn fixtures_dir_takes_precedence() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b000045.txt"), "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n").unwrap();
    let out = stdout(&["fetch", "A000045", "--fixtures-dir", dir.path().to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out, "n,value\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n");
}
