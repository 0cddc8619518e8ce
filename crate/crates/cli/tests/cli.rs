use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antipowers"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> (String, i32) {
    let out = run(args);
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn json(args: &[&str]) -> (Value, i32) {
    let (text, code) = stdout(args);
    (serde_json::from_str(&text).expect("valid json"), code)
}

#[test]
fn generate_prefixes() {
    assert_eq!(stdout(&["generate", "thue-morse", "16"]), ("0110100110010110\n".into(), 0));
    assert_eq!(stdout(&["generate", "periodic:01", "5"]), ("01010\n".into(), 0));
    assert_eq!(stdout(&["generate", "recurrent-avoider", "5"]), ("01110\n".into(), 0));
}

#[test]
fn generate_json_envelope() {
    let (v, code) = json(&["generate", "fibonacci", "13", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "generate");
    assert_eq!(v["params"]["length"], 13);
    assert_eq!(v["result"], "0100101001001");
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn generate_errors() {
    assert_eq!(run(&["generate", "no-such-word", "4"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "periodic:", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["generate", "thue-morse", "100", "--cap", "10"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["generate"]).status.code(), Some(2));
}

#[test]
fn ap_table_thue_morse() {
    let (text, code) = stdout(&["ap-table", "thue-morse", "--k", "3..6,30"]);
    assert_eq!(code, 0);
    assert_eq!(
        text,
        "k,m,length\n3,5,15\n4,5,20\n5,5,25\n6,5,30\n30,29,870\n"
    );
}

#[test]
fn ap_table_missing_is_empty_cell() {
    let (text, code) = stdout(&["ap-table", "periodic:01", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(text, "k,m,length\n3,,\n");
    let (v, _) = json(&["ap-table", "periodic:01", "--k", "3", "--format", "json"]);
    assert!(v["result"][0]["m"].is_null());
}

#[test]
fn ap_table_rejects_small_orders() {
    assert_eq!(run(&["ap-table", "thue-morse", "--k", "1,3"]).status.code(), Some(2));
}

#[test]
fn ap_table_cap() {
    let code = run(&["ap-table", "thue-morse", "--k", "30", "--cap", "100"]).status.code();
    assert_eq!(code, Some(3));
}

#[test]
fn check_literals() {
    assert_eq!(
        stdout(&["check", "literal:aabaaabbbaba", "--k", "4", "--mode", "anti-power"]),
        ("holds\n".into(), 0)
    );
    assert_eq!(
        stdout(&["check", "literal:010101", "--k", "3", "--mode", "anti-power"]),
        ("fails\n".into(), 1)
    );
    assert_eq!(
        stdout(&["check", "literal:010101", "--k", "3", "--mode", "power"]),
        ("holds\n".into(), 0)
    );
}

#[test]
fn check_scan() {
    assert_eq!(
        stdout(&["check", "recurrent-avoider", "--k", "6", "--mode", "scan", "--limit", "3125"]),
        ("not-found\n".into(), 1)
    );
    let (v, code) = json(&[
        "check", "thue-morse", "--k", "3", "--mode", "scan", "--limit", "64", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["params"]["mode"], "scan");
    assert_eq!(v["result"]["found"], true);
    assert!(v["result"]["factor"]["position"].as_u64().unwrap() >= 1);
}

#[test]
fn check_malformed() {
    assert_eq!(run(&["check", "literal:", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["check", "thue-morse", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["check", "literal:01", "--k", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "literal:01", "--k", "3", "--mode", "sideways"]).status.code(),
        Some(2)
    );
}

#[test]
fn search_n_exact() {
    let (v, code) = json(&["search-n", "3", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["status"], "exact");
    assert_eq!(v["result"]["N_or_bound"], 9);
    let (v, code) = json(&["search-n", "2", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["N_or_bound"], 4);
}

#[test]
fn search_n_lower_bound() {
    let (v, code) = json(&["search-n", "3", "4", "--cap", "17"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["status"], "lower_bound_only");
    assert!(v["result"]["N_or_bound"].as_u64().unwrap() > 16);
    assert_eq!(v["result"]["witness"].as_str().unwrap().len(), 17);
}

#[test]
fn search_n_parallel_matches_sequential() {
    let strip = |mut v: Value| {
        let r = v["result"].as_object_mut().unwrap();
        r.remove("nodes_explored");
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let (seq, _) = json(&["search-n", "4", "3"]);
    let (par, _) = json(&["search-n", "4", "3", "--parallel", "4"]);
    assert_eq!(seq["result"]["N_or_bound"], 12);
    assert_eq!(strip(seq), strip(par));
}

#[test]
fn search_n_bad_params() {
    assert_eq!(run(&["search-n", "1", "3"]).status.code(), Some(2));
    assert_eq!(run(&["search-n", "3", "3", "--alphabet", "1"]).status.code(), Some(2));
}

#[test]
fn search_table_csv() {
    let (text, code) = stdout(&["search-table", "--l", "2..3", "--k", "2..3"]);
    assert_eq!(code, 0);
    assert_eq!(text, "l,k,N\n2,2,2\n2,3,4\n3,2,3\n3,3,9\n");
}

#[test]
fn witness_power_branch() {
    let (v, code) = json(&["witness", "periodic:01", "3", "5"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["branch"], "power");
    let u = r["u"].as_str().unwrap();
    let pos = r["position"].as_u64().unwrap() as usize;
    let need = pos - 1 + 5 * u.len();
    let (prefix, _) = stdout(&["generate", "periodic:01", &need.to_string()]);
    assert_eq!(&prefix.trim()[pos - 1..], u.repeat(5));

    let (v, _) = json(&["witness", "periodic:0", "2", "10"]);
    assert_eq!(v["result"]["u"], "0");
}

#[test]
fn witness_anti_power_branch() {
    let (v, code) = json(&["witness", "thue-morse", "3", "3", "--budget", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["branch"], "anti_power");
    let members = v["result"]["members"].as_array().unwrap();
    assert!(!members.is_empty());
    let m = members[0].as_u64().unwrap() as usize;
    let (prefix, _) = stdout(&["generate", "thue-morse", &(3 * m).to_string()]);
    let w = prefix.trim();
    let blocks: Vec<&str> = (0..3).map(|i| &w[i * m..(i + 1) * m]).collect();
    assert!(blocks[0] != blocks[1] && blocks[0] != blocks[2] && blocks[1] != blocks[2]);
}

#[test]
fn witness_budget_exhausted() {
    assert_eq!(
        run(&["witness", "thue-morse", "3", "3", "--budget", "5"]).status.code(),
        Some(4)
    );
}

#[test]
fn density_examples() {
    let (text, code) = stdout(&["density", "thue-morse", "1", "--kind", "ap", "--horizon", "10"]);
    assert_eq!(code, 0);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,numerator,denominator"));
    for n in 1..=10 {
        assert_eq!(lines.next().unwrap(), format!("{n},1,1"));
    }
    assert!(lines.next().unwrap().starts_with("# finite estimate"));

    let (text, _) = stdout(&["density", "ultimately:0:1", "3", "--horizon", "50"]);
    assert!(text.lines().skip(1).filter(|l| !l.starts_with('#')).all(|l| l.ends_with(",0,1")));

    let (text, _) = stdout(&["density", "periodic:01", "2", "--kind", "p", "--horizon", "100"]);
    assert!(text.contains("\n100,1,2\n"));
}

#[test]
fn density_errors() {
    assert_eq!(run(&["density", "thue-morse", "2", "--horizon", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["density", "thue-morse", "2", "--horizon", "100", "--cap", "50"]).status.code(),
        Some(3)
    );
}

#[test]
fn json_payload_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["witness", "periodic:01", "3", "5"],
        &["search-n", "3", "3", "--parallel", "3"],
        &["density", "fibonacci", "2", "--horizon", "40", "--format", "json"],
        &["ap-table", "thue-morse", "--k", "3..8", "--format", "json"],
    ];
    for args in cases {
        let strip = |(mut v, _): (Value, i32)| {
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        };
        assert_eq!(strip(json(args)), strip(json(args)), "{args:?}");
    }
}
