use std::process::{Command, Output};

fn pmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pmod(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_outputs_json() {
    assert_eq!(
        stdout(&["classify", "abA"]).trim(),
        r#"{"type":"reducible","axis":"B","exponent":1,"conjugator":"a"}"#
    );
    assert_eq!(stdout(&["classify", "aB"]).trim(), r#"{"type":"pseudo_anosov"}"#);
    assert_eq!(stdout(&["classify", ""]).trim(), r#"{"type":"identity"}"#);
    assert_eq!(stdout(&["classify", "--word", "a b A"]), stdout(&["classify", "abA"]));
}

#[test]
fn classify_parse_error_names_token() {
    let out = pmod(&["classify", "abq"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("'q'"));
    assert!(out.stdout.is_empty());
}

#[test]
fn census_rows() {
    let text = stdout(&["census", "--max-radius", "3"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,total,reducible,pseudo_anosov,h_n,r_n,p_n,ratio_exact,ratio_decimal");
    assert_eq!(lines.len(), 5);
    assert!(lines[4].starts_with("3,36,12,24,"));
}

#[test]
fn census_verify_and_closed_form_agree() {
    let verified = stdout(&["census", "--max-radius", "14", "--verify"]);
    let closed = stdout(&["census", "--max-radius", "14"]);
    assert_eq!(verified, closed);
    let wide = stdout(&["census", "--max-radius", "30"]);
    assert_eq!(wide.lines().count(), 32);
}

#[test]
fn census_cap_is_a_usage_error() {
    let out = pmod(&["census", "--max-radius", "17", "--verify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pmod(&["census", "--max-radius", "6", "--verify", "--cap-override", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(pmod(&["census", "--max-radius", "6", "--verify", "--cap-override", "6"]).status.success());
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(pmod(&["census"]).status.code(), Some(2));
    assert_eq!(pmod(&["series", "--which", "q"]).status.code(), Some(2));
    assert_eq!(pmod(&["census", "--max-radius", "3", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn series_listing() {
    assert_eq!(stdout(&["series", "--which", "p", "--terms", "3"]), "n,c_n\n0,0\n1,0\n2,4\n3,24\n");
    assert_eq!(stdout(&["series", "--which", "h", "--terms", "2"]), "n,c_n\n0,1\n1,4\n2,12\n");
    assert_eq!(stdout(&["series", "--which", "r", "--terms", "0"]), "n,c_n\n0,0\n");
    assert_eq!(stdout(&["series", "--which", "r", "--terms", "5", "--format", "json"]), "[0,4,8,12,24,36]\n");
}

#[test]
fn gamma_tables() {
    let text = stdout(&["gamma", "--max-radius", "2"]);
    let totals: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(totals, ["1", "6", "21"]);
    assert_eq!(stdout(&["gamma", "--max-radius", "0"]).lines().count(), 2);
    assert_eq!(stdout(&["gamma", "--max-radius", "8", "--verify"]), stdout(&["gamma", "--max-radius", "8"]));
}

#[test]
fn thread_count_does_not_change_output() {
    let base = stdout(&["census", "--max-radius", "12", "--verify", "--threads", "1"]);
    for k in ["2", "3", "8"] {
        assert_eq!(stdout(&["census", "--max-radius", "12", "--verify", "--threads", k]), base);
    }
    let base = stdout(&["gamma", "--max-radius", "10", "--verify", "--threads", "1"]);
    assert_eq!(stdout(&["gamma", "--max-radius", "10", "--verify", "--threads", "8"]), base);
}

fn json_value_text(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[test]
fn json_and_csv_carry_the_same_values() {
    for cmd in ["census", "gamma"] {
        let csv = stdout(&[cmd, "--max-radius", "25"]);
        let json = stdout(&[cmd, "--max-radius", "25", "--format", "json"]);
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = serde_json::from_str(&json).unwrap();
        let mut lines = csv.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        for (line, row) in lines.zip(&rows) {
            let keys: Vec<&String> = row.keys().collect();
            assert_eq!(keys, header);
            let from_json: Vec<String> = row.values().map(json_value_text).collect();
            assert_eq!(from_json.join(","), line);
        }
        assert_eq!(rows.len(), 26);
    }
}
