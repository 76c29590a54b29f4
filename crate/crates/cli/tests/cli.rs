use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn lsurkit(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsurkit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write_state(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let up = write_state(
        dir.path(),
        "up.json",
        r#"{"n_qubits": 4, "dicke_amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0]]}"#,
    );
    let out = lsurkit(&["check", &up], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("violated: false"));

    let w = write_state(
        dir.path(),
        "w.json",
        r#"{"n_qubits": 4, "dicke_amplitudes": [[0,0],[1,0],[0,0],[0,0],[0,0]]}"#,
    );
    let out = lsurkit(&["check", &w, "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["violated"], true);
    assert_eq!(report["ppt_negative"], true);
    assert!((report["c_l"].as_f64().unwrap() + 0.25).abs() < 1e-12);

    let broken = write_state(
        dir.path(),
        "broken.json",
        "{\n  \"n_qubits\": 4,\n  \"dicke_amplitudes\": [[1,0],",
    );
    let out = lsurkit(&["check", &broken], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let odd = write_state(
        dir.path(),
        "odd.json",
        r#"{"n_qubits": 3, "dicke_amplitudes": [[1,0],[0,0],[0,0],[0,0]]}"#,
    );
    let out = lsurkit(&["check", &odd], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));

    let out = lsurkit(&["check", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_examples_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = lsurkit(
        &[
            "scan", "--family", "werner", "--grid", "0:1:4", "--out", "w.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("w.csv")).unwrap();
    let lhs: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap())
        .collect();
    assert_eq!(lhs, ["6", "4", "2", "0"]);

    let out = lsurkit(
        &[
            "scan", "--family", "ku", "--n", "2", "--grid", "0:pi/2:3", "--out", "k.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("k.csv")).unwrap();
    assert_eq!(text.lines().nth(1), Some("ku,2,0,0,2,2,false"));

    let out = lsurkit(
        &[
            "scan", "--family", "wclass", "--n", "2", "--grid", "0:1:3", "--out", "a.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("a.csv")).unwrap();
    assert_eq!(text.lines().nth(1), Some("wclass,2,0,-0.25,1,2,true"));

    for bad in [
        vec![
            "scan", "--family", "ku", "--grid", "0:1:1", "--out", "x.csv",
        ],
        vec![
            "scan", "--family", "werner", "--grid", "0:2:5", "--out", "x.csv",
        ],
        vec!["scan", "--family", "heisenberg", "--out", "x.csv"],
        vec!["scan", "--family", "ku", "--out", "no/such/dir/x.csv"],
        vec!["scan", "--family", "ku"],
    ] {
        assert_eq!(lsurkit(&bad, dir.path()).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("scan.cfg"),
        "family = wclass\nn = 1,2\ngrid = 0.1:0.9:5\nout = from_file.csv\n",
    )
    .unwrap();
    let out = lsurkit(&["scan", "--config", "scan.cfg", "--n", "3"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("from_file.csv")).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().skip(1).all(|l| l.starts_with("wclass,3,")));
}

#[test]
fn default_grids_have_the_documented_size() {
    let dir = tempfile::tempdir().unwrap();
    for (family, rows) in [("werner", 101), ("ku", 201 * 5), ("wclass", 201 * 5)] {
        let name = format!("{family}.csv");
        let out = lsurkit(&["scan", "--family", family, "--out", &name], dir.path());
        assert_eq!(out.status.code(), Some(0));
        let text = fs::read_to_string(dir.path().join(&name)).unwrap();
        assert_eq!(text.lines().count(), rows + 1, "{family}");
    }
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = lsurkit(
        &["oracle", "--n-qubits", "2", "--trials", "10", "--seed", "3"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("PASS") && stdout.contains("max chi deviation"));
    let out = lsurkit(
        &["oracle", "--n-qubits", "12", "--trials", "1", "--seed", "3"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}
