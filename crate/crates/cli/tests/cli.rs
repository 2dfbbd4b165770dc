use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qtele(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtele"))
        .args(args)
        .output()
        .expect("spawn qtele")
}

fn read_rows(path: &Path) -> Vec<csv::StringRecord> {
    let mut reader = csv::Reader::from_path(path).unwrap();
    let header = reader.headers().unwrap().clone();
    assert_eq!(
        header.iter().collect::<Vec<_>>(),
        qutrit_teleport_cli::CSV_HEADER
    );
    reader.records().map(Result::unwrap).collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn check_sweep_matches_simulation_on_every_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("flip.csv");
    let status = qtele(&[
        "sweep",
        "--channel",
        "qutrit-flip",
        "--state",
        "plus",
        "--param-start",
        "0",
        "--param-stop",
        "1",
        "--steps",
        "11",
        "--mode",
        "check",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success(), "{status:?}");
    let rows = read_rows(&out);
    assert_eq!(rows.len(), 55);
    for r in &rows {
        assert!(num(&r[8]) <= 1e-9, "{r:?}");
    }
    // Rows are ordered by hypergraph, then parameter.
    assert_eq!(&rows[0][1], "H1");
    assert_eq!(num(&rows[0][5]), 0.0);
    assert_eq!(&rows[11][1], "H2");
    assert_eq!(num(&rows[54][5]), 1.0);

    // H5 at p = 0: 69/729 once the factor 10 in the transcription is removed.
    let h5 = &rows[44];
    assert_eq!(&h5[1], "H5");
    assert!((num(&h5[7]) - 69.0 / 729.0).abs() < 1e-12);
    assert!((num(&h5[6]) - 69.0 / 729.0).abs() < 1e-12);
}

#[test]
fn zero_state_is_hypergraph_independent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ad.csv");
    let status = qtele(&[
        "sweep",
        "--channel",
        "ad-nonmarkov",
        "--state",
        "zero",
        "--steps",
        "6",
        "--mode",
        "simulate",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    let rows = read_rows(&out);
    assert_eq!(rows.len(), 30);
    for k in 0..6 {
        let f: Vec<f64> = (0..5).map(|h| num(&rows[h * 6 + k][6])).collect();
        assert_eq!(&rows[k][4], "t");
        assert!(rows[k][7].is_empty());
        for v in &f {
            assert!((v - f[0]).abs() <= 1e-9, "{f:?}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "sweep",
        "--channel",
        "depolarization-nonmarkov",
        "--linked",
        "0:1.5:4",
        "--steps",
        "5",
    ];
    let a = qtele(&args);
    let b = qtele(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        String::from_utf8(a.stdout).unwrap().lines().count(),
        1 + 5 * 5 * 4
    );
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.cfg");
    let out = dir.path().join("out.csv");
    fs::write(
        &cfg,
        format!(
            "channel = qutrit-phase-flip\nhypergraph = H2, H3\nsteps = 4\nmode = closed-form\nout = {}\n",
            out.display()
        ),
    )
    .unwrap();
    let status = qtele(&["sweep", "--config", cfg.to_str().unwrap(), "--steps", "3"]);
    assert!(status.status.success(), "{status:?}");
    let rows = read_rows(&out);
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r[6].is_empty() && !r[7].is_empty()));
}

#[test]
fn bad_arguments_exit_with_usage_code() {
    let cases: &[&[&str]] = &[
        &["sweep"],
        &["sweep", "--channel", "nope"],
        &["sweep", "--channel", "qutrit-flip", "--steps", "1"],
        &[
            "sweep",
            "--channel",
            "qutrit-flip",
            "--param-start",
            "1",
            "--param-stop",
            "0",
        ],
        &["sweep", "--channel", "qutrit-flip", "--param-stop", "2"],
        &["sweep", "--channel", "qutrit-flip", "--hypergraph", "H6"],
        &["sweep", "--channel", "qutrit-flip", "--theta1", "0.1"],
        &["sweep", "--channel", "dephasing-nonmarkov"],
        &["sweep", "--channel", "qutrit-flip", "--unknown"],
        &["verify", "--draws", "0"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = qtele(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {out:?}");
    }
}

#[test]
fn verify_reports_every_key() {
    let out = qtele(&["verify", "--seed", "3", "--draws", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("seed 3 draws 2"));
    assert!(text.trim_end().ends_with("40/40 keys within tolerance"));
}

#[test]
fn list_names_channels_and_hypergraphs() {
    let out = qtele(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["qutrit-flip", "ad-nonmarkov", "H5", "zero2"] {
        assert!(text.contains(name), "{name}");
    }
}
