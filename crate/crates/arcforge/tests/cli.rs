// End-to-end runs of the arcforge binary on serialized artifacts.

use std::path::Path;
use std::process::{Command, Output};

fn arcforge(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_arcforge"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn subcommand_chain_on_q4_elliptic() {
    let dir = tempfile::tempdir().unwrap();
    let arc = dir.path().join("arc.json");
    let curve = dir.path().join("curve.json");
    let cache = dir.path().join("cache");
    let path = |p: &Path| p.to_str().unwrap().to_string();

    let out = arcforge(
        &[
            "build",
            "--q",
            "4",
            "--ovoid",
            "elliptic-quadric",
            "--cache",
            &path(&cache),
            "--out",
            &path(&arc),
        ],
        &[],
    );
    assert!(out.status.success(), "build: {out:?}");
    assert!(stdout_of(&out).contains("52 points"));
    assert!(arc.exists());
    assert!(cache.join("spread-q4-elliptic-quadric.json").exists());

    let out = arcforge(&["verify", "--arc", &path(&arc)], &[]);
    assert!(out.status.success(), "verify: {out:?}");
    assert!(stdout_of(&out).contains("PASS"));

    let out = arcforge(&["mincurve", "--arc", &path(&arc), "--out", &path(&curve)], &[]);
    assert!(out.status.success(), "mincurve: {out:?}");
    assert!(stdout_of(&out).contains("minimum covering degree: 7"));
    assert!(curve.exists());

    let out = arcforge(&["factor-linear", "--curve", &path(&curve)], &[]);
    assert!(out.status.success(), "factor-linear: {out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("linear factors: 1"));
    assert!(text.contains("residual: degree 6"));

    let out = arcforge(
        &["spread", "--q", "4", "--ovoid", "elliptic-quadric", "--cache", &path(&cache)],
        &[],
    );
    assert!(out.status.success(), "spread: {out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("17 tangent lines"));
    assert!(text.contains("source: cache"));

    let out = arcforge(
        &["report", "--q", "4", "--ovoid", "elliptic-quadric", "--cache", &path(&cache)],
        &[],
    );
    assert!(out.status.success(), "report: {out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("minimum covering degree: 7"));
    assert!(text.trim_end().ends_with("PASS"));
}

#[test]
fn artifacts_identical_across_runs_and_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();

    for (tag, workers) in [("a", "1"), ("b", "3"), ("c", "1")] {
        let arc = dir.path().join(format!("arc-{tag}.json"));
        let curve = dir.path().join(format!("curve-{tag}.json"));
        let out = arcforge(
            &[
                "report",
                "--q",
                "4",
                "--ovoid",
                "elliptic-quadric",
                "--arc-out",
                arc.to_str().unwrap(),
                "--curve-out",
                curve.to_str().unwrap(),
                "--format",
                "json",
            ],
            &[("ARCFORGE_WORKERS", workers)],
        );
        assert!(out.status.success(), "report: {out:?}");
        bytes.push((std::fs::read(&arc).unwrap(), std::fs::read(&curve).unwrap()));
    }

    assert_eq!(bytes[0], bytes[1], "one worker vs three");
    assert_eq!(bytes[0], bytes[2], "repeat run");
}

#[test]
fn tampered_arc_fails_verification_with_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let arc = dir.path().join("arc.json");
    let out = arcforge(
        &["build", "--q", "4", "--ovoid", "elliptic-quadric", "--out", arc.to_str().unwrap()],
        &[],
    );
    assert!(out.status.success());

    // Move one arc point somewhere else.
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&arc).unwrap()).unwrap();
    let pts = v["points"].as_array().unwrap().len();
    assert_eq!(pts, 52);
    v["points"][0] = serde_json::json!([1, 3, 3]);
    std::fs::write(&arc, serde_json::to_string(&v).unwrap()).unwrap();

    let out = arcforge(&["verify", "--arc", arc.to_str().unwrap()], &[]);
    assert!(!out.status.success(), "tampered arc must fail");
    assert!(stdout_of(&out).contains("FAIL"));
}

#[test]
fn bad_configs_are_rejected() {
    let out = arcforge(&["build", "--q", "6", "--ovoid", "elliptic-quadric", "--out", "x.json"], &[]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("power of 2"));

    let out = arcforge(&["build", "--q", "16", "--ovoid", "suzuki-tits", "--out", "x.json"], &[]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("2^(2t+1)"));

    let out = arcforge(&["build", "--q", "4", "--ovoid", "hyperbolic", "--out", "x.json"], &[]);
    assert!(!out.status.success());

    let out = arcforge(
        &["report", "--q", "4", "--ovoid", "elliptic-quadric"],
        &[("ARCFORGE_WORKERS", "zero")],
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ARCFORGE_WORKERS"));
}

#[test]
fn mincurve_degree_cap_too_small_errors() {
    let dir = tempfile::tempdir().unwrap();
    let arc = dir.path().join("arc.json");
    arcforge(
        &["build", "--q", "4", "--ovoid", "elliptic-quadric", "--out", arc.to_str().unwrap()],
        &[],
    );
    let out = arcforge(
        &[
            "mincurve",
            "--arc",
            arc.to_str().unwrap(),
            "--max-degree",
            "3",
            "--out",
            dir.path().join("curve.json").to_str().unwrap(),
        ],
        &[],
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("raise --max-degree"));
}
