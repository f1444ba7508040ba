use std::path::Path;
use std::process::{Command, Output};

fn flatspan(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatspan"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let o = flatspan(
        &["gen", "skew-lines", "4", "2", "3", "-o", "skew.txt"],
        dir.path(),
    );
    assert!(o.status.success());
    let o = flatspan(&["analyze", "skew.txt", "--json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["f_vector"], serde_json::json!([1, 8, 18, 8, 1]));
    assert_eq!(v["essential_dim"], 2);
    let text = stdout(&flatspan(&["analyze", "skew.txt"], dir.path()));
    assert!(text.contains("essential dimension: 2"));
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    flatspan(&["gen", "near-pencil", "6", "-o", "np.txt"], dir.path());
    let o = flatspan(&["check", "debruijn-erdos", "np.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[pass] debruijn-erdos"));
    assert!(stdout(&o).contains("near_pencil: true"));

    let o = flatspan(
        &["check", "flat-count-drop", "np.txt", "--k", "1"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not-applicable"));

    let o = flatspan(
        &["check", "weighted-monotone", "np.txt", "--F", "reciprocal"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));

    // a failing expectation
    std::fs::write(
        dir.path().join("bad.txt"),
        "affine 2\nexpect f1 7\n0 0\n1 0\n0 1\n",
    )
    .unwrap();
    let o = flatspan(&["check", "expected-stats", "bad.txt"], dir.path());
    assert_eq!(o.status.code(), Some(1));

    // input errors
    std::fs::write(dir.path().join("broken.txt"), "affine 2\n0 1/0\n").unwrap();
    let o = flatspan(&["analyze", "broken.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = flatspan(&["check", "no-such-claim", "np.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = flatspan(
        &["check", "weighted-monotone", "np.txt", "--F", "cubic"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn project_and_raise() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("line.txt"),
        "affine 2\n0 0\n1 0\n2 0\n3 0\n0 1\n",
    )
    .unwrap();
    let o = flatspan(
        &["project", "line.txt", "--center", "4", "-o", "img.txt"],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let img = std::fs::read_to_string(dir.path().join("img.txt")).unwrap();
    assert_eq!(img.lines().filter(|l| !l.starts_with("weight")).count(), 5);

    flatspan(&["gen", "hypercube", "2", "-o", "sq.txt"], dir.path());
    let o = flatspan(
        &["raise", "sq.txt", "--m", "10", "-o", "s2.txt"],
        dir.path(),
    );
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&flatspan(&["analyze", "s2.txt", "--json"], dir.path()).stdout)
            .unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([1, 14, 47, 43, 1]));
    assert_eq!(v["n_minus_g"][2], 2);

    let o = flatspan(
        &[
            "raise",
            "sq.txt",
            "--m",
            "5",
            "--generic-origin",
            "-o",
            "g.txt",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("literal form undercounts"));
}

#[test]
fn kmax_and_origin_flags() {
    let dir = tempfile::tempdir().unwrap();
    flatspan(
        &["gen", "skew-lines", "3", "3", "5", "-o", "s.txt"],
        dir.path(),
    );
    let v: serde_json::Value = serde_json::from_slice(
        &flatspan(
            &["analyze", "s.txt", "--json", "--kmax", "2", "--origin", "0"],
            dir.path(),
        )
        .stdout,
    )
    .unwrap();
    assert_eq!(v["enumeration_depth"], 2);
    assert_eq!(v["essential_dim"], serde_json::Value::Null);
    assert_eq!(v["g"], serde_json::json!([0, 3, 6]));
    assert_eq!(v["origin"]["index"], 0);
}

#[test]
fn placeholder_figures_are_not_applicable() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    for f in ["data/figure1-a81-dual.txt", "data/figure2.txt"] {
        let o = flatspan(&["check", "expected-stats", f], &root);
        assert_eq!(o.status.code(), Some(0), "{f}");
        assert!(stdout(&o).contains("not-applicable"));
    }
}
