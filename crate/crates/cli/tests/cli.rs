use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn qcprog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcprog"))
        .args(args)
        .env_remove("QCPROG_SEED")
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&doc).unwrap()
}

fn assert_valid(schema_name: &str, doc: &Value) {
    let v = schema(schema_name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

#[test]
fn seb_unit_square() {
    let sq = fixture("unit_square.json");
    let out = qcprog(&["seb", "--input", sq.to_str().unwrap(), "--seed", "7"]);
    let v = json_of(&out);
    assert_eq!(v["center"], serde_json::json!([0.5, 0.5]));
    assert_eq!(
        v["radius"].as_f64().unwrap(),
        std::f64::consts::FRAC_1_SQRT_2
    );
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("\"radius\":0.7071067811865476"));
}

#[test]
fn recurrence_kmis() {
    let f = fixture("kmis.rec");
    let v = json_of(&qcprog(&[
        "recurrence",
        "--input",
        f.to_str().unwrap(),
        "--target",
        "1,0.25",
    ]));
    assert!((v["lambda"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-6);
    assert_eq!(v["tight_cases"], serde_json::json!([3, 4]));
    let w: Vec<f64> = serde_json::from_value(v["weights"].clone()).unwrap();
    assert!((w[0] + 0.25 * w[1] - 1.0).abs() < 1e-12);
}

#[test]
fn recurrence_jobs_do_not_change_the_answer() {
    let f = fixture("branching23.rec");
    let one = qcprog(&[
        "recurrence",
        "--input",
        f.to_str().unwrap(),
        "--target",
        "1,1,1",
    ]);
    let four = qcprog(&[
        "recurrence",
        "--input",
        f.to_str().unwrap(),
        "--target",
        "1,1,1",
        "--jobs",
        "4",
    ]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn lip_disjoint() {
    let f = fixture("disjoint.json");
    let v = json_of(&qcprog(&["lip", "--input", f.to_str().unwrap()]));
    assert_eq!(v["length"], 1);
}

#[test]
fn lip_valued() {
    let f = fixture("valued.json");
    let v = json_of(&qcprog(&["lip", "--input", f.to_str().unwrap()]));
    // sorted by value: (1,1), (3,3) meet only at (2,2); (0,0) then empties it
    assert_eq!(v["threshold"], 2.0);
    assert_eq!(v["witness"], serde_json::json!([2.0, 2.0]));
}

#[test]
fn outputs_are_byte_deterministic() {
    for (cmd, file) in [
        ("seb", "unit_square.json"),
        ("seb-balls", "balls.json"),
        ("seb-hyp", "hyperbolic_pair.json"),
        ("sight", "arrowhead.json"),
        ("illum", "unit_cube.json"),
        ("mesh-smooth", "arch.json"),
    ] {
        let f = fixture(file);
        let a = qcprog(&[cmd, "--input", f.to_str().unwrap(), "--seed", "3"]);
        let b = qcprog(&[cmd, "--input", f.to_str().unwrap(), "--seed", "3"]);
        assert_eq!(a.status.code(), Some(0), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn seed_falls_back_to_the_environment() {
    let f = fixture("unit_square.json");
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_qcprog"));
        c.args(["seb", "--input", f.to_str().unwrap()]);
        match env {
            Some(s) => c.env("QCPROG_SEED", s),
            None => c.env_remove("QCPROG_SEED"),
        };
        if let Some(s) = flag {
            c.args(["--seed", s]);
        }
        c.output().unwrap()
    };
    assert_eq!(run(Some("5"), None).status.code(), Some(0));
    assert_eq!(run(Some("5"), None).stdout, run(None, Some("5")).stdout);
    assert_eq!(run(Some("not-a-number"), Some("5")).status.code(), Some(0));
    assert_eq!(run(Some("not-a-number"), None).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(qcprog(&[]).status.code(), Some(2));
    assert_eq!(qcprog(&["seb"]).status.code(), Some(2));
    assert_eq!(qcprog(&["frobnicate"]).status.code(), Some(2));
    let sq = fixture("unit_square.json");
    assert_eq!(
        qcprog(&["seb", "--input", sq.to_str().unwrap(), "--tolerance", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qcprog(&["--help"]).status.code(), Some(0));

    let dir = std::env::temp_dir().join(format!("qcprog-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let comb = dir.join("comb.json");
    std::fs::write(
        &comb,
        r#"{"polygon":[[0,0],[5,0],[5,3],[4,3],[4,1],[3,1],[3,3],[2,3],[2,1],[1,1],[1,3],[0,3]]}"#,
    )
    .unwrap();
    let bad_rec = dir.join("bad.rec");
    std::fs::write(&bad_rec, "T(n,k) = max{\n  T(n+1,k) }").unwrap();
    let neg = dir.join("neg.rec");
    std::fs::write(&neg, "T(n) = T(n-1) + T(n-2)").unwrap();

    for (args, kind) in [
        (
            vec!["sight", "--input", comb.to_str().unwrap()],
            "degenerate",
        ),
        (
            vec![
                "recurrence",
                "--input",
                bad_rec.to_str().unwrap(),
                "--target",
                "1,1",
            ],
            "parse",
        ),
        (
            vec![
                "recurrence",
                "--input",
                neg.to_str().unwrap(),
                "--target",
                "-1",
            ],
            "infeasible",
        ),
        (
            vec!["seb", "--input", dir.join("missing.json").to_str().unwrap()],
            "io",
        ),
        (vec!["seb", "--input", comb.to_str().unwrap()], "json"),
    ] {
        let out = qcprog(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"], kind);
        assert_valid("error", &err);
        if kind == "parse" {
            assert_eq!(
                (err["line"].as_u64(), err["column"].as_u64()),
                (Some(2), Some(6))
            );
        }
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn report_output() {
    let sq = fixture("unit_square.json");
    let out = qcprog(&["seb", "--input", sq.to_str().unwrap(), "--output", "report"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("smallest enclosing ball\n"));
    assert!(text.contains("  radius: 0.7071067811865476\n"));
}

fn csv_rows(out: &Output) -> Vec<[f64; 3]> {
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,q"));
    lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|s| s.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect()
}

#[test]
fn levelset_two_points() {
    let f = fixture("two_points.json");
    let p = f.to_str().unwrap();
    let rows = csv_rows(&qcprog(&[
        "levelset",
        "--problem",
        "seb",
        "--input",
        p,
        "--grid",
        "3",
        "--bounds",
        "0,2,-1,1",
    ]));
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[4], [1.0, 0.0, 1.0]);
    let rows = csv_rows(&qcprog(&[
        "levelset",
        "--problem",
        "seb",
        "--input",
        p,
        "--grid",
        "1",
        "--bounds",
        "0,2,-1,1",
    ]));
    assert_eq!(rows, vec![[1.0, 0.0, 1.0]]);
}

#[test]
fn levelset_angle_range() {
    let f = fixture("segment.json");
    let rows = csv_rows(&qcprog(&[
        "levelset",
        "--problem",
        "angle",
        "--input",
        f.to_str().unwrap(),
        "--grid",
        "20",
        "--bounds",
        "-3,3,0.01,3",
    ]));
    assert_eq!(rows.len(), 400);
    assert!(rows.iter().all(|r| r[2] > 0.0 && r[2] < 180.0));
}

#[test]
fn levelset_marks_infeasible_cells() {
    let f = fixture("square.json");
    let rows = csv_rows(&qcprog(&[
        "levelset",
        "--problem",
        "sight",
        "--input",
        f.to_str().unwrap(),
        "--grid",
        "3",
    ]));
    assert_eq!(rows.iter().filter(|r| r[2].is_nan()).count(), 8);
    assert_eq!(rows[4][2], 90.0);
}

#[test]
fn levelset_rejects_3d() {
    let f = fixture("unit_cube.json");
    assert_eq!(
        qcprog(&[
            "levelset",
            "--problem",
            "illum",
            "--input",
            f.to_str().unwrap()
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn fixtures_and_outputs_match_schemas() {
    for (cmd, file, extra) in [
        ("seb", "unit_square.json", vec![]),
        ("seb-balls", "balls.json", vec![]),
        ("seb-hyp", "hyperbolic_pair.json", vec![]),
        ("sight", "arrowhead.json", vec![]),
        ("illum", "unit_cube.json", vec![]),
        ("lip", "disjoint.json", vec![]),
        ("lip", "valued.json", vec![]),
        ("mesh-smooth", "arch.json", vec!["--measure", "bank-smith"]),
        ("recurrence", "kmis.json", vec!["--target", "1,0.25"]),
    ] {
        let f = fixture(file);
        let input: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
        assert_valid(&format!("{cmd}.input"), &input);
        let mut args = vec![cmd, "--input", f.to_str().unwrap()];
        args.extend(extra);
        assert_valid(&format!("{cmd}.output"), &json_of(&qcprog(&args)));
    }
    let rec = fixture("branching23.rec");
    let out = json_of(&qcprog(&[
        "recurrence",
        "--input",
        rec.to_str().unwrap(),
        "--target",
        "1,1,1",
    ]));
    assert_valid("recurrence.output", &out);
}
