use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use phcurves::algebra::{int, rat, Rational, RealPolynomial};
use phcurves::{cusp_report, CurveKind, CurveSolution, Provenance, RationalFunction};

fn jobs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../jobs")
}

fn phcurves(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phcurves"))
        .args(args)
        .env_remove("PHCURVES_WORKDIR")
        .output()
        .expect("binary runs")
}

fn run_job(job: &Path, out: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "--job",
        job.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    phcurves(&args)
}

fn write_job(dir: &Path, name: &str, body: &serde_json::Value) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_vec_pretty(body).unwrap()).unwrap();
    p
}

fn read_json(p: &Path) -> serde_json::Value {
    serde_json::from_slice(&fs::read(p).unwrap()).unwrap()
}

fn reference_curve() -> CurveSolution {
    let rows: [[i64; 3]; 9] = [
        [0, 150, 0],
        [0, 200, 200],
        [-150, 300, 0],
        [-300, 1200, 0],
        [-96, -160, 480],
        [0, -600, 1200],
        [-300, -300, -300],
        [-100, 200, 0],
        [75, 0, 0],
    ];
    let den = RealPolynomial::monomial(int(1), 4);
    let comp = |c: usize| {
        let p = RealPolynomial::from_ints(&rows.iter().map(|r| r[c]).collect::<Vec<_>>());
        RationalFunction::new(p, den.clone())
    };
    CurveSolution::from_components(
        &[RationalFunction::zero(), comp(0), comp(1), comp(2)],
        CurveKind::PhOnly,
        Provenance::Input,
    )
}

fn space_difference(c: &CurveSolution, t: &Rational, base: &Rational) -> [Rational; 3] {
    let p = c.eval(t).unwrap();
    let q = c.eval(base).unwrap();
    [&p.x - &q.x, &p.y - &q.y, &p.z - &q.z]
}

fn construct_linear(dir: &Path) -> serde_json::Value {
    let out = dir.join("linear");
    let o = run_job(&jobs().join("construct-linear.json"), &out, &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    read_json(&out.join("construct-linear.json"))
}

#[test]
fn construct_linear_yields_the_degree_eight_curve() {
    let dir = tempfile::tempdir().unwrap();
    let v = construct_linear(dir.path());
    let canonical = v["canonical"].as_array().unwrap();
    assert_eq!(canonical.len(), 1);
    let c: CurveSolution = serde_json::from_value(canonical[0].clone()).unwrap();
    assert_eq!(c.kind, CurveKind::ArcLength);
    assert_eq!(c.alpha, RealPolynomial::monomial(int(1), 4));
    assert_eq!(c.numerator.deg(), 8);

    let reference = reference_curve();
    let base = int(1);
    let probe = rat(3, 2);
    let (ours, theirs) = (
        space_difference(&c, &probe, &base),
        space_difference(&reference, &probe, &base),
    );
    let k = &theirs[0] / &ours[0];
    for t in [rat(1, 3), int(2), int(-5), rat(7, 4)] {
        let (o, r) = (
            space_difference(&c, &t, &base),
            space_difference(&reference, &t, &base),
        );
        for i in 0..3 {
            assert_eq!(&o[i] * &k, r[i], "component {i} at t = {t}");
        }
    }
    assert!(v["existence"].as_str().unwrap().contains("multiplicity 4"));
}

#[test]
fn verify_job_passes() {
    let o = phcurves(&["--job", jobs().join("verify.json").to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for check in [
        "ph",
        "arc_length",
        "constant_slope",
        "tangency",
        "cusp_free",
    ] {
        assert_eq!(report["checks"][check]["passed"], true, "{check}");
    }
}

#[test]
fn sample_rows_and_arc_length_follow_the_cusp() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sample");
    let o = run_job(&jobs().join("sample.json"), &out, &["--format", "csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!out.join("samples.svg").exists());

    let mut reader = csv::Reader::from_path(out.join("samples.csv")).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 151);
    let parse = |s: &str| phcurves::algebra::parse_rational(s).unwrap();
    let t: Vec<Rational> = rows.iter().map(|r| parse(&r[0])).collect();
    let s: Vec<Rational> = rows.iter().map(|r| parse(&r[8])).collect();
    assert_eq!(t[0], rat(1, 2));
    assert_eq!(t[150], int(2));

    // s is monotone exactly between consecutive roots of mu.
    let job = read_json(&jobs().join("sample.json"));
    let curve: CurveSolution = serde_json::from_value(job["curve"].clone()).unwrap();
    let cusps = cusp_report(&curve, &rat(1, 2), &int(2)).unwrap();
    assert_eq!(cusps.len(), 1);
    let (lo, hi) = (cusps[0].lo.clone(), cusps[0].hi.clone());
    let steps: Vec<bool> = s.windows(2).map(|w| w[1] > w[0]).collect();
    for (i, up) in steps.iter().enumerate() {
        if t[i + 1] <= lo {
            assert_eq!(*up, steps[0], "before the cusp at t = {}", t[i]);
        } else if t[i] >= hi {
            assert_ne!(*up, steps[0], "after the cusp at t = {}", t[i]);
        }
    }
}

#[test]
fn sample_svg_has_three_panels() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("svg");
    let o = run_job(&jobs().join("sample.json"), &out, &["--format", "svg"]);
    assert!(o.status.success());
    let svg = fs::read_to_string(out.join("samples.svg")).unwrap();
    assert_eq!(svg.matches("<path").count(), 3);
    assert!(!out.join("samples.csv").exists());
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for job in ["construct-linear", "basis", "hermite", "sample"] {
        let a = dir.path().join(format!("{job}-a"));
        let b = dir.path().join(format!("{job}-b"));
        for out in [&a, &b] {
            let o = run_job(&jobs().join(format!("{job}.json")), out, &[]);
            assert!(
                o.status.success(),
                "{job}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
        }
        let mut names: Vec<_> = fs::read_dir(&a)
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        names.sort();
        assert!(!names.is_empty());
        for n in names {
            assert_eq!(
                fs::read(a.join(&n)).unwrap(),
                fs::read(b.join(&n)).unwrap(),
                "{job}: {n:?}"
            );
        }
    }
}

#[test]
fn hermite_job_reports_the_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hermite");
    let o = run_job(&jobs().join("hermite.json"), &out, &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = read_json(&out.join("hermite.json"));
    assert_eq!(v["rank"], 8);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 5);
    assert_eq!(v["translation"].as_array().unwrap().len(), 3);
    assert_eq!(v["verification"]["checks"]["tangency"]["passed"], true);
}

#[test]
fn exit_code_for_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_job(
        dir.path(),
        "bad.json",
        &serde_json::json!({"command": "factor", "hodograph": "x"}),
    );
    let o = run_job(&bad, &dir.path().join("o"), &[]);
    assert_eq!(o.status.code(), Some(2));

    let unknown = write_job(
        dir.path(),
        "unknown.json",
        &serde_json::json!({"command": "nope"}),
    );
    assert_eq!(
        run_job(&unknown, &dir.path().join("o"), &[]).status.code(),
        Some(2)
    );

    let o = phcurves(&["--job", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    // Step that does not divide the interval.
    let mut job = read_json(&jobs().join("sample.json"));
    job["step"] = serde_json::json!("2/7");
    let p = write_job(dir.path(), "step.json", &job);
    assert_eq!(
        run_job(&p, &dir.path().join("o"), &[]).status.code(),
        Some(2)
    );

    // Sampling across the pole.
    job["from"] = serde_json::json!("-1");
    job["step"] = serde_json::json!("1/2");
    let p = write_job(dir.path(), "pole.json", &job);
    let o = run_job(&p, &dir.path().join("o"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole at t = 0"));
}

#[test]
fn exit_code_for_infeasible_problems() {
    let dir = tempfile::tempdir().unwrap();
    let mut job = read_json(&jobs().join("construct-linear.json"));
    job["deg_b"] = serde_json::json!(7);
    let p = write_job(dir.path(), "linear7.json", &job);
    let o = run_job(&p, &dir.path().join("o"), &[]);
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );

    let mut job = read_json(&jobs().join("hermite.json"));
    job["labels"] = serde_json::json!([0, 1]);
    let p = write_job(dir.path(), "hermite-small.json", &job);
    assert_eq!(
        run_job(&p, &dir.path().join("o"), &[]).status.code(),
        Some(3)
    );
}

#[test]
fn exit_code_for_failed_verification() {
    let dir = tempfile::tempdir().unwrap();
    let mut job = read_json(&jobs().join("verify.json"));
    job["interval"] = serde_json::json!(["1/2", "2"]);
    let p = write_job(dir.path(), "cusp.json", &job);
    let o = run_job(&p, &dir.path().join("o"), &[]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cusp_free"));

    let mut job = read_json(&jobs().join("verify.json"));
    job["curve"]["B"][1][1] = serde_json::json!("12345");
    let p = write_job(dir.path(), "broken.json", &job);
    assert_eq!(
        run_job(&p, &dir.path().join("o"), &[]).status.code(),
        Some(4)
    );
}

#[test]
fn workdir_resolves_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(jobs().join("basis.json"), dir.path().join("basis.json")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_phcurves"))
        .args(["--job", "basis.json", "--out", "result"])
        .env("PHCURVES_WORKDIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = read_json(&dir.path().join("result/basis.json"));
    assert_eq!(v["basis"]["curves"].as_array().unwrap().len(), 5);
}

#[test]
fn generated_jobs_run() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..4u64 {
        let out = dir.path().join(format!("gen{seed}"));
        let o = phcurves(&[
            "generate",
            "--seed",
            &seed.to_string(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        let again = phcurves(&["generate", "--seed", &seed.to_string()]);
        assert_eq!(fs::read(out.join("job.json")).unwrap(), again.stdout);
        let r = run_job(&out.join("job.json"), &out.join("result"), &[]);
        assert!(
            matches!(r.status.code(), Some(0 | 3)),
            "seed {seed}: {}",
            String::from_utf8_lossy(&r.stderr)
        );
    }
}
