use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gorenstein_cli::{
    emit, run_spec, CorpusSummary, Format, ReportDocument, RingSpecFile, RunFlags, SpecError, CORPUS_CSV_COLUMNS,
    CSV_COLUMNS,
};
use gorenstein_core::detector::{DetectorKind, Verdict};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn gorenstein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gorenstein"))
        .args(args)
        .output()
        .unwrap()
}

fn spec_file(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn report(out: &Output) -> ReportDocument {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn verdicts(doc: &ReportDocument) -> Vec<Verdict> {
    doc.detectors.iter().map(|d| d.entry.verdict).collect()
}

#[test]
fn gorenstein_ring_exits_zero() {
    let path = corpus_dir().join("f2_x2.toml");
    let out = gorenstein(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(verdicts(&doc), vec![Verdict::Gorenstein; 4]);
    assert!(doc.consistent && doc.error.is_none());
    assert_eq!(doc.screen.unwrap().betti, vec![1]);
}

#[test]
fn square_zero_ring_exits_zero() {
    let path = corpus_dir().join("f2_xy_m2.toml");
    let out = gorenstein(&["run", path.to_str().unwrap(), "--depth", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(verdicts(&doc), vec![Verdict::NotGorenstein; 4]);
    assert_eq!(doc.oracle, Some(Verdict::NotGorenstein));
    assert_eq!(doc.settings.depth, 4);
}

#[test]
fn malformed_relation_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = spec_file(
        dir.path(),
        "bad.toml",
        "id = \"bad\"\np = 2\nvars = [\"x\"]\nrelations = [\"x^\"]\n",
    );
    let out = gorenstein(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("relation `x^`"), "{stderr}");
    let doc = report(&out);
    assert_eq!(doc.error.unwrap().stage, "algebra");
    assert!(doc.detectors.is_empty());
}

#[test]
fn spec_validation() {
    let both = "id = \"a\"\np = 2\nvars = [\"x\"]\nrelations = [\"x^2\"]\nstructure = [[[1]]]\n";
    assert!(matches!(RingSpecFile::parse(both), Err(SpecError::Invalid(_))));
    let neither = "id = \"a\"\np = 2\nvars = [\"x\"]\n";
    assert!(matches!(RingSpecFile::parse(neither), Err(SpecError::Invalid(_))));
    assert!(matches!(
        RingSpecFile::parse("id = \"a\"\np = 2\nvars = [\"x\"]\nrelations = [\"x^2\"]\nextra = 1\n"),
        Err(SpecError::Syntax(_))
    ));
    assert!(matches!(
        RingSpecFile::load(Path::new("/nonexistent/ring.toml")),
        Err(SpecError::Io { .. })
    ));

    let doc = run_spec(Path::new("/nonexistent/ring.toml"), &RunFlags::default());
    assert_eq!((doc.ring_id.as_str(), doc.exit_code), ("ring", 4));

    let spec = RingSpecFile::parse("id = \"e\"\np = 4\nvars = [\"x\"]\nrelations = [\"x^2\"]\n").unwrap();
    assert_eq!(spec.algebra().unwrap_err().0, 4);
    let wild = RingSpecFile::parse("id = \"w\"\np = 2\nvars = [\"x\", \"y\"]\nrelations = [\"x^2\"]\n").unwrap();
    assert_eq!(wild.algebra().unwrap_err().0, 4);
}

#[test]
fn structure_constants_input() {
    // F_2[x]/(x^2) with basis 1, x.
    let body = "id = \"dual\"\np = 2\nvars = []\nstructure = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]\nlabels = [\"1\", \"x\"]\ndepth = 3\n";
    let dir = tempfile::tempdir().unwrap();
    let path = spec_file(dir.path(), "dual.toml", body);
    let out = gorenstein(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(doc.algebra.as_ref().unwrap().labels, ["1", "x"]);
    assert_eq!(doc.settings.depth, 3);
    assert_eq!(verdicts(&doc), vec![Verdict::Gorenstein; 4]);
}

#[test]
fn flags_override_the_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = spec_file(
        dir.path(),
        "r.toml",
        "id = \"r\"\np = 3\nvars = [\"x\"]\nrelations = [\"x^3\"]\ndepth = 3\nguard = 2\n",
    );
    let out = gorenstein(&[
        "run",
        path.to_str().unwrap(),
        "--depth",
        "4",
        "--detectors",
        "m,k_hom,m",
    ]);
    let doc = report(&out);
    assert_eq!((doc.settings.depth, doc.settings.guard), (4, 2));
    assert_eq!(doc.settings.detectors, vec![DetectorKind::KHom, DetectorKind::M]);
    assert_eq!(doc.detectors.len(), 2);

    let out = gorenstein(&["run", path.to_str().unwrap(), "--depth", "1"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(
        gorenstein(&["run", path.to_str().unwrap(), "--detectors", "nope"])
            .status
            .code()
            != Some(0)
    );
}

#[test]
fn budget_caps() {
    let path = corpus_dir().join("f2_xy_m2.toml");
    let tiny = gorenstein(&["run", path.to_str().unwrap(), "--budget", "10"]);
    assert_eq!(tiny.status.code(), Some(5));
    assert_eq!(report(&tiny).error.unwrap().stage, "screen");

    let xyz = corpus_dir().join("f2_xyz_m2.toml");
    let out = gorenstein(&["run", xyz.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let doc = report(&out);
    assert_eq!(verdicts(&doc), vec![Verdict::Inconclusive; 4]);
    assert!(doc.consistent && !doc.skipped.is_empty());
    assert_eq!(doc.screen.unwrap().type_mu, 3);
}

#[test]
fn json_round_trip_is_idempotent() {
    let doc = run_spec(
        &corpus_dir().join("f3_x2_y2.toml"),
        &RunFlags {
            depth: Some(3),
            ..RunFlags::default()
        },
    );
    let bytes = emit(&doc, Format::Json);
    let back: ReportDocument = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(back, doc);
    assert_eq!(emit(&back, Format::Json), bytes);
}

#[test]
fn csv_has_one_row_per_detector() {
    let path = corpus_dir().join("f2_x2_y3_xy.toml");
    let out = gorenstein(&[
        "run",
        path.to_str().unwrap(),
        "--depth",
        "3",
        "--format",
        "csv",
        "--detectors",
        "k_tensor,m",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), CSV_COLUMNS);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][1], "k_tensor");
    assert_eq!(&rows[1][2], "not_gorenstein");
    assert_eq!((&rows[1][3], &rows[1][4], &rows[1][6]), ("0", "36", "true"));
}

#[test]
fn golden_report_for_square_zero() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/f2_xy_m2.json");
    let out = gorenstein(&["run", corpus_dir().join("f2_xy_m2.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout.clone()).unwrap(),
        fs::read_to_string(&golden).unwrap()
    );

    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    let schema: serde_json::Value = serde_json::from_str(&fs::read_to_string(schema_path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let instance: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");

    let mut broken = instance.clone();
    broken["detectors"][0]["verdict"] = "maybe".into();
    assert!(!validator.is_valid(&broken));
    let failed = run_spec(Path::new("/nonexistent/x.toml"), &RunFlags::default());
    assert!(validator.is_valid(&serde_json::to_value(&failed).unwrap()));
}

#[test]
fn reports_are_bitwise_reproducible() {
    let path = corpus_dir().join("f3_x2my2_xy.toml");
    let a = gorenstein(&["run", path.to_str().unwrap(), "--depth", "4"]);
    let b = gorenstein(&["run", path.to_str().unwrap(), "--depth", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = gorenstein(&["corpus", dir.path().to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        format!("{}\n", CORPUS_CSV_COLUMNS.join(","))
    );
    let out = gorenstein(&["corpus", dir.path().to_str().unwrap()]);
    let s: CorpusSummary = serde_json::from_slice(&out.stdout).unwrap();
    assert!(s.rows.is_empty() && s.passed);
}

#[test]
fn corpus_with_a_malformed_file() {
    let dir = tempfile::tempdir().unwrap();
    spec_file(
        dir.path(),
        "b.toml",
        "id = \"b_ring\"\np = 2\nvars = [\"x\"]\nrelations = [\"x^2\"]\ndepth = 3\n",
    );
    spec_file(
        dir.path(),
        "a.toml",
        "id = \"a_ring\"\np = 2\nvars = [\"x\"]\nrelations = [\"x^\"]\n",
    );
    spec_file(dir.path(), "notes.txt", "ignored");
    let out_dir = dir.path().join("reports");
    let out = gorenstein(&[
        "corpus",
        dir.path().to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    let s: CorpusSummary = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<_> = s.rows.iter().map(|r| r.ring_id.as_str()).collect();
    assert_eq!(ids, ["a_ring", "b_ring"]);
    assert_eq!((s.rows[0].oracle.as_str(), s.rows[0].exit_code), ("input_error", 4));
    assert_eq!((s.rows[1].k_tensor.as_str(), s.rows[1].exit_code), ("gorenstein", 0));
    assert!(!s.passed);
    assert!(out_dir.join("b_ring.json").is_file() && out_dir.join("a_ring.json").is_file());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert_eq!(stderr.lines().count(), 2);
}
