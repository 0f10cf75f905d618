//! Ring specs in, reports out.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use gorenstein_core::algebra::FinLocalAlgebra;
use gorenstein_core::detector::{
    aggregate, build_bundle, check_complete_flat, check_remark_iso, detect, BundleConfig, CompleteFlatReport,
    DetectorEntry, DetectorKind, RemarkIsoReport, Verdict, DEFAULT_GUARD,
};
use gorenstein_core::dualizing::{check_matlis_dual, DualizingReport};
use gorenstein_core::error::{DetectorError, PresentationError, ResolveError};
use gorenstein_core::linalg::PrimeField;
use gorenstein_core::presentation::{parse_poly, RingPresentation, DEFAULT_DIM_CAP};
use gorenstein_core::resolve::{betti_gorenstein_screen, ScreenVerdict, DEFAULT_BUDGET, DEFAULT_DEPTH};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_INPUT: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

/// Bumped whenever a report field changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Syntax(String),
    #[error("{0}")]
    Invalid(String),
}

/// One ring, as written in a `.toml` spec file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecFile {
    pub id: String,
    pub p: u32,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<String>>,
    /// `structure[i][j]` is the coordinate vector of `e_i * e_j`, with `e_0 = 1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guard: Option<usize>,
}

impl RingSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let spec: RingSpecFile = toml::from_str(text).map_err(|e| SpecError::Syntax(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self, SpecError> {
        let text = fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<(), SpecError> {
        if self.id.trim().is_empty() {
            return Err(SpecError::Invalid("`id` must not be empty".into()));
        }
        match (&self.relations, &self.structure) {
            (Some(_), None) => {
                if self.vars.is_empty() {
                    return Err(SpecError::Invalid("`relations` needs a nonempty `vars` list".into()));
                }
                if self.labels.is_some() {
                    return Err(SpecError::Invalid("`labels` only applies to `structure`".into()));
                }
            }
            (None, Some(_)) => {}
            (Some(_), Some(_)) => {
                return Err(SpecError::Invalid(
                    "give either `relations` or `structure`, not both".into(),
                ));
            }
            (None, None) => {
                return Err(SpecError::Invalid(
                    "one of `relations` or `structure` is required".into(),
                ))
            }
        }
        Ok(())
    }

    /// Builds the algebra. Errors carry the exit code they map to.
    pub fn algebra(&self) -> Result<FinLocalAlgebra, (i32, String)> {
        let input = |e: &dyn std::fmt::Display| (EXIT_INPUT, e.to_string());
        if let Some(rels) = &self.relations {
            let pres = RingPresentation::parse(self.p, &self.vars, rels).map_err(|e| {
                let (code, msg) = presentation_failure(&e);
                match (&e, self.failing_relation()) {
                    (PresentationError::Parse(_), Some(r)) => (code, format!("relation `{r}`: {msg}")),
                    _ => (code, msg),
                }
            })?;
            FinLocalAlgebra::from_presentation(&pres, DEFAULT_DIM_CAP).map_err(|e| presentation_failure(&e))
        } else {
            let structure = self.structure.clone().unwrap_or_default();
            let field = PrimeField::new(self.p).map_err(|e| input(&e))?;
            let labels = match &self.labels {
                Some(l) => l.clone(),
                None => (0..structure.len()).map(|i| format!("e{i}")).collect(),
            };
            FinLocalAlgebra::new(field, labels, structure).map_err(|e| input(&e))
        }
    }
}

impl RingSpecFile {
    fn failing_relation(&self) -> Option<&str> {
        let field = PrimeField::new(self.p).ok()?;
        self.relations
            .as_ref()?
            .iter()
            .find(|r| parse_poly(r, &self.vars, field).is_err())
            .map(String::as_str)
    }
}

fn presentation_failure(e: &PresentationError) -> (i32, String) {
    let code = match e {
        PresentationError::IterationCap(_) | PresentationError::DimensionCap { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    };
    (code, e.to_string())
}

/// Command-line overrides. `None` falls back to the ring file, then to
/// the defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunFlags {
    pub depth: Option<usize>,
    pub guard: Option<usize>,
    pub detectors: Option<Vec<DetectorKind>>,
    pub budget: Option<usize>,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Settings {
    pub depth: usize,
    pub guard: usize,
    pub budget: usize,
    pub detectors: Vec<DetectorKind>,
}

impl RunFlags {
    pub fn resolve(&self, spec: Option<&RingSpecFile>) -> Settings {
        let mut detectors = self.detectors.clone().unwrap_or_else(|| DetectorKind::ALL.to_vec());
        detectors.sort();
        detectors.dedup();
        Settings {
            depth: self.depth.or(spec.and_then(|s| s.depth)).unwrap_or(DEFAULT_DEPTH),
            guard: self.guard.or(spec.and_then(|s| s.guard)).unwrap_or(DEFAULT_GUARD),
            budget: self.budget.unwrap_or(DEFAULT_BUDGET),
            detectors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub p: u32,
    pub dim: usize,
    pub labels: Vec<String>,
    pub embedding_dim: usize,
    pub socle_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenSummary {
    pub verdict: ScreenVerdict,
    /// Betti numbers of E, so `betti[0]` is the type of R.
    pub betti: Vec<usize>,
    pub terminated: bool,
    pub type_mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectorRecord {
    #[serde(flatten)]
    pub entry: DetectorEntry,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonMaps {
    pub chi_p_iso: bool,
    pub evaluation_iso: bool,
    pub chi_e_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportError {
    pub stage: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub ring_id: String,
    pub settings: Settings,
    pub algebra: Option<AlgebraSummary>,
    pub screen: Option<ScreenSummary>,
    pub dualizing: Option<DualizingReport>,
    pub oracle: Option<Verdict>,
    pub detectors: Vec<DetectorRecord>,
    pub maps: Option<ComparisonMaps>,
    pub remark_iso: Option<RemarkIsoReport>,
    pub complete_flat: Option<CompleteFlatReport>,
    pub consistent: bool,
    pub warnings: Vec<String>,
    pub skipped: Vec<String>,
    pub error: Option<ReportError>,
    pub total_millis: u64,
    pub exit_code: i32,
}

impl ReportDocument {
    fn empty(ring_id: String, settings: Settings) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            ring_id,
            settings,
            algebra: None,
            screen: None,
            dualizing: None,
            oracle: None,
            detectors: Vec::new(),
            maps: None,
            remark_iso: None,
            complete_flat: None,
            consistent: true,
            warnings: Vec::new(),
            skipped: Vec::new(),
            error: None,
            total_millis: 0,
            exit_code: EXIT_OK,
        }
    }

    fn fail(mut self, stage: &str, code: i32, message: String) -> Self {
        if code == EXIT_INCONSISTENT {
            self.consistent = false;
        }
        self.error = Some(ReportError {
            stage: stage.into(),
            message,
        });
        self.exit_code = code;
        self
    }

    pub fn verdict(&self, kind: DetectorKind) -> Option<Verdict> {
        self.detectors
            .iter()
            .find(|d| d.entry.detector == kind)
            .map(|d| d.entry.verdict)
    }
}

fn detector_failure(e: &DetectorError) -> i32 {
    match e {
        DetectorError::Resolve(ResolveError::Budget { .. }) => EXIT_RESOURCE,
        DetectorError::Resolve(ResolveError::BadDepth) | DetectorError::BadDepth(_) => EXIT_INPUT,
        _ => EXIT_INCONSISTENT,
    }
}

fn is_budget(e: &DetectorError) -> bool {
    matches!(e, DetectorError::Resolve(ResolveError::Budget { .. }))
}

struct Clock {
    on: bool,
    start: Instant,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock {
            on,
            start: Instant::now(),
        }
    }

    fn millis(&self) -> u64 {
        if self.on {
            self.start.elapsed().as_millis() as u64
        } else {
            0
        }
    }
}

/// Reads and runs one spec file. Unreadable or malformed files give a
/// report with exit code 4 whose id is the file stem.
pub fn run_spec(path: &Path, flags: &RunFlags) -> ReportDocument {
    match RingSpecFile::load(path) {
        Ok(spec) => run_ring(&spec, flags),
        Err(e) => {
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            ReportDocument::empty(id, flags.resolve(None)).fail("spec", EXIT_INPUT, e.to_string())
        }
    }
}

/// parse, algebra, dualizing checks, bundle, detectors, aggregate.
pub fn run_ring(spec: &RingSpecFile, flags: &RunFlags) -> ReportDocument {
    let total = Clock::new(flags.timings);
    let settings = flags.resolve(Some(spec));
    let mut doc = ReportDocument::empty(spec.id.clone(), settings.clone());
    doc = pipeline(doc, spec, &settings, flags.timings);
    doc.total_millis = total.millis();
    doc
}

fn pipeline(mut doc: ReportDocument, spec: &RingSpecFile, s: &Settings, timings: bool) -> ReportDocument {
    if s.depth < 2 {
        return doc.fail(
            "settings",
            EXIT_INPUT,
            format!("depth must be at least 2, got {}", s.depth),
        );
    }
    let alg = match spec.algebra() {
        Ok(a) => Arc::new(a),
        Err((code, msg)) => return doc.fail("algebra", code, msg),
    };
    doc.algebra = Some(AlgebraSummary {
        p: alg.field().p(),
        dim: alg.dim(),
        labels: alg.labels().to_vec(),
        embedding_dim: alg.embedding_dim(),
        socle_dim: alg.socle_dim(),
    });
    let socle_gorenstein = alg.gorenstein_socle_oracle();
    doc.oracle = Some(Verdict::from_oracle(socle_gorenstein));

    match betti_gorenstein_screen(&alg, s.depth, s.budget) {
        Ok(screen) => {
            let r = &screen.resolution;
            doc.screen = Some(ScreenSummary {
                verdict: screen.verdict,
                betti: r.betti.clone(),
                terminated: r.terminated,
                type_mu: r.betti[0],
            });
        }
        Err(e) => {
            let msg = e.to_string();
            return doc.fail("screen", detector_failure(&e.into()), msg);
        }
    }

    match check_matlis_dual(&alg, s.depth, s.budget) {
        Ok(d) => {
            if !d.passed() {
                doc.consistent = false;
                doc.warnings
                    .extend(d.violations.iter().map(|v| format!("dualizing: {v}")));
            }
            doc.dualizing = Some(d);
        }
        Err(e) => return doc.fail("dualizing", detector_failure(&e), e.to_string()),
    }

    let config = BundleConfig {
        depth: s.depth,
        guard: s.guard,
        budget: s.budget,
    };
    let bundle = match build_bundle(&alg, config) {
        Ok(b) => Some(b),
        Err(e) if is_budget(&e) => {
            doc.skipped.push(format!("test complexes not built: {e}"));
            None
        }
        Err(e) => return doc.fail("bundle", detector_failure(&e), e.to_string()),
    };

    let mut entries = Vec::new();
    let mut millis = Vec::new();
    for &kind in &s.detectors {
        let clock = Clock::new(timings);
        let entry = match &bundle {
            Some(b) => match detect(b, kind) {
                Ok(e) => e,
                Err(e) if is_budget(&e) => {
                    doc.skipped.push(format!("{kind}: {e}"));
                    inconclusive(kind, s.depth)
                }
                Err(e) => return doc.fail(kind.name(), detector_failure(&e), e.to_string()),
            },
            None => inconclusive(kind, s.depth),
        };
        millis.push(clock.millis());
        entries.push(entry);
    }

    if let Some(b) = &bundle {
        doc.maps = Some(ComparisonMaps {
            chi_p_iso: b.chi_p.is_iso(),
            evaluation_iso: b.evaluation.map.is_iso(),
            chi_e_iso: b.chi_e.is_iso(),
        });
        match check_remark_iso(b) {
            Ok(r) => {
                if !r.dims_match || r.isomorphism == Some(false) {
                    doc.consistent = false;
                    doc.warnings.push("K and Σ Hom(M, E) disagree".into());
                }
                doc.remark_iso = Some(r);
            }
            Err(e) => return doc.fail("remark_iso", detector_failure(&e), e.to_string()),
        }
        if let Some(kt) = entries.iter().find(|e| e.detector == DetectorKind::KTensor) {
            match check_complete_flat(b, kt) {
                Ok(c) => {
                    if !c.equivalent {
                        doc.consistent = false;
                        doc.warnings
                            .push("complete-flat criterion disagrees with the screen".into());
                    }
                    for (name, ok) in &c.tensor_lemma {
                        if !ok {
                            doc.consistent = false;
                            doc.warnings.push(format!("{name} is not acyclic"));
                        }
                    }
                    doc.complete_flat = Some(c);
                }
                Err(e) => return doc.fail("complete_flat", detector_failure(&e), e.to_string()),
            }
        }
    }

    let report = aggregate(&doc.ring_id, entries, socle_gorenstein);
    doc.consistent &= report.consistent;
    doc.warnings.extend(report.warnings);
    doc.detectors = report
        .entries
        .into_iter()
        .zip(millis)
        .map(|(entry, millis)| DetectorRecord { entry, millis })
        .collect();

    doc.exit_code = if !doc.consistent {
        EXIT_INCONSISTENT
    } else if doc.detectors.iter().all(|d| d.entry.verdict == Verdict::Inconclusive) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    };
    doc
}

fn inconclusive(kind: DetectorKind, depth: usize) -> DetectorEntry {
    DetectorEntry {
        detector: kind,
        verdict: Verdict::Inconclusive,
        evidence: Vec::new(),
        witness: None,
        depth,
        stable: false,
    }
}

/// One line of the corpus table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub ring_id: String,
    pub file: String,
    pub oracle: String,
    pub k_tensor: String,
    pub k_hom: String,
    pub m: String,
    pub cor_k: String,
    pub consistent: bool,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub rows: Vec<CorpusRow>,
    pub passed: bool,
    pub exit_code: i32,
    #[serde(skip)]
    pub reports: Vec<ReportDocument>,
}

impl CorpusRow {
    fn from_report(doc: &ReportDocument, file: &Path) -> Self {
        let cell = |k: DetectorKind| {
            doc.verdict(k)
                .map(|v| v.name().to_string())
                .unwrap_or_else(|| "-".into())
        };
        let oracle = match (doc.oracle, doc.exit_code) {
            (Some(v), _) => v.name().to_string(),
            (None, EXIT_INPUT) => "input_error".into(),
            (None, EXIT_RESOURCE) => "resource_cap".into(),
            (None, _) => "error".into(),
        };
        CorpusRow {
            ring_id: doc.ring_id.clone(),
            file: file
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default(),
            oracle,
            k_tensor: cell(DetectorKind::KTensor),
            k_hom: cell(DetectorKind::KHom),
            m: cell(DetectorKind::M),
            cor_k: cell(DetectorKind::CorK),
            consistent: doc.consistent,
            exit_code: doc.exit_code,
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{:<12} oracle={:<14} k_tensor={:<14} k_hom={:<14} m={:<14} cor_k={:<14} consistent={} exit={}",
            self.ring_id, self.oracle, self.k_tensor, self.k_hom, self.m, self.cor_k, self.consistent, self.exit_code
        )
    }
}

/// Ranks exit codes for the corpus: inconsistency beats input errors,
/// which beat resource caps. Inconclusive rings do not fail a corpus.
fn severity(code: i32) -> u8 {
    match code {
        EXIT_INCONSISTENT => 3,
        EXIT_INPUT => 2,
        EXIT_RESOURCE => 1,
        _ => 0,
    }
}

/// Runs every `*.toml` file in `dir`, ordered by ring id.
pub fn run_corpus(dir: &Path, flags: &RunFlags) -> io::Result<CorpusSummary> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    let mut runs: Vec<(PathBuf, ReportDocument)> = files
        .into_iter()
        .map(|f| {
            let doc = run_spec(&f, flags);
            (f, doc)
        })
        .collect();
    runs.sort_by(|a, b| a.1.ring_id.cmp(&b.1.ring_id).then_with(|| a.0.cmp(&b.0)));
    let rows: Vec<CorpusRow> = runs.iter().map(|(f, d)| CorpusRow::from_report(d, f)).collect();
    let exit_code = rows
        .iter()
        .map(|r| r.exit_code)
        .max_by_key(|&c| severity(c))
        .filter(|&c| severity(c) > 0)
        .unwrap_or(EXIT_OK);
    Ok(CorpusSummary {
        passed: exit_code == EXIT_OK,
        exit_code,
        rows,
        reports: runs.into_iter().map(|r| r.1).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format '{s}' (expected json or csv)")),
        }
    }
}

pub const CSV_COLUMNS: [&str; 8] = [
    "ring_id",
    "detector",
    "verdict",
    "witness_degree",
    "witness_dim",
    "depth",
    "stable",
    "millis",
];

/// Serializes a report. CSV has one row per detector.
pub fn emit(report: &ReportDocument, format: Format) -> Vec<u8> {
    match format {
        Format::Json => json_bytes(report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS).expect("in-memory write");
            for d in &report.detectors {
                let e = &d.entry;
                let opt = |v: Option<String>| v.unwrap_or_default();
                w.write_record([
                    report.ring_id.clone(),
                    e.detector.name().to_string(),
                    e.verdict.name().to_string(),
                    opt(e.witness.map(|w| w.degree.to_string())),
                    opt(e.witness.map(|w| w.dim.to_string())),
                    e.depth.to_string(),
                    e.stable.to_string(),
                    d.millis.to_string(),
                ])
                .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

pub const CORPUS_CSV_COLUMNS: [&str; 9] = [
    "ring_id",
    "file",
    "oracle",
    "k_tensor",
    "k_hom",
    "m",
    "cor_k",
    "consistent",
    "exit_code",
];

pub fn emit_corpus(summary: &CorpusSummary, format: Format) -> Vec<u8> {
    match format {
        Format::Json => json_bytes(summary),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(CORPUS_CSV_COLUMNS).expect("in-memory write");
            for r in &summary.rows {
                w.serialize(r).expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

fn json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("reports serialize");
    out.push(b'\n');
    out
}
