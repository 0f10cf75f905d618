//! Gorenstein detectors built on the test complexes
//! K = Cone(χ^P : R -> Hom(P, P)), M = Cone(ε : Hom(P, E) ⊗ P -> E) and
//! C = Cone(χ^E : R -> Hom(E, E)).
//!
//! Each detector reports two kinds of data. The evidence table lists
//! `dim H_n` of the windowed complex at every trusted degree. The witness
//! is a persistent class: with `K_J = Cone(R -> Hom(σ_{≤J} P, P))` the
//! complexes `K_J ⊗ E` form an inverse system whose limit is `K ⊗ E`,
//! and `M_J = Cone(Hom(P, E) ⊗ σ_{≤J} P -> E)` a direct system with
//! colimit `M`. The witness dimension at depth N is the rank of the map
//! on `H_n` between level N and the probe level, which is unaffected by
//! truncation junk that dies further along the system.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::FinLocalAlgebra;
use crate::complex::{cone_map, mapping_cone, ChainComplex, ChainMap, Morphism};
use crate::error::{DetectorError, ResolveError};
use crate::homalg::{
    dualize, evaluation, evaluation_on, hom_complex, hom_map_first, hom_map_second, homothety, tensor_complex,
    tensor_evaluation_omega, tensor_map_first, tensor_map_second, unit_complex, BifunctorResult, Evaluation,
};
use crate::module::{matlis_dual, FinModule};
use crate::resolve::{minimal_resolution, FreeResolution, DEFAULT_BUDGET, DEFAULT_DEPTH};
use crate::rmatrix::{one, RMatrix};

/// Level of the truncation systems that witnesses are measured against.
pub const PROBE_LEVEL: i32 = 1;
pub const DEFAULT_GUARD: usize = 1;
/// Depth of the explicit check of `K ≅ Σ Hom(M, E)`.
pub const REMARK_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetectorKind {
    /// `K ⊗ E`.
    KTensor,
    /// `Hom(K, R)`.
    KHom,
    /// `Hom(E, M)`.
    M,
    /// `Hom(E, Hom(K, E))`.
    CorK,
}

impl DetectorKind {
    pub const ALL: [DetectorKind; 4] = [
        DetectorKind::KTensor,
        DetectorKind::KHom,
        DetectorKind::M,
        DetectorKind::CorK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetectorKind::KTensor => "k_tensor",
            DetectorKind::KHom => "k_hom",
            DetectorKind::M => "m",
            DetectorKind::CorK => "cor_k",
        }
    }
}

impl fmt::Display for DetectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DetectorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DetectorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown detector '{s}' (expected k_tensor, k_hom, m or cor_k)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Gorenstein,
    NotGorenstein,
    Inconclusive,
}

impl Verdict {
    pub fn from_oracle(gorenstein: bool) -> Verdict {
        if gorenstein {
            Verdict::Gorenstein
        } else {
            Verdict::NotGorenstein
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Gorenstein => "gorenstein",
            Verdict::NotGorenstein => "not_gorenstein",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// A persistent homology class: `dim` at depth N, `previous_dim` at
/// depth N - 1, both measured against [`PROBE_LEVEL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub degree: i32,
    pub dim: usize,
    pub previous_dim: usize,
    pub probe_level: i32,
}

impl Witness {
    pub fn is_stable(&self) -> bool {
        self.dim > 0 && self.dim == self.previous_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectorEntry {
    pub detector: DetectorKind,
    pub verdict: Verdict,
    /// `(degree, dim H)` over the trusted window at depth N.
    pub evidence: Vec<(i32, usize)>,
    pub witness: Option<Witness>,
    pub depth: usize,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectorReport {
    pub ring_id: String,
    pub entries: Vec<DetectorEntry>,
    pub oracle: Verdict,
    pub consistent: bool,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleConfig {
    pub depth: usize,
    pub guard: usize,
    pub budget: usize,
}

impl Default for BundleConfig {
    fn default() -> Self {
        Self {
            depth: DEFAULT_DEPTH,
            guard: DEFAULT_GUARD,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// P resolving E to depth N, and the complexes K, M, C built from it.
pub struct TestComplexBundle {
    pub algebra: Arc<FinLocalAlgebra>,
    pub config: BundleConfig,
    pub dualizing: FinModule,
    pub resolution: FreeResolution,
    /// `Hom(P, P)`.
    pub end: BifunctorResult,
    pub chi_p: ChainMap,
    pub k: ChainComplex,
    pub evaluation: Evaluation,
    pub m: ChainComplex,
    pub chi_e: ChainMap,
    pub c: ChainComplex,
}

impl TestComplexBundle {
    pub fn p(&self) -> &ChainComplex {
        &self.resolution.complex
    }

    pub fn trusted_k(&self) -> RangeInclusive<i32> {
        self.k.trusted(self.config.guard)
    }

    pub fn trusted_m(&self) -> RangeInclusive<i32> {
        self.m.trusted(self.config.guard)
    }

    fn e_complex(&self) -> ChainComplex {
        ChainComplex::concentrated(&self.dualizing, 0)
    }
}

/// k-dimension of `Hom(P, P)` for Betti numbers `b` over an algebra of
/// dimension `d`, an upper bound used before building anything.
pub fn end_size_estimate(d: usize, betti: &[usize]) -> usize {
    let s: usize = betti.iter().sum();
    d.saturating_mul(s).saturating_mul(s)
}

pub fn build_bundle(alg: &Arc<FinLocalAlgebra>, config: BundleConfig) -> Result<TestComplexBundle, DetectorError> {
    if config.depth < 2 {
        return Err(DetectorError::BadDepth(config.depth));
    }
    let e = matlis_dual(alg);
    let resolution = minimal_resolution(&e, config.depth, config.budget)?;
    let needed = end_size_estimate(alg.dim(), &resolution.betti);
    if needed > config.budget {
        return Err(ResolveError::Budget {
            needed,
            budget: config.budget,
        }
        .into());
    }
    let p = &resolution.complex;
    let end = hom_complex(p, p)?;
    let chi_p = homothety(p, &end)?;
    let k = mapping_cone(&chi_p)?;
    for n in k.degrees() {
        let expect = end.complex.dim(n) + if n == 1 { alg.dim() } else { 0 };
        if k.dim(n) != expect {
            return Err(DetectorError::Inconsistent(format!(
                "K_{n} has dimension {}, expected {expect}",
                k.dim(n)
            )));
        }
    }
    let ec = ChainComplex::concentrated(&e, 0);
    let ev = evaluation(p, &ec)?;
    let m = mapping_cone(&ev.map)?;
    let ee = hom_complex(&ec, &ec)?;
    let chi_e = homothety(&ec, &ee)?;
    let c = mapping_cone(&chi_e)?;
    Ok(TestComplexBundle {
        algebra: alg.clone(),
        config,
        dualizing: e,
        resolution,
        end,
        chi_p,
        k,
        evaluation: ev,
        m,
        chi_e,
        c,
    })
}

fn table(x: &ChainComplex, window: RangeInclusive<i32>) -> Vec<(i32, usize)> {
    window.map(|n| (n, x.homology_dim(n))).collect()
}

/// Degrees by increasing absolute value, ties broken by the smaller degree.
pub fn search_order(window: RangeInclusive<i32>) -> Vec<i32> {
    let mut v: Vec<i32> = window.collect();
    v.sort_by_key(|&n| (n.abs(), n));
    v
}

/// Window homology of `K ⊗ E`, with the route through Lemma ev,
/// `K ⊗ E ≅ Cone(E -> Hom(P, P ⊗ E))`, checked against it.
pub fn k_tensor_window(bundle: &TestComplexBundle) -> Result<(ChainComplex, Vec<(i32, usize)>), DetectorError> {
    let ec = bundle.e_complex();
    let direct = tensor_complex(&bundle.k, &ec)?.complex;
    let p = bundle.p();
    let chi_e = tensor_map_first(&bundle.chi_p, &ec)?;
    let omega = tensor_evaluation_omega(p, p, &ec)?;
    let via = chi_e.map.then(&omega.map)?;
    let routed = mapping_cone(&via)?;
    let g = bundle.config.guard;
    let evidence = table(&direct, direct.trusted(g));
    let rt = routed.trusted(g);
    for &(n, h) in &evidence {
        if rt.contains(&n) && routed.homology_dim(n) != h {
            return Err(DetectorError::Inconsistent(format!(
                "K ⊗ E: direct route gives dim H_{n} = {h}, the ω route gives {}",
                routed.homology_dim(n)
            )));
        }
    }
    Ok((direct, evidence))
}

pub fn detect_k_tensor(bundle: &TestComplexBundle) -> Result<DetectorEntry, DetectorError> {
    let (direct, evidence) = k_tensor_window(bundle)?;
    entry(
        bundle,
        DetectorKind::KTensor,
        evidence,
        direct.trusted(bundle.config.guard),
    )
}

pub fn detect_k_hom(bundle: &TestComplexBundle) -> Result<DetectorEntry, DetectorError> {
    let g = bundle.config.guard;
    let hk = hom_complex(&bundle.k, &unit_complex(&bundle.algebra))?.complex;
    let evidence = table(&hk, hk.trusted(g));
    let (ke, _) = k_tensor_window(bundle)?;
    let kt = ke.trusted(g);
    for &(i, h) in &evidence {
        if kt.contains(&-i) && ke.homology_dim(-i) != h {
            return Err(DetectorError::Inconsistent(format!(
                "dim H_{i}(Hom(K, R)) = {h} but dim H_{}(K ⊗ E) = {}",
                -i,
                ke.homology_dim(-i)
            )));
        }
    }
    entry(bundle, DetectorKind::KHom, evidence, hk.trusted(g))
}

pub fn detect_m(bundle: &TestComplexBundle) -> Result<DetectorEntry, DetectorError> {
    let g = bundle.config.guard;
    let hm = hom_complex(&bundle.e_complex(), &bundle.m)?.complex;
    let evidence = table(&hm, hm.trusted(g));
    entry(bundle, DetectorKind::M, evidence, hm.trusted(g))
}

pub fn detect_cor_k(bundle: &TestComplexBundle) -> Result<DetectorEntry, DetectorError> {
    let g = bundle.config.guard;
    let ec = bundle.e_complex();
    let hke = dualize(&bundle.k, &bundle.dualizing)?;
    let x = hom_complex(&ec, &hke.complex)?.complex;
    let evidence = table(&x, x.trusted(g));
    let ke = tensor_complex(&bundle.k, &ec)?;
    let curried = hom_complex(&ke.complex, &ec)?.complex;
    let ct = curried.trusted(g);
    for &(n, h) in &evidence {
        if ct.contains(&n) && curried.homology_dim(n) != h {
            return Err(DetectorError::Inconsistent(format!(
                "dim H_{n}(Hom(E, Hom(K, E))) = {h} but dim H_{n}(Hom(K ⊗ E, E)) = {}",
                curried.homology_dim(n)
            )));
        }
    }
    entry(bundle, DetectorKind::CorK, evidence, x.trusted(g))
}

pub fn detect(bundle: &TestComplexBundle, kind: DetectorKind) -> Result<DetectorEntry, DetectorError> {
    match kind {
        DetectorKind::KTensor => detect_k_tensor(bundle),
        DetectorKind::KHom => detect_k_hom(bundle),
        DetectorKind::M => detect_m(bundle),
        DetectorKind::CorK => detect_cor_k(bundle),
    }
}

fn entry(
    bundle: &TestComplexBundle,
    kind: DetectorKind,
    evidence: Vec<(i32, usize)>,
    window: RangeInclusive<i32>,
) -> Result<DetectorEntry, DetectorError> {
    let witness = search_witness(bundle, kind, window)?;
    let verdict = if witness.is_some() {
        Verdict::NotGorenstein
    } else if bundle.resolution.terminated {
        Verdict::Gorenstein
    } else {
        Verdict::Inconclusive
    };
    let stable = witness.is_some() || bundle.resolution.terminated;
    Ok(DetectorEntry {
        detector: kind,
        verdict,
        evidence,
        witness,
        depth: bundle.config.depth,
        stable,
    })
}

/// The first degree, in [`search_order`], carrying a nonzero persistent
/// class of the same dimension at depths N and N - 1. The search stops at
/// the first degree whose systems would exceed the budget.
pub fn search_witness(
    bundle: &TestComplexBundle,
    kind: DetectorKind,
    window: RangeInclusive<i32>,
) -> Result<Option<Witness>, DetectorError> {
    let depth = bundle.config.depth as i32;
    for n in search_order(window) {
        let tower = match Tower::new(bundle, n) {
            Ok(t) => t,
            Err(DetectorError::Resolve(ResolveError::Budget { .. })) => return Ok(None),
            Err(e) => return Err(e),
        };
        let dim = tower.persistent_rank(kind, n, depth)?;
        if dim == 0 {
            continue;
        }
        let previous_dim = tower.persistent_rank(kind, n, depth - 1)?;
        let w = Witness {
            degree: n,
            dim,
            previous_dim,
            probe_level: PROBE_LEVEL,
        };
        if w.is_stable() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// The truncation systems at one degree, over a resolution deep enough
/// that every level is computed exactly there.
pub struct Tower {
    algebra: Arc<FinLocalAlgebra>,
    p: ChainComplex,
    e: ChainComplex,
}

impl Tower {
    pub fn new(bundle: &TestComplexBundle, degree: i32) -> Result<Tower, DetectorError> {
        let cfg = bundle.config;
        let len = cfg.depth + degree.unsigned_abs() as usize + 1;
        let res = minimal_resolution(&bundle.dualizing, len, cfg.budget)?;
        let top: usize = res.betti.iter().take(cfg.depth + 1).sum();
        let all: usize = res.betti.iter().sum();
        let needed = bundle.algebra.dim().saturating_mul(top).saturating_mul(all);
        if needed > cfg.budget {
            return Err(ResolveError::Budget {
                needed,
                budget: cfg.budget,
            }
            .into());
        }
        Ok(Tower {
            algebra: bundle.algebra.clone(),
            p: res.complex,
            e: ChainComplex::concentrated(&bundle.dualizing, 0),
        })
    }

    fn identity(x: &ChainComplex) -> Result<ChainMap, DetectorError> {
        let comps = x.degrees().map(|n| Morphism::identity(&x.module(n))).collect();
        Ok(ChainMap::new(x.clone(), x.clone(), x.lo(), comps)?)
    }

    /// `K_level -> K_probe`, restriction along `σ_{≤probe} P ⊂ σ_{≤level} P`.
    pub fn k_restriction(&self, level: i32) -> Result<ChainMap, DetectorError> {
        let (top, _) = self.p.brutal_below(level)?;
        let (low, iota) = top.brutal_below(PROBE_LEVEL)?;
        let cone = |ps: &ChainComplex| -> Result<(ChainMap, ChainComplex), DetectorError> {
            let h = hom_complex(ps, &self.p)?;
            let chi = homothety(ps, &h)?;
            let k = mapping_cone(&chi)?;
            Ok((chi, k))
        };
        let (chi_top, k_top) = cone(&top)?;
        let (chi_low, k_low) = cone(&low)?;
        let restr = hom_map_first(&iota, &self.p)?;
        let id = Self::identity(&unit_complex(&self.algebra))?;
        Ok(cone_map(&chi_top, &chi_low, &id, &restr.map, &k_top, &k_low)?)
    }

    /// `M_probe -> M_level`, induced by `σ_{≤probe} P ⊂ σ_{≤level} P`.
    pub fn m_inclusion(&self, level: i32) -> Result<ChainMap, DetectorError> {
        let (top, _) = self.p.brutal_below(level)?;
        let (low, iota) = top.brutal_below(PROBE_LEVEL)?;
        let ev_top = evaluation_on(&self.p, &top, &self.e)?;
        let ev_low = evaluation_on(&self.p, &low, &self.e)?;
        let incl = tensor_map_second(&ev_low.hom.complex, &iota)?;
        let id = Self::identity(&self.e)?;
        let m_low = mapping_cone(&ev_low.map)?;
        let m_top = mapping_cone(&ev_top.map)?;
        Ok(cone_map(&ev_low.map, &ev_top.map, &incl.map, &id, &m_low, &m_top)?)
    }

    /// Rank of `H_n` between level `level` and the probe level.
    pub fn persistent_rank(&self, kind: DetectorKind, n: i32, level: i32) -> Result<usize, DetectorError> {
        let map = match kind {
            DetectorKind::KTensor => tensor_map_first(&self.k_restriction(level)?, &self.e)?.map,
            DetectorKind::KHom => hom_map_first(&self.k_restriction(level)?, &unit_complex(&self.algebra))?.map,
            DetectorKind::CorK => {
                let dual = hom_map_first(&self.k_restriction(level)?, &self.e)?;
                hom_map_second(&self.e, &dual.map)?.map
            }
            DetectorKind::M => hom_map_second(&self.e, &self.m_inclusion(level)?)?.map,
        };
        Ok(map.induced_rank(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkIsoReport {
    /// `dim K_n = dim Hom(M, E)_{n-1}` for every n at depth N.
    pub dims_match: bool,
    /// Result of the explicit check at [`REMARK_DEPTH`], when run.
    pub isomorphism: Option<bool>,
}

/// The comparison `K -> Σ Hom(M, E)`: `ψ ∈ Hom(P_i, P_{i+n})` goes to
/// `α ⊗ p ↦ (-1)^{n i} α(ψ p)` and `r ∈ R` to multiplication by r on E.
pub fn remark_comparison(p: &ChainComplex, e: &FinModule) -> Result<ChainMap, DetectorError> {
    let alg = p.algebra().clone();
    let f = alg.field();
    let d = alg.dim();
    let end = hom_complex(p, p)?;
    let chi = homothety(p, &end)?;
    let k = mapping_cone(&chi)?;
    let ec = ChainComplex::concentrated(e, 0);
    let ev = evaluation(p, &ec)?;
    let m = mapping_cone(&ev.map)?;
    let hm = hom_complex(&m, &ec)?;
    let target = hm.complex.suspension();
    let copies = |x: &FinModule| x.shape().map_or(0, |s| s.1);
    let mut comps = Vec::new();
    for n in k.degrees() {
        let rows = copies(&target.module(n));
        let mut r = RMatrix::zeros(crate::rmatrix::Base::Free, d, rows, copies(&k.module(n)));
        let e_part = usize::from(n == 1);
        for s in end.slots(n) {
            let i = s.first;
            let (bi, bj) = (copies(&p.module(i)), copies(&p.module(i + n)));
            let Some(ts) = ev.tensor.slot(-n, -(i + n)) else {
                return Err(DetectorError::Inconsistent(format!(
                    "no slot for Hom(P_{}, E) ⊗ P_{i}",
                    i + n
                )));
            };
            let sg = f.sign((n * i) as i64);
            for ls in 0..bi {
                for lt in 0..bj {
                    let col = s.copy_offset + ls * bj + lt;
                    let row = e_part + ts.copy_offset + lt * bi + ls;
                    r.add_entry(f, row, col, &one(d), sg);
                }
            }
        }
        if n == 1 {
            let col = copies(&k.module(1)) - 1;
            r.add_entry(f, 0, col, &one(d), 1);
        }
        comps.push(Morphism::Structured(r));
    }
    Ok(ChainMap::new(k.clone(), target, k.lo(), comps)?)
}

pub fn check_remark_iso(bundle: &TestComplexBundle) -> Result<RemarkIsoReport, DetectorError> {
    let ec = bundle.e_complex();
    let hm = hom_complex(&bundle.m, &ec)?;
    let sh = hm.complex.suspension();
    let k = &bundle.k;
    let lo = k.lo().min(sh.lo());
    let hi = k.hi().max(sh.hi());
    let dims_match = (lo..=hi).all(|n| k.dim(n) == sh.dim(n));
    let isomorphism = if bundle.algebra.embedding_dim() <= 2 {
        let p = bundle.p();
        let p3 = p.truncate(p.lo(), REMARK_DEPTH as i32);
        Some(remark_comparison(&p3, &bundle.dualizing)?.is_iso())
    } else {
        None
    };
    Ok(RemarkIsoReport {
        dims_match,
        isomorphism,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteFlatReport {
    /// The resolution of E terminated.
    pub screen_gorenstein: bool,
    /// Every trusted `H_n(K ⊗ E)` vanishes.
    pub k_tensor_zero: bool,
    /// No persistent class of `K ⊗ E` was found.
    pub complete_flat: bool,
    pub equivalent: bool,
    /// `C ⊗ E` and `C ⊗ M'` for the modules `M'` tried, all acyclic.
    pub tensor_lemma: Vec<(String, bool)>,
}

/// Over an artinian ring every injective is a sum of copies of E, so K is
/// a complete flat resolution exactly when `K ⊗ E` is acyclic.
pub fn check_complete_flat(
    bundle: &TestComplexBundle,
    k_tensor: &DetectorEntry,
) -> Result<CompleteFlatReport, DetectorError> {
    let screen_gorenstein = bundle.resolution.terminated;
    let k_tensor_zero = k_tensor.evidence.iter().all(|e| e.1 == 0);
    let complete_flat = k_tensor.witness.is_none();
    let equivalent = screen_gorenstein == k_tensor_zero && k_tensor_zero == complete_flat;
    let tensor_lemma = tensor_lemma_instances(bundle)?;
    Ok(CompleteFlatReport {
        screen_gorenstein,
        k_tensor_zero,
        complete_flat,
        equivalent,
        tensor_lemma,
    })
}

/// The modules tensored with C in [`check_complete_flat`].
pub fn test_modules(alg: &Arc<FinLocalAlgebra>) -> Vec<(String, FinModule)> {
    vec![
        ("R".into(), FinModule::free(alg.clone(), 1)),
        ("E".into(), matlis_dual(alg)),
        ("k".into(), FinModule::residue_field(alg.clone())),
    ]
}

fn tensor_lemma_instances(bundle: &TestComplexBundle) -> Result<Vec<(String, bool)>, DetectorError> {
    let g = bundle.config.guard;
    let mut out = Vec::new();
    for (name, m) in test_modules(&bundle.algebra) {
        let t = tensor_complex(&bundle.c, &ChainComplex::concentrated(&m, 0))?.complex;
        let acyclic = t.acyclicity_report(g).iter().all(|e| e.1 == 0);
        out.push((format!("C ⊗ {name}"), acyclic));
    }
    Ok(out)
}

/// Compares every decided verdict with the socle oracle.
pub fn aggregate(ring_id: &str, entries: Vec<DetectorEntry>, socle_gorenstein: bool) -> DetectorReport {
    let oracle = Verdict::from_oracle(socle_gorenstein);
    let mut warnings = Vec::new();
    let mut consistent = true;
    for e in &entries {
        match e.verdict {
            Verdict::Inconclusive => warnings.push(format!("{} is inconclusive at depth {}", e.detector, e.depth)),
            v if v != oracle => {
                consistent = false;
                warnings.push(format!(
                    "{} says {} but the socle oracle says {}; suspected implementation bug",
                    e.detector,
                    v.name(),
                    oracle.name()
                ));
            }
            _ => {}
        }
    }
    DetectorReport {
        ring_id: ring_id.to_string(),
        entries,
        oracle,
        consistent,
        warnings,
    }
}
