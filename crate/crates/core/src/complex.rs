//! Chain complexes of R-modules over a finite window of degrees.

use std::ops::RangeInclusive;
use std::sync::{Arc, OnceLock};

use crate::algebra::FinLocalAlgebra;
use crate::error::{ComplexError, LinalgError};
use crate::linalg::{BasisCoords, FieldMatrix, Quotient, SpanBuilder};
use crate::module::{cokernel_module, FinModule, ModuleMap};
use crate::rmatrix::{Base, RMatrix};

/// A map between two modules, stored densely or as an R-matrix between
/// sums of copies of R or E.
#[derive(Clone, Debug)]
pub enum Morphism {
    Dense(FieldMatrix),
    Structured(RMatrix),
}

impl Morphism {
    /// The zero map `source -> target`.
    pub fn zero(source: &FinModule, target: &FinModule) -> Morphism {
        let d = source.algebra().dim();
        match (source.shape(), target.shape()) {
            (Some((b1, a)), Some((b2, c))) if b1 == b2 || a == 0 || c == 0 => {
                let base = if a == 0 { b2 } else { b1 };
                Morphism::Structured(RMatrix::zeros(base, d, c, a))
            }
            _ => Morphism::Dense(FieldMatrix::zeros(source.field(), target.dim(), source.dim())),
        }
    }

    pub fn identity(m: &FinModule) -> Morphism {
        match m.shape() {
            Some((base, a)) => Morphism::Structured(RMatrix::identity(base, m.algebra().dim(), a)),
            None => Morphism::Dense(FieldMatrix::identity(m.field(), m.dim())),
        }
    }

    /// Shape of the k-linear matrix.
    pub fn k_shape(&self) -> (usize, usize) {
        match self {
            Morphism::Dense(m) => m.shape(),
            Morphism::Structured(r) => (r.rows() * r.algebra_dim(), r.cols() * r.algebra_dim()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Morphism::Dense(m) => m.is_zero(),
            Morphism::Structured(r) => r.is_zero(),
        }
    }

    pub fn realize(&self, alg: &FinLocalAlgebra) -> FieldMatrix {
        match self {
            Morphism::Dense(m) => m.clone(),
            Morphism::Structured(r) => r.realize(alg),
        }
    }

    pub fn rank(&self, alg: &FinLocalAlgebra) -> usize {
        match self {
            Morphism::Dense(m) => m.rank(),
            Morphism::Structured(r) => {
                if r.is_zero() {
                    0
                } else {
                    r.realize_transposed(alg).into_rank()
                }
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, alg: &FinLocalAlgebra, other: &Morphism) -> Result<Morphism, LinalgError> {
        match (self, other) {
            (Morphism::Structured(a), Morphism::Structured(b)) if a.cols() == b.rows() => {
                Ok(Morphism::Structured(a.mul(alg, b)))
            }
            _ => Ok(Morphism::Dense(self.realize(alg).mul(&other.realize(alg))?)),
        }
    }

    pub fn scale(&self, alg: &FinLocalAlgebra, c: u32) -> Morphism {
        match self {
            Morphism::Dense(m) => Morphism::Dense(m.scale(c)),
            Morphism::Structured(r) => Morphism::Structured(r.scale(alg.field(), c)),
        }
    }

    pub fn neg(&self, alg: &FinLocalAlgebra) -> Morphism {
        self.scale(alg, alg.field().neg(1))
    }

    pub fn to_module_map(&self, alg: &FinLocalAlgebra, source: &FinModule, target: &FinModule) -> ModuleMap {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: self.realize(alg),
        }
    }
}

/// Assembles a block morphism `⊕ cols -> ⊕ rows`. Blocks are
/// `(row block, column block, morphism, scalar)`. The result is
/// structured when every module is a sum over one common base and every
/// block is structured.
pub fn assemble(
    alg: &FinLocalAlgebra,
    rows: &[&FinModule],
    cols: &[&FinModule],
    blocks: &[(usize, usize, &Morphism, u32)],
) -> Morphism {
    let f = alg.field();
    let d = alg.dim();
    let common = common_base(rows.iter().chain(cols.iter()).copied());
    let all_structured = blocks
        .iter()
        .all(|b| matches!(b.2, Morphism::Structured(_)) || b.2.is_zero());
    if let (Some(base), true) = (common, all_structured) {
        let offsets = |ms: &[&FinModule]| -> Vec<usize> {
            ms.iter()
                .scan(0, |acc, m| {
                    let o = *acc;
                    *acc += m.shape().unwrap().1;
                    Some(o)
                })
                .collect()
        };
        let (ro, co) = (offsets(rows), offsets(cols));
        let nr = rows.iter().map(|m| m.shape().unwrap().1).sum();
        let nc = cols.iter().map(|m| m.shape().unwrap().1).sum();
        let mut out = RMatrix::zeros(base, d, nr, nc);
        for &(i, j, m, c) in blocks {
            if let Morphism::Structured(r) = m {
                out.add_block(f, ro[i], co[j], r, c);
            }
        }
        return Morphism::Structured(out);
    }
    let offsets = |ms: &[&FinModule]| -> Vec<usize> {
        ms.iter()
            .scan(0, |acc, m| {
                let o = *acc;
                *acc += m.dim();
                Some(o)
            })
            .collect()
    };
    let (ro, co) = (offsets(rows), offsets(cols));
    let nr = rows.iter().map(|m| m.dim()).sum();
    let nc = cols.iter().map(|m| m.dim()).sum();
    let mut out = FieldMatrix::zeros(f, nr, nc);
    for &(i, j, m, c) in blocks {
        if !m.is_zero() {
            out.add_scaled_block(ro[i], co[j], &m.realize(alg), c);
        }
    }
    Morphism::Dense(out)
}

fn common_base<'a>(ms: impl Iterator<Item = &'a FinModule>) -> Option<Base> {
    let mut base = None;
    for m in ms {
        match m.shape() {
            None => return None,
            Some((_, 0)) => {}
            Some((b, _)) => match base {
                None => base = Some(b),
                Some(b0) if b0 != b => return None,
                _ => {}
            },
        }
    }
    Some(base.unwrap_or(Base::Free))
}

/// A complex `X_hi -> ... -> X_lo`, zero outside `[lo, hi]`.
///
/// `lo_open`/`hi_open` mark edges where the window cuts off a longer
/// (possibly infinite) object; homology near an open edge is untrusted.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    algebra: Arc<FinLocalAlgebra>,
    lo: i32,
    modules: Arc<Vec<FinModule>>,
    /// `diffs[k]` is `∂_{lo+k+1}`.
    diffs: Arc<Vec<Morphism>>,
    lo_open: bool,
    hi_open: bool,
    ranks: Arc<Vec<OnceLock<usize>>>,
}

impl ChainComplex {
    /// Builds a complex and checks ∂∂ = 0. `diffs` lists
    /// `∂_{lo+1}, ..., ∂_hi`.
    pub fn new(
        algebra: Arc<FinLocalAlgebra>,
        lo: i32,
        modules: Vec<FinModule>,
        diffs: Vec<Morphism>,
    ) -> Result<Self, ComplexError> {
        let c = Self::new_unchecked(algebra, lo, modules, diffs)?;
        c.check_square_zero()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<FinLocalAlgebra>,
        lo: i32,
        modules: Vec<FinModule>,
        diffs: Vec<Morphism>,
    ) -> Result<Self, ComplexError> {
        if modules.is_empty() {
            if !diffs.is_empty() {
                return Err(ComplexError::Malformed("differentials without modules".into()));
            }
        } else if diffs.len() + 1 != modules.len() {
            return Err(ComplexError::Malformed(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                diffs.len()
            )));
        }
        for (k, dk) in diffs.iter().enumerate() {
            let want = (modules[k].dim(), modules[k + 1].dim());
            if dk.k_shape() != want {
                return Err(ComplexError::Malformed(format!(
                    "∂ at degree {} has shape {:?}, expected {:?}",
                    lo + k as i32 + 1,
                    dk.k_shape(),
                    want
                )));
            }
        }
        let ranks = (0..diffs.len()).map(|_| OnceLock::new()).collect();
        Ok(Self {
            algebra,
            lo,
            modules: Arc::new(modules),
            diffs: Arc::new(diffs),
            lo_open: false,
            hi_open: false,
            ranks: Arc::new(ranks),
        })
    }

    /// The module `m` placed in degree `n`.
    pub fn concentrated(m: &FinModule, n: i32) -> Self {
        Self::new_unchecked(m.algebra().clone(), n, vec![m.clone()], vec![]).expect("single module")
    }

    pub fn zero(algebra: Arc<FinLocalAlgebra>) -> Self {
        Self::new_unchecked(algebra, 0, vec![], vec![]).expect("empty")
    }

    /// Marks window edges as truncations of a longer complex.
    pub fn with_open(mut self, lo_open: bool, hi_open: bool) -> Self {
        self.lo_open = lo_open;
        self.hi_open = hi_open;
        self
    }

    pub fn algebra(&self) -> &Arc<FinLocalAlgebra> {
        &self.algebra
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Top of the window; `lo - 1` for the empty complex.
    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn degrees(&self) -> RangeInclusive<i32> {
        self.lo()..=self.hi()
    }

    pub fn module(&self, n: i32) -> FinModule {
        match self.index(n) {
            Some(k) => self.modules[k].clone(),
            None => FinModule::zero(self.algebra.clone()),
        }
    }

    pub fn dim(&self, n: i32) -> usize {
        self.index(n).map_or(0, |k| self.modules[k].dim())
    }

    fn index(&self, n: i32) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    /// `∂_n : X_n -> X_{n-1}` when both ends lie in the window.
    pub fn diff(&self, n: i32) -> Option<&Morphism> {
        (n > self.lo && n <= self.hi()).then(|| &self.diffs[(n - self.lo - 1) as usize])
    }

    /// `∂_n`, the zero map outside the window.
    pub fn diff_or_zero(&self, n: i32) -> Morphism {
        match self.diff(n) {
            Some(m) => m.clone(),
            None => Morphism::zero(&self.module(n), &self.module(n - 1)),
        }
    }

    /// Common base when every module is a structured sum and every
    /// differential an R-matrix.
    pub fn structured_base(&self) -> Option<Base> {
        if self.diffs.iter().any(|m| matches!(m, Morphism::Dense(_))) {
            return None;
        }
        common_base(self.modules.iter())
    }

    pub fn check_square_zero(&self) -> Result<(), ComplexError> {
        for n in self.lo + 2..=self.hi() {
            let (a, b) = (self.diff(n - 1).unwrap(), self.diff(n).unwrap());
            if !a.compose(&self.algebra, b)?.is_zero() {
                return Err(ComplexError::NotAComplex(n));
            }
        }
        Ok(())
    }

    /// Rank of `∂_n` over k (cached).
    pub fn rank(&self, n: i32) -> usize {
        match self.diff(n) {
            None => 0,
            Some(m) => {
                let k = (n - self.lo - 1) as usize;
                *self.ranks[k].get_or_init(|| m.rank(&self.algebra))
            }
        }
    }

    /// Degrees at least `guard` away from every open edge.
    pub fn trusted(&self, guard: usize) -> RangeInclusive<i32> {
        let g = guard as i32;
        let lo = self.lo + if self.lo_open { g } else { 0 };
        let hi = self.hi() - if self.hi_open { g } else { 0 };
        lo..=hi
    }

    pub fn is_trusted(&self, n: i32, guard: usize) -> bool {
        self.trusted(guard).contains(&n)
    }

    pub fn homology_dim(&self, n: i32) -> usize {
        self.dim(n) - self.rank(n) - self.rank(n + 1)
    }

    /// `H_n = ker ∂_n / im ∂_{n+1}` with the induced action.
    pub fn homology(&self, n: i32, guard: usize) -> Homology {
        let alg = &self.algebra;
        let x = self.module(n);
        let dn = self.diff_or_zero(n).realize(alg);
        let dn1 = self.diff_or_zero(n + 1).realize(alg);
        let z = dn.kernel();
        let trusted = self.is_trusted(n, guard);
        if z.cols() == 0 {
            return Homology {
                degree: n,
                dim: 0,
                module: FinModule::zero(alg.clone()),
                trusted,
            };
        }
        let zc = BasisCoords::new(&z).expect("kernel basis");
        let b = zc.coords_of_columns(&dn1).expect("boundaries are cycles");
        let q = Quotient::new(alg.field(), z.cols(), &b);
        let action = (0..alg.dim())
            .map(|i| {
                let moved = zc
                    .coords_of_columns(&x.action(i).mul(&z).unwrap())
                    .expect("cycles are a submodule");
                q.projection().mul(&moved).and_then(|m| m.mul(q.lift())).unwrap()
            })
            .collect();
        let module = FinModule::from_action_unchecked(alg.clone(), action);
        Homology {
            degree: n,
            dim: module.dim(),
            module,
            trusted,
        }
    }

    /// `(degree, dim H)` over the trusted degrees.
    pub fn acyclicity_report(&self, guard: usize) -> Vec<(i32, usize)> {
        self.trusted(guard).map(|n| (n, self.homology_dim(n))).collect()
    }

    /// `(ΣX)_n = X_{n-1}` with `∂^{ΣX} = -∂^X`.
    pub fn suspension(&self) -> ChainComplex {
        self.shift(1)
    }

    /// Suspension iterated `s` times (`s` may be negative).
    pub fn shift(&self, s: i32) -> ChainComplex {
        let sign = self.algebra.field().sign(s as i64);
        let diffs = self.diffs.iter().map(|m| m.scale(&self.algebra, sign)).collect();
        let mut c = Self::new_unchecked(self.algebra.clone(), self.lo + s, self.modules.to_vec(), diffs)
            .expect("shape preserved");
        c.lo_open = self.lo_open;
        c.hi_open = self.hi_open;
        c
    }

    /// Brutal truncation to the degrees `[lo, hi]` of the window; a cut
    /// edge becomes open.
    pub fn truncate(&self, lo: i32, hi: i32) -> ChainComplex {
        let lo = lo.max(self.lo);
        let hi = hi.min(self.hi());
        if lo > hi {
            return ChainComplex::zero(self.algebra.clone());
        }
        let modules = (lo..=hi).map(|n| self.module(n)).collect();
        let diffs = (lo + 1..=hi).map(|n| self.diff(n).unwrap().clone()).collect();
        let lo_open = if lo > self.lo { true } else { self.lo_open };
        let hi_open = if hi < self.hi() { true } else { self.hi_open };
        ChainComplex::new_unchecked(self.algebra.clone(), lo, modules, diffs)
            .expect("subwindow")
            .with_open(lo_open, hi_open)
    }

    /// The subcomplex `σ_{≤hi}` of degrees at most `hi`, with its inclusion.
    pub fn brutal_below(&self, hi: i32) -> Result<(ChainComplex, ChainMap), ComplexError> {
        let sub = self.truncate(self.lo, hi);
        let comps = sub.degrees().map(|n| Morphism::identity(&self.module(n))).collect();
        let lo = sub.lo;
        let incl = ChainMap::new(sub.clone(), self.clone(), lo, comps)?;
        Ok((sub, incl))
    }

    /// Soft truncation `B`: `X_i` below `n`, `coker ∂_{n+1}` in degree
    /// `n`, zero above; with the canonical map `X -> B`.
    pub fn soft_truncate_left(&self, n: i32) -> Result<(ChainComplex, ChainMap), ComplexError> {
        let alg = &self.algebra;
        if n < self.lo || n > self.hi() {
            return Err(ComplexError::OutOfWindow {
                degree: n,
                lo: self.lo,
                hi: self.hi(),
            });
        }
        let dn1 = self
            .diff_or_zero(n + 1)
            .to_module_map(alg, &self.module(n + 1), &self.module(n));
        let (top, proj) = cokernel_module(&dn1);
        let mut modules: Vec<FinModule> = (self.lo..n).map(|i| self.module(i)).collect();
        modules.push(top.clone());
        let mut diffs: Vec<Morphism> = (self.lo + 1..n).map(|i| self.diff(i).unwrap().clone()).collect();
        if n > self.lo {
            let induced = self.diff(n).unwrap().realize(alg).mul(&lift_of(&proj))?;
            diffs.push(Morphism::Dense(induced));
        }
        let b = ChainComplex::new(alg.clone(), self.lo, modules, diffs)?.with_open(self.lo_open, false);
        let mut comps: Vec<Morphism> = (self.lo..n).map(|i| Morphism::identity(&self.module(i))).collect();
        comps.push(Morphism::Dense(proj.matrix.clone()));
        let map = ChainMap::new(self.clone(), b.clone(), self.lo, comps)?;
        Ok((b, map))
    }
}

fn lift_of(proj: &ModuleMap) -> FieldMatrix {
    // A section of a surjection given in reduced form: solve column by
    // column against the standard basis of the quotient.
    let f = proj.matrix.field();
    let q = proj.matrix.rows();
    let cols: Vec<Vec<u32>> = (0..q)
        .map(|k| {
            let mut e = vec![0u32; q];
            e[k] = 1;
            proj.matrix.solve(&e).expect("shape").expect("projection is onto")
        })
        .collect();
    FieldMatrix::from_columns(f, proj.matrix.cols(), &cols)
}

/// Result of [`ChainComplex::homology`].
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: i32,
    pub dim: usize,
    pub module: FinModule,
    /// False at boundary degrees, where truncation may distort the value.
    pub trusted: bool,
}

/// A morphism of complexes, with components on the overlap of windows
/// (zero elsewhere).
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    lo: i32,
    components: Vec<Morphism>,
}

impl ChainMap {
    /// `components[k]` maps degree `lo + k`. Checks commutation with the
    /// differentials everywhere.
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        lo: i32,
        components: Vec<Morphism>,
    ) -> Result<Self, ComplexError> {
        let map = Self::new_unchecked(source, target, lo, components)?;
        map.check()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(
        source: ChainComplex,
        target: ChainComplex,
        lo: i32,
        components: Vec<Morphism>,
    ) -> Result<Self, ComplexError> {
        for (k, c) in components.iter().enumerate() {
            let n = lo + k as i32;
            if c.k_shape() != (target.dim(n), source.dim(n)) {
                return Err(ComplexError::Malformed(format!(
                    "chain map component at degree {n} has the wrong shape"
                )));
            }
        }
        Ok(Self {
            source,
            target,
            lo,
            components,
        })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// Component `X_n -> Y_n`.
    pub fn component(&self, n: i32) -> Morphism {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.components.len() {
            self.components[k as usize].clone()
        } else {
            Morphism::zero(&self.source.module(n), &self.target.module(n))
        }
    }

    fn span(&self) -> RangeInclusive<i32> {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        lo..=hi + 1
    }

    pub fn check(&self) -> Result<(), ComplexError> {
        let alg = self.source.algebra().clone();
        for n in self.span() {
            let fn_ = self.component(n);
            let fn1 = self.component(n - 1);
            if fn_.is_zero() && fn1.is_zero() {
                continue;
            }
            let lhs = self.target.diff_or_zero(n).compose(&alg, &fn_)?;
            let rhs = fn1.compose(&alg, &self.source.diff_or_zero(n))?;
            let diff = match (&lhs, &rhs) {
                (Morphism::Structured(a), Morphism::Structured(b)) if a.base() == b.base() => {
                    let mut d = a.clone();
                    d.add_block(alg.field(), 0, 0, b, alg.field().neg(1));
                    d.is_zero()
                }
                _ => lhs.realize(&alg) == rhs.realize(&alg),
            };
            if !diff {
                return Err(ComplexError::NotAChainMap(n));
            }
        }
        Ok(())
    }

    /// Every component is a bijection.
    pub fn is_iso(&self) -> bool {
        let alg = self.source.algebra();
        self.span().all(|n| {
            let (a, b) = (self.source.dim(n), self.target.dim(n));
            a == b && (a == 0 || self.component(n).rank(alg) == a)
        })
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ChainMap) -> Result<ChainMap, ComplexError> {
        let alg = self.source.algebra().clone();
        let lo = self.source.lo();
        let comps = self
            .source
            .degrees()
            .map(|n| g.component(n).compose(&alg, &self.component(n)))
            .collect::<Result<Vec<_>, _>>()?;
        ChainMap::new_unchecked(self.source.clone(), g.target.clone(), lo, comps)
    }

    /// Rank of `H_n(f)`. Cycles are taken on the smaller side: when the
    /// source is larger, the rank is read off the dual map on cohomology.
    pub fn induced_rank(&self, n: i32) -> usize {
        let alg = self.source.algebra();
        let (sd, td) = (self.source.dim(n), self.target.dim(n));
        if sd == 0 || td == 0 {
            return 0;
        }
        let f = self.component(n).realize(alg);
        if sd <= td {
            let z = self.source.diff_or_zero(n).realize(alg).kernel();
            let img = f.mul(&z).expect("shape");
            let bnd = self.target.diff_or_zero(n + 1).realize(alg);
            let mut span = SpanBuilder::new(alg.field(), td);
            span.insert_columns(&bnd);
            span.insert_columns(&img)
        } else {
            let z = transposed(alg, &self.target.diff_or_zero(n + 1)).kernel();
            let img = f.transpose().mul(&z).expect("shape");
            let cobnd = transposed(alg, &self.source.diff_or_zero(n));
            let mut span = SpanBuilder::new(alg.field(), sd);
            span.insert_columns(&cobnd);
            span.insert_columns(&img)
        }
    }

    /// Whether `H_n(f)` is bijective at every degree trusted in both
    /// source and target; cross-checked against acyclicity of the cone.
    pub fn is_quasi_iso(&self, guard: usize) -> Result<QuasiIsoReport, ComplexError> {
        let cone = mapping_cone(self)?;
        let (s, t) = (self.source.trusted(guard), self.target.trusted(guard));
        let lo = *s.start().max(t.start());
        let hi = *s.end().min(t.end());
        let mut per_degree = Vec::new();
        for n in lo..=hi {
            let (hx, hy) = (self.source.homology_dim(n), self.target.homology_dim(n));
            let iso = hx == hy && self.induced_rank(n) == hx;
            per_degree.push((n, iso));
        }
        // H_n(Cone) sits between H_{n-1}(X) and H_n(Y); it vanishes iff
        // H_n(f) is onto and H_{n-1}(f) is one-to-one.
        let mut cone_agrees = true;
        for n in lo + 1..=hi {
            let onto = self.induced_rank(n) == self.target.homology_dim(n);
            let into = self.induced_rank(n - 1) == self.source.homology_dim(n - 1);
            cone_agrees &= (cone.homology_dim(n) == 0) == (onto && into);
        }
        let quasi_iso = per_degree.iter().all(|p| p.1);
        Ok(QuasiIsoReport {
            per_degree,
            cone_agrees,
            quasi_iso,
        })
    }
}

fn transposed(alg: &FinLocalAlgebra, m: &Morphism) -> FieldMatrix {
    match m {
        Morphism::Dense(d) => d.transpose(),
        Morphism::Structured(r) => r.realize_transposed(alg),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    pub per_degree: Vec<(i32, bool)>,
    pub cone_agrees: bool,
    pub quasi_iso: bool,
}

/// `Cone(f)_n = Y_n ⊕ X_{n-1}` with `∂ = [[∂^Y, f], [0, -∂^X]]`.
pub fn mapping_cone(f: &ChainMap) -> Result<ChainComplex, ComplexError> {
    let (x, y) = (&f.source, &f.target);
    let alg = x.algebra().clone();
    let minus = alg.field().neg(1);
    let mut edges: Vec<(i32, i32, bool)> = Vec::new();
    if !y.is_empty() {
        edges.push((y.lo(), y.hi(), false));
    }
    if !x.is_empty() {
        edges.push((x.lo() + 1, x.hi() + 1, true));
    }
    if edges.is_empty() {
        return Ok(ChainComplex::zero(alg));
    }
    let lo = edges.iter().map(|e| e.0).min().unwrap();
    let hi = edges.iter().map(|e| e.1).max().unwrap();
    let open_at = |deg: i32, low: bool| {
        edges.iter().any(|&(l, h, is_x)| {
            let c = if is_x { x } else { y };
            if low {
                l == deg && c.lo_open()
            } else {
                h == deg && c.hi_open()
            }
        })
    };
    let modules: Vec<FinModule> = (lo..=hi)
        .map(|n| FinModule::direct_sum(&alg, &[y.module(n), x.module(n - 1)]))
        .collect();
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (yn, xn1, yn1, xn2) = (y.module(n), x.module(n - 1), y.module(n - 1), x.module(n - 2));
        let dy = y.diff_or_zero(n);
        let fx = f.component(n - 1);
        let dx = x.diff_or_zero(n - 1);
        diffs.push(assemble(
            &alg,
            &[&yn1, &xn2],
            &[&yn, &xn1],
            &[(0, 0, &dy, 1), (0, 1, &fx, 1), (1, 1, &dx, minus)],
        ));
    }
    Ok(ChainComplex::new(alg, lo, modules, diffs)?.with_open(open_at(lo, true), open_at(hi, false)))
}

/// The canonical maps `Y -> Cone(f)` and `Cone(f) -> ΣX`.
pub fn cone_maps(f: &ChainMap, cone: &ChainComplex) -> Result<(ChainMap, ChainMap), ComplexError> {
    let (x, y) = (&f.source, &f.target);
    let alg = x.algebra().clone();
    let sx = x.suspension();
    let incl: Vec<Morphism> = y
        .degrees()
        .map(|n| {
            let id = Morphism::identity(&y.module(n));
            assemble(
                &alg,
                &[&y.module(n), &x.module(n - 1)],
                &[&y.module(n)],
                &[(0, 0, &id, 1)],
            )
        })
        .collect();
    let proj: Vec<Morphism> = sx
        .degrees()
        .map(|n| {
            let id = Morphism::identity(&x.module(n - 1));
            assemble(
                &alg,
                &[&x.module(n - 1)],
                &[&y.module(n), &x.module(n - 1)],
                &[(0, 1, &id, 1)],
            )
        })
        .collect();
    let i = ChainMap::new(y.clone(), cone.clone(), y.lo(), incl)?;
    let p = ChainMap::new(cone.clone(), sx.clone(), sx.lo(), proj)?;
    Ok((i, p))
}

/// The map `Cone(f) -> Cone(g)` induced by `a : X -> X'` and `b : Y -> Y'`
/// with `g a = b f`, namely `b ⊕ a` degreewise.
pub fn cone_map(
    f: &ChainMap,
    g: &ChainMap,
    a: &ChainMap,
    b: &ChainMap,
    source: &ChainComplex,
    target: &ChainComplex,
) -> Result<ChainMap, ComplexError> {
    let alg = f.source.algebra().clone();
    let lo = source.lo().min(target.lo());
    let hi = source.hi().max(target.hi());
    let comps = (lo..=hi)
        .map(|n| {
            let (bn, an) = (b.component(n), a.component(n - 1));
            assemble(
                &alg,
                &[&g.target.module(n), &g.source.module(n - 1)],
                &[&f.target.module(n), &f.source.module(n - 1)],
                &[(0, 0, &bn, 1), (1, 1, &an, 1)],
            )
        })
        .collect();
    ChainMap::new(source.clone(), target.clone(), lo, comps)
}
