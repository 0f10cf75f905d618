//! Finitely generated R-modules as k-spaces with action matrices.

use std::sync::Arc;

use crate::algebra::FinLocalAlgebra;
use crate::error::ModuleError;
use crate::linalg::{BasisCoords, FieldMatrix, PrimeField, Quotient, SpanBuilder};
use crate::rmatrix::{Base, RMatrix};

/// An R-module of finite k-dimension.
///
/// Sums of copies of R or E keep their shape and compute action matrices
/// on demand; every other module stores one action matrix per algebra
/// basis element.
#[derive(Clone, Debug)]
pub struct FinModule {
    algebra: Arc<FinLocalAlgebra>,
    dim: usize,
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    Sum { base: Base, copies: usize },
    General(Arc<Vec<FieldMatrix>>),
}

impl FinModule {
    /// A module from explicit action matrices, with the axioms checked.
    pub fn new(algebra: Arc<FinLocalAlgebra>, action: Vec<FieldMatrix>) -> Result<Self, ModuleError> {
        let m = Self::from_action(algebra, action)?;
        m.check_axioms()?;
        Ok(m)
    }

    fn from_action(algebra: Arc<FinLocalAlgebra>, action: Vec<FieldMatrix>) -> Result<Self, ModuleError> {
        if action.len() != algebra.dim() {
            return Err(ModuleError::Axiom(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action[0].rows();
        if action.iter().any(|a| a.shape() != (dim, dim)) {
            return Err(ModuleError::Axiom(
                "action matrices are not square of equal size".into(),
            ));
        }
        Ok(Self {
            algebra,
            dim,
            kind: Kind::General(Arc::new(action)),
        })
    }

    pub(crate) fn from_action_unchecked(algebra: Arc<FinLocalAlgebra>, action: Vec<FieldMatrix>) -> Self {
        Self::from_action(algebra, action).expect("well-shaped action")
    }

    /// `B^copies` for `B` = R or E.
    pub fn sum(algebra: Arc<FinLocalAlgebra>, base: Base, copies: usize) -> Self {
        let dim = copies * algebra.dim();
        Self {
            algebra,
            dim,
            kind: Kind::Sum { base, copies },
        }
    }

    /// The free module R^b.
    pub fn free(algebra: Arc<FinLocalAlgebra>, b: usize) -> Self {
        Self::sum(algebra, Base::Free, b)
    }

    pub fn zero(algebra: Arc<FinLocalAlgebra>) -> Self {
        Self::free(algebra, 0)
    }

    /// The residue field k = R/m.
    pub fn residue_field(algebra: Arc<FinLocalAlgebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim())
            .map(|i| FieldMatrix::from_fn(f, 1, 1, |_, _| u32::from(i == 0)))
            .collect();
        Self::from_action_unchecked(algebra, action)
    }

    pub fn algebra(&self) -> &Arc<FinLocalAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// `(base, copies)` for structured sums.
    pub fn shape(&self) -> Option<(Base, usize)> {
        match self.kind {
            Kind::Sum { base, copies } => Some((base, copies)),
            Kind::General(_) => None,
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self.kind, Kind::Sum { base: Base::Free, .. }) || self.dim == 0
    }

    /// Action matrix of the basis element `e_i`.
    pub fn action(&self, i: usize) -> FieldMatrix {
        match &self.kind {
            Kind::General(a) => a[i].clone(),
            Kind::Sum { base, copies } => {
                let d = self.algebra.dim();
                let mut e = vec![0; d];
                e[i] = 1;
                let mut m = RMatrix::zeros(*base, d, *copies, *copies);
                for l in 0..*copies {
                    m.add_entry(self.field(), l, l, &e, 1);
                }
                m.realize(&self.algebra)
            }
        }
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, r: &[u32]) -> FieldMatrix {
        let f = self.field();
        let mut out = FieldMatrix::zeros(f, self.dim, self.dim);
        for (i, &c) in r.iter().enumerate().filter(|(_, c)| **c != 0) {
            out = out.add(&self.action(i).scale(c)).expect("square");
        }
        out
    }

    /// Action matrices for the minimal generators of m.
    pub(crate) fn generator_actions(&self) -> Vec<FieldMatrix> {
        self.algebra
            .max_ideal_generators()
            .iter()
            .map(|&g| self.action(g))
            .collect()
    }

    /// Unit and associativity axioms, checked on all basis pairs.
    pub fn check_axioms(&self) -> Result<(), ModuleError> {
        let d = self.algebra.dim();
        let acts: Vec<FieldMatrix> = (0..d).map(|i| self.action(i)).collect();
        if !acts[0].is_identity() {
            return Err(ModuleError::Axiom("e_0 does not act as the identity".into()));
        }
        for i in 1..d {
            for j in i..d {
                let lhs = acts[i].mul(&acts[j])?;
                let rhs = self.act(self.algebra.basis_product(i, j));
                if lhs != rhs {
                    return Err(ModuleError::Axiom(format!("e{i}*e{j} acts incorrectly")));
                }
            }
        }
        Ok(())
    }

    /// The same module with explicit action matrices.
    pub fn to_general(&self) -> FinModule {
        let action = (0..self.algebra.dim()).map(|i| self.action(i)).collect();
        Self::from_action_unchecked(self.algebra.clone(), action)
    }

    /// Direct sum, in the given order.
    pub fn direct_sum(algebra: &Arc<FinLocalAlgebra>, parts: &[FinModule]) -> FinModule {
        let shapes: Option<Vec<(Base, usize)>> = parts.iter().map(|m| m.shape()).collect();
        if let Some(shapes) = shapes {
            let bases: Vec<Base> = shapes.iter().filter(|s| s.1 > 0).map(|s| s.0).collect();
            if bases.windows(2).all(|w| w[0] == w[1]) {
                let base = bases.first().copied().unwrap_or(Base::Free);
                return Self::sum(algebra.clone(), base, shapes.iter().map(|s| s.1).sum());
            }
        }
        let f = algebra.field();
        let total: usize = parts.iter().map(|m| m.dim).sum();
        let action = (0..algebra.dim())
            .map(|i| {
                let mut a = FieldMatrix::zeros(f, total, total);
                let mut off = 0;
                for m in parts {
                    a.add_block(off, off, &m.action(i));
                    off += m.dim;
                }
                a
            })
            .collect();
        Self::from_action_unchecked(algebra.clone(), action)
    }

    pub(crate) fn same_algebra(&self, other: &FinModule) -> Result<(), ModuleError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(ModuleError::AlgebraMismatch)
        }
    }
}

/// The Matlis dual E = Hom_k(R, k), an injective hull of k.
pub fn matlis_dual(algebra: &Arc<FinLocalAlgebra>) -> FinModule {
    FinModule::sum(algebra.clone(), Base::Dual, 1)
}

/// Hom_k(M, k) with `(r f)(m) = f(r m)`.
pub fn k_dual(m: &FinModule) -> FinModule {
    let action = (0..m.algebra.dim()).map(|i| m.action(i).transpose()).collect();
    FinModule::from_action_unchecked(m.algebra.clone(), action)
}

/// An R-linear map, as a `target.dim x source.dim` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: FinModule,
    pub target: FinModule,
    pub matrix: FieldMatrix,
}

impl ModuleMap {
    pub fn new(source: FinModule, target: FinModule, matrix: FieldMatrix) -> Result<Self, ModuleError> {
        source.same_algebra(&target)?;
        if matrix.shape() != (target.dim, source.dim) {
            return Err(ModuleError::Linalg(crate::error::LinalgError::DimensionMismatch {
                op: "module map",
                left: matrix.shape(),
                right: (target.dim, source.dim),
            }));
        }
        let map = Self { source, target, matrix };
        map.check_linear()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: FinModule, target: FinModule, matrix: FieldMatrix) -> Self {
        Self { source, target, matrix }
    }

    pub fn identity(m: &FinModule) -> Self {
        Self::new_unchecked(m.clone(), m.clone(), FieldMatrix::identity(m.field(), m.dim))
    }

    pub fn zero(source: &FinModule, target: &FinModule) -> Self {
        Self::new_unchecked(
            source.clone(),
            target.clone(),
            FieldMatrix::zeros(source.field(), target.dim, source.dim),
        )
    }

    /// Commutation with the action of every generator of m.
    pub fn check_linear(&self) -> Result<(), ModuleError> {
        for &g in self.source.algebra.max_ideal_generators() {
            let lhs = self.target.action(g).mul(&self.matrix)?;
            let rhs = self.matrix.mul(&self.source.action(g))?;
            if lhs != rhs {
                return Err(ModuleError::NotLinear(g));
            }
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        Ok(Self::new_unchecked(
            other.source.clone(),
            self.target.clone(),
            self.matrix.mul(&other.matrix)?,
        ))
    }

    pub fn is_iso(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }
}

/// Result of [`min_gens`].
#[derive(Clone, Debug)]
pub struct MinGens {
    pub mu: usize,
    /// Lifts of a basis of M/mM, as columns.
    pub generators: FieldMatrix,
}

/// Minimal generators: standard basis vectors chosen greedily to extend
/// a basis of mM.
pub fn min_gens(m: &FinModule) -> MinGens {
    let f = m.field();
    let mut span = SpanBuilder::new(f, m.dim);
    for a in m.generator_actions() {
        span.insert_columns(&a);
    }
    let mut cols = Vec::new();
    for t in 0..m.dim {
        let mut e = vec![0u32; m.dim];
        e[t] = 1;
        if span.insert(&e) {
            cols.push(e);
        }
    }
    MinGens {
        mu: cols.len(),
        generators: FieldMatrix::from_columns(f, m.dim, &cols),
    }
}

/// Hom_R(M, N) with a k-basis of maps.
///
/// Maps are vectorized column-major: entry `(a, b)` of a
/// `N.dim x M.dim` matrix sits at index `b * N.dim + a`.
#[derive(Clone, Debug)]
pub struct HomModule {
    module: FinModule,
    source_dim: usize,
    target: FinModule,
    coords: HomCoords,
}

#[derive(Clone, Debug)]
enum HomCoords {
    /// Free source R^a: a map is determined by the images of the
    /// generators, coordinate `l * N.dim + t`.
    Free {
        copies: usize,
    },
    Basis(BasisCoords),
}

impl HomModule {
    pub fn module(&self) -> &FinModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// The basis map with the given index.
    pub fn basis_map(&self, idx: usize) -> FieldMatrix {
        let mut c = vec![0u32; self.dim()];
        c[idx] = 1;
        self.element(&c)
    }

    /// The map with the given coordinates.
    pub fn element(&self, coords: &[u32]) -> FieldMatrix {
        let f = self.module.field();
        let n = self.target.dim;
        match &self.coords {
            HomCoords::Free { copies } => {
                let d = self.module.algebra.dim();
                let mut phi = FieldMatrix::zeros(f, n, copies * d);
                for l in 0..*copies {
                    let img = &coords[l * n..(l + 1) * n];
                    for s in 0..d {
                        let col = self.target.action(s).mul_vec(img);
                        for (t, &v) in col.iter().enumerate() {
                            if v != 0 {
                                phi.set(t, l * d + s, v);
                            }
                        }
                    }
                }
                phi
            }
            HomCoords::Basis(bc) => {
                let v = bc.basis().mul_vec(coords);
                FieldMatrix::from_fn(f, n, self.source_dim, |a, b| v[b * n + a])
            }
        }
    }

    /// Coordinates of an R-linear map `phi` (of shape `N.dim x M.dim`).
    pub fn coords(&self, phi: &FieldMatrix) -> Vec<u32> {
        let n = self.target.dim;
        match &self.coords {
            HomCoords::Free { copies } => {
                let d = self.module.algebra.dim();
                let mut out = Vec::with_capacity(copies * n);
                for l in 0..*copies {
                    out.extend(phi.column(l * d));
                }
                out
            }
            HomCoords::Basis(bc) => {
                let mut v = Vec::with_capacity(n * self.source_dim);
                for b in 0..self.source_dim {
                    v.extend(phi.column(b));
                }
                bc.coords_unchecked(&v)
            }
        }
    }
}

/// Hom_R(M, N) with the action `(r φ)(m) = r φ(m)`.
pub fn hom_module(m: &FinModule, n: &FinModule) -> Result<HomModule, ModuleError> {
    m.same_algebra(n)?;
    let alg = m.algebra.clone();
    let f = m.field();
    let d = alg.dim();
    if let Some((Base::Free, a)) = m.shape() {
        let module = match n.shape() {
            Some((base, c)) => FinModule::sum(alg, base, a * c),
            None => {
                let action = (0..d)
                    .map(|i| FieldMatrix::identity(f, a).kronecker(&n.action(i)).expect("kron"))
                    .collect();
                FinModule::from_action_unchecked(alg, action)
            }
        };
        return Ok(HomModule {
            module,
            source_dim: m.dim,
            target: n.clone(),
            coords: HomCoords::Free { copies: a },
        });
    }
    let (md, nd) = (m.dim, n.dim);
    let gens = alg.max_ideal_generators();
    let mut system = FieldMatrix::zeros(f, gens.len() * md * nd, md * nd);
    for (k, &g) in gens.iter().enumerate() {
        let post = FieldMatrix::identity(f, md).kronecker(&n.action(g))?;
        let pre = m.action(g).transpose().kronecker(&FieldMatrix::identity(f, nd))?;
        system.add_block(k * md * nd, 0, &post.sub(&pre)?);
    }
    let basis = system.kernel();
    let bc = BasisCoords::new(&basis).expect("kernel basis is independent");
    let action = (0..d)
        .map(|i| {
            let post = FieldMatrix::identity(f, md).kronecker(&n.action(i)).expect("kron");
            let moved = post.mul(&basis).expect("shape");
            bc.coords_of_columns(&moved).expect("Hom_R is a submodule")
        })
        .collect();
    Ok(HomModule {
        module: FinModule::from_action_unchecked(alg, action),
        source_dim: md,
        target: n.clone(),
        coords: HomCoords::Basis(bc),
    })
}

/// M ⊗_R N as a quotient of M ⊗_k N (index `x * N.dim + y`).
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub module: FinModule,
    /// `dim x (M.dim N.dim)`.
    pub projection: FieldMatrix,
    /// A section of the projection.
    pub lift: FieldMatrix,
}

pub fn tensor_module(m: &FinModule, n: &FinModule) -> Result<TensorModule, ModuleError> {
    m.same_algebra(n)?;
    let alg = m.algebra.clone();
    let f = m.field();
    let d = alg.dim();
    let (md, nd) = (m.dim, n.dim);
    if let Some((Base::Free, a)) = m.shape() {
        // R^a ⊗ N = N^a via e_s ⊗ y ↦ e_s y.
        let acts: Vec<FieldMatrix> = (0..d).map(|s| n.action(s)).collect();
        let mut projection = FieldMatrix::zeros(f, a * nd, md * nd);
        let mut lift = FieldMatrix::zeros(f, md * nd, a * nd);
        for l in 0..a {
            for (s, act) in acts.iter().enumerate() {
                projection.add_block(l * nd, (l * d + s) * nd, act);
            }
            for y in 0..nd {
                lift.set((l * d) * nd + y, l * nd + y, 1);
            }
        }
        let module = match n.shape() {
            Some((base, c)) => FinModule::sum(alg, base, a * c),
            None => {
                let action = (0..d)
                    .map(|i| FieldMatrix::identity(f, a).kronecker(&acts[i]).expect("kron"))
                    .collect();
                FinModule::from_action_unchecked(alg, action)
            }
        };
        return Ok(TensorModule {
            module,
            projection,
            lift,
        });
    }
    let gens = alg.max_ideal_generators();
    let mut rel = FieldMatrix::zeros(f, md * nd, gens.len() * md * nd);
    for (k, &g) in gens.iter().enumerate() {
        let left = m.action(g).kronecker(&FieldMatrix::identity(f, nd))?;
        let right = FieldMatrix::identity(f, md).kronecker(&n.action(g))?;
        rel.add_block(0, k * md * nd, &left.sub(&right)?);
    }
    let q = Quotient::new(f, md * nd, &rel);
    let action = (0..d)
        .map(|i| {
            let a = m.action(i).kronecker(&FieldMatrix::identity(f, nd)).expect("kron");
            q.projection().mul(&a).and_then(|x| x.mul(q.lift())).expect("shape")
        })
        .collect();
    Ok(TensorModule {
        module: FinModule::from_action_unchecked(alg, action),
        projection: q.projection().clone(),
        lift: q.lift().clone(),
    })
}

/// Kernel of `f` with its inclusion.
pub fn kernel_module(f: &ModuleMap) -> (FinModule, ModuleMap) {
    let src = &f.source;
    let z = f.matrix.kernel();
    let alg = src.algebra.clone();
    let module = if z.cols() == 0 {
        FinModule::zero(alg)
    } else {
        let bc = BasisCoords::new(&z).expect("kernel basis is independent");
        let action = (0..alg.dim())
            .map(|i| {
                let moved = src.action(i).mul(&z).expect("shape");
                bc.coords_of_columns(&moved).expect("kernel is a submodule")
            })
            .collect();
        FinModule::from_action_unchecked(alg, action)
    };
    let incl = ModuleMap::new_unchecked(module.clone(), src.clone(), z);
    (module, incl)
}

/// Cokernel of `f` with its projection.
pub fn cokernel_module(f: &ModuleMap) -> (FinModule, ModuleMap) {
    let tgt = &f.target;
    let q = Quotient::new(tgt.field(), tgt.dim, &f.matrix);
    let alg = tgt.algebra.clone();
    let action = (0..alg.dim())
        .map(|i| {
            q.projection()
                .mul(&tgt.action(i))
                .and_then(|x| x.mul(q.lift()))
                .expect("shape")
        })
        .collect();
    let module = FinModule::from_action_unchecked(alg, action);
    let proj = ModuleMap::new_unchecked(tgt.clone(), module.clone(), q.projection().clone());
    (module, proj)
}
