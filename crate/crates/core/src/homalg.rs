//! Hom and tensor of complexes, and the natural maps between them.
//!
//! Sign conventions:
//! - `Hom(X, Y)_n = ⊕_j Hom(X_j, Y_{j+n})` with
//!   `(∂φ)_j = ∂^Y φ_j - (-1)^n φ_{j-1} ∂^X_j`;
//! - `(X ⊗ Y)_n = ⊕_i X_i ⊗ Y_{n-i}` with
//!   `∂(x ⊗ y) = ∂x ⊗ y + (-1)^{|x|} x ⊗ ∂y`.
//!
//! Slots within a degree are ordered by `j` (resp. `i`) ascending. When
//! both inputs are sums of copies of R or E the result is structured:
//! `Hom(B^a, B'^c)` has copy index `l * c + l'` (source generator `l`,
//! target copy `l'`), and `B^a ⊗ B'^c` has copy index `l * c + l'`.

use std::sync::Arc;

use crate::algebra::FinLocalAlgebra;
use crate::complex::{assemble, ChainComplex, ChainMap, Morphism};
use crate::error::{ComplexError, LinalgError};
use crate::linalg::FieldMatrix;
use crate::module::{hom_module, tensor_module, FinModule, HomModule, TensorModule};
use crate::rmatrix::{one, Base, RMatrix};

/// One summand of a degree of a Hom or tensor complex.
#[derive(Clone, Debug)]
pub struct Slot {
    /// `j` for `Hom(X_j, Y_{j+n})`, `i` for `X_i ⊗ Y_{n-i}`.
    pub first: i32,
    /// `j + n`, resp. `n - i`.
    pub second: i32,
    /// Offset in the k-basis of the degree.
    pub offset: usize,
    /// Offset in copies, for structured results.
    pub copy_offset: usize,
    pub module: FinModule,
    pub piece: Piece,
}

/// How a slot's coordinates are defined.
#[derive(Clone, Debug)]
pub enum Piece {
    Structured { left_copies: usize, right_copies: usize },
    Hom(HomModule),
    Tensor(TensorModule),
}

/// A Hom or tensor complex with its degreewise decomposition.
#[derive(Clone, Debug)]
pub struct BifunctorResult {
    pub complex: ChainComplex,
    slots: Vec<Vec<Slot>>,
}

impl BifunctorResult {
    pub fn slots(&self, n: i32) -> &[Slot] {
        let c = &self.complex;
        if n < c.lo() || n > c.hi() {
            return &[];
        }
        &self.slots[(n - c.lo()) as usize]
    }

    pub fn slot(&self, n: i32, first: i32) -> Option<&Slot> {
        self.slots(n).iter().find(|s| s.first == first)
    }

    /// Total dimension equals the sum of the slot dimensions.
    pub fn conserves_dimension(&self) -> bool {
        self.complex
            .degrees()
            .all(|n| self.complex.dim(n) == self.slots(n).iter().map(|s| s.module.dim()).sum::<usize>())
    }
}

fn copies(m: &FinModule) -> usize {
    m.shape().map_or(0, |s| s.1)
}

fn sign(alg: &FinLocalAlgebra, e: i64) -> u32 {
    alg.field().sign(e)
}

fn empty_result(alg: &Arc<FinLocalAlgebra>) -> BifunctorResult {
    BifunctorResult {
        complex: ChainComplex::zero(alg.clone()),
        slots: vec![],
    }
}

/// `Hom(X, Y)` on the window `[lo_Y - hi_X, hi_Y - lo_X]`.
pub fn hom_complex(x: &ChainComplex, y: &ChainComplex) -> Result<BifunctorResult, ComplexError> {
    let alg = x.algebra().clone();
    if x.is_empty() || y.is_empty() {
        return Ok(empty_result(&alg));
    }
    let f = alg.field();
    let d = alg.dim();
    let (lo, hi) = (y.lo() - x.hi(), y.hi() - x.lo());
    let structured = match (x.structured_base(), y.structured_base()) {
        (Some(a), Some(b)) => Base::hom(a, b),
        _ => None,
    };
    let mut slots: Vec<Vec<Slot>> = Vec::new();
    let mut modules = Vec::new();
    for n in lo..=hi {
        let mut row = Vec::new();
        let (mut off, mut coff) = (0, 0);
        for j in x.lo()..=x.hi() {
            if j + n < y.lo() || j + n > y.hi() {
                continue;
            }
            let (xm, ym) = (x.module(j), y.module(j + n));
            let (module, piece) = match structured {
                Some(b) => {
                    let (a, c) = (copies(&xm), copies(&ym));
                    (
                        FinModule::sum(alg.clone(), b, a * c),
                        Piece::Structured {
                            left_copies: a,
                            right_copies: c,
                        },
                    )
                }
                None => {
                    let h = hom_module(&xm, &ym)?;
                    (h.module().clone(), Piece::Hom(h))
                }
            };
            let slot = Slot {
                first: j,
                second: j + n,
                offset: off,
                copy_offset: coff,
                module,
                piece,
            };
            off += slot.module.dim();
            coff += copies(&slot.module);
            row.push(slot);
        }
        modules.push(FinModule::direct_sum(
            &alg,
            &row.iter().map(|s| s.module.clone()).collect::<Vec<_>>(),
        ));
        slots.push(row);
    }
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let src = &slots[(n - lo) as usize];
        let dst = &slots[(n - 1 - lo) as usize];
        let s_pre = f.neg(sign(&alg, n as i64));
        let diff = match structured {
            Some(b) => {
                let rows = copies(&modules[(n - 1 - lo) as usize]);
                let cols = copies(&modules[(n - lo) as usize]);
                let mut m = RMatrix::zeros(b, d, rows, cols);
                for s in src {
                    let j = s.first;
                    let (a, c) = (copies(&x.module(j)), copies(&y.module(j + n)));
                    if let Some(t) = dst.iter().find(|t| t.first == j) {
                        if let Some(Morphism::Structured(dy)) = y.diff(j + n) {
                            m.add_block(f, t.copy_offset, s.copy_offset, &dy.kron_identity_left(a), 1);
                        }
                    }
                    if let Some(t) = dst.iter().find(|t| t.first == j + 1) {
                        if let Some(Morphism::Structured(dx)) = x.diff(j + 1) {
                            m.add_block(
                                f,
                                t.copy_offset,
                                s.copy_offset,
                                &dx.transpose().kron_identity_right(c),
                                s_pre,
                            );
                        }
                    }
                }
                Morphism::Structured(m)
            }
            None => {
                let rows = modules[(n - 1 - lo) as usize].dim();
                let cols = modules[(n - lo) as usize].dim();
                let mut m = FieldMatrix::zeros(f, rows, cols);
                for s in src {
                    let j = s.first;
                    let Piece::Hom(hs) = &s.piece else { unreachable!() };
                    let post = dst
                        .iter()
                        .find(|t| t.first == j)
                        .and_then(|t| y.diff(j + n).map(|dy| (t, dy.realize(&alg))));
                    let pre = dst
                        .iter()
                        .find(|t| t.first == j + 1)
                        .and_then(|t| x.diff(j + 1).map(|dx| (t, dx.realize(&alg))));
                    for k in 0..hs.dim() {
                        let phi = hs.basis_map(k);
                        if let Some((t, dy)) = &post {
                            let Piece::Hom(ht) = &t.piece else { unreachable!() };
                            let c = ht.coords(&dy.mul(&phi)?);
                            for (r, v) in c.into_iter().enumerate().filter(|p| p.1 != 0) {
                                m.add_at(t.offset + r, s.offset + k, v);
                            }
                        }
                        if let Some((t, dx)) = &pre {
                            let Piece::Hom(ht) = &t.piece else { unreachable!() };
                            let c = ht.coords(&phi.mul(dx)?);
                            for (r, v) in c.into_iter().enumerate().filter(|p| p.1 != 0) {
                                m.add_at(t.offset + r, s.offset + k, f.mul(s_pre, v));
                            }
                        }
                    }
                }
                Morphism::Dense(m)
            }
        };
        diffs.push(diff);
    }
    let complex =
        ChainComplex::new(alg, lo, modules, diffs)?.with_open(x.hi_open() || y.lo_open(), y.hi_open() || x.lo_open());
    Ok(BifunctorResult { complex, slots })
}

/// `X ⊗ Y` on the window `[lo_X + lo_Y, hi_X + hi_Y]`.
pub fn tensor_complex(x: &ChainComplex, y: &ChainComplex) -> Result<BifunctorResult, ComplexError> {
    let alg = x.algebra().clone();
    if x.is_empty() || y.is_empty() {
        return Ok(empty_result(&alg));
    }
    let f = alg.field();
    let d = alg.dim();
    let (lo, hi) = (x.lo() + y.lo(), x.hi() + y.hi());
    let structured = match (x.structured_base(), y.structured_base()) {
        (Some(a), Some(b)) => Base::tensor(a, b),
        _ => None,
    };
    let mut slots: Vec<Vec<Slot>> = Vec::new();
    let mut modules = Vec::new();
    for n in lo..=hi {
        let mut row = Vec::new();
        let (mut off, mut coff) = (0, 0);
        for i in x.lo()..=x.hi() {
            if n - i < y.lo() || n - i > y.hi() {
                continue;
            }
            let (xm, ym) = (x.module(i), y.module(n - i));
            let (module, piece) = match structured {
                Some(b) => {
                    let (a, c) = (copies(&xm), copies(&ym));
                    (
                        FinModule::sum(alg.clone(), b, a * c),
                        Piece::Structured {
                            left_copies: a,
                            right_copies: c,
                        },
                    )
                }
                None => {
                    let t = tensor_module(&xm, &ym)?;
                    (t.module.clone(), Piece::Tensor(t))
                }
            };
            let slot = Slot {
                first: i,
                second: n - i,
                offset: off,
                copy_offset: coff,
                module,
                piece,
            };
            off += slot.module.dim();
            coff += copies(&slot.module);
            row.push(slot);
        }
        modules.push(FinModule::direct_sum(
            &alg,
            &row.iter().map(|s| s.module.clone()).collect::<Vec<_>>(),
        ));
        slots.push(row);
    }
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let src = &slots[(n - lo) as usize];
        let dst = &slots[(n - 1 - lo) as usize];
        let diff = match structured {
            Some(b) => {
                let rows = copies(&modules[(n - 1 - lo) as usize]);
                let cols = copies(&modules[(n - lo) as usize]);
                let mut m = RMatrix::zeros(b, d, rows, cols);
                for s in src {
                    let (i, h) = (s.first, s.second);
                    let (a, c) = (copies(&x.module(i)), copies(&y.module(h)));
                    if let (Some(t), Some(Morphism::Structured(dx))) =
                        (dst.iter().find(|t| t.first == i - 1), x.diff(i))
                    {
                        m.add_block(f, t.copy_offset, s.copy_offset, &dx.kron_identity_right(c), 1);
                    }
                    if let (Some(t), Some(Morphism::Structured(dy))) = (dst.iter().find(|t| t.first == i), y.diff(h)) {
                        m.add_block(
                            f,
                            t.copy_offset,
                            s.copy_offset,
                            &dy.kron_identity_left(a),
                            sign(&alg, i as i64),
                        );
                    }
                }
                Morphism::Structured(m)
            }
            None => {
                let rows = modules[(n - 1 - lo) as usize].dim();
                let cols = modules[(n - lo) as usize].dim();
                let mut m = FieldMatrix::zeros(f, rows, cols);
                for s in src {
                    let (i, h) = (s.first, s.second);
                    let Piece::Tensor(ts) = &s.piece else { unreachable!() };
                    let (xd, yd) = (x.dim(i), y.dim(h));
                    if let (Some(t), Some(dx)) = (dst.iter().find(|t| t.first == i - 1), x.diff(i)) {
                        let Piece::Tensor(tt) = &t.piece else { unreachable!() };
                        let k = dx.realize(&alg).kronecker(&FieldMatrix::identity(f, yd))?;
                        let blk = tt.projection.mul(&k)?.mul(&ts.lift)?;
                        m.add_block(t.offset, s.offset, &blk);
                    }
                    if let (Some(t), Some(dy)) = (dst.iter().find(|t| t.first == i), y.diff(h)) {
                        let Piece::Tensor(tt) = &t.piece else { unreachable!() };
                        let k = FieldMatrix::identity(f, xd).kronecker(&dy.realize(&alg))?;
                        let blk = tt.projection.mul(&k)?.mul(&ts.lift)?;
                        m.add_scaled_block(t.offset, s.offset, &blk, sign(&alg, i as i64));
                    }
                }
                Morphism::Dense(m)
            }
        };
        diffs.push(diff);
    }
    let complex =
        ChainComplex::new(alg, lo, modules, diffs)?.with_open(x.lo_open() || y.lo_open(), x.hi_open() || y.hi_open());
    Ok(BifunctorResult { complex, slots })
}

/// The complex R concentrated in degree 0.
pub fn unit_complex(alg: &Arc<FinLocalAlgebra>) -> ChainComplex {
    ChainComplex::concentrated(&FinModule::free(alg.clone(), 1), 0)
}

/// The homothety `χ^X : R -> Hom(X, X)`, `r ↦ r · id`.
pub fn homothety(x: &ChainComplex, hom: &BifunctorResult) -> Result<ChainMap, ComplexError> {
    let alg = x.algebra().clone();
    let f = alg.field();
    let d = alg.dim();
    let r = unit_complex(&alg);
    let target = &hom.complex;
    if target.is_empty() || target.lo() > 0 || target.hi() < 0 {
        return ChainMap::new(r, target.clone(), 0, vec![]);
    }
    let deg0 = target.module(0);
    let comp = match deg0.shape() {
        Some((b, total)) if hom.slots(0).iter().all(|s| matches!(s.piece, Piece::Structured { .. })) => {
            let mut m = RMatrix::zeros(b, d, total, 1);
            for s in hom.slots(0) {
                let a = copies(&x.module(s.first));
                for l in 0..a {
                    m.add_entry(f, s.copy_offset + l * a + l, 0, &one(d), 1);
                }
            }
            Morphism::Structured(m)
        }
        _ => {
            let mut m = FieldMatrix::zeros(f, deg0.dim(), d);
            for s in hom.slots(0) {
                let xm = x.module(s.first);
                let Piece::Hom(h) = &s.piece else { unreachable!() };
                for i in 0..d {
                    let c = h.coords(&xm.action(i));
                    for (k, v) in c.into_iter().enumerate().filter(|p| p.1 != 0) {
                        m.set(s.offset + k, i, v);
                    }
                }
            }
            Morphism::Dense(m)
        }
    };
    ChainMap::new(r, target.clone(), 0, vec![comp])
}

/// Evaluation `ε : Hom(P, D) ⊗ P -> D`, `φ ⊗ p ↦ φ(p)`, with the two
/// intermediate complexes.
pub struct Evaluation {
    pub hom: BifunctorResult,
    pub tensor: BifunctorResult,
    pub map: ChainMap,
}

pub fn evaluation(p: &ChainComplex, dcx: &ChainComplex) -> Result<Evaluation, ComplexError> {
    evaluation_on(p, p, dcx)
}

/// `ε : Hom(P, D) ⊗ Q -> D` for a subcomplex `Q` of `P` that agrees with
/// `P` wherever it is nonzero.
pub fn evaluation_on(p: &ChainComplex, q: &ChainComplex, dcx: &ChainComplex) -> Result<Evaluation, ComplexError> {
    let alg = p.algebra().clone();
    let f = alg.field();
    let d = alg.dim();
    let hom = hom_complex(p, dcx)?;
    let tensor = tensor_complex(&hom.complex, q)?;
    let src = &tensor.complex;
    let mut comps = Vec::new();
    for n in src.degrees() {
        let target_mod = dcx.module(n);
        let structured = src.structured_base().is_some() && target_mod.shape().is_some();
        let comp = if structured {
            let (b, rows) = target_mod.shape().unwrap();
            let mut m = RMatrix::zeros(b, d, rows, copies(&src.module(n)));
            for ts in tensor.slots(n) {
                let (i, h) = (ts.first, ts.second);
                let Some(hs) = hom.slot(i, h) else { continue };
                let (a, c) = (copies(&p.module(h)), copies(&dcx.module(h + i)));
                let bh = copies(&q.module(h));
                for l in 0..a {
                    for lp in 0..c {
                        let hidx = hs.copy_offset + l * c + lp;
                        m.add_entry(f, lp, ts.copy_offset + hidx * bh + l, &one(d), 1);
                    }
                }
            }
            Morphism::Structured(m)
        } else {
            let mut m = FieldMatrix::zeros(f, target_mod.dim(), src.dim(n));
            for ts in tensor.slots(n) {
                let (i, h) = (ts.first, ts.second);
                let Some(hs) = hom.slot(i, h) else { continue };
                let Piece::Tensor(tm) = &ts.piece else { unreachable!() };
                let Piece::Hom(hm) = &hs.piece else { unreachable!() };
                let hdim = hom.complex.dim(i);
                let pd = q.dim(h);
                let mut ek = FieldMatrix::zeros(f, target_mod.dim(), hdim * pd);
                for k in 0..hm.dim() {
                    let phi = hm.basis_map(k);
                    for y in 0..pd {
                        for (r, v) in phi.column(y).into_iter().enumerate().filter(|p| p.1 != 0) {
                            ek.set(r, (hs.offset + k) * pd + y, v);
                        }
                    }
                }
                m.add_block(0, ts.offset, &ek.mul(&tm.lift)?);
            }
            Morphism::Dense(m)
        };
        comps.push(comp);
    }
    let map = ChainMap::new(src.clone(), dcx.clone(), src.lo(), comps)?;
    Ok(Evaluation { hom, tensor, map })
}

/// Tensor evaluation `ω : Hom(P, X) ⊗ B -> Hom(P, X ⊗ B)`,
/// `ω(φ ⊗ b)(p) = (-1)^{|p||b|} φ(p) ⊗ b`, for `P` degreewise free.
pub struct Omega {
    pub source: BifunctorResult,
    pub target: BifunctorResult,
    pub map: ChainMap,
}

pub fn tensor_evaluation_omega(p: &ChainComplex, x: &ChainComplex, b: &ChainComplex) -> Result<Omega, ComplexError> {
    let alg = p.algebra().clone();
    let f = alg.field();
    let d = alg.dim();
    for n in p.degrees() {
        if !p.module(n).is_free() {
            return Err(ComplexError::Malformed(format!("P is not free in degree {n}")));
        }
    }
    let hx = hom_complex(p, x)?;
    let src = tensor_complex(&hx.complex, b)?;
    let xb = tensor_complex(x, b)?;
    let tgt = hom_complex(p, &xb.complex)?;
    let s = &src.complex;
    let structured = s.structured_base().is_some() && tgt.complex.structured_base().is_some();
    let mut comps = Vec::new();
    for n in s.degrees() {
        let rows_mod = tgt.complex.module(n);
        let comp = if structured {
            let (base, rows) = rows_mod.shape().unwrap();
            let mut m = RMatrix::zeros(base, d, rows, copies(&s.module(n)));
            for ss in src.slots(n) {
                let (i, h) = (ss.first, ss.second);
                let e = copies(&b.module(h));
                for hs in hx.slots(i) {
                    let j = hs.first;
                    let (a, c) = (copies(&p.module(j)), copies(&x.module(j + i)));
                    let Some(ts) = tgt.slot(n, j) else { continue };
                    let Some(xs) = xb.slot(j + n, j + i) else { continue };
                    let big_c = copies(&xb.complex.module(j + n));
                    let sg = sign(&alg, (j * h) as i64);
                    for l in 0..a {
                        for lp in 0..c {
                            for q in 0..e {
                                let col = ss.copy_offset + (hs.copy_offset + l * c + lp) * e + q;
                                let row = ts.copy_offset + l * big_c + xs.copy_offset + lp * e + q;
                                m.add_entry(f, row, col, &one(d), sg);
                            }
                        }
                    }
                }
            }
            Morphism::Structured(m)
        } else {
            let mut m = FieldMatrix::zeros(f, rows_mod.dim(), s.dim(n));
            for ss in src.slots(n) {
                let (i, h) = (ss.first, ss.second);
                let Piece::Tensor(tm) = &ss.piece else { unreachable!() };
                let bd = b.dim(h);
                let hdim = hx.complex.dim(i);
                let mut omk = FieldMatrix::zeros(f, rows_mod.dim(), hdim * bd);
                for hs in hx.slots(i) {
                    let j = hs.first;
                    let a = copies(&p.module(j));
                    let xdim = x.dim(j + i);
                    let Some(ts) = tgt.slot(n, j) else { continue };
                    let Some(xs) = xb.slot(j + n, j + i) else { continue };
                    let Piece::Tensor(xt) = &xs.piece else { unreachable!() };
                    let big = xb.complex.dim(j + n);
                    let sg = sign(&alg, (j * h) as i64);
                    for l in 0..a {
                        for sx in 0..xdim {
                            for y in 0..bd {
                                let col = (hs.offset + l * xdim + sx) * bd + y;
                                let q = xt.projection.column(sx * bd + y);
                                for (t, v) in q.into_iter().enumerate().filter(|p| p.1 != 0) {
                                    let row = ts.offset + l * big + xs.offset + t;
                                    omk.add_at(row, col, f.mul(sg, v));
                                }
                            }
                        }
                    }
                }
                m.add_block(0, ss.offset, &omk.mul(&tm.lift)?);
            }
            Morphism::Dense(m)
        };
        comps.push(comp);
    }
    let map = ChainMap::new(s.clone(), tgt.complex.clone(), s.lo(), comps)?;
    Ok(Omega {
        source: src,
        target: tgt,
        map,
    })
}

/// Hom-tensor adjunction `Hom(X ⊗ Y, Z) -> Hom(X, Hom(Y, Z))`,
/// `f ↦ (x ↦ (y ↦ f(x ⊗ y)))`.
pub struct Adjunction {
    pub source: BifunctorResult,
    pub target: BifunctorResult,
    pub map: ChainMap,
}

pub fn adjunction(x: &ChainComplex, y: &ChainComplex, z: &ChainComplex) -> Result<Adjunction, ComplexError> {
    let alg = x.algebra().clone();
    let f = alg.field();
    let xy = tensor_complex(&dense(x), &dense(y))?;
    let src = hom_complex(&xy.complex, &dense(z))?;
    let yz = hom_complex(&dense(y), &dense(z))?;
    let tgt = hom_complex(&dense(x), &yz.complex)?;
    let s = &src.complex;
    let mut comps = Vec::new();
    for n in s.degrees() {
        let mut m = FieldMatrix::zeros(f, tgt.complex.dim(n), s.dim(n));
        for ss in src.slots(n) {
            let mdeg = ss.first;
            let Piece::Hom(hm) = &ss.piece else { unreachable!() };
            for k in 0..hm.dim() {
                let fk = hm.basis_map(k);
                for ts in xy.slots(mdeg) {
                    let (i, h) = (ts.first, ts.second);
                    let Piece::Tensor(tt) = &ts.piece else { unreachable!() };
                    let (xd, yd) = (x.dim(i), y.dim(h));
                    let Some(bs) = tgt.slot(n, i) else { continue };
                    let Piece::Hom(bh) = &bs.piece else { unreachable!() };
                    let Some(ys) = yz.slot(i + n, h) else { continue };
                    let Piece::Hom(yh) = &ys.piece else { unreachable!() };
                    let on_slot = fk.block(0, ts.offset, fk.rows(), ts.module.dim()).mul(&tt.projection)?;
                    let target_dim = yz.complex.dim(i + n);
                    let mut phi = FieldMatrix::zeros(f, target_dim, xd);
                    for xi in 0..xd {
                        let cols: Vec<usize> = (0..yd).map(|yy| xi * yd + yy).collect();
                        let g = on_slot.select_columns(&cols);
                        for (r, v) in yh.coords(&g).into_iter().enumerate().filter(|p| p.1 != 0) {
                            phi.set(ys.offset + r, xi, v);
                        }
                    }
                    for (r, v) in bh.coords(&phi).into_iter().enumerate().filter(|p| p.1 != 0) {
                        m.add_at(bs.offset + r, ss.offset + k, v);
                    }
                }
            }
        }
        comps.push(Morphism::Dense(m));
    }
    let map = ChainMap::new(s.clone(), tgt.complex.clone(), s.lo(), comps)?;
    Ok(Adjunction {
        source: src,
        target: tgt,
        map,
    })
}

/// A chain map together with the Hom or tensor complexes it joins.
pub struct InducedMap {
    pub source: BifunctorResult,
    pub target: BifunctorResult,
    pub map: ChainMap,
}

fn hom_coords_block(
    hs: &HomModule,
    ht: &HomModule,
    apply: impl Fn(&FieldMatrix) -> Result<FieldMatrix, LinalgError>,
) -> Result<FieldMatrix, ComplexError> {
    let f = hs.module().field();
    let mut m = FieldMatrix::zeros(f, ht.dim(), hs.dim());
    for k in 0..hs.dim() {
        let c = ht.coords(&apply(&hs.basis_map(k))?);
        for (r, v) in c.into_iter().enumerate().filter(|p| p.1 != 0) {
            m.set(r, k, v);
        }
    }
    Ok(m)
}

/// `Hom(f, Z) : Hom(X', Z) -> Hom(X, Z)`, `ψ ↦ ψ ∘ f`, for `f : X -> X'`.
pub fn hom_map_first(f: &ChainMap, z: &ChainComplex) -> Result<InducedMap, ComplexError> {
    let alg = z.algebra().clone();
    let (x, xp) = (f.source(), f.target());
    let source = hom_complex(xp, z)?;
    let target = hom_complex(x, z)?;
    let (sc, tc) = (&source.complex, &target.complex);
    let lo = sc.lo().min(tc.lo());
    let mut comps = Vec::new();
    for n in lo..=sc.hi().max(tc.hi()) {
        let mut blocks = Vec::new();
        for ts in target.slots(n) {
            let Some(ss) = source.slot(n, ts.first) else { continue };
            let fj = f.component(ts.first);
            let blk = match (&ss.piece, &ts.piece, &fj) {
                (Piece::Structured { .. }, Piece::Structured { right_copies, .. }, Morphism::Structured(r)) => {
                    Morphism::Structured(r.transpose().kron_identity_right(*right_copies))
                }
                (Piece::Structured { .. }, Piece::Structured { .. }, _) if fj.is_zero() => continue,
                _ => {
                    let hs = slot_hom(ss, &xp.module(ss.first), &z.module(ss.second))?;
                    let ht = slot_hom(ts, &x.module(ts.first), &z.module(ts.second))?;
                    let fm = fj.realize(&alg);
                    Morphism::Dense(hom_coords_block(&hs, &ht, |psi| psi.mul(&fm))?)
                }
            };
            blocks.push((ts.clone(), ss.clone(), blk));
        }
        comps.push(slot_assemble(&alg, target.slots(n), source.slots(n), &blocks));
    }
    let map = ChainMap::new(sc.clone(), tc.clone(), lo, comps)?;
    Ok(InducedMap { source, target, map })
}

/// `Hom(X, g) : Hom(X, Y) -> Hom(X, Y')`, `φ ↦ g ∘ φ`, for `g : Y -> Y'`.
pub fn hom_map_second(x: &ChainComplex, g: &ChainMap) -> Result<InducedMap, ComplexError> {
    let alg = x.algebra().clone();
    let source = hom_complex(x, g.source())?;
    let target = hom_complex(x, g.target())?;
    let (sc, tc) = (&source.complex, &target.complex);
    let lo = sc.lo().min(tc.lo());
    let mut comps = Vec::new();
    for n in lo..=sc.hi().max(tc.hi()) {
        let mut blocks = Vec::new();
        for ts in target.slots(n) {
            let Some(ss) = source.slot(n, ts.first) else { continue };
            let gj = g.component(ts.second);
            let blk = match (&ss.piece, &ts.piece, &gj) {
                (Piece::Structured { left_copies, .. }, Piece::Structured { .. }, Morphism::Structured(r)) => {
                    Morphism::Structured(r.kron_identity_left(*left_copies))
                }
                (Piece::Structured { .. }, Piece::Structured { .. }, _) if gj.is_zero() => continue,
                _ => {
                    let hs = slot_hom(ss, &x.module(ss.first), &g.source().module(ss.second))?;
                    let ht = slot_hom(ts, &x.module(ts.first), &g.target().module(ts.second))?;
                    let gm = gj.realize(&alg);
                    Morphism::Dense(hom_coords_block(&hs, &ht, |phi| gm.mul(phi))?)
                }
            };
            blocks.push((ts.clone(), ss.clone(), blk));
        }
        comps.push(slot_assemble(&alg, target.slots(n), source.slots(n), &blocks));
    }
    let map = ChainMap::new(sc.clone(), tc.clone(), lo, comps)?;
    Ok(InducedMap { source, target, map })
}

/// `f ⊗ Y : X ⊗ Y -> X' ⊗ Y` for `f : X -> X'`.
pub fn tensor_map_first(f: &ChainMap, y: &ChainComplex) -> Result<InducedMap, ComplexError> {
    tensor_map(f, y, true)
}

/// `X ⊗ g : X ⊗ Y -> X ⊗ Y'` for `g : Y -> Y'`.
pub fn tensor_map_second(x: &ChainComplex, g: &ChainMap) -> Result<InducedMap, ComplexError> {
    tensor_map(g, x, false)
}

fn tensor_map(h: &ChainMap, other: &ChainComplex, first: bool) -> Result<InducedMap, ComplexError> {
    let alg = other.algebra().clone();
    let f = alg.field();
    let (source, target) = if first {
        (tensor_complex(h.source(), other)?, tensor_complex(h.target(), other)?)
    } else {
        (tensor_complex(other, h.source())?, tensor_complex(other, h.target())?)
    };
    let (sc, tc) = (&source.complex, &target.complex);
    let lo = sc.lo().min(tc.lo());
    let mut comps = Vec::new();
    for n in lo..=sc.hi().max(tc.hi()) {
        let mut blocks = Vec::new();
        for ts in target.slots(n) {
            let Some(ss) = source.slot(n, ts.first) else { continue };
            let hk = h.component(if first { ts.first } else { ts.second });
            let blk = match (&ss.piece, &ts.piece, &hk) {
                (Piece::Structured { right_copies, .. }, Piece::Structured { .. }, Morphism::Structured(r))
                    if first =>
                {
                    Morphism::Structured(r.kron_identity_right(*right_copies))
                }
                (Piece::Structured { left_copies, .. }, Piece::Structured { .. }, Morphism::Structured(r)) => {
                    Morphism::Structured(r.kron_identity_left(*left_copies))
                }
                (Piece::Structured { .. }, Piece::Structured { .. }, _) if hk.is_zero() => continue,
                _ => {
                    let (Piece::Tensor(tsrc), Piece::Tensor(ttgt)) = (&ss.piece, &ts.piece) else {
                        return Err(ComplexError::Malformed("mixed slot representations".into()));
                    };
                    let hm = hk.realize(&alg);
                    let k = if first {
                        hm.kronecker(&FieldMatrix::identity(f, other.dim(ts.second)))?
                    } else {
                        FieldMatrix::identity(f, other.dim(ts.first)).kronecker(&hm)?
                    };
                    Morphism::Dense(ttgt.projection.mul(&k)?.mul(&tsrc.lift)?)
                }
            };
            blocks.push((ts.clone(), ss.clone(), blk));
        }
        comps.push(slot_assemble(&alg, target.slots(n), source.slots(n), &blocks));
    }
    let map = ChainMap::new(sc.clone(), tc.clone(), lo, comps)?;
    Ok(InducedMap { source, target, map })
}

/// Coordinates of a Hom slot. A structured slot with free source uses the
/// same `l * c + l'` order as [`hom_module`], so it can be read that way.
fn slot_hom(slot: &Slot, xm: &FinModule, ym: &FinModule) -> Result<HomModule, ComplexError> {
    match &slot.piece {
        Piece::Hom(h) => Ok(h.clone()),
        Piece::Structured { .. } if xm.is_free() => {
            let h = hom_module(xm, ym)?;
            debug_assert_eq!(h.dim(), slot.module.dim());
            Ok(h)
        }
        _ => Err(ComplexError::Malformed(format!(
            "slot {} is not a generic Hom slot",
            slot.first
        ))),
    }
}

fn slot_assemble(alg: &FinLocalAlgebra, rows: &[Slot], cols: &[Slot], blocks: &[(Slot, Slot, Morphism)]) -> Morphism {
    let rm: Vec<&FinModule> = rows.iter().map(|s| &s.module).collect();
    let cm: Vec<&FinModule> = cols.iter().map(|s| &s.module).collect();
    let pos = |ss: &[Slot], first: i32| ss.iter().position(|s| s.first == first).unwrap();
    let idx: Vec<(usize, usize, &Morphism, u32)> = blocks
        .iter()
        .map(|(t, s, m)| (pos(rows, t.first), pos(cols, s.first), m, 1))
        .collect();
    assemble(alg, &rm, &cm, &idx)
}

/// The same complex with general modules and dense differentials.
pub fn dense(x: &ChainComplex) -> ChainComplex {
    if x.is_empty() {
        return x.clone();
    }
    let alg = x.algebra();
    let modules = x.degrees().map(|n| x.module(n).to_general()).collect();
    let diffs = (x.lo() + 1..=x.hi())
        .map(|n| Morphism::Dense(x.diff(n).unwrap().realize(alg)))
        .collect();
    ChainComplex::new_unchecked(alg.clone(), x.lo(), modules, diffs)
        .expect("same shapes")
        .with_open(x.lo_open(), x.hi_open())
}

/// `Hom(X, E)` for a module `E` in degree 0.
pub fn dualize(x: &ChainComplex, e: &FinModule) -> Result<BifunctorResult, ComplexError> {
    hom_complex(x, &ChainComplex::concentrated(e, 0))
}
