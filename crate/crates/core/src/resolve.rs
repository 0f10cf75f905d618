//! Minimal free resolutions over R, truncated at a fixed depth.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::FinLocalAlgebra;
use crate::complex::{ChainComplex, Morphism};
use crate::error::ResolveError;
use crate::linalg::{FieldMatrix, SpanBuilder};
use crate::module::{matlis_dual, min_gens, FinModule, ModuleMap};
use crate::rmatrix::RMatrix;

/// Cap on the total k-dimension of a resolution.
pub const DEFAULT_BUDGET: usize = 200_000;
pub const DEFAULT_DEPTH: usize = 5;

#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub target: FinModule,
    pub depth: usize,
    /// `P_0 <- P_1 <- ... <- P_len`, free modules, R-matrix differentials.
    pub complex: ChainComplex,
    /// `π : P_0 -> target`.
    pub augmentation: ModuleMap,
    pub betti: Vec<usize>,
    /// Some syzygy vanished, so the resolution is complete.
    pub terminated: bool,
}

/// Resolves `m` by covering minimal generators and recursing on the
/// kernel, up to `P_depth`.
pub fn minimal_resolution(m: &FinModule, depth: usize, budget: usize) -> Result<FreeResolution, ResolveError> {
    if depth == 0 {
        return Err(ResolveError::BadDepth);
    }
    let alg = m.algebra().clone();
    let f = alg.field();
    let d = alg.dim();
    let gens = min_gens(m);
    let b0 = gens.mu;
    let mut aug = FieldMatrix::zeros(f, m.dim(), b0 * d);
    for l in 0..b0 {
        let g = gens.generators.column(l);
        for s in 0..d {
            aug.add_block(
                0,
                l * d + s,
                &FieldMatrix::from_columns(f, m.dim(), &[m.action(s).mul_vec(&g)]),
            );
        }
    }
    let mut betti = vec![b0];
    let mut used = b0 * d;
    check_budget(used, budget)?;
    let mut diffs: Vec<RMatrix> = Vec::new();
    let mut current = aug.clone();
    let mut terminated = false;
    loop {
        let z = current.kernel();
        if z.cols() == 0 {
            terminated = true;
            break;
        }
        if diffs.len() == depth {
            break;
        }
        let prev = *betti.last().unwrap();
        let chosen = syzygy_generators(&alg, prev, &z);
        used += chosen.len() * d;
        check_budget(used, budget)?;
        let dm = RMatrix::from_free_columns(f, d, prev, &chosen);
        current = dm.realize(&alg);
        betti.push(chosen.len());
        diffs.push(dm);
    }
    let modules = betti.iter().map(|&b| FinModule::free(alg.clone(), b)).collect();
    let complex = ChainComplex::new(
        alg.clone(),
        0,
        modules,
        diffs.into_iter().map(Morphism::Structured).collect(),
    )?
    .with_open(false, !terminated);
    let augmentation = ModuleMap::new(FinModule::free(alg, b0), m.clone(), aug)?;
    Ok(FreeResolution {
        target: m.clone(),
        depth,
        complex,
        augmentation,
        betti,
        terminated,
    })
}

fn check_budget(needed: usize, budget: usize) -> Result<(), ResolveError> {
    if needed > budget {
        Err(ResolveError::Budget { needed, budget })
    } else {
        Ok(())
    }
}

/// Minimal generators of the submodule of `R^rank` spanned (over k) by
/// the columns of `z`: kernel basis vectors outside `m Z` plus the ones
/// already chosen.
fn syzygy_generators(alg: &FinLocalAlgebra, rank: usize, z: &FieldMatrix) -> Vec<Vec<u32>> {
    let f = alg.field();
    let d = alg.dim();
    let n = rank * d;
    let mut span = SpanBuilder::new(f, n);
    for &g in alg.max_ideal_generators() {
        for c in 0..z.cols() {
            let v = z.column(c);
            let mut w = vec![0u32; n];
            for l in 0..rank {
                let prod = alg.left(g).mul_vec(&v[l * d..(l + 1) * d]);
                w[l * d..(l + 1) * d].copy_from_slice(&prod);
            }
            span.insert(&w);
        }
    }
    let mut chosen = Vec::new();
    for c in 0..z.cols() {
        let v = z.column(c);
        if span.insert(&v) {
            chosen.push(v);
        }
    }
    chosen
}

impl FreeResolution {
    /// Every differential has entries in m.
    pub fn is_minimal(&self) -> bool {
        (1..=self.complex.hi()).all(|n| match self.complex.diff(n) {
            Some(Morphism::Structured(r)) => r.is_minimal(),
            _ => false,
        })
    }

    /// `H_0(P) ≅ target` via π and `H_i(P) = 0` for `0 < i < len`.
    pub fn is_exact(&self) -> bool {
        let c = &self.complex;
        let alg = c.algebra();
        let hi = c.hi();
        let top = if self.terminated { hi } else { hi - 1 };
        let inner = (1..=top).all(|i| c.homology_dim(i) == 0);
        let onto = self.augmentation.matrix.rank() == self.target.dim();
        let im = c.diff_or_zero(1).realize(alg);
        let composed_zero = self.augmentation.matrix.mul(&im).map(|m| m.is_zero()).unwrap_or(false);
        let h0 = c.homology_dim(0) == self.target.dim();
        inner && onto && composed_zero && h0
    }
}

/// Outcome of [`betti_gorenstein_screen`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScreenVerdict {
    Gorenstein,
    NonGorensteinUnconfirmed,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct Screen {
    pub verdict: ScreenVerdict,
    pub resolution: FreeResolution,
}

/// Resolves E: a finite resolution forces Gorensteinness, and over an
/// artinian ring that happens exactly when E is free of rank 1.
pub fn betti_gorenstein_screen(
    alg: &Arc<FinLocalAlgebra>,
    depth: usize,
    budget: usize,
) -> Result<Screen, ResolveError> {
    let e = matlis_dual(alg);
    let resolution = minimal_resolution(&e, depth, budget)?;
    let verdict = if resolution.terminated {
        ScreenVerdict::Gorenstein
    } else if resolution.betti[0] > 1 {
        ScreenVerdict::NonGorensteinUnconfirmed
    } else {
        ScreenVerdict::Inconclusive
    };
    Ok(Screen { verdict, resolution })
}
