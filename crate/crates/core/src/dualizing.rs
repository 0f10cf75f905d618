//! The dualizing axioms for E = Hom_k(R, k).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::FinLocalAlgebra;
use crate::complex::ChainComplex;
use crate::error::DetectorError;
use crate::homalg::{dense, hom_complex, homothety};
use crate::linalg::FieldMatrix;
use crate::module::{hom_module, k_dual, matlis_dual, FinModule, ModuleMap};
use crate::resolve::minimal_resolution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualizingReport {
    pub depth: usize,
    /// `dim_k Hom_R(k, E)`.
    pub hom_k_e: usize,
    /// `dim_k Hom_R(E, E)` and the rank of the homothety into it.
    pub hom_e_e: usize,
    pub homothety_rank: usize,
    /// `(n, dim H_n(Hom(Q, E)))` for `Q` resolving k, `-(N-1) <= n <= 0`.
    pub hom_resolution_k: Vec<(i32, usize)>,
    /// `(i, dim Ext^i(E, E))` for `1 <= i <= N-1`.
    pub ext_self: Vec<(usize, usize)>,
    /// `R -> Hom_k(Hom_k(R, k), k)` is an isomorphism.
    pub double_dual: bool,
    pub violations: Vec<String>,
}

impl DualizingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `e` behaves as a normalized dualizing module up to depth `N`.
pub fn check_dualizing_axioms(
    alg: &Arc<FinLocalAlgebra>,
    e: &FinModule,
    depth: usize,
    budget: usize,
) -> Result<DualizingReport, DetectorError> {
    if depth < 2 {
        return Err(DetectorError::BadDepth(depth));
    }
    let d = alg.dim();
    let n = depth as i32;
    let mut violations = Vec::new();

    let k = FinModule::residue_field(alg.clone());
    let hom_k_e = hom_module(&k, e)?.dim();
    if hom_k_e != 1 {
        violations.push(format!("Hom(k, E) has dimension {hom_k_e}"));
    }

    let ec = dense(&ChainComplex::concentrated(e, 0));
    let end = hom_complex(&ec, &ec)?;
    let hom_e_e = end.complex.dim(0);
    let homothety_rank = homothety(&ec, &end)?.component(0).rank(alg);
    if hom_e_e != d || homothety_rank != d {
        violations.push(format!(
            "homothety R -> Hom(E, E) has rank {homothety_rank} into dimension {hom_e_e}"
        ));
    }

    let ecx = ChainComplex::concentrated(e, 0);
    let q = minimal_resolution(&k, depth, budget)?;
    let hq = hom_complex(&q.complex, &ecx)?;
    let hom_resolution_k: Vec<(i32, usize)> = (-(n - 1)..=0).map(|i| (i, hq.complex.homology_dim(i))).collect();
    for &(i, h) in &hom_resolution_k {
        let want = usize::from(i == 0);
        if h != want {
            violations.push(format!("H_{i}(Hom(Q, E)) has dimension {h}, expected {want}"));
        }
    }

    let p = minimal_resolution(e, depth, budget)?;
    let hp = hom_complex(&p.complex, &ecx)?;
    let ext_self: Vec<(usize, usize)> = (1..depth).map(|i| (i, hp.complex.homology_dim(-(i as i32)))).collect();
    for &(i, h) in &ext_self {
        if h != 0 {
            violations.push(format!("Ext^{i}(E, E) has dimension {h}"));
        }
    }

    let r = FinModule::free(alg.clone(), 1);
    let dd = k_dual(&k_dual(&r));
    let double_dual = ModuleMap::new(r, dd, FieldMatrix::identity(alg.field(), d))
        .map(|m| m.is_iso())
        .unwrap_or(false);
    if !double_dual {
        violations.push("Matlis double dual is not naturally isomorphic to R".into());
    }

    Ok(DualizingReport {
        depth,
        hom_k_e,
        hom_e_e,
        homothety_rank,
        hom_resolution_k,
        ext_self,
        double_dual,
        violations,
    })
}

/// [`check_dualizing_axioms`] for the Matlis dual of R.
pub fn check_matlis_dual(
    alg: &Arc<FinLocalAlgebra>,
    depth: usize,
    budget: usize,
) -> Result<DualizingReport, DetectorError> {
    check_dualizing_axioms(alg, &matlis_dual(alg), depth, budget)
}
