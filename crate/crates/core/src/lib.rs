//! Gorenstein detection over finite-dimensional local algebras via the
//! test complexes K = Cone(R -> Hom(P, P)) and M = Cone(Hom(P, E) ⊗ P -> E).

pub mod algebra;
pub mod complex;
pub mod detector;
pub mod dualizing;
pub mod error;
pub mod homalg;
pub mod linalg;
pub mod module;
pub mod presentation;
pub mod resolve;
pub mod rmatrix;
