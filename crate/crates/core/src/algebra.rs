//! Finite-dimensional commutative local algebras given by structure
//! constants, with socle and Matlis dual.

use crate::error::{AlgebraError, PresentationError};
use crate::linalg::{FieldMatrix, PrimeField, SpanBuilder};
use crate::presentation::{standard_basis, RingPresentation};

/// A commutative local k-algebra R with basis `e_0 = 1, e_1, ..., e_{d-1}`
/// where `e_1, ..., e_{d-1}` span the maximal ideal m.
#[derive(Clone, Debug)]
pub struct FinLocalAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<u32>>>,
    left: Vec<FieldMatrix>,
    left_nz: Vec<Vec<(usize, usize, u32)>>,
    gens: Vec<usize>,
}

impl PartialEq for FinLocalAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.mult == other.mult
    }
}

impl Eq for FinLocalAlgebra {}

impl FinLocalAlgebra {
    /// Validates and builds the algebra. `structure[i][j]` is the
    /// coordinate vector of `e_i * e_j`.
    #[allow(clippy::needless_range_loop)]
    pub fn new(field: PrimeField, labels: Vec<String>, structure: Vec<Vec<Vec<u32>>>) -> Result<Self, AlgebraError> {
        let d = structure.len();
        if d == 0 {
            return Err(AlgebraError::Malformed("dimension 0".into()));
        }
        if labels.len() != d {
            return Err(AlgebraError::Malformed(format!(
                "{} labels for dimension {d}",
                labels.len()
            )));
        }
        for (i, row) in structure.iter().enumerate() {
            if row.len() != d || row.iter().any(|v| v.len() != d) {
                return Err(AlgebraError::Malformed(format!("row {i} has the wrong shape")));
            }
        }
        let mult: Vec<Vec<Vec<u32>>> = structure
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.into_iter().map(|c| c % field.p()).collect())
                    .collect()
            })
            .collect();
        for j in 0..d {
            let unit: Vec<u32> = (0..d).map(|t| u32::from(t == j)).collect();
            if mult[0][j] != unit || mult[j][0] != unit {
                return Err(AlgebraError::BadUnit);
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                if mult[i][j] != mult[j][i] {
                    return Err(AlgebraError::NonCommutative(i, j));
                }
            }
        }
        for i in 1..d {
            for j in 1..d {
                if mult[i][j][0] != 0 {
                    return Err(AlgebraError::NotAnIdeal(i, j));
                }
            }
        }
        let mut alg = Self {
            field,
            labels,
            mult,
            left: Vec::new(),
            left_nz: Vec::new(),
            gens: Vec::new(),
        };
        alg.left = (0..d)
            .map(|i| {
                let cols: Vec<Vec<u32>> = (0..d).map(|j| alg.mult[i][j].clone()).collect();
                FieldMatrix::from_columns(field, d, &cols)
            })
            .collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = alg.mul(&alg.mult[i][j], &unit_vec(d, k));
                    let rhs = alg.mul(&unit_vec(d, i), &alg.mult[j][k]);
                    if lhs != rhs {
                        return Err(AlgebraError::NonAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 1..d {
            let mut power = alg.left[i].clone();
            for _ in 1..d {
                power = power.mul(&alg.left[i])?;
            }
            if !power.is_zero() {
                return Err(AlgebraError::NonLocal(i));
            }
        }
        alg.left_nz = alg
            .left
            .iter()
            .map(|m| {
                (0..d)
                    .flat_map(|r| m.row_nonzeros(r).map(move |(c, v)| (r, c, v)))
                    .collect()
            })
            .collect();
        let mut square = SpanBuilder::new(field, d);
        for i in 1..d {
            for j in i..d {
                square.insert(&alg.mult[i][j]);
            }
        }
        alg.gens = (1..d).filter(|&i| square.insert(&unit_vec(d, i))).collect();
        Ok(alg)
    }

    /// The algebra presented by `pres`, on its standard monomial basis.
    pub fn from_presentation(pres: &RingPresentation, dim_cap: usize) -> Result<Self, PresentationError> {
        let sb = standard_basis(pres, dim_cap)?;
        let labels = sb.labels(pres.vars());
        Ok(Self::new(pres.field(), labels, sb.structure)?)
    }

    /// The field k itself.
    pub fn residue_field_algebra(field: PrimeField) -> Self {
        Self::new(field, vec!["1".into()], vec![vec![vec![1]]]).expect("k is a local algebra")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.mult.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let d = self.dim();
        let mut out = vec![0u32; d];
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
                let c = f.mul(x, y);
                for (t, &v) in self.mult[i][j].iter().enumerate() {
                    if v != 0 {
                        out[t] = f.add(out[t], f.mul(c, v));
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `e_i`.
    pub fn left(&self, i: usize) -> &FieldMatrix {
        &self.left[i]
    }

    /// Nonzero entries `(row, col, value)` of [`left`](Self::left).
    pub fn left_nonzeros(&self, i: usize) -> &[(usize, usize, u32)] {
        &self.left_nz[i]
    }

    /// Matrix of multiplication by an arbitrary element.
    pub fn left_of(&self, r: &[u32]) -> FieldMatrix {
        let d = self.dim();
        let mut m = FieldMatrix::zeros(self.field, d, d);
        for (k, &c) in r.iter().enumerate().filter(|(_, c)| **c != 0) {
            for &(i, j, v) in &self.left_nz[k] {
                m.add_at(i, j, self.field.mul(c, v));
            }
        }
        m
    }

    /// Basis indices whose images form a basis of m/m^2.
    pub fn max_ideal_generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn embedding_dim(&self) -> usize {
        self.gens.len()
    }

    /// `true` when `r` has no unit component.
    pub fn in_max_ideal(&self, r: &[u32]) -> bool {
        r[0] == 0
    }

    /// Basis (as columns) of the socle `{ r : r m = 0 }`.
    pub fn socle(&self) -> FieldMatrix {
        let d = self.dim();
        let mut stacked = FieldMatrix::zeros(self.field, self.gens.len() * d, d);
        for (k, &g) in self.gens.iter().enumerate() {
            stacked.add_block(k * d, 0, &self.left[g]);
        }
        stacked.kernel()
    }

    pub fn socle_dim(&self) -> usize {
        self.socle().cols()
    }

    /// Classical test: R is Gorenstein iff its socle is one-dimensional.
    pub fn gorenstein_socle_oracle(&self) -> bool {
        self.socle_dim() == 1
    }
}

pub(crate) fn unit_vec(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::DEFAULT_DIM_CAP;

    fn ring(p: u32, vars: &[&str], rels: &[&str]) -> FinLocalAlgebra {
        let pres = RingPresentation::parse(p, vars, rels).unwrap();
        FinLocalAlgebra::from_presentation(&pres, DEFAULT_DIM_CAP).unwrap()
    }

    #[test]
    fn the_field_itself() {
        let k = FinLocalAlgebra::residue_field_algebra(PrimeField::new(7).unwrap());
        assert_eq!(k.dim(), 1);
        assert_eq!(k.embedding_dim(), 0);
        assert!(k.gorenstein_socle_oracle());
    }

    #[test]
    fn invertible_generator_is_rejected() {
        let f = PrimeField::new(2).unwrap();
        let s = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
        let err = FinLocalAlgebra::new(f, vec!["1".into(), "x".into()], s).unwrap_err();
        assert_eq!(err, AlgebraError::NotAnIdeal(1, 1));
    }

    #[test]
    fn socles() {
        let r = ring(2, &["x"], &["x^2"]);
        assert_eq!(r.socle_dim(), 1);
        assert!(r.gorenstein_socle_oracle());
        let r = ring(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(r.socle_dim(), 2);
        assert!(!r.gorenstein_socle_oracle());
        let r = ring(3, &["x", "y"], &["x^2", "y^2"]);
        let s = r.socle();
        assert_eq!(s.cols(), 1);
        assert_eq!(r.labels()[3], "x*y");
        assert_eq!(s.column(0), vec![0, 0, 0, 1]);
    }

    #[test]
    fn generators_of_the_maximal_ideal() {
        let r = ring(2, &["x", "y"], &["x^2", "y^3", "x*y"]);
        assert_eq!(r.dim(), 4);
        assert_eq!(r.embedding_dim(), 2);
        let r = ring(3, &["x"], &["x^3"]);
        assert_eq!(r.max_ideal_generators(), &[1]);
    }
}
