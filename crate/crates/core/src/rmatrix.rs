//! Sparse matrices with entries in R, acting on sums of copies of R or
//! of its Matlis dual E.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::FinLocalAlgebra;
use crate::linalg::{FieldMatrix, PrimeField};

/// The building block of a structured module: R itself, or
/// E = Hom_k(R, k) with `(r f)(s) = f(r s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    Free,
    Dual,
}

impl Base {
    /// Base of Hom_R(B1, B2), or `None` if that is not a sum of copies of
    /// R or E. Uses Hom(R, B) = B and Hom(E, E) = R.
    pub fn hom(src: Base, dst: Base) -> Option<Base> {
        match (src, dst) {
            (Base::Free, b) => Some(b),
            (Base::Dual, Base::Dual) => Some(Base::Free),
            (Base::Dual, Base::Free) => None,
        }
    }

    /// Base of B1 ⊗_R B2 when one side is R.
    pub fn tensor(a: Base, b: Base) -> Option<Base> {
        match (a, b) {
            (Base::Free, x) | (x, Base::Free) => Some(x),
            (Base::Dual, Base::Dual) => None,
        }
    }
}

/// A `rows x cols` matrix over R, stored sparsely.
///
/// It represents the R-linear map `B^cols -> B^rows` whose `(i, j)` entry
/// acts on the `j`-th copy of `B` by multiplication. Entries are dense
/// coordinate vectors in the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    base: Base,
    d: usize,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Vec<u32>>,
}

impl RMatrix {
    pub fn zeros(base: Base, d: usize, rows: usize, cols: usize) -> Self {
        Self {
            base,
            d,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(base: Base, d: usize, n: usize) -> Self {
        let mut m = Self::zeros(base, d, n, n);
        for i in 0..n {
            m.entries.insert((i, i), one(d));
        }
        m
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn with_base(mut self, base: Base) -> Self {
        self.base = base;
        self
    }

    pub fn algebra_dim(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Vec<u32> {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| vec![0; self.d])
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[u32])> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// Adds `c * r` to entry `(i, j)`.
    pub fn add_entry(&mut self, field: PrimeField, i: usize, j: usize, r: &[u32], c: u32) {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of range");
        if c == 0 || r.iter().all(|&v| v == 0) {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(|| vec![0; r.len()]);
        for (s, &v) in slot.iter_mut().zip(r) {
            *s = field.add(*s, field.mul(c, v));
        }
        if slot.iter().all(|&v| v == 0) {
            self.entries.remove(&(i, j));
        }
    }

    /// Adds `c * block` with its top-left corner at `(r0, c0)`.
    pub fn add_block(&mut self, field: PrimeField, r0: usize, c0: usize, block: &RMatrix, c: u32) {
        for (i, j, v) in block.entries() {
            self.add_entry(field, r0 + i, c0 + j, v, c);
        }
    }

    pub fn scale(&self, field: PrimeField, c: u32) -> Self {
        let mut out = Self::zeros(self.base, self.d, self.rows, self.cols);
        out.add_block(field, 0, 0, self, c);
        out
    }

    pub fn transpose(&self) -> Self {
        Self {
            base: self.base,
            d: self.d,
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    /// `self * other` with entries multiplied in R.
    pub fn mul(&self, alg: &FinLocalAlgebra, other: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, other.rows, "R-matrix product shape mismatch");
        let field = alg.field();
        let mut by_row: Vec<Vec<(usize, &[u32])>> = vec![Vec::new(); other.rows];
        for (j, k, v) in other.entries() {
            by_row[j].push((k, v));
        }
        let mut out = RMatrix::zeros(other.base, self.d, self.rows, other.cols);
        for (i, j, a) in self.entries() {
            for &(k, b) in &by_row[j] {
                out.add_entry(field, i, k, &alg.mul(a, b), 1);
            }
        }
        out
    }

    /// `I_a ⊗ self`: block diagonal, `a` copies, index `l * rows + i`.
    pub fn kron_identity_left(&self, a: usize) -> RMatrix {
        let mut out = RMatrix::zeros(self.base, self.d, a * self.rows, a * self.cols);
        for l in 0..a {
            for (&(i, j), v) in &self.entries {
                out.entries.insert((l * self.rows + i, l * self.cols + j), v.clone());
            }
        }
        out
    }

    /// `self ⊗ I_c`, index `i * c + l`.
    pub fn kron_identity_right(&self, c: usize) -> RMatrix {
        let mut out = RMatrix::zeros(self.base, self.d, self.rows * c, self.cols * c);
        for (&(i, j), v) in &self.entries {
            for l in 0..c {
                out.entries.insert((i * c + l, j * c + l), v.clone());
            }
        }
        out
    }

    /// True when every entry lies in the maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.entries.values().all(|v| v[0] == 0)
    }

    /// The k-linear matrix of the map, of shape `(rows d) x (cols d)`.
    pub fn realize(&self, alg: &FinLocalAlgebra) -> FieldMatrix {
        let d = self.d;
        let mut out = FieldMatrix::zeros(alg.field(), self.rows * d, self.cols * d);
        self.realize_into(alg, &mut out, false);
        out
    }

    /// The transpose of [`realize`](Self::realize), built directly.
    pub fn realize_transposed(&self, alg: &FinLocalAlgebra) -> FieldMatrix {
        let d = self.d;
        let mut out = FieldMatrix::zeros(alg.field(), self.cols * d, self.rows * d);
        self.realize_into(alg, &mut out, true);
        out
    }

    fn realize_into(&self, alg: &FinLocalAlgebra, out: &mut FieldMatrix, transposed: bool) {
        let field = alg.field();
        let d = self.d;
        for (&(i, j), r) in &self.entries {
            for (k, &c) in r.iter().enumerate().filter(|(_, c)| **c != 0) {
                for &(a, b, v) in alg.left_nonzeros(k) {
                    // rho_R(e_k) = L_k and rho_E(e_k) = L_k^T.
                    let (a, b) = match self.base {
                        Base::Free => (a, b),
                        Base::Dual => (b, a),
                    };
                    let (row, col) = (i * d + a, j * d + b);
                    let (row, col) = if transposed { (col, row) } else { (row, col) };
                    out.add_at(row, col, field.mul(c, v));
                }
            }
        }
    }

    /// Reads an R-matrix off a k-matrix between sums of copies of R,
    /// using the image of `1` in each source copy.
    pub fn from_free_columns(field: PrimeField, d: usize, rows: usize, columns: &[Vec<u32>]) -> RMatrix {
        let mut out = RMatrix::zeros(Base::Free, d, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows * d);
            for i in 0..rows {
                out.add_entry(field, i, j, &col[i * d..(i + 1) * d], 1);
            }
        }
        out
    }
}

pub(crate) fn one(d: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[0] = 1;
    v
}
