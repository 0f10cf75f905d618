//! Echelon-form helpers built on [`FieldMatrix`]: coordinate solvers,
//! incremental spans and quotient spaces.

use super::field::PrimeField;
use super::matrix::{axpy_dense, xor_words, FieldMatrix};

/// Coordinates with respect to a fixed basis of a subspace.
///
/// The basis is given as the columns of an `n x h` matrix of full column
/// rank. A set of `h` rows on which the basis is invertible is selected
/// once; afterwards coordinates cost one `h x h` product.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    basis: FieldMatrix,
    rows: Vec<usize>,
    inverse: FieldMatrix,
}

impl BasisCoords {
    /// Returns `None` when the columns are linearly dependent.
    pub fn new(basis: &FieldMatrix) -> Option<Self> {
        let field = basis.field();
        let h = basis.cols();
        let (_, rows) = basis.transpose().rref();
        if rows.len() != h {
            return None;
        }
        let square = basis.select_rows(&rows);
        let mut aug = square.hstack(&FieldMatrix::identity(field, h)).ok()?;
        let piv = aug.rref_in_place(h);
        debug_assert_eq!(piv.len(), h);
        let inverse = aug.block(0, h, h, h);
        Some(Self {
            basis: basis.clone(),
            rows,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    /// Coordinates of `v`, assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        let sel: Vec<u32> = self.rows.iter().map(|&r| v[r]).collect();
        self.inverse.mul_vec(&sel)
    }

    /// Coordinates of `v`, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.coords_unchecked(v);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }

    /// Coordinates of every column of `m`; `None` if some column leaves
    /// the span.
    pub fn coords_of_columns(&self, m: &FieldMatrix) -> Option<FieldMatrix> {
        let sel = m.select_rows(&self.rows);
        let c = self.inverse.mul(&sel).ok()?;
        let back = self.basis.mul(&c).ok()?;
        (back == *m).then_some(c)
    }
}

/// A growing linearly independent set, kept in insertion echelon form.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: PrimeField,
    n: usize,
    rows: Vec<Row>,
    pivot_of: Vec<Option<usize>>,
}

#[derive(Clone, Debug)]
enum Row {
    Bits(Vec<u64>),
    Dense(Vec<u32>),
}

impl SpanBuilder {
    pub fn new(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            n,
            rows: Vec::new(),
            pivot_of: vec![None; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn pack(&self, v: &[u32]) -> Row {
        assert_eq!(v.len(), self.n);
        if self.field.is_binary() {
            let mut w = vec![0u64; self.n.div_ceil(64)];
            for (j, &x) in v.iter().enumerate() {
                if x & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            Row::Bits(w)
        } else {
            Row::Dense(v.iter().map(|&x| x % self.field.p()).collect())
        }
    }

    /// Reduces `row` against the current pivots; returns the leading column
    /// of the remainder, if any.
    fn reduce(&self, row: &mut Row) -> Option<usize> {
        loop {
            let lead = match row {
                Row::Bits(w) => w
                    .iter()
                    .position(|&x| x != 0)
                    .map(|i| i * 64 + w[i].trailing_zeros() as usize),
                Row::Dense(d) => d.iter().position(|&x| x != 0),
            }?;
            let Some(pr) = self.pivot_of[lead] else {
                return Some(lead);
            };
            match (row as &mut Row, &self.rows[pr]) {
                (Row::Bits(w), Row::Bits(p)) => {
                    let w0 = lead / 64;
                    xor_words(&mut w[w0..], &p[w0..]);
                }
                (Row::Dense(d), Row::Dense(p)) => {
                    let f = d[lead];
                    axpy_dense(self.field, &mut d[lead..], &p[lead..], f);
                }
                _ => unreachable!(),
            }
        }
    }

    /// Adds `v` if it is independent of what is already there.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut row = self.pack(v);
        match self.reduce(&mut row) {
            None => false,
            Some(lead) => {
                if let Row::Dense(d) = &mut row {
                    let inv = self.field.inv(d[lead]);
                    for x in d.iter_mut() {
                        *x = self.field.mul(*x, inv);
                    }
                }
                self.pivot_of[lead] = Some(self.rows.len());
                self.rows.push(row);
                true
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut row = self.pack(v);
        self.reduce(&mut row).is_none()
    }

    /// Inserts every column of `m`; returns how many were independent.
    pub fn insert_columns(&mut self, m: &FieldMatrix) -> usize {
        let t = m.transpose();
        (0..t.rows()).filter(|&i| self.insert(&t.row(i))).count()
    }
}

/// The quotient `F_p^n / U` for a subspace `U` given by spanning columns.
///
/// The quotient basis consists of the standard vectors at the non-pivot
/// coordinates of the reduced echelon form of `U`.
#[derive(Clone, Debug)]
pub struct Quotient {
    n: usize,
    projection: FieldMatrix,
    lift: FieldMatrix,
}

impl Quotient {
    pub fn new(field: PrimeField, n: usize, spanning: &FieldMatrix) -> Self {
        assert_eq!(spanning.rows(), n);
        let (r, pivots) = spanning.transpose().rref();
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut index_of = vec![usize::MAX; n];
        for (k, &c) in free.iter().enumerate() {
            index_of[c] = k;
        }
        let q = free.len();
        let mut projection = FieldMatrix::zeros(field, q, n);
        let mut lift = FieldMatrix::zeros(field, n, q);
        for (k, &c) in free.iter().enumerate() {
            projection.set(k, c, 1);
            lift.set(c, k, 1);
        }
        for (i, &pc) in pivots.iter().enumerate() {
            for (c, v) in r.row_nonzeros(i) {
                if !is_pivot[c] {
                    projection.set(index_of[c], pc, field.neg(v));
                }
            }
        }
        Self { n, projection, lift }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn projection(&self) -> &FieldMatrix {
        &self.projection
    }

    /// A section of the projection.
    pub fn lift(&self) -> &FieldMatrix {
        &self.lift
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn coords_roundtrip() {
        let b = FieldMatrix::from_rows(f(5), 2, &[vec![1, 0], vec![2, 1], vec![0, 3]]);
        let bc = BasisCoords::new(&b).unwrap();
        let v = b.mul_vec(&[4, 2]);
        assert_eq!(bc.coords(&v), Some(vec![4, 2]));
        assert_eq!(bc.coords(&[1, 0, 0]), None);
    }

    #[test]
    fn span_builder_detects_dependence() {
        let mut s = SpanBuilder::new(f(3), 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1]));
        assert!(s.contains(&[2, 1, 0]));
        assert!(s.insert(&[0, 0, 1]));
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let u = FieldMatrix::from_rows(f(2), 1, &[vec![1], vec![1], vec![0]]);
        let q = Quotient::new(f(2), 3, &u);
        assert_eq!(q.dim(), 2);
        assert!(q.projection().mul(&u).unwrap().is_zero());
        assert!(q.projection().mul(q.lift()).unwrap().is_identity());
    }
}
