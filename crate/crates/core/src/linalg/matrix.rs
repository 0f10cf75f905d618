use std::fmt;

use super::field::PrimeField;
use crate::error::LinalgError;

/// Dense matrix over a prime field.
///
/// Over F_2 rows are bit-packed into `u64` words; for odd primes each
/// entry occupies a `u32`. Either way the layout is row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    storage: Storage,
}

#[derive(Clone, PartialEq, Eq)]
enum Storage {
    Bits { stride: usize, words: Vec<u64> },
    Dense(Vec<u32>),
}

#[inline]
fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

#[inline]
pub(crate) fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// `dst -= f * src` entrywise.
#[inline]
pub(crate) fn axpy_dense(field: PrimeField, dst: &mut [u32], src: &[u32], f: u32) {
    let p = field.p() as u64;
    let g = (p - f as u64) % p;
    if g == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = ((*d as u64 + g * s as u64) % p) as u32;
        }
    }
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        let storage = if field.is_binary() {
            let stride = words_for(cols);
            Storage::Bits {
                stride,
                words: vec![0; stride * rows],
            }
        } else {
            Storage::Dense(vec![0; rows * cols])
        };
        Self {
            field,
            rows,
            cols,
            storage,
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.reduce(v));
            }
        }
        m
    }

    pub fn from_fn(field: PrimeField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j) % field.p();
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                if v != 0 {
                    m.set(i, j, v % field.p());
                }
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.storage {
            Storage::Bits { stride, words } => ((words[i * stride + j / 64] >> (j % 64)) & 1) as u32,
            Storage::Dense(d) => d[i * self.cols + j],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        match &mut self.storage {
            Storage::Bits { stride, words } => {
                let w = &mut words[i * *stride + j / 64];
                let bit = 1u64 << (j % 64);
                if v & 1 == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
            Storage::Dense(d) => d[i * self.cols + j] = v % self.field.p(),
        }
    }

    /// Adds `v` to entry `(i, j)`.
    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        match &mut self.storage {
            Storage::Bits { stride, words } => {
                if v & 1 == 1 {
                    words[i * *stride + j / 64] ^= 1u64 << (j % 64);
                }
            }
            Storage::Dense(d) => {
                let e = &mut d[i * self.cols + j];
                *e = self.field.add(*e, v % self.field.p());
            }
        }
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        match &self.storage {
            Storage::Bits { stride, words } => &words[i * stride..(i + 1) * stride],
            Storage::Dense(_) => panic!("row_words on a non-binary matrix"),
        }
    }

    pub(crate) fn row_dense(&self, i: usize) -> &[u32] {
        match &self.storage {
            Storage::Dense(d) => &d[i * self.cols..(i + 1) * self.cols],
            Storage::Bits { .. } => panic!("row_dense on a binary matrix"),
        }
    }

    pub fn row(&self, i: usize) -> Vec<u32> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Iterates over the nonzero entries of row `i` as `(column, value)`.
    pub fn row_nonzeros(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let (bits, dense): (Option<&[u64]>, Option<&[u32]>) = match &self.storage {
            Storage::Bits { .. } => (Some(self.row_words(i)), None),
            Storage::Dense(_) => (None, Some(self.row_dense(i))),
        };
        let bit_iter = bits.into_iter().flat_map(|ws| {
            ws.iter().enumerate().flat_map(|(wi, &w)| {
                let mut w = w;
                std::iter::from_fn(move || {
                    if w == 0 {
                        None
                    } else {
                        let t = w.trailing_zeros() as usize;
                        w &= w - 1;
                        Some((wi * 64 + t, 1u32))
                    }
                })
            })
        });
        let dense_iter = dense
            .into_iter()
            .flat_map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j, v)));
        bit_iter.chain(dense_iter)
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Storage::Dense(d) => d.iter().all(|&v| v == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.field, self.rows)
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Bits { words, .. } => words.iter().map(|w| w.count_ones() as usize).sum(),
            Storage::Dense(d) => d.iter().filter(|&&v| v != 0).count(),
        }
    }

    fn check_field(&self, other: &Self) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field.p(), other.field.p()));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for (j, v) in self.row_nonzeros(i) {
                t.set(j, i, v);
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        match (&mut out.storage, &other.storage) {
            (Storage::Bits { stride, words }, Storage::Bits { .. }) => {
                let stride = *stride;
                for i in 0..self.rows {
                    let dst = &mut words[i * stride..(i + 1) * stride];
                    for (k, _) in self.row_nonzeros(i) {
                        xor_words(dst, other.row_words(k));
                    }
                }
            }
            (Storage::Dense(d), Storage::Dense(_)) => {
                let cols = other.cols;
                let p = self.field.p() as u64;
                let mut acc = vec![0u64; cols];
                for i in 0..self.rows {
                    acc.iter_mut().for_each(|a| *a = 0);
                    for (k, a) in self.row_nonzeros(i) {
                        for (j, &b) in other.row_dense(k).iter().enumerate() {
                            if b != 0 {
                                acc[j] = (acc[j] + a as u64 * b as u64) % p;
                            }
                        }
                    }
                    for (j, &a) in acc.iter().enumerate() {
                        d[i * cols + j] = a as u32;
                    }
                }
            }
            _ => unreachable!("storage follows the field"),
        }
        Ok(out)
    }

    /// Composition `self ∘ other`, i.e. the product `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self, LinalgError> {
        self.mul(other)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row_nonzeros(i)
                    .fold(0u32, |acc, (j, a)| self.field.add(acc, self.field.mul(a, v[j])))
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.combine(other, 1, "add")
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.combine(other, self.field.neg(1), "sub")
    }

    fn combine(&self, other: &Self, coeff: u32, op: &'static str) -> Result<Self, LinalgError> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = self.clone();
        match (&mut out.storage, &other.storage) {
            (Storage::Bits { words, .. }, Storage::Bits { words: o, .. }) => xor_words(words, o),
            (Storage::Dense(d), Storage::Dense(o)) => {
                for (a, &b) in d.iter_mut().zip(o) {
                    *a = self.field.add(*a, self.field.mul(coeff, b));
                }
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.field.p();
        if c == 0 {
            return Self::zeros(self.field, self.rows, self.cols);
        }
        let mut out = self.clone();
        if let Storage::Dense(d) = &mut out.storage {
            for a in d.iter_mut() {
                *a = self.field.mul(*a, c);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(1))
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`,
    /// adding to whatever is there.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for (j, v) in block.row_nonzeros(i) {
                self.add_at(r0 + i, c0 + j, v);
            }
        }
    }

    /// Same as [`add_block`](Self::add_block) with every entry multiplied by `c`.
    pub fn add_scaled_block(&mut self, r0: usize, c0: usize, block: &Self, c: u32) {
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for (j, v) in block.row_nonzeros(i) {
                self.add_at(r0 + i, c0 + j, self.field.mul(v, c));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Self::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(self.field, idx.len(), self.cols);
        for (k, &i) in idx.iter().enumerate() {
            for (j, v) in self.row_nonzeros(i) {
                out.set(k, j, v);
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_field(other)?;
        let mut out = Self::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.add_block(0, 0, self);
        out.add_block(self.rows, self.cols, other);
        Ok(out)
    }

    /// Kronecker product with row index `i * rows(other) + k` and column
    /// index `j * cols(other) + l`.
    pub fn kronecker(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_field(other)?;
        let (rb, cb) = other.shape();
        let mut out = Self::zeros(self.field, self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for (j, a) in self.row_nonzeros(i) {
                out.add_scaled_block(i * rb, j * cb, other, a);
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.field, self.rows, self.cols + other.cols);
        out.add_block(0, 0, self);
        out.add_block(0, self.cols, other);
        Ok(out)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.field, self.rows + other.rows, self.cols);
        out.add_block(0, 0, self);
        out.add_block(self.rows, 0, other);
        Ok(out)
    }

    // ---- row operations used by elimination ----

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.storage {
            Storage::Bits { stride, words } => {
                let s = *stride;
                for k in 0..s {
                    words.swap(a * s + k, b * s + k);
                }
            }
            Storage::Dense(d) => {
                let c = self.cols;
                for k in 0..c {
                    d.swap(a * c + k, b * c + k);
                }
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: u32) {
        if let Storage::Dense(d) = &mut self.storage {
            let c = self.cols;
            for v in &mut d[r * c..(r + 1) * c] {
                *v = self.field.mul(*v, f);
            }
        }
    }

    /// `row[dst] -= f * row[src]`, touching only columns `>= from_col`.
    fn row_axpy(&mut self, dst: usize, src: usize, f: u32, from_col: usize) {
        debug_assert_ne!(dst, src);
        match &mut self.storage {
            Storage::Bits { stride, words } => {
                let s = *stride;
                let w0 = from_col / 64;
                let (d, sr) = if dst < src {
                    let (lo, hi) = words.split_at_mut(src * s);
                    (&mut lo[dst * s + w0..(dst + 1) * s], &hi[w0..s])
                } else {
                    let (lo, hi) = words.split_at_mut(dst * s);
                    (&mut hi[w0..s], &lo[src * s + w0..(src + 1) * s])
                };
                xor_words(d, sr);
            }
            Storage::Dense(data) => {
                let c = self.cols;
                let (d, sr) = if dst < src {
                    let (lo, hi) = data.split_at_mut(src * c);
                    (&mut lo[dst * c + from_col..(dst + 1) * c], &hi[from_col..c])
                } else {
                    let (lo, hi) = data.split_at_mut(dst * c);
                    (&mut hi[from_col..c], &lo[src * c + from_col..(src + 1) * c])
                };
                axpy_dense(self.field, d, sr, f);
            }
        }
    }

    /// Gauss–Jordan elimination restricted to the first `limit` columns,
    /// with row operations applied to whole rows. Pivots are chosen in the
    /// leftmost column first and the topmost available row within it.
    /// Returns the pivot columns; row `i` holds the pivot for `pivots[i]`.
    pub(crate) fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..limit.min(self.cols) {
            if pr == self.rows {
                break;
            }
            let Some(r) = (pr..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            self.swap_rows(pr, r);
            let lead = self.get(pr, c);
            if lead != 1 {
                self.scale_row(pr, self.field.inv(lead));
            }
            for r2 in 0..self.rows {
                if r2 != pr {
                    let v = self.get(r2, c);
                    if v != 0 {
                        self.row_axpy(r2, pr, v, c);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(self.cols);
        (m, piv)
    }

    /// Rank by incremental row insertion. Touches only the nonzero span of
    /// each row, which keeps block-banded matrices cheap.
    pub fn rank(&self) -> usize {
        match &self.storage {
            Storage::Bits { stride, words } => rank_bits(self.rows, self.cols, *stride, words.clone()),
            Storage::Dense(d) => rank_dense(self.field, self.rows, self.cols, d.clone()),
        }
    }

    /// Consuming variant of [`rank`](Self::rank) that reuses the storage.
    pub fn into_rank(self) -> usize {
        match self.storage {
            Storage::Bits { stride, words } => rank_bits(self.rows, self.cols, stride, words),
            Storage::Dense(d) => rank_dense(self.field, self.rows, self.cols, d),
        }
    }

    /// Rank, a kernel basis (as columns) and an image basis (the pivot
    /// columns of `self`).
    pub fn rank_profile(&self) -> RankProfile {
        let (r, pivots) = self.rref();
        let kernel = kernel_from_rref(&r, &pivots);
        let image = self.select_columns(&pivots);
        RankProfile {
            rank: pivots.len(),
            kernel,
            image,
            pivots,
        }
    }

    /// Basis of the null space, as columns.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Solves `self * x = b`; `None` if inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: (b.len(), 1),
            });
        }
        let bm = Self::from_columns(self.field, self.rows, &[b.to_vec()]);
        let mut aug = self.hstack(&bm)?;
        let pivots = aug.rref_in_place(self.cols);
        for i in pivots.len()..self.rows {
            if aug.get(i, self.cols) != 0 {
                return Ok(None);
            }
        }
        let mut x = vec![0u32; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(i, self.cols);
        }
        Ok(Some(x))
    }
}

/// Result of [`FieldMatrix::rank_profile`].
#[derive(Clone, Debug)]
pub struct RankProfile {
    pub rank: usize,
    pub kernel: FieldMatrix,
    pub image: FieldMatrix,
    pub pivots: Vec<usize>,
}

fn kernel_from_rref(r: &FieldMatrix, pivots: &[usize]) -> FieldMatrix {
    let field = r.field;
    let n = r.cols;
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut k = FieldMatrix::zeros(field, n, free.len());
    for (col, &f) in free.iter().enumerate() {
        k.set(f, col, 1);
        for (i, &pc) in pivots.iter().enumerate() {
            let v = r.get(i, f);
            if v != 0 {
                k.set(pc, col, field.neg(v));
            }
        }
    }
    k
}

fn rank_bits(rows: usize, cols: usize, stride: usize, mut words: Vec<u64>) -> usize {
    let mut pivot_of: Vec<u32> = vec![u32::MAX; cols];
    let mut span: Vec<(usize, usize)> = vec![(0, 0); rows];
    let mut rank = 0;
    for r in 0..rows {
        let (before, after) = words.split_at_mut(r * stride);
        let row = &mut after[..stride];
        let Some(mut lo) = row.iter().position(|&w| w != 0) else {
            continue;
        };
        let mut hi = stride - 1 - row.iter().rev().position(|&w| w != 0).unwrap();
        while let Some(off) = row[lo..=hi].iter().position(|&w| w != 0) {
            lo += off;
            let c = lo * 64 + row[lo].trailing_zeros() as usize;
            let pr = pivot_of[c];
            if pr == u32::MAX {
                pivot_of[c] = r as u32;
                span[r] = (lo, hi);
                rank += 1;
                break;
            }
            let pr = pr as usize;
            let (plo, phi) = span[pr];
            let prow = &before[pr * stride..(pr + 1) * stride];
            xor_words(&mut row[plo..=phi], &prow[plo..=phi]);
            hi = hi.max(phi);
        }
    }
    rank
}

fn rank_dense(field: PrimeField, rows: usize, cols: usize, mut data: Vec<u32>) -> usize {
    let mut pivot_of: Vec<u32> = vec![u32::MAX; cols];
    let mut span: Vec<(usize, usize)> = vec![(0, 0); rows];
    let mut rank = 0;
    for r in 0..rows {
        let (before, after) = data.split_at_mut(r * cols);
        let row = &mut after[..cols];
        let Some(mut lo) = row.iter().position(|&w| w != 0) else {
            continue;
        };
        let mut hi = cols - 1 - row.iter().rev().position(|&w| w != 0).unwrap();
        while let Some(off) = row[lo..=hi].iter().position(|&w| w != 0) {
            lo += off;
            let pr = pivot_of[lo];
            if pr == u32::MAX {
                let inv = field.inv(row[lo]);
                for v in &mut row[lo..=hi] {
                    *v = field.mul(*v, inv);
                }
                pivot_of[lo] = r as u32;
                span[r] = (lo, hi);
                rank += 1;
                break;
            }
            let pr = pr as usize;
            let (plo, phi) = span[pr];
            let f = row[lo];
            let prow = &before[pr * cols..(pr + 1) * cols];
            axpy_dense(field, &mut row[plo..=phi], &prow[plo..=phi], f);
            hi = hi.max(phi);
        }
    }
    rank
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix F_{} {}x{}", self.field.p(), self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for i in 0..self.rows {
                writeln!(f, "  {:?}", self.row(i))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn identity_has_full_rank_and_empty_kernel() {
        let prof = FieldMatrix::identity(f(2), 2).rank_profile();
        assert_eq!(prof.rank, 2);
        assert_eq!(prof.kernel.cols(), 0);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let z = FieldMatrix::zeros(f(3), 3, 4);
        let prof = z.rank_profile();
        assert_eq!(prof.rank, 0);
        assert_eq!(prof.kernel, FieldMatrix::identity(f(3), 4));
        assert_eq!(prof.image.cols(), 0);
    }

    #[test]
    fn all_ones_over_f2() {
        let a = FieldMatrix::from_rows(f(2), 2, &[vec![1, 1], vec![1, 1]]);
        let prof = a.rank_profile();
        assert_eq!(prof.rank, 1);
        assert_eq!(prof.kernel.column(0), vec![1, 1]);
    }

    #[test]
    fn solves() {
        let id = FieldMatrix::identity(f(2), 2);
        assert_eq!(id.solve(&[1, 0]).unwrap(), Some(vec![1, 0]));
        let z = FieldMatrix::zeros(f(2), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        let a = FieldMatrix::from_rows(f(2), 2, &[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.solve(&[0, 1]).unwrap(), Some(vec![1, 1]));
        assert!(a.solve(&[0, 1, 1]).is_err());
    }

    #[test]
    fn block_operations() {
        let a = FieldMatrix::from_rows(f(5), 2, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(FieldMatrix::identity(f(5), 2).compose(&a).unwrap(), a);
        let k = FieldMatrix::identity(f(5), 2)
            .kronecker(&FieldMatrix::identity(f(5), 3))
            .unwrap();
        assert!(k.is_identity());
        let one = FieldMatrix::from_rows(f(3), 1, &[vec![1]]);
        let two = FieldMatrix::from_rows(f(3), 1, &[vec![2]]);
        let ds = one.direct_sum(&two).unwrap();
        assert_eq!(ds, FieldMatrix::from_rows(f(3), 2, &[vec![1, 0], vec![0, 2]]));
        assert!(a.compose(&FieldMatrix::identity(f(5), 3)).is_err());
    }

    #[test]
    fn kronecker_index_order() {
        let a = FieldMatrix::from_rows(f(7), 2, &[vec![1, 2], vec![3, 4]]);
        let b = FieldMatrix::from_rows(f(7), 3, &[vec![1, 0, 5], vec![0, 6, 1]]);
        let k = a.kronecker(&b).unwrap();
        assert_eq!(k.shape(), (4, 6));
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for c in 0..3 {
                        let expect = f(7).mul(a.get(i, j), b.get(r, c));
                        assert_eq!(k.get(i * 2 + r, j * 3 + c), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_sized_matrices() {
        let a = FieldMatrix::zeros(f(2), 0, 5);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel().cols(), 5);
        let b = FieldMatrix::zeros(f(3), 4, 0);
        assert_eq!(b.rank_profile().rank, 0);
        assert_eq!(b.kernel().shape(), (0, 0));
    }
}
