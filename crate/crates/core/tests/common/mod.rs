#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use gorenstein_core::algebra::FinLocalAlgebra;
use gorenstein_core::complex::{ChainComplex, Morphism};
use gorenstein_core::linalg::{FieldMatrix, PrimeField};
use gorenstein_core::module::{cokernel_module, FinModule, ModuleMap};
use gorenstein_core::presentation::{RingPresentation, DEFAULT_DIM_CAP};
use gorenstein_core::rmatrix::RMatrix;

pub fn ring(p: u32, vars: &[&str], rels: &[&str]) -> Arc<FinLocalAlgebra> {
    let pres = RingPresentation::parse(p, vars, rels).unwrap();
    Arc::new(FinLocalAlgebra::from_presentation(&pres, DEFAULT_DIM_CAP).unwrap())
}

pub fn dual_numbers() -> Arc<FinLocalAlgebra> {
    ring(2, &["x"], &["x^2"])
}

pub fn square_zero() -> Arc<FinLocalAlgebra> {
    ring(2, &["x", "y"], &["x^2", "x*y", "y^2"])
}

pub fn ci_f3() -> Arc<FinLocalAlgebra> {
    ring(3, &["x", "y"], &["x^2", "y^2"])
}

pub fn x2_y3_xy() -> Arc<FinLocalAlgebra> {
    ring(2, &["x", "y"], &["x^2", "y^3", "x*y"])
}

/// The bundled corpus: `(name, algebra, socle-Gorenstein)`.
pub fn corpus() -> Vec<(&'static str, Arc<FinLocalAlgebra>, bool)> {
    vec![
        ("f2_x2", ring(2, &["x"], &["x^2"]), true),
        ("f2_x3", ring(2, &["x"], &["x^3"]), true),
        ("f3_x3", ring(3, &["x"], &["x^3"]), true),
        ("f2_xy_m2", square_zero(), false),
        (
            "f2_xyz_m2",
            ring(2, &["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]),
            false,
        ),
        ("f3_x2_y2", ci_f3(), true),
        ("f3_x2my2_xy", ring(3, &["x", "y"], &["x^2 - y^2", "x*y"]), true),
        ("f2_x2_y3_xy", x2_y3_xy(), false),
    ]
}

/// Naive row reduction mod p on plain vectors, sharing nothing with the
/// library's elimination.
pub fn oracle_rank(p: u32, rows: &[Vec<u32>]) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| v as u64 % p).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = modpow(m[rank][c], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn modpow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn rows_of(m: &FieldMatrix) -> Vec<Vec<u32>> {
    (0..m.rows()).map(|i| m.row(i)).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, f: PrimeField, rows: usize, cols: usize) -> FieldMatrix {
    FieldMatrix::from_fn(f, rows, cols, |_, _| rng.gen_range(0..f.p()))
}

/// A random element of the maximal ideal.
pub fn random_in_m(rng: &mut ChaCha8Rng, alg: &FinLocalAlgebra) -> Vec<u32> {
    let p = alg.field().p();
    let mut v: Vec<u32> = (0..alg.dim()).map(|_| rng.gen_range(0..p)).collect();
    v[0] = 0;
    v
}

/// An `rows × cols` R-matrix with entries in m.
pub fn random_rmatrix(rng: &mut ChaCha8Rng, alg: &FinLocalAlgebra, rows: usize, cols: usize) -> RMatrix {
    let columns: Vec<Vec<u32>> = (0..cols)
        .map(|_| (0..rows).flat_map(|_| random_in_m(rng, alg)).collect::<Vec<u32>>())
        .collect();
    RMatrix::from_free_columns(alg.field(), alg.dim(), rows, &columns)
}

/// `R / (r_1, ..., r_g)` for random `r_i` in m.
pub fn random_cyclic(rng: &mut ChaCha8Rng, alg: &Arc<FinLocalAlgebra>) -> FinModule {
    let g = rng.gen_range(0..=2);
    let rel = random_rmatrix(rng, alg, 1, g);
    let map = ModuleMap::new(
        FinModule::free(alg.clone(), g),
        FinModule::free(alg.clone(), 1),
        rel.realize(alg),
    )
    .unwrap();
    cokernel_module(&map).0
}

/// `R^a <- R^b` with a random differential in m, in degrees `lo, lo + 1`.
pub fn random_two_term(rng: &mut ChaCha8Rng, alg: &Arc<FinLocalAlgebra>, lo: i32) -> ChainComplex {
    let a = rng.gen_range(1..=2);
    let b = rng.gen_range(1..=2);
    let dm = random_rmatrix(rng, alg, a, b);
    ChainComplex::new(
        alg.clone(),
        lo,
        vec![FinModule::free(alg.clone(), a), FinModule::free(alg.clone(), b)],
        vec![Morphism::Structured(dm)],
    )
    .unwrap()
}

/// Every differential of `x` as a k-matrix, with `∂∂ = 0` and
/// rank-nullity checked against the oracle.
pub fn assert_complex_sound(x: &ChainComplex) {
    x.check_square_zero().unwrap();
    let alg = x.algebra();
    let p = alg.field().p();
    for n in x.lo() + 1..=x.hi() {
        let m = x.diff(n).unwrap().realize(alg);
        let r = m.rank();
        assert_eq!(r, oracle_rank(p, &rows_of(&m)), "rank of ∂_{n}");
        assert_eq!(r + m.kernel().cols(), m.cols(), "rank-nullity at ∂_{n}");
    }
}
