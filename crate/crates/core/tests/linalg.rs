mod common;

use gorenstein_core::linalg::{FieldMatrix, PrimeField, Quotient, SpanBuilder};
use proptest::prelude::*;

use common::{oracle_rank, rows_of};

fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn spec_examples() {
    let id = FieldMatrix::identity(f(2), 2);
    assert_eq!(id.rank(), 2);
    assert_eq!(id.kernel().cols(), 0);

    let z = FieldMatrix::zeros(f(3), 3, 4);
    assert_eq!(z.rank(), 0);
    assert_eq!(z.kernel(), FieldMatrix::identity(f(3), 4));

    let ones = FieldMatrix::from_rows(f(2), 2, &[vec![1, 1], vec![1, 1]]);
    assert_eq!(ones.rank(), 1);
    assert_eq!(ones.kernel().column(0), vec![1, 1]);

    assert_eq!(id.solve(&[1, 0]).unwrap(), Some(vec![1, 0]));
    assert_eq!(FieldMatrix::zeros(f(2), 2, 2).solve(&[1, 0]).unwrap(), None);
    let upper = FieldMatrix::from_rows(f(2), 2, &[vec![1, 1], vec![0, 1]]);
    assert_eq!(upper.solve(&[0, 1]).unwrap(), Some(vec![1, 1]));

    let a = FieldMatrix::from_rows(f(5), 2, &[vec![1, 2], vec![3, 4]]);
    assert_eq!(FieldMatrix::identity(f(5), 2).compose(&a).unwrap(), a);
    assert_eq!(
        FieldMatrix::identity(f(2), 2)
            .kronecker(&FieldMatrix::identity(f(2), 3))
            .unwrap(),
        FieldMatrix::identity(f(2), 6)
    );
    let one = FieldMatrix::from_rows(f(3), 1, &[vec![1]]);
    let two = FieldMatrix::from_rows(f(3), 1, &[vec![2]]);
    assert_eq!(
        one.direct_sum(&two).unwrap(),
        FieldMatrix::from_rows(f(3), 2, &[vec![1, 0], vec![0, 2]])
    );
}

#[test]
fn shape_mismatch_is_an_error() {
    let a = FieldMatrix::zeros(f(2), 2, 3);
    assert!(a.mul(&a).is_err());
    assert!(a.add(&FieldMatrix::zeros(f(2), 3, 2)).is_err());
    assert!(a.solve(&[1]).is_err());
}

#[test]
fn field_rejects_non_primes() {
    for p in [0, 1, 4, 9, 15] {
        assert!(PrimeField::new(p).is_err(), "{p}");
    }
    for p in [2, 3, 5, 7, 11, 101] {
        assert!(PrimeField::new(p).is_ok(), "{p}");
    }
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = FieldMatrix> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 0..=max_rows, 0..=max_cols).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c)
            .prop_map(move |v| FieldMatrix::from_fn(PrimeField::new(p).unwrap(), r, c, |i, j| v[i * c + j]))
    })
}

fn pair_for_product() -> impl Strategy<Value = (FieldMatrix, FieldMatrix)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1..6usize, 1..6usize, 1..6usize).prop_flat_map(|(p, a, b, c)| {
        (prop::collection::vec(0..p, a * b), prop::collection::vec(0..p, b * c)).prop_map(move |(x, y)| {
            let fl = PrimeField::new(p).unwrap();
            (
                FieldMatrix::from_fn(fl, a, b, |i, j| x[i * b + j]),
                FieldMatrix::from_fn(fl, b, c, |i, j| y[i * c + j]),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_oracle(m in matrix(9, 9)) {
        prop_assert_eq!(m.rank(), oracle_rank(m.field().p(), &rows_of(&m)));
    }

    #[test]
    fn rank_nullity(m in matrix(9, 9)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rank_of_transpose(m in matrix(9, 9)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kronecker_rank_multiplies((a, b) in pair_for_product()) {
        prop_assert_eq!(a.kronecker(&b).unwrap().rank(), a.rank() * b.rank());
    }

    #[test]
    fn product_rank_bound((a, b) in pair_for_product()) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        prop_assert!(ab.rank() + a.cols() >= a.rank() + b.rank());
    }

    #[test]
    fn solve_is_consistent(m in matrix(7, 7), seed in any::<u64>()) {
        let fl = m.field();
        let x: Vec<u32> = (0..m.cols()).map(|i| ((seed >> (i % 60)) as u32) % fl.p()).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).unwrap();
        prop_assert!(sol.is_some());
        prop_assert_eq!(m.mul_vec(&sol.unwrap()), b);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(8, 8)) {
        let (r, piv) = m.rref();
        prop_assert_eq!(piv.len(), m.rank());
        let (r2, piv2) = r.rref();
        prop_assert_eq!(r2, r);
        prop_assert_eq!(piv2, piv);
    }

    #[test]
    fn span_builder_counts_rank(m in matrix(8, 8)) {
        let mut s = SpanBuilder::new(m.field(), m.rows());
        let added = s.insert_columns(&m);
        prop_assert_eq!(added, m.rank());
        prop_assert_eq!(s.rank(), m.rank());
        for j in 0..m.cols() {
            prop_assert!(s.contains(&m.column(j)));
        }
    }

    #[test]
    fn quotient_dimension(m in matrix(8, 8)) {
        let q = Quotient::new(m.field(), m.rows(), &m);
        prop_assert_eq!(q.dim() + m.rank(), m.rows());
        prop_assert!(q.projection().mul(&m).unwrap().is_zero());
        prop_assert!(q.projection().mul(q.lift()).unwrap().is_identity());
    }

    #[test]
    fn transpose_is_an_involution(m in matrix(7, 7)) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }
}
