mod common;

use std::sync::Arc;

use gorenstein_core::algebra::FinLocalAlgebra;
use gorenstein_core::complex::{cone_maps, mapping_cone, ChainComplex, ChainMap, Morphism};
use gorenstein_core::linalg::FieldMatrix;
use gorenstein_core::module::{matlis_dual, FinModule};
use gorenstein_core::resolve::{minimal_resolution, DEFAULT_BUDGET};
use gorenstein_core::rmatrix::{Base, RMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{assert_complex_sound, ci_f3, corpus, dual_numbers, random_in_m, random_two_term, square_zero};

fn r_id_r(alg: &Arc<FinLocalAlgebra>) -> ChainComplex {
    let r = FinModule::free(alg.clone(), 1);
    ChainComplex::new(alg.clone(), 0, vec![r.clone(), r.clone()], vec![Morphism::identity(&r)]).unwrap()
}

/// Multiplication by `s` on every module of a free complex.
fn scalar_map(x: &ChainComplex, s: &[u32]) -> ChainMap {
    let alg = x.algebra();
    let comps = x
        .degrees()
        .map(|n| {
            let b = x.module(n).shape().map_or(0, |sh| sh.1);
            let mut m = RMatrix::zeros(Base::Free, alg.dim(), b, b);
            for i in 0..b {
                m.add_entry(alg.field(), i, i, s, 1);
            }
            Morphism::Structured(m)
        })
        .collect();
    ChainMap::new(x.clone(), x.clone(), x.lo(), comps).unwrap()
}

fn euler(x: &ChainComplex, f: impl Fn(i32) -> usize) -> i64 {
    x.degrees()
        .map(|n| if n % 2 == 0 { f(n) as i64 } else { -(f(n) as i64) })
        .sum()
}

#[test]
fn homology_basics() {
    let alg = dual_numbers();
    let x = r_id_r(&alg);
    assert!(x.degrees().all(|n| x.homology_dim(n) == 0));

    let k = ChainComplex::concentrated(&FinModule::residue_field(alg.clone()), 0);
    assert_eq!(k.homology_dim(0), 1);
    assert_eq!(k.acyclicity_report(1), vec![(0, 1)]);
    let h = k.homology(0, 1);
    assert!(h.trusted && h.module.action(1).is_zero());

    let q = minimal_resolution(&FinModule::residue_field(alg.clone()), 5, DEFAULT_BUDGET).unwrap();
    assert_eq!(q.complex.homology_dim(0), 1);
    for i in 1..5 {
        assert_eq!(q.complex.homology_dim(i), 0, "H_{i}");
    }
    assert_eq!(q.complex.trusted(1), 0..=4);
}

#[test]
fn suspension_signs() {
    let f3 = ci_f3();
    let m = FinModule::residue_field(f3.clone());
    let s = ChainComplex::concentrated(&m, 0).suspension();
    assert_eq!((s.lo(), s.hi()), (1, 1));

    let x = random_two_term(&mut ChaCha8Rng::seed_from_u64(7), &f3, 0);
    let s1 = x.suspension();
    let s2 = s1.suspension();
    let d = x.diff(1).unwrap().realize(&f3);
    assert_eq!(s1.diff(2).unwrap().realize(&f3), d.neg());
    assert_eq!(s2.diff(3).unwrap().realize(&f3), d);

    let f2 = square_zero();
    let y = random_two_term(&mut ChaCha8Rng::seed_from_u64(7), &f2, 0);
    assert_eq!(
        y.suspension().diff(2).unwrap().realize(&f2),
        y.diff(1).unwrap().realize(&f2)
    );
}

#[test]
fn cones() {
    let alg = ci_f3();
    let x = r_id_r(&alg);
    let id = ChainMap::new(
        x.clone(),
        x.clone(),
        0,
        x.degrees().map(|n| Morphism::identity(&x.module(n))).collect(),
    )
    .unwrap();
    let c = mapping_cone(&id).unwrap();
    assert!(c.degrees().all(|n| c.homology_dim(n) == 0));

    let y = random_two_term(&mut ChaCha8Rng::seed_from_u64(3), &alg, 0);
    let zero = ChainMap::new(y.clone(), y.clone(), 0, vec![]).unwrap();
    let cz = mapping_cone(&zero).unwrap();
    for n in cz.degrees() {
        assert_eq!(cz.dim(n), y.dim(n) + y.dim(n - 1));
        assert_eq!(cz.homology_dim(n), y.homology_dim(n) + y.homology_dim(n - 1));
    }
    let (i, p) = cone_maps(&zero, &cz).unwrap();
    assert!(i.check().is_ok() && p.check().is_ok());
}

#[test]
fn homothety_cone_for_dual_numbers() {
    let alg = dual_numbers();
    let r = FinModule::free(alg.clone(), 1);
    let e = matlis_dual(&alg);
    // E ≅ R for the dual numbers; χ is the iso R -> Hom(R, R) in degree 0.
    let p = minimal_resolution(&e, 3, DEFAULT_BUDGET).unwrap();
    assert!(p.terminated && p.betti == vec![1]);
    let chi = ChainMap::new(
        ChainComplex::concentrated(&r, 0),
        ChainComplex::concentrated(&r, 0),
        0,
        vec![Morphism::identity(&r)],
    )
    .unwrap();
    let c = mapping_cone(&chi).unwrap();
    assert_eq!((c.lo(), c.hi()), (0, 1));
    assert_eq!(c.diff(1).unwrap().realize(&alg).rank(), 2);
    assert_eq!(c.acyclicity_report(1), vec![(0, 0), (1, 0)]);
}

#[test]
fn soft_truncation() {
    let alg = dual_numbers();
    let k = FinModule::residue_field(alg.clone());
    let q = minimal_resolution(&k, 4, DEFAULT_BUDGET).unwrap().complex;

    let (b, map) = q.soft_truncate_left(q.hi()).unwrap();
    assert_eq!((b.lo(), b.hi()), (q.lo(), q.hi()));
    assert!(map.is_iso());

    let (b1, m1) = q.soft_truncate_left(1).unwrap();
    assert_eq!((b1.lo(), b1.hi()), (0, 1));
    assert_eq!((b1.homology_dim(0), b1.homology_dim(1)), (1, 0));
    assert_eq!(b1.dim(1), 1);
    assert!(m1.check().is_ok());

    let e = matlis_dual(&square_zero());
    let p = minimal_resolution(&e, 3, DEFAULT_BUDGET).unwrap().complex;
    let (b0, _) = p.soft_truncate_left(0).unwrap();
    assert_eq!((b0.lo(), b0.hi(), b0.dim(0)), (0, 0, e.dim()));
    assert!(p.soft_truncate_left(9).is_err());
}

#[test]
fn quasi_isomorphisms() {
    let alg = square_zero();
    let k = FinModule::residue_field(alg.clone());
    let kc = ChainComplex::concentrated(&k, 0);
    let id = ChainMap::new(kc.clone(), kc.clone(), 0, vec![Morphism::identity(&k)]).unwrap();
    assert!(id.is_quasi_iso(0).unwrap().quasi_iso);
    let zero = ChainMap::new(kc.clone(), kc.clone(), 0, vec![]).unwrap();
    let z = zero.is_quasi_iso(0).unwrap();
    assert!(!z.quasi_iso && z.cone_agrees);

    for (name, alg, _) in corpus() {
        let e = matlis_dual(&alg);
        let res = minimal_resolution(&e, 3, DEFAULT_BUDGET).unwrap();
        let aug = ChainMap::new(
            res.complex.clone(),
            ChainComplex::concentrated(&e, 0),
            0,
            vec![Morphism::Dense(res.augmentation.matrix.clone())],
        )
        .unwrap();
        let rep = aug.is_quasi_iso(1).unwrap();
        assert!(rep.quasi_iso && rep.cone_agrees, "{name}: {rep:?}");
    }
}

#[test]
fn planted_homology() {
    let alg = ci_f3();
    let r = FinModule::free(alg.clone(), 1);
    let k = FinModule::residue_field(alg.clone());
    let proj = FieldMatrix::from_fn(alg.field(), 1, alg.dim(), |_, j| u32::from(j == 0));
    let x = ChainComplex::new(
        alg.clone(),
        -1,
        vec![k.clone(), r.clone(), r.clone()],
        vec![
            Morphism::Dense(proj),
            Morphism::Dense(FieldMatrix::zeros(alg.field(), alg.dim(), alg.dim())),
        ],
    )
    .unwrap();
    assert_eq!(x.acyclicity_report(0), vec![(-1, 0), (0, 3), (1, 4)]);
}

#[test]
fn truncations_and_inclusions() {
    let alg = square_zero();
    let q = minimal_resolution(&FinModule::residue_field(alg.clone()), 4, DEFAULT_BUDGET)
        .unwrap()
        .complex;
    let t = q.truncate(1, 3);
    assert_eq!((t.lo(), t.hi(), t.lo_open(), t.hi_open()), (1, 3, true, true));
    assert_eq!(t.trusted(1), 2..=2);
    let (sub, incl) = q.brutal_below(2).unwrap();
    assert_eq!(sub.hi(), 2);
    assert!(incl.check().is_ok());
    assert_eq!(incl.induced_rank(0), 1);
    assert_eq!(incl.induced_rank(2), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_complexes_are_sound(seed in any::<u64>(), which in 0usize..8, lo in -2i32..3) {
        let (_, alg, _) = corpus().swap_remove(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_two_term(&mut rng, &alg, lo);
        assert_complex_sound(&x);
        prop_assert_eq!(euler(&x, |n| x.dim(n)), euler(&x, |n| x.homology_dim(n)));
        let s = x.suspension();
        for n in x.degrees() {
            prop_assert_eq!(s.homology_dim(n + 1), x.homology_dim(n));
        }
    }

    #[test]
    fn cone_long_exact_sequence(seed in any::<u64>(), which in 0usize..8) {
        let (_, alg, _) = corpus().swap_remove(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = minimal_resolution(&common::random_cyclic(&mut rng, &alg), 3, DEFAULT_BUDGET).unwrap().complex;
        let x = if rand::Rng::gen_bool(&mut rng, 0.5) { q } else { random_two_term(&mut rng, &alg, 0) };
        let s = random_in_m(&mut rng, &alg);
        let mut unit = s.clone();
        unit[0] = 1;
        for coeff in [s, unit] {
            let f = scalar_map(&x, &coeff);
            let c = mapping_cone(&f).unwrap();
            assert_complex_sound(&c);
            for n in c.degrees() {
                let coker = x.homology_dim(n) - f.induced_rank(n);
                let ker = x.homology_dim(n - 1) - f.induced_rank(n - 1);
                prop_assert_eq!(c.homology_dim(n), coker + ker, "degree {}", n);
            }
        }
    }
}
