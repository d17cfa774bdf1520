use proptest::prelude::*;

use super::*;
use crate::ff::{gf, Subspace};

fn v(xs: &[u32]) -> Vec<Fe> {
    xs.iter().map(|&x| Fe(x)).collect()
}

fn one_dim(p: u64, lambda: u32) -> RestrictedLie {
    RestrictedLie::abelian(&gf(p, 1).unwrap(), vec![v(&[lambda])]).unwrap()
}

/// ⟨x, y⟩ with [x, y] = y, x^{[p]} = x, y^{[p]} = 0.
fn affine(p: u64) -> RestrictedLie {
    let k = gf(p, 1).unwrap();
    let minus_y = vec![Fe::ZERO, k.neg(Fe::ONE)];
    RestrictedLie::new(
        &k,
        2,
        vec![v(&[0, 0]), v(&[0, 1]), minus_y, v(&[0, 0])],
        vec![v(&[1, 0]), v(&[0, 0])],
    )
    .unwrap()
}

#[test]
fn validation_examples() {
    assert!(one_dim(2, 1).is_valid());
    assert!(affine(2).is_valid());
    assert!(affine(3).is_valid());
    let k = gf(2, 1).unwrap();
    let bad = RestrictedLie::new(
        &k,
        2,
        vec![v(&[0, 0]), v(&[0, 1]), v(&[0, 1]), v(&[0, 0])],
        vec![v(&[1, 0]), v(&[1, 0])],
    )
    .unwrap();
    let rep = bad.validate();
    assert!(rep.witnesses.iter().any(|w| w.condition == "p-map ad"));
    let not_anti = RestrictedLie::new(
        &gf(3, 1).unwrap(),
        2,
        vec![v(&[0, 0]), v(&[0, 1]), v(&[0, 1]), v(&[0, 0])],
        vec![v(&[0, 0]), v(&[0, 0])],
    )
    .unwrap();
    assert!(not_anti.validate().witnesses.iter().any(|w| w.condition == "antisymmetry"));
    assert!(not_anti.env().is_err());
}

#[test]
fn pmap_examples() {
    let i1 = one_dim(2, 1);
    assert_eq!(i1.pmap(&v(&[0])).unwrap(), v(&[0]));
    assert_eq!(i1.pmap(&v(&[1])).unwrap(), v(&[1]));
    // over GF(3): ad(tx + y)²(x) = −t y, so s_1 = 0, s_2 = y and (x + y)^{[3]} = x + y
    let i3 = affine(3);
    let z = v(&[1, 1]);
    let direct = i3.pmap(&z).unwrap();
    assert_eq!(direct, i3.pmap_by_formula(&z, i3.ctx()).unwrap());
    assert_eq!(direct, v(&[1, 1]));
    // over GF(2): (x + y)^2 = x + [x, y] = x + y
    let i3 = affine(2);
    assert_eq!(i3.pmap(&v(&[1, 1])).unwrap(), v(&[1, 1]));
}

#[test]
fn torus_examples() {
    let t = one_dim(2, 1).is_torus().unwrap();
    assert!(t.torus && t.pmap_invertible && t.exhaustive == Some(true));
    let t = one_dim(2, 0).is_torus().unwrap();
    assert!(!t.torus && !t.pmap_invertible && t.exhaustive == Some(false));
    let t = affine(3).is_torus().unwrap();
    assert!(!t.torus && !t.abelian && t.exhaustive == Some(false));
    let k4 = gf(2, 2).unwrap();
    let l = RestrictedLie::abelian(&k4, vec![vec![Fe::ONE]]).unwrap();
    assert!(matches!(l.is_torus(), Err(Error::NonPrimeField)));
}

#[test]
fn nilpotent_witness_examples() {
    assert_eq!(
        one_dim(2, 0).nilpotent_witness(6).unwrap(),
        NilpotentWitness::Found { m: 1, z: v(&[1]) }
    );
    assert_eq!(one_dim(2, 1).nilpotent_witness(6).unwrap(), NilpotentWitness::CertifiedNone);
    let k = gf(2, 1).unwrap();
    let swap = RestrictedLie::abelian(&k, vec![v(&[0, 1]), v(&[1, 0])]).unwrap();
    assert_eq!(swap.pmap_matrix().rank(), 2);
    assert_eq!(swap.nilpotent_witness(6).unwrap(), NilpotentWitness::CertifiedNone);
    match affine(3).nilpotent_witness(6).unwrap() {
        NilpotentWitness::Found { m, z } => {
            let ext = gf(3, m).unwrap();
            assert!(!vector::is_zero(&z));
            assert!(vector::is_zero(&affine(3).pmap_by_formula(&z, &ext).unwrap()));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn enveloping_algebra_examples() {
    let i1 = one_dim(2, 1);
    let u = i1.env().unwrap();
    assert!(u.is_valid());
    assert_eq!(u.dim(), 2);
    assert_eq!(u.alg().basis_product(1, 1), &v(&[0, 1]));
    assert!(u.alg().is_semisimple());

    let u = one_dim(2, 0).env().unwrap().clone();
    assert_eq!(u, HopfSC::truncated_primitive(&gf(2, 1).unwrap(), 2).unwrap());

    for p in [2, 3] {
        let l = affine(p);
        let u = l.env().unwrap();
        assert_eq!(u.dim(), (p * p) as usize);
        assert!(u.is_valid());
        assert!(u.is_irreducible());
        assert!(!u.alg().is_commutative());
        assert!(u.alg().center().dim() < u.dim());
        assert_eq!(&u.primitives_restricted().unwrap(), &l);
    }
}

#[test]
fn primitives_of_known_hopf_algebras() {
    use crate::grp::{dual_group_hopf, FiniteGroup};
    let k = gf(2, 1).unwrap();
    let l = dual_group_hopf(&FiniteGroup::cyclic(2), &k).primitives_restricted().unwrap();
    assert_eq!(l.dim(), 1);
    assert_eq!(l.pmap_table(), &[v(&[1])]);
    assert!(l.is_torus().unwrap().torus);

    for p in [2u64, 3] {
        let h = HopfSC::truncated_primitive(&gf(p, 1).unwrap(), p as usize).unwrap();
        let l = h.primitives_restricted().unwrap();
        assert_eq!(l.pmap_table(), &[v(&[0])]);
        assert!(!l.is_torus().unwrap().torus);
    }

    let h = dual_group_hopf(&FiniteGroup::dihedral8(), &k);
    let l = h.primitives_restricted().unwrap();
    assert_eq!(l.dim(), 2);
    assert!(l.is_valid());
    let gen = h.hopf_subalgebra_generated(h.primitives().basis());
    assert_eq!(gen.dim(), 4);
}

#[test]
fn basis_change_preserves_validity() {
    let l = affine(3);
    let k = l.ctx().clone();
    let p = MatF::from_rows(&k, 2, &[v(&[1, 1]), v(&[0, 2])]).unwrap();
    let m = l.change_basis(&p).unwrap();
    assert!(m.is_valid());
    assert_eq!(m.env().unwrap().dim(), 9);
}

fn random_lie(p: u64) -> impl Strategy<Value = RestrictedLie> {
    // abelian tables, or the affine algebra in a random basis
    (prop::collection::vec(0..p as u32, 9), 0..2usize).prop_map(move |(raw, kind)| {
        let k = gf(p, 1).unwrap();
        if kind == 0 {
            let cols = raw.chunks(3).map(v).collect();
            RestrictedLie::abelian(&k, cols).unwrap()
        } else {
            let m = MatF::from_rows(&k, 2, &[v(&raw[0..2]), v(&raw[2..4])]).unwrap();
            affine(p).change_basis(&m).unwrap_or_else(|_| affine(p))
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pmap_in_env_matches_jacobson_formula(
        l in random_lie(2),
        z in prop::collection::vec(0..2u32, 3),
    ) {
        let z = v(&z[..l.dim()]);
        prop_assert_eq!(l.pmap(&z).unwrap(), l.pmap_by_formula(&z, l.ctx()).unwrap());
    }

    #[test]
    fn env_has_pbw_dimension_and_recovers_l(l in random_lie(3)) {
        let u = l.env().unwrap();
        prop_assert_eq!(u.dim(), 3usize.pow(l.dim() as u32));
        prop_assert!(u.is_valid());
        let emb = l.embedding_into_env();
        let image = Subspace::span(l.ctx(), u.dim(), (0..l.dim()).map(|i| emb.column(i)).collect());
        prop_assert_eq!(u.primitives(), image);
        prop_assert_eq!(&u.primitives_restricted().unwrap(), &l);
    }
}
