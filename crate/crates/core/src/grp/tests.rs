use super::*;
use crate::ff::{gf, vector};

fn catalog() -> Vec<(&'static str, FiniteGroup)> {
    let c2 = FiniteGroup::cyclic(2);
    vec![
        ("C2", c2.clone()),
        ("C4", FiniteGroup::cyclic(4)),
        ("C2xC2", FiniteGroup::direct_product(&c2, &c2)),
        ("D8", FiniteGroup::dihedral8()),
        ("Q8", FiniteGroup::quaternion8()),
        ("Heis3", FiniteGroup::heisenberg(3).unwrap()),
        ("M27", FiniteGroup::modular(3).unwrap()),
    ]
}

#[test]
fn constructors_are_groups() {
    for (name, g) in catalog() {
        assert!(g.validate().is_valid(), "{name}");
    }
    assert!(FiniteGroup::symmetric3().validate().is_valid());
    assert!(!FiniteGroup::symmetric3().is_abelian());
    assert!(!FiniteGroup::from_table(2, vec![0, 1, 1, 1]).unwrap().validate().witnesses.is_empty());
}

#[test]
fn basic_predicates() {
    let c4 = FiniteGroup::cyclic(4);
    assert!(c4.is_p_group(2) && c4.is_abelian());
    let d8 = FiniteGroup::dihedral8();
    assert!(d8.is_p_group(2) && !d8.is_abelian());
    let c6 = FiniteGroup::cyclic(6);
    assert!(!c6.is_p_group(2) && !c6.is_p_group(3));
    assert_eq!(c6.prime(), None);
}

#[test]
fn heisenberg_and_modular() {
    let h = FiniteGroup::heisenberg(3).unwrap();
    assert_eq!(h.order(), 27);
    assert!(!h.is_abelian());
    assert_eq!(h.exponent(), 3);
    assert_eq!(h.center().len(), 3);
    let m = FiniteGroup::modular(3).unwrap();
    assert_eq!(m.order(), 27);
    assert!(!m.is_abelian());
    assert_eq!(m.exponent(), 9);
    assert_eq!(FiniteGroup::heisenberg(2).unwrap(), FiniteGroup::dihedral8());
    assert!(matches!(FiniteGroup::heisenberg(4), Err(Error::NotPrime(4))));
    let q = FiniteGroup::quaternion8();
    assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
}

fn check_central(g: &FiniteGroup, series: &[Subgroup]) {
    let p = g.prime().unwrap_or(1);
    assert_eq!(series[0].len(), g.order());
    assert_eq!(series.last().unwrap(), &vec![g.identity()]);
    for w in series.windows(2) {
        let (upper, lower) = (&w[0], &w[1]);
        assert!(g.is_normal(lower));
        assert_eq!(upper.len(), lower.len() * p);
        let all: Subgroup = (0..g.order()).collect();
        let comm = g.commutator_subgroup(&all, upper);
        assert!(comm.iter().all(|x| lower.binary_search(x).is_ok()));
    }
}

#[test]
fn central_series_examples() {
    let c4 = FiniteGroup::cyclic(4);
    let s = c4.central_series().unwrap();
    assert_eq!(s, vec![vec![0, 1, 2, 3], vec![0, 2], vec![0]]);
    let d8 = FiniteGroup::dihedral8();
    let s = d8.central_series().unwrap();
    assert!(s.contains(&d8.center()));
    check_central(&d8, &s);
    assert_eq!(FiniteGroup::trivial().central_series().unwrap(), vec![vec![0]]);
    assert!(matches!(
        FiniteGroup::cyclic(6).central_series(),
        Err(Error::NotPGroup(6))
    ));
    for (_, g) in catalog() {
        check_central(&g, &g.central_series().unwrap());
    }
}

#[test]
fn quotient_by_center() {
    let d8 = FiniteGroup::dihedral8();
    let (q, cosets) = d8.quotient(&d8.center()).unwrap();
    assert_eq!(q.order(), 4);
    assert!(q.validate().is_valid());
    assert!(q.is_abelian());
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(cosets[d8.mul(a, b)], q.mul(cosets[a], cosets[b]));
        }
    }
    let s3 = FiniteGroup::symmetric3();
    assert!(s3.quotient(&s3.generated(&[1])).is_err());
}

#[test]
fn dual_group_hopf_is_the_dual() {
    for (p, gs) in [(2, vec![0, 1, 2, 3, 4]), (3, vec![5, 6])] {
        let k = gf(p, 1).unwrap();
        let cat = catalog();
        for i in gs {
            let g = &cat[i].1;
            let kg = group_hopf(g, &k);
            let dual = dual_group_hopf(g, &k);
            assert!(kg.is_valid());
            assert!(dual.is_valid());
            let d = kg.dual();
            assert_eq!(d.alg().table(), dual.alg().table());
            assert_eq!(d.alg().unit(), dual.alg().unit());
            assert_eq!(d.delta_matrix(), dual.delta_matrix());
            assert_eq!(d.eps(), dual.eps());
            assert_eq!(d.antipode_matrix(), dual.antipode_matrix());
        }
    }
}

#[test]
fn dual_of_p_group_is_semisimple_and_irreducible() {
    let k2 = gf(2, 1).unwrap();
    let c2 = FiniteGroup::cyclic(2);
    let h = dual_group_hopf(&c2, &k2);
    assert_eq!(h.dim(), 2);
    assert!(h.alg().is_semisimple());
    assert!(h.is_irreducible());
    assert!(!group_hopf(&c2, &k2).alg().is_semisimple());

    let k3 = gf(3, 1).unwrap();
    let heis = FiniteGroup::heisenberg(3).unwrap();
    let h = dual_group_hopf(&heis, &k3);
    assert_eq!(h.dim(), 27);
    assert!(h.alg().is_commutative());
    assert!(h.alg().is_semisimple());
    assert!(h.is_irreducible());
    assert_eq!(h.primitives().dim(), 2);
}

#[test]
fn grouplikes_of_group_algebras() {
    for (p, g) in [
        (2, FiniteGroup::dihedral8()),
        (2, FiniteGroup::quaternion8()),
        (3, FiniteGroup::modular(3).unwrap()),
    ] {
        let k = gf(p, 1).unwrap();
        let kg = group_hopf(&g, &k);
        let gl = kg.grouplikes();
        assert_eq!(gl.len(), g.order());
        for x in 0..g.order() {
            assert!(gl.contains(&vector::unit(g.order(), x)));
        }
        let kgd = dual_group_hopf(&g, &k).dual();
        assert_eq!(kgd.grouplikes().len(), g.order());
    }
}

#[test]
fn pullback_is_hopf_subalgebra() {
    let k = gf(2, 1).unwrap();
    let d8 = FiniteGroup::dihedral8();
    let (_, cosets) = d8.quotient(&d8.center()).unwrap();
    let h = dual_group_hopf(&d8, &k);
    let kk = quotient_pullback(&d8, &cosets, &k);
    assert_eq!(kk.dim(), 4);
    assert!(h.is_hopf_subalgebra(&kk));
    let chain = h.wedge_filtration(&kk).unwrap();
    assert!(chain.last().unwrap().is_full());
}

fn swap_c2xc2() -> (FiniteGroup, Vec<usize>) {
    let c2 = FiniteGroup::cyclic(2);
    let g = FiniteGroup::direct_product(&c2, &c2);
    // (a, b) at 2a + b; swap coordinates
    (g, vec![0, 2, 1, 3])
}

#[test]
fn twisted_dual_with_trivial_action_is_k_g() {
    let (g, _) = swap_c2xc2();
    let h = galois_twisted_dual(&g, &[0, 1, 2, 3], 2, 2).unwrap();
    let k = gf(2, 1).unwrap();
    let d = dual_group_hopf(&g, &k);
    assert_eq!(h.alg().table(), d.alg().table());
    assert_eq!(h.delta_matrix(), d.delta_matrix());
}

#[test]
fn twisted_dual_of_klein_four() {
    let (g, sigma) = swap_c2xc2();
    let h = galois_twisted_dual(&g, &sigma, 2, 2).unwrap();
    assert!(h.is_valid());
    assert!(h.alg().is_commutative());
    assert!(h.alg().is_semisimple());
    assert!(h.is_irreducible());
    assert_eq!(h.alg().primitive_idempotents().unwrap().len(), 3);
    let degs: Vec<usize> = h
        .alg()
        .primitive_idempotents()
        .unwrap()
        .iter()
        .map(|e| e.residue_degree)
        .collect();
    assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 1);
    assert_eq!(h.alg().splitting_degree().unwrap(), 2);
    let h4 = h.base_change(2).unwrap();
    assert_eq!(h4.alg().primitive_idempotents().unwrap().len(), 4);
}

#[test]
fn twisted_dual_rejects_bad_actions() {
    let (g, _) = swap_c2xc2();
    assert!(galois_twisted_dual(&g, &[0, 1, 1, 3], 2, 2).is_err());
    let c3 = FiniteGroup::cyclic(3);
    // inversion has order 2, which does not divide 3
    assert!(galois_twisted_dual(&c3, &[0, 2, 1], 3, 3).is_err());
}
