use super::*;
use crate::ff::{gf, Subspace};
use crate::grp::{dual_group_hopf, group_hopf, quotient_pullback, FiniteGroup};

fn truncated(p: u64, d: usize) -> HopfSC {
    HopfSC::truncated_primitive(&gf(p, 1).unwrap(), d).unwrap()
}

fn line(ctx: &Arc<FieldCtx>, n: usize, v: Vec<Fe>) -> Subspace {
    Subspace::span(ctx, n, vec![v])
}

fn k_d8_over_center() -> (HopfSC, Subspace) {
    let k = gf(2, 1).unwrap();
    let d8 = FiniteGroup::dihedral8();
    let (_, cosets) = d8.quotient(&d8.center()).unwrap();
    (dual_group_hopf(&d8, &k), quotient_pullback(&d8, &cosets, &k))
}

#[test]
fn truncated_primitive_is_valid() {
    for (p, d) in [(2, 2), (2, 4), (3, 3), (5, 5)] {
        assert!(truncated(p, d).is_valid(), "p={p} d={d}");
    }
    assert!(HopfSC::truncated_primitive(&gf(2, 1).unwrap(), 3).is_err());
}

#[test]
fn grouplike_z_breaks_counit() {
    let h = truncated(2, 2);
    let bad = HopfSC::from_fns(
        h.alg().clone(),
        |i| if i == 0 { vec![(0, 0, Fe::ONE)] } else { vec![(1, 1, Fe::ONE)] },
        vec![Fe::ONE, Fe::ZERO],
        |i| vector::unit(2, i),
    )
    .unwrap();
    let rep = bad.validate();
    assert!(!rep.is_valid());
    assert!(rep.witnesses.iter().any(|w| w.condition == "counit"));
}

#[test]
fn group_algebra_of_c2() {
    let k = gf(2, 1).unwrap();
    let c2 = FiniteGroup::cyclic(2);
    let h = group_hopf(&c2, &k);
    assert!(h.is_valid());
    assert_eq!(h.antipode_matrix(), &MatF::identity(&k, 2));
    assert_eq!(h.grouplikes().len(), 2);
    assert!(h.is_cosemisimple());
    assert_eq!(h.coradical_dim(), 2);
    assert!(!h.is_irreducible());
    assert_eq!(h.dual(), dual_group_hopf(&c2, &k));
    assert_eq!(h.dual().dual(), h);
}

#[test]
fn truncated_primitive_is_selfdual() {
    for p in [2u64, 3] {
        let h = truncated(p, p as usize);
        let k = h.ctx().clone();
        let n = p as usize;
        // z^i ↦ i! e^i
        let mut m = MatF::zeros(&k, n, n);
        let mut fact = Fe::ONE;
        for i in 0..n {
            if i > 0 {
                fact = k.mul(fact, k.from_i64(i as i64));
            }
            m.set(i, i, fact);
        }
        assert_eq!(h.dual().change_basis(&m).unwrap(), h);
    }
}

#[test]
fn primitives_examples() {
    for p in [2u64, 3] {
        let h = truncated(p, p as usize);
        let prim = h.primitives();
        assert_eq!(prim.dim(), 1);
        assert!(prim.contains(&vector::unit(p as usize, 1)));
    }
    let k = gf(2, 1).unwrap();
    let kc2 = dual_group_hopf(&FiniteGroup::cyclic(2), &k);
    assert_eq!(kc2.primitives().basis(), &[vec![Fe::ZERO, Fe::ONE]]);
    let kc3 = group_hopf(&FiniteGroup::cyclic(3), &k);
    assert!(kc3.primitives().is_zero());
}

#[test]
fn grouplikes_examples() {
    let k = gf(2, 1).unwrap();
    assert_eq!(truncated(2, 2).grouplikes(), vec![vector::unit(2, 0)]);
    let kc2 = dual_group_hopf(&FiniteGroup::cyclic(2), &k);
    assert_eq!(kc2.grouplikes(), vec![vec![Fe::ONE, Fe::ONE]]);
    assert_eq!(kc2.dual().grouplikes().len(), 2);
}

#[test]
fn grouplike_paths_agree() {
    let k2 = gf(2, 1).unwrap();
    let k3 = gf(3, 1).unwrap();
    let c2 = FiniteGroup::cyclic(2);
    let cases = vec![
        truncated(2, 4),
        truncated(3, 3),
        group_hopf(&FiniteGroup::dihedral8(), &k2),
        group_hopf(&FiniteGroup::cyclic(3), &k3),
        dual_group_hopf(&FiniteGroup::quaternion8(), &k2),
        group_hopf(&FiniteGroup::symmetric3(), &k3),
        group_hopf(&c2, &k2).tensor(&dual_group_hopf(&c2, &k2)).unwrap(),
        group_hopf(&c2, &k2).base_change(2).unwrap(),
    ];
    for h in cases {
        let mut a = h.grouplikes_by_enumeration();
        let mut b = h.grouplikes_by_characters();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{h:?}");
    }
}

#[test]
fn irreducibility_examples() {
    assert!(truncated(2, 2).is_irreducible());
    assert!(truncated(3, 3).is_irreducible());
    let (h, _) = k_d8_over_center();
    assert!(h.is_irreducible());
    assert_eq!(h.coradical_dim(), 1);
}

#[test]
fn wedge_filtration_examples() {
    let h = truncated(2, 4);
    let k = h.ctx().clone();
    let full = Subspace::full(&k, 4);
    assert_eq!(h.wedge_filtration(&full).unwrap(), vec![full.clone()]);
    let one = line(&k, 4, vector::unit(4, 0));
    let chain = h.wedge_filtration(&one).unwrap();
    let dims: Vec<usize> = chain.iter().map(|f| f.dim()).collect();
    // z and z² are both primitive in characteristic 2
    assert_eq!(dims, vec![1, 3, 4]);
    assert!(chain[1].contains(&vector::unit(4, 2)));
    let (h, kk) = k_d8_over_center();
    let chain = h.wedge_filtration(&kk).unwrap();
    assert!(chain.last().unwrap().is_full());
    assert!(chain.windows(2).all(|w| w[0].dim() < w[1].dim()));
    let not_sub = line(&k, 4, vector::unit(4, 1));
    assert!(truncated(2, 4).wedge_filtration(&not_sub).is_err());
}

#[test]
fn gr_examples() {
    for h in [truncated(2, 2), truncated(3, 3)] {
        let g = h.gr().unwrap();
        assert_eq!(g.hopf, h);
        assert_eq!(g.degrees, (0..h.dim()).collect::<Vec<_>>());
    }
    let g = truncated(2, 4).gr().unwrap();
    assert_eq!(g.degrees, vec![0, 1, 1, 2]);
    assert!(g.hopf.is_valid());
    assert!(g.hopf.primitives().dim() == 2);
    let (h, _) = k_d8_over_center();
    let g = h.gr().unwrap();
    assert!(g.hopf.is_valid());
    assert!(g.hopf.alg().is_commutative());
    assert_eq!(g.hopf.dim(), 8);
    assert!(matches!(
        group_hopf(&FiniteGroup::cyclic(2), &gf(2, 1).unwrap()).gr(),
        Err(Error::NotIrreducible)
    ));
}

#[test]
fn relative_primitives_extremes() {
    let (h, kk) = k_d8_over_center();
    let ctx = h.ctx().clone();
    let one = line(&ctx, 8, h.unit().to_vec());
    assert_eq!(h.relative_primitives(&one).unwrap().space, h.primitives());
    let full = Subspace::full(&ctx, 8);
    assert_eq!(h.relative_primitives(&full).unwrap().space, h.augmentation_ideal());

    let rp = h.relative_primitives(&kk).unwrap();
    let kplus = h.augmentation_of(&kk);
    assert!(rp.space.contains_space(&kplus).unwrap());
    assert!(rp.space.dim() > kplus.dim());
    let w = h.first_wedge_bicoinvariants(&kk).unwrap();
    assert_eq!(w.dim() - kk.dim(), rp.space.dim() - kplus.dim());
    for (s, x) in rp.space.basis().iter().enumerate() {
        assert_eq!(rp.gamma.column(s), h.primitive_defect_matrix().apply(x));
    }
}

#[test]
fn conjugation_examples() {
    let k = gf(2, 1).unwrap();
    let d8 = FiniteGroup::dihedral8();
    let h = group_hopf(&d8, &k);
    for g in 0..8 {
        for x in 0..8 {
            let expect = vector::unit(8, d8.mul(d8.mul(g, x), d8.inv(g)));
            assert_eq!(h.conjugation(&vector::unit(8, g), &vector::unit(8, x)), expect);
        }
    }
    let x = vec![Fe::ONE, Fe::ZERO, Fe::ONE, Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ONE, Fe::ZERO];
    assert_eq!(h.conjugation(h.unit(), &x), x);
    let (c, _) = k_d8_over_center();
    for a in 0..8 {
        let ea = vector::unit(8, a);
        let expect = vector::scale(&k, c.counit(&ea), &x);
        assert_eq!(c.conjugation(&ea, &x), expect);
    }
}

#[test]
fn generated_hopf_subalgebras() {
    let h = truncated(3, 3);
    assert!(h.hopf_subalgebra_generated(&[vector::unit(3, 1)]).is_full());
    let one = h.hopf_subalgebra_generated(&[]);
    assert_eq!(one.dim(), 1);
    assert!(one.contains(h.unit()));
    let (h, kk) = k_d8_over_center();
    let rp = h.relative_primitives(&kk).unwrap();
    let gen = h.hopf_subalgebra_generated(rp.space.basis());
    assert!(h.is_hopf_subalgebra(&gen));
    assert!(gen.contains_space(&kk).unwrap());
}

#[test]
fn quotient_extremes() {
    let h = truncated(2, 4);
    let ctx = h.ctx().clone();
    let q = h.hopf_quotient(&Subspace::zero(&ctx, 4)).unwrap();
    assert_eq!(q.hopf, h);
    assert_eq!(q.pi, MatF::identity(&ctx, 4));
    assert_eq!(h.coinvariants(&q).dim(), 1);
    let q = h.hopf_quotient(&h.augmentation_ideal()).unwrap();
    assert_eq!(q.hopf, HopfSC::trivial(&ctx));
    assert!(h.coinvariants(&q).is_full());
}

#[test]
fn quotient_rejections_name_the_inclusion() {
    let h = truncated(2, 4);
    let ctx = h.ctx().clone();
    // (z²) is a Hopf ideal; (z³) is an ideal but Δz³ leaves I⊗H + H⊗I
    let z2 = Subspace::span(&ctx, 4, vec![vector::unit(4, 2), vector::unit(4, 3)]);
    assert_eq!(h.hopf_quotient(&z2).unwrap().hopf.dim(), 2);
    let z3 = line(&ctx, 4, vector::unit(4, 3));
    match h.hopf_quotient(&z3) {
        Err(Error::NotHopfIdeal { inclusion, .. }) => assert_eq!(inclusion, "Δ(I) ⊆ I⊗H + H⊗I"),
        other => panic!("{other:?}"),
    }
    let kc2 = dual_group_hopf(&FiniteGroup::cyclic(2), &ctx);
    let at_identity = line(&ctx, 2, vector::unit(2, 0));
    assert!(matches!(
        kc2.hopf_quotient(&at_identity),
        Err(Error::NotHopfIdeal { inclusion: "ε(I) = 0", .. })
    ));
    let z = line(&ctx, 4, vector::unit(4, 1));
    assert!(matches!(
        h.hopf_quotient(&z),
        Err(Error::NotHopfIdeal { inclusion: "H I H ⊆ I", .. })
    ));
}

#[test]
fn coinvariants_of_quotient_by_normal_subalgebra() {
    let (h, kk) = k_d8_over_center();
    let ideal = h.alg().ideal_generated(h.augmentation_of(&kk).basis());
    let q = h.hopf_quotient(&ideal).unwrap();
    assert_eq!(q.hopf.dim(), 2);
    assert_eq!(h.coinvariants(&q), kk);
    assert!(h.is_cocentral(&q));
}

#[test]
fn tensor_and_base_change() {
    let h = truncated(3, 3);
    let k = HopfSC::trivial(h.ctx());
    assert_eq!(k.tensor(&h).unwrap(), h);
    let c2 = FiniteGroup::cyclic(2);
    let k2 = gf(2, 1).unwrap();
    let t = truncated(2, 2).tensor(&dual_group_hopf(&c2, &k2)).unwrap();
    assert!(t.is_valid());
    assert!(t.is_irreducible());
    for h in [truncated(2, 4), dual_group_hopf(&FiniteGroup::dihedral8(), &k2)] {
        for m in 2..=4 {
            let b = h.base_change(m).unwrap();
            assert!(b.is_valid());
            assert_eq!(b.primitives().dim(), h.primitives().dim());
        }
    }
}

#[test]
fn primitives_form_a_restricted_lie_algebra() {
    let k2 = gf(2, 1).unwrap();
    let c2 = FiniteGroup::cyclic(2);
    let t = truncated(2, 4).tensor(&dual_group_hopf(&c2, &k2)).unwrap();
    let prim = t.primitives();
    for x in prim.basis() {
        assert!(prim.contains(&t.alg().pow(x, 2)));
        for y in prim.basis() {
            assert!(prim.contains(&t.alg().commutator(x, y)));
        }
    }
}
