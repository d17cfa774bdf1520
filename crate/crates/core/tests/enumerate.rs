use hopfcheck::harness::enumerate::{enumerate_rlie, sample_rlie};
use hopfcheck::harness::{Body, Instance};
use proptest::prelude::*;

// Counts frozen from an independent brute-force enumeration that checks
// antisymmetry, Jacobi and ad(x^[p]) = ad(x)^p directly on all raw tables.
#[test]
fn exhaustive_counts() {
    for (p, n, count) in [(2, 1, 2), (3, 1, 3), (2, 2, 19), (3, 2, 89)] {
        let all = enumerate_rlie(p, n).unwrap();
        assert_eq!(all.len(), count, "p={p} n={n}");
        assert!(all.iter().all(|l| l.is_valid()));
    }
}

#[test]
fn exhaustive_order_is_lexicographic_and_stable() {
    let key = |l: &hopfcheck::rlie::RestrictedLie| {
        let b = l.bracket_table()[1].iter().map(|c| c.0);
        let pm = l.pmap_table().iter().flatten().map(|c| c.0);
        b.chain(pm).collect::<Vec<u32>>()
    };
    let a = enumerate_rlie(3, 2).unwrap();
    let keys: Vec<_> = a.iter().map(key).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(a, enumerate_rlie(3, 2).unwrap());
}

#[test]
fn one_dimensional_maps_are_scalars() {
    let all = enumerate_rlie(3, 1).unwrap();
    let lambdas: Vec<u32> = all.iter().map(|l| l.pmap_table()[0][0].0).collect();
    assert_eq!(lambdas, [0, 1, 2]);
}

#[test]
fn too_large_for_exhaustion() {
    assert!(enumerate_rlie(3, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn samples_are_valid_and_reproducible(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3])) {
        let a = sample_rlie(p, 3, seed, 5).unwrap();
        prop_assert!(a.iter().all(|l| l.is_valid() && l.dim() == 3));
        prop_assert_eq!(&a, &sample_rlie(p, 3, seed, 5).unwrap());
        for l in &a {
            let inst = Instance::new("s", l.ctx(), Body::Rlie(l.clone()));
            prop_assert_eq!(Instance::parse(&inst.serialize()).unwrap(), inst);
        }
    }
}
