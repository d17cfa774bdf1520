//! One line per acceptance criterion; the test fails if any criterion does.

use std::path::PathBuf;

use hopfcheck::algebra::radical::ORACLE_BUDGET;
use hopfcheck::ff::{gf, Fe, MatF, Subspace};
use hopfcheck::harness::catalog::{Catalog, Truth};
use hopfcheck::harness::{battery, enumerate, Body, Instance};
use hopfcheck::hopf::HopfSC;
use hopfcheck::rlie::{NilpotentWitness, RestrictedLie, DEFAULT_WITNESS_DEGREE};
use hopfcheck::{AlgebraSC, Status};

const SAMPLE_SEED: u64 = 2026;
const SAMPLES_PER_PRIME: usize = 200;

type Outcome = (bool, String);

fn corpus() -> Vec<RestrictedLie> {
    let mut out = Vec::new();
    for (p, n) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        out.extend(enumerate::enumerate_rlie(p, n).unwrap());
    }
    for p in [2, 3] {
        out.extend(enumerate::sample_rlie(p, 3, SAMPLE_SEED, SAMPLES_PER_PRIME).unwrap());
    }
    out
}

fn enveloping_dimension_law(corpus: &[RestrictedLie]) -> Outcome {
    let mut bad = 0;
    for l in corpus {
        let p = l.ctx().p() as usize;
        let u = l.env().unwrap();
        let emb = l.embedding_into_env();
        let image = Subspace::span(l.ctx(), u.dim(), (0..l.dim()).map(|i| emb.column(i)).collect());
        let ok = u.dim() == p.pow(l.dim() as u32)
            && u.primitives() == image
            && &u.primitives_restricted().unwrap() == l;
        bad += usize::from(!ok);
    }
    (bad == 0, format!("{} algebras, {bad} violations", corpus.len()))
}

fn prop13_agreement(corpus: &[RestrictedLie]) -> Outcome {
    let (mut fails, mut abelian_inconclusive) = (0, 0);
    let (mut nonabelian, mut nonabelian_inconclusive) = (0, 0);
    for l in corpus {
        let rep = battery::prop13("enum", l).unwrap();
        let b = rep.get("(b) abelian, p-map bijective").flatten();
        let d = rep.get("(d) u(L) semisimple").flatten();
        let e = rep.get("(e) u(L) commutative semisimple").flatten();
        let a = rep.get("(a) all elements semisimple").flatten();
        let exhaustible = l.ctx().p().pow(l.dim() as u32) <= 729;
        let witness = l.nilpotent_witness(DEFAULT_WITNESS_DEGREE).unwrap();
        let consistent = match witness {
            NilpotentWitness::Found { .. } => b == Some(false),
            NilpotentWitness::CertifiedNone => b == Some(true),
            NilpotentWitness::NotFound { .. } => true,
        };
        let inconclusive = matches!(witness, NilpotentWitness::NotFound { .. });
        let agree = b.is_some() && b == d && d == e && (!exhaustible || a == b) && consistent;
        fails += usize::from(!agree || rep.status == Status::Fail);
        if l.is_abelian() {
            abelian_inconclusive += usize::from(inconclusive);
        } else {
            nonabelian += 1;
            nonabelian_inconclusive += usize::from(inconclusive);
        }
    }
    (
        fails == 0 && abelian_inconclusive == 0,
        format!(
            "{} algebras, {fails} disagreements, abelian inconclusive {abelian_inconclusive}, \
             nonabelian inconclusive {nonabelian_inconclusive}/{nonabelian}",
            corpus.len()
        ),
    )
}

fn theorem01_catalog(cat: &Catalog) -> Outcome {
    let required = [
        "u-I1",
        "u-I2",
        "u-I3",
        "fn-C2",
        "fn-C4",
        "fn-C2xC2",
        "fn-D8",
        "fn-Q8",
        "fn-Heis3",
        "fn-M27",
        "twisted-C2xC2",
        "u-I2.fn-C2",
        "kC3.fn-C2",
    ];
    let mut bad = Vec::new();
    for label in required {
        if cat.hopf_by_label(label).is_none() {
            bad.push(format!("{label} missing"));
        }
    }
    let conds = [
        "(i) semisimple",
        "(ii) commutative semisimple",
        "(iii) split form of k^G, G a p-group",
        "(iv) P(H) torus",
    ];
    for e in &cat.hopf {
        let rep = battery::theorem01(&e.label, &e.hopf).unwrap();
        let ok = match e.truth {
            Truth::NotIrreducible => rep.status == Status::RejectedHypothesis,
            Truth::AllTrue | Truth::AllFalse => {
                let want = e.truth == Truth::AllTrue;
                rep.status == Status::Pass && conds.iter().all(|c| rep.get(c) == Some(Some(want)))
            }
        };
        if !ok {
            bad.push(e.label.clone());
        }
        if e.label == "twisted-C2xC2" {
            let two = rep.get_fact("splitting degree") == Some("2");
            let split_over_base = e.hopf.alg().primitive_idempotents().unwrap().len();
            let split_over_ext = battery::idempotent_count_after(&e.hopf, 2).unwrap();
            if !(two && split_over_base == 3 && split_over_ext == 4) {
                bad.push("twisted splitting degree".into());
            }
        }
    }
    (bad.is_empty(), format!("{} instances, mismatches {:?}", cat.hopf.len(), bad))
}

fn radical_agrees(a: &AlgebraSC) -> bool {
    a.radical_oracle(ORACLE_BUDGET).certified() == Some(&a.radical_trace())
}

fn radical_differential(cat: &Catalog) -> Outcome {
    let mut algebras: Vec<(String, AlgebraSC)> = cat
        .hopf
        .iter()
        .map(|e| (e.label.clone(), e.hopf.alg().clone()))
        .collect();
    for pr in &cat.pairs {
        let h = &pr.h;
        let rp = h.relative_primitives(&pr.k).unwrap();
        let gen = h.alg().subalgebra_generated(rp.space.basis());
        for (tag, s) in [("K", &pr.k), ("k<P(H,K)>", &gen)] {
            if s.dim() <= 9 {
                algebras.push((format!("{} {tag}", pr.k_label), h.alg().restrict_to(s).unwrap()));
            }
        }
    }
    for t in &cat.triples {
        let pr = &cat.pairs[t.pair];
        let mut gens = pr.k.basis().to_vec();
        gens.push(t.x.clone());
        let jspace = pr.h.hopf_subalgebra_generated(&gens);
        let j = pr.h.restrict(&jspace).unwrap();
        let kj = Subspace::span(
            j.ctx(),
            j.dim(),
            pr.k.basis().iter().map(|v| jspace.coords(v).unwrap()).collect(),
        );
        let ideal = j.alg().product_space(&j.augmentation_of(&kj), &Subspace::full(j.ctx(), j.dim()));
        let q = j.hopf_quotient(&ideal).unwrap();
        if j.dim() <= 9 {
            algebras.push((format!("{} J", t.x_label), j.alg().clone()));
        }
        algebras.push((format!("{} Q", t.x_label), q.hopf.alg().clone()));
    }
    let bad: Vec<&String> = algebras.iter().filter(|(_, a)| !radical_agrees(a)).map(|(l, _)| l).collect();
    (bad.is_empty(), format!("{} algebras, disagreements {:?}", algebras.len(), bad))
}

fn self_duality() -> Outcome {
    let mut ok = true;
    for p in [2u64, 3] {
        let k = gf(p, 1).unwrap();
        let n = p as usize;
        let h = HopfSC::truncated_primitive(&k, n).unwrap();
        // the pairing basis z^i ↦ i! (z^i)*
        let mut m = MatF::zeros(&k, n, n);
        let mut fact = Fe::ONE;
        for i in 0..n {
            if i > 0 {
                fact = k.mul(fact, k.from_i64(i as i64));
            }
            m.set(i, i, fact);
        }
        ok &= h.dual().change_basis(&m).unwrap() == h;
    }
    (ok, "k[z]/(z^p) for p = 2, 3".into())
}

fn relative_primitives(cat: &Catalog) -> Outcome {
    let mut bad = Vec::new();
    let mut central_checked = Vec::new();
    for pr in &cat.pairs {
        let rep = battery::relprim(&pr.k_label, &pr.h, &pr.k).unwrap();
        let proper = pr.k.dim() < pr.h.dim();
        let mut ok = rep.status == Status::Pass
            && rep.get("dim P(H,K)/K+ = dim H(1)_0") == Some(Some(true));
        if proper && pr.h.is_irreducible() {
            ok &= rep.get("P(H,K) strictly contains K+") == Some(Some(true));
        }
        if rep.get_fact("central-K hypotheses") == Some("true") {
            ok &= rep.get("K central in k<P(H,K)>") == Some(Some(true));
            central_checked.push(pr.k_label.clone());
        }
        if !ok {
            bad.push(pr.k_label.clone());
        }
    }
    for need in ["kC3.fn-C2.right", "kS3.fn-C2.right"] {
        if !central_checked.iter().any(|l| l == need) {
            bad.push(format!("{need} centrality not exercised"));
        }
    }
    let noncommutative = cat.hopf_by_label("kS3.fn-C2").is_some_and(|h| !h.alg().is_commutative());
    if !noncommutative {
        bad.push("no noncommutative ambient".into());
    }
    (
        bad.is_empty(),
        format!("{} pairs, centrality checked on {}, failures {:?}", cat.pairs.len(), central_checked.len(), bad),
    )
}

fn section3_decomposition(cat: &Catalog) -> Outcome {
    let mut good = 0;
    for t in &cat.triples {
        let pr = &cat.pairs[t.pair];
        let rep = battery::section3(&t.x_label, &pr.h, &pr.k, &t.x).unwrap();
        if rep.status == Status::Pass
            && rep.get("coinvariants = K") == Some(Some(true))
            && rep.get("dim J = dim K dim Q") == Some(Some(true))
        {
            good += 1;
        }
    }
    (
        good >= 3 && good == cat.triples.len(),
        format!("{good}/{} triples decompose", cat.triples.len()),
    )
}

fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn round_trip_and_determinism(cat: &Catalog) -> Outcome {
    let mut bad = Vec::new();
    let expected = cat.instances();
    for inst in &expected {
        let path = catalog_dir().join(format!("{}.inst", inst.label));
        let Ok(text) = std::fs::read_to_string(&path) else {
            bad.push(format!("{} missing", inst.label));
            continue;
        };
        let first = Instance::parse(&text).unwrap();
        let again = Instance::parse(&first.serialize()).unwrap();
        let same_constants = match (&first.body, &again.body) {
            (Body::Hopf(a), Body::Hopf(b)) => a == b,
            (Body::Rlie(a), Body::Rlie(b)) => a == b,
            (Body::Group(a), Body::Group(b)) => a == b,
            (Body::Subspace(a), Body::Subspace(b)) => a == b,
            _ => false,
        };
        if !same_constants || first != *inst {
            bad.push(inst.label.clone());
        }
    }
    let render = || {
        cat.run()
            .unwrap()
            .iter()
            .map(|r| r.to_json() + "\n" + &r.to_text())
            .collect::<String>()
    };
    let deterministic = render() == render();
    (
        bad.is_empty() && deterministic,
        format!("{} files, mismatches {:?}, deterministic run {deterministic}", expected.len(), bad),
    )
}

#[test]
fn acceptance() {
    let cat = Catalog::build().unwrap();
    let corpus = corpus();
    let results = [
        ("1 enveloping dimension law", enveloping_dimension_law(&corpus)),
        ("2 prop13 battery", prop13_agreement(&corpus)),
        ("3 theorem01 battery", theorem01_catalog(&cat)),
        ("4 radical differential", radical_differential(&cat)),
        ("5 self-duality", self_duality()),
        ("6 relative primitives", relative_primitives(&cat)),
        ("7 decomposition", section3_decomposition(&cat)),
        ("8 round-trip and determinism", round_trip_and_determinism(&cat)),
    ];
    for (name, (ok, detail)) in &results {
        println!("criterion {name}: {} ({detail})", if *ok { "PASS" } else { "FAIL" });
    }
    let failed: Vec<&str> = results.iter().filter(|(_, (ok, _))| !ok).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
