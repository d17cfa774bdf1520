//! The golden catalog: named instances, subalgebra pairs and decomposition
//! triples, with the expected theorem01 truth table.
//!
//! Labels: `I1`, `I2`, `I3`, `I3p3` are restricted Lie algebras; `u-L` is
//! the restricted enveloping algebra of L; `fn-G` is the function algebra
//! k^G; `kG` is the group algebra; `A.B` is the tensor product A ⊗ B.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::Result;
use crate::ff::{gf, vector, Fe, FieldCtx, Subspace};
use crate::grp::{dual_group_hopf, galois_twisted_dual, group_hopf, quotient_pullback, FiniteGroup};
use crate::harness::battery;
use crate::harness::instance::{Body, Instance};
use crate::hopf::HopfSC;
use crate::report::{CheckReport, Status};
use crate::rlie::RestrictedLie;

/// Expected outcome of the theorem01 battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth {
    AllTrue,
    AllFalse,
    NotIrreducible,
}

pub struct HopfEntry {
    pub label: String,
    pub hopf: HopfSC,
    pub truth: Truth,
    /// Expected splitting degree for commutative semisimple entries.
    pub splitting_degree: Option<u32>,
}

pub struct GroupEntry {
    pub label: String,
    pub p: u64,
    pub group: FiniteGroup,
}

/// A Hopf subalgebra K of H.
pub struct Pair {
    pub h_label: String,
    pub k_label: String,
    pub h: HopfSC,
    pub k: Subspace,
}

/// K ⊆ H with x ∈ P(H,K) ∖ K.
pub struct Triple {
    pub pair: usize,
    pub x_label: String,
    pub x: Vec<Fe>,
}

pub struct Catalog {
    pub lie: Vec<(String, RestrictedLie)>,
    pub hopf: Vec<HopfEntry>,
    pub groups: Vec<GroupEntry>,
    pub pairs: Vec<Pair>,
    pub triples: Vec<Triple>,
}

fn f(xs: &[u32]) -> Vec<Fe> {
    xs.iter().map(|&x| Fe(x)).collect()
}

/// x^{[2]} = x over GF(2).
pub fn lie_i1() -> RestrictedLie {
    RestrictedLie::abelian(&gf(2, 1).unwrap(), vec![f(&[1])]).unwrap()
}

/// x^{[2]} = 0 over GF(2).
pub fn lie_i2() -> RestrictedLie {
    RestrictedLie::abelian(&gf(2, 1).unwrap(), vec![f(&[0])]).unwrap()
}

/// [x, y] = y, x^{[p]} = x, y^{[p]} = 0 over GF(p).
pub fn lie_i3(p: u64) -> RestrictedLie {
    let k = gf(p, 1).unwrap();
    let minus_y = vec![Fe::ZERO, k.neg(Fe::ONE)];
    RestrictedLie::new(
        &k,
        2,
        vec![f(&[0, 0]), f(&[0, 1]), minus_y, f(&[0, 0])],
        vec![f(&[1, 0]), f(&[0, 0])],
    )
    .unwrap()
}

/// 1 ⊗ B inside A ⊗ B.
fn right_factor(a: &HopfSC, b: &HopfSC) -> Subspace {
    let ctx = a.ctx();
    let vecs = (0..b.dim())
        .map(|j| vector::tensor(ctx, a.unit(), &vector::unit(b.dim(), j)))
        .collect();
    Subspace::span(ctx, a.dim() * b.dim(), vecs)
}

/// A ⊗ 1 inside A ⊗ B.
fn left_factor(a: &HopfSC, b: &HopfSC) -> Subspace {
    let ctx = a.ctx();
    let vecs = (0..a.dim())
        .map(|i| vector::tensor(ctx, &vector::unit(a.dim(), i), b.unit()))
        .collect();
    Subspace::span(ctx, a.dim() * b.dim(), vecs)
}

fn pullback_of_normal(g: &FiniteGroup, n: &[usize], ctx: &Arc<FieldCtx>) -> Result<Subspace> {
    let (_, cosets) = g.quotient(n)?;
    Ok(quotient_pullback(g, &cosets, ctx))
}

impl Catalog {
    pub fn build() -> Result<Catalog> {
        let k2 = gf(2, 1)?;
        let k3 = gf(3, 1)?;

        let lie = vec![
            ("I1".to_string(), lie_i1()),
            ("I2".to_string(), lie_i2()),
            ("I3".to_string(), lie_i3(2)),
            ("I3p3".to_string(), lie_i3(3)),
        ];

        let c2 = FiniteGroup::cyclic(2);
        let c4 = FiniteGroup::cyclic(4);
        let c2c2 = FiniteGroup::direct_product(&c2, &c2);
        let d8 = FiniteGroup::dihedral8();
        let q8 = FiniteGroup::quaternion8();
        let heis3 = FiniteGroup::heisenberg(3)?;
        let m27 = FiniteGroup::modular(3)?;
        let c3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::symmetric3();
        let groups: Vec<GroupEntry> = [
            ("C2", 2, &c2),
            ("C4", 2, &c4),
            ("C2xC2", 2, &c2c2),
            ("D8", 2, &d8),
            ("Q8", 2, &q8),
            ("Heis3", 3, &heis3),
            ("M27", 3, &m27),
            ("C3", 2, &c3),
            ("S3", 2, &s3),
        ]
        .into_iter()
        .map(|(l, p, g)| GroupEntry {
            label: l.into(),
            p,
            group: g.clone(),
        })
        .collect();

        let env = |l: &RestrictedLie| l.env().cloned();
        let fn_c2 = dual_group_hopf(&c2, &k2);
        let u_i1 = env(&lie[0].1)?;
        let u_i2 = env(&lie[1].1)?;
        let fn_d8 = dual_group_hopf(&d8, &k2);
        let fn_c4 = dual_group_hopf(&c4, &k2);
        let fn_q8 = dual_group_hopf(&q8, &k2);
        let fn_c2c2 = dual_group_hopf(&c2c2, &k2);
        let fn_heis3 = dual_group_hopf(&heis3, &k3);
        let kc3 = group_hopf(&c3, &k2);
        let ks3 = group_hopf(&s3, &k2);
        let u_i2_fn_c2 = u_i2.tensor(&fn_c2)?;
        let kc3_fn_c2 = kc3.tensor(&fn_c2)?;
        let ks3_fn_c2 = ks3.tensor(&fn_c2)?;
        let fn_c2_u_i1 = fn_c2.tensor(&u_i1)?;
        let trunc4 = HopfSC::truncated_primitive(&k2, 4)?;
        let twisted = galois_twisted_dual(&c2c2, &[0, 2, 1, 3], 2, 2)?;

        let entry = |l: &str, h: &HopfSC, truth, m| HopfEntry {
            label: l.into(),
            hopf: h.clone(),
            truth,
            splitting_degree: m,
        };
        use Truth::*;
        let hopf = vec![
            entry("u-I1", &u_i1, AllTrue, Some(1)),
            entry("u-I2", &u_i2, AllFalse, None),
            entry("u-I3", &env(&lie[2].1)?, AllFalse, None),
            entry("u-I3p3", &env(&lie[3].1)?, AllFalse, None),
            entry("fn-C2", &fn_c2, AllTrue, Some(1)),
            entry("fn-C4", &fn_c4, AllTrue, Some(1)),
            entry("fn-C2xC2", &fn_c2c2, AllTrue, Some(1)),
            entry("fn-D8", &fn_d8, AllTrue, Some(1)),
            entry("fn-Q8", &fn_q8, AllTrue, Some(1)),
            entry("fn-Heis3", &fn_heis3, AllTrue, Some(1)),
            entry("fn-M27", &dual_group_hopf(&m27, &k3), AllTrue, Some(1)),
            entry("twisted-C2xC2", &twisted, AllTrue, Some(2)),
            entry("fn-C2.u-I1", &fn_c2_u_i1, AllTrue, Some(1)),
            entry("u-I2.fn-C2", &u_i2_fn_c2, AllFalse, None),
            entry("trunc4", &trunc4, AllFalse, None),
            entry("kC2", &group_hopf(&c2, &k2), NotIrreducible, None),
            entry("kC3.fn-C2", &kc3_fn_c2, NotIrreducible, None),
            entry("kS3.fn-C2", &ks3_fn_c2, NotIrreducible, None),
        ];

        let pair = |h_label: &str, k_label: &str, h: &HopfSC, k: Subspace| Pair {
            h_label: h_label.into(),
            k_label: k_label.into(),
            h: h.clone(),
            k,
        };
        let pairs = vec![
            pair("fn-D8", "fn-D8.Z", &fn_d8, pullback_of_normal(&d8, &d8.center(), &k2)?),
            pair("fn-C4", "fn-C4.C2", &fn_c4, pullback_of_normal(&c4, &[0, 2], &k2)?),
            pair("fn-Q8", "fn-Q8.Z", &fn_q8, pullback_of_normal(&q8, &q8.center(), &k2)?),
            pair("fn-C2xC2", "fn-C2xC2.C2", &fn_c2c2, pullback_of_normal(&c2c2, &[0, 1], &k2)?),
            pair("fn-Heis3", "fn-Heis3.Z", &fn_heis3, pullback_of_normal(&heis3, &heis3.center(), &k3)?),
            pair("fn-C2.u-I1", "fn-C2.u-I1.left", &fn_c2_u_i1, left_factor(&fn_c2, &u_i1)),
            pair("u-I2.fn-C2", "u-I2.fn-C2.right", &u_i2_fn_c2, right_factor(&u_i2, &fn_c2)),
            pair("kC3.fn-C2", "kC3.fn-C2.right", &kc3_fn_c2, right_factor(&kc3, &fn_c2)),
            pair("kS3.fn-C2", "kS3.fn-C2.right", &ks3_fn_c2, right_factor(&ks3, &fn_c2)),
            pair("fn-D8", "fn-D8.all", &fn_d8, Subspace::full(&k2, 8)),
            pair(
                "trunc4",
                "trunc4.one",
                &trunc4,
                Subspace::span(&k2, 4, vec![trunc4.unit().to_vec()]),
            ),
        ];

        let mut triples = Vec::new();
        for (i, pr) in pairs.iter().enumerate() {
            if !["fn-D8.Z", "fn-C4.C2", "fn-Q8.Z", "fn-C2.u-I1.left"].contains(&pr.k_label.as_str()) {
                continue;
            }
            let rp = pr.h.relative_primitives(&pr.k)?;
            let kplus = pr.h.augmentation_of(&pr.k);
            let x = kplus.quotient_basis(&rp.space)?[0].clone();
            triples.push(Triple {
                pair: i,
                x_label: format!("{}.x", pr.k_label),
                x,
            });
        }

        Ok(Catalog {
            lie,
            hopf,
            groups,
            pairs,
            triples,
        })
    }

    pub fn hopf_by_label(&self, label: &str) -> Option<&HopfSC> {
        self.hopf.iter().find(|e| e.label == label).map(|e| &e.hopf)
    }

    /// Every catalog object as an instance, in a fixed order.
    pub fn instances(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        for (l, lie) in &self.lie {
            out.push(Instance::new(l, lie.ctx(), Body::Rlie(lie.clone())));
        }
        for e in &self.hopf {
            out.push(Instance::new(&e.label, e.hopf.ctx(), Body::Hopf(e.hopf.clone())));
        }
        for g in &self.groups {
            let ctx = gf(g.p, 1).expect("prime");
            out.push(Instance::new(&g.label, &ctx, Body::Group(g.group.clone())));
        }
        for pr in &self.pairs {
            out.push(Instance::new(&pr.k_label, pr.h.ctx(), Body::Subspace(pr.k.basis().to_vec())));
        }
        for t in &self.triples {
            let ctx = self.pairs[t.pair].h.ctx();
            out.push(Instance::new(&t.x_label, ctx, Body::Subspace(vec![t.x.clone()])));
        }
        out
    }

    /// Writes every instance to `dir/<label>.inst`.
    pub fn export(&self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut out = Vec::new();
        for inst in self.instances() {
            let path = dir.join(format!("{}.inst", inst.label));
            std::fs::write(&path, inst.serialize())?;
            out.push(path);
        }
        Ok(out)
    }

    /// All batteries over the catalog, with the truth table enforced.
    pub fn run(&self) -> Result<Vec<CheckReport>> {
        let mut out = Vec::new();
        self.run_each(|rep| out.push(rep))?;
        Ok(out)
    }

    /// As [`Catalog::run`], handing over each report as soon as it is ready.
    pub fn run_each(&self, mut emit: impl FnMut(CheckReport)) -> Result<()> {
        for (l, lie) in &self.lie {
            emit(battery::prop13(l, lie)?);
        }
        for e in &self.hopf {
            let mut rep = battery::theorem01(&e.label, &e.hopf)?;
            check_truth(&mut rep, e);
            emit(rep);
        }
        for e in &self.hopf {
            if e.truth != Truth::NotIrreducible {
                emit(battery::prop11(&e.label, &e.hopf)?);
            }
        }
        for pr in &self.pairs {
            let label = format!("{} > {}", pr.h_label, pr.k_label);
            emit(battery::relprim(&label, &pr.h, &pr.k)?);
        }
        for t in &self.triples {
            let pr = &self.pairs[t.pair];
            let label = format!("{} > {} + {}", pr.h_label, pr.k_label, t.x_label);
            emit(battery::section3(&label, &pr.h, &pr.k, &t.x)?);
        }
        Ok(())
    }
}

fn check_truth(rep: &mut CheckReport, e: &HopfEntry) {
    let conds = [
        "(i) semisimple",
        "(ii) commutative semisimple",
        "(iii) split form of k^G, G a p-group",
        "(iv) P(H) torus",
    ];
    let expected = match e.truth {
        Truth::NotIrreducible => {
            if rep.status != Status::RejectedHypothesis {
                rep.fail("catalog truth table", "expected rejected-hypothesis");
            }
            return;
        }
        Truth::AllTrue => true,
        Truth::AllFalse => false,
    };
    for c in conds {
        if let Some(Some(v)) = rep.get(c) {
            if v != expected {
                rep.fail("catalog truth table", format!("{c} = {v}"));
            }
        }
    }
    if let Some(m) = e.splitting_degree {
        if rep.get_fact("splitting degree") != Some(m.to_string().as_str()) {
            rep.fail("catalog truth table", format!("splitting degree should be {m}"));
        }
    }
}
