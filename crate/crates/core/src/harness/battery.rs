//! Theorem batteries. Each computes its conditions independently and passes
//! when they agree.

use crate::error::{Error, Result};
use crate::ff::{gf, vector, Fe, Subspace};
use crate::grp::FiniteGroup;
use crate::hopf::HopfSC;
use crate::report::{CheckReport, Status};
use crate::rlie::{NilpotentWitness, RestrictedLie, DEFAULT_WITNESS_DEGREE};

fn require_valid(h: &HopfSC) -> Result<()> {
    let rep = h.validate();
    match rep.witnesses.first() {
        None => Ok(()),
        Some(w) => Err(Error::Invalid {
            what: "Hopf algebra",
            detail: format!("{}: {}", w.condition, w.detail),
        }),
    }
}

fn raw(v: &[Fe]) -> String {
    format!("{:?}", vector::raw(v))
}

/// Sets the status from a list of verdicts that must all be equal.
fn close_equivalence(rep: &mut CheckReport, names: &[&str]) {
    let vals: Vec<Option<bool>> = names.iter().map(|n| rep.get(n).flatten()).collect();
    let decided: Vec<bool> = vals.iter().flatten().copied().collect();
    if decided.windows(2).any(|w| w[0] != w[1]) {
        let detail = names
            .iter()
            .zip(&vals)
            .map(|(n, v)| format!("{n}={}", v.map_or("?".into(), |b| b.to_string())))
            .collect::<Vec<_>>()
            .join(" ");
        rep.fail("disagreement", detail);
    } else if decided.len() < names.len() && rep.status == Status::Pass {
        rep.status = Status::Inconclusive;
    }
}

/// Sets the status from verdicts that must all hold; undecided ones are skipped.
fn close_all_true(rep: &mut CheckReport) {
    let failed: Vec<String> = rep
        .verdicts
        .iter()
        .filter(|v| v.value == Some(false))
        .map(|v| v.name.clone())
        .collect();
    for name in failed {
        rep.fail(name, "condition does not hold");
    }
}

/// Grouplikes of the dual, as a group under the dual's multiplication.
pub fn dual_grouplike_group(h: &HopfSC) -> Result<FiniteGroup> {
    let d = h.dual();
    let gl = d.grouplikes();
    let n = gl.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &gl {
        for b in &gl {
            let c = d.mul(a, b);
            let k = gl.binary_search_by_key(&vector::raw(&c), |g| vector::raw(g)).map_err(|_| {
                Error::Invalid {
                    what: "grouplikes",
                    detail: "not closed under multiplication".into(),
                }
            })?;
            table.push(k as u32);
        }
    }
    // put the unit first
    let unit = gl
        .iter()
        .position(|g| g.as_slice() == d.unit())
        .ok_or(Error::Invalid {
            what: "grouplikes",
            detail: "unit missing".into(),
        })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.swap(0, unit);
    let mut pos = vec![0; n];
    for (i, &o) in order.iter().enumerate() {
        pos[o] = i;
    }
    let t = (0..n * n)
        .map(|k| pos[table[order[k / n] * n + order[k % n]] as usize] as u32)
        .collect();
    FiniteGroup::from_table(n, t)
}

/// For irreducible H, whether (i) semisimple, (ii) commutative and
/// semisimple, (iii) split over GF(p^{m*}) as k^G for a p-group G, (iv) P(H)
/// a torus. Non-irreducible input is rejected.
pub fn theorem01(label: &str, h: &HopfSC) -> Result<CheckReport> {
    require_valid(h)?;
    let mut rep = CheckReport::new(label, "theorem01");
    let irreducible = h.is_irreducible();
    rep.verdict("irreducible", Some(irreducible));
    if !irreducible {
        rep.fact("coradical dim", h.coradical_dim());
        rep.status = Status::RejectedHypothesis;
        return Ok(rep);
    }
    let p = h.ctx().p();
    let alg = h.alg();
    let semisimple = alg.is_semisimple();
    rep.verdict("(i) semisimple", Some(semisimple));
    let commutative = alg.is_commutative();
    rep.verdict("(ii) commutative semisimple", Some(commutative && semisimple));

    let split = if commutative && semisimple {
        let m = alg.splitting_degree()?;
        rep.fact("splitting degree", m);
        let hm = if m == 1 { h.clone() } else { h.base_change(h.ctx().degree() * m)? };
        let g = dual_grouplike_group(&hm)?;
        rep.fact("dual grouplikes", g.order());
        let ok = g.order() == h.dim() && g.validate().is_valid() && g.is_p_group(p as usize);
        Some(ok)
    } else {
        Some(false)
    };
    rep.verdict("(iii) split form of k^G, G a p-group", split);

    let l = h.primitives_restricted()?;
    rep.fact("dim P(H)", l.dim());
    let torus = if h.ctx().is_prime_field() {
        Some(l.is_torus()?.torus)
    } else {
        // over GF(p^m) the p-map is semilinear; test on the prime-field form
        None
    };
    rep.verdict("(iv) P(H) torus", torus);
    if let Ok(NilpotentWitness::Found { m, z }) = l.nilpotent_witness(1) {
        if torus == Some(false) {
            rep.fact("nilpotent primitive", format!("{} over GF({}^{m})", raw(&z), p));
        }
    }
    close_equivalence(
        &mut rep,
        &[
            "(i) semisimple",
            "(ii) commutative semisimple",
            "(iii) split form of k^G, G a p-group",
            "(iv) P(H) torus",
        ],
    );
    Ok(rep)
}

/// Torus criteria for L: (a) every element semisimple in u(L), (b) abelian
/// with bijective p-map, (c) no nonzero z with z^{[p]} = 0 over the closure,
/// (d) u(L) semisimple, (e) u(L) commutative and semisimple.
pub fn prop13(label: &str, l: &RestrictedLie) -> Result<CheckReport> {
    let mut rep = CheckReport::new(label, "prop13");
    let v = l.validate();
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Invalid {
            what: "restricted Lie algebra",
            detail: format!("{}: {}", w.condition, w.detail),
        });
    }
    let t = l.is_torus()?;
    rep.verdict("(a) all elements semisimple", t.exhaustive);
    rep.verdict("(b) abelian, p-map bijective", Some(t.torus));
    let c = match l.nilpotent_witness(DEFAULT_WITNESS_DEGREE)? {
        NilpotentWitness::Found { m, z } => {
            rep.fact("witness", format!("z = {} over GF({}^{m})", raw(&z), l.ctx().p()));
            Some(false)
        }
        NilpotentWitness::CertifiedNone => {
            rep.fact("witness", "none (determinant)");
            Some(true)
        }
        NilpotentWitness::NotFound { searched_up_to } => {
            rep.fact("witness", format!("none found up to degree {searched_up_to}"));
            None
        }
    };
    rep.verdict("(c) no p-nilpotent element", c);
    let u = l.env()?;
    let ss = u.alg().is_semisimple();
    rep.verdict("(d) u(L) semisimple", Some(ss));
    rep.verdict("(e) u(L) commutative semisimple", Some(ss && u.alg().is_commutative()));
    close_equivalence(
        &mut rep,
        &[
            "(a) all elements semisimple",
            "(b) abelian, p-map bijective",
            "(c) no p-nilpotent element",
            "(d) u(L) semisimple",
            "(e) u(L) commutative semisimple",
        ],
    );
    Ok(rep)
}

/// Restricted Lie subalgebra generated by `gens`: closure under bracket and p-map.
fn restricted_closure(l: &RestrictedLie, gens: &[Vec<Fe>]) -> Result<Subspace> {
    let n = l.dim();
    let mut v = Subspace::span(l.ctx(), n, gens.to_vec());
    loop {
        let mut vecs = v.basis().to_vec();
        for x in v.basis() {
            vecs.push(l.pmap(x)?);
            for y in v.basis() {
                vecs.push(l.bracket(x, y));
            }
        }
        let w = Subspace::span(l.ctx(), n, vecs);
        if w == v {
            return Ok(v);
        }
        v = w;
    }
}

/// (gr H)* = u(L') with L' positively graded and generated
/// in degree one, so dim H = p^{dim L'}; and u(P(H)) = H when H is
/// commutative, semisimple and generated by P(H).
pub fn prop11(label: &str, h: &HopfSC) -> Result<CheckReport> {
    require_valid(h)?;
    let mut rep = CheckReport::new(label, "prop11");
    if !h.is_irreducible() {
        rep.verdict("irreducible", Some(false));
        rep.status = Status::RejectedHypothesis;
        return Ok(rep);
    }
    let p = h.ctx().p() as usize;
    let g = h.gr()?;
    let dual = g.hopf.dual();
    let prim = dual.primitives();
    let n = h.dim();
    let ctx = h.ctx().clone();
    let top = g.top_degree();
    let homogeneous: Vec<Subspace> = (0..=top)
        .map(|d| {
            let comp = Subspace::span(
                &ctx,
                n,
                g.component(d).into_iter().map(|i| vector::unit(n, i)).collect(),
            );
            prim.intersect(&comp).expect("same ambient")
        })
        .collect();
    let graded_dim: usize = homogeneous.iter().map(|s| s.dim()).sum();
    let positive = graded_dim == prim.dim() && homogeneous[0].is_zero();
    rep.verdict("L' positively graded", Some(positive));

    let l = dual.primitives_restricted()?;
    rep.fact("dim L'", l.dim());
    let degree_one: Vec<Vec<Fe>> = homogeneous
        .get(1)
        .map(|s| s.basis().iter().map(|x| prim.coords(x).expect("in P")).collect())
        .unwrap_or_default();
    let closure = restricted_closure(&l, &degree_one)?;
    rep.verdict("generated in degree 1", Some(closure.dim() == l.dim()));
    let law = (p as u64).checked_pow(l.dim() as u32) == Some(n as u64);
    rep.verdict("dim H = p^dim L'", Some(law));

    let alg = h.alg();
    let hp = h.primitives();
    let generated = alg.subalgebra_generated(hp.basis()).is_full();
    let split_case = alg.is_commutative() && alg.is_semisimple() && generated;
    let enveloping = if split_case {
        let lp = h.primitives_restricted()?;
        let u = lp.env()?;
        // x_i ↦ i-th primitive extends to u(P) → H; compare the PBW images
        let mut images = Vec::with_capacity(u.dim());
        for idx in 0..u.dim() {
            let mut v = h.unit().to_vec();
            let mut k = idx;
            for x in hp.basis() {
                let e = k % p;
                k /= p;
                v = alg.mul(&v, &alg.pow(x, e as u64));
            }
            images.push(v);
        }
        let span = Subspace::span(&ctx, n, images);
        Some(u.dim() == n && span.is_full())
    } else {
        None
    };
    rep.verdict("u(P(H)) = H", enveloping);
    close_all_true(&mut rep);
    Ok(rep)
}

/// Whether every nonzero primitive z of H has z^p ≠ 0, over the base field.
pub fn no_nilpotent_primitive(h: &HopfSC) -> Result<bool> {
    let l = h.primitives_restricted()?;
    Ok(!matches!(l.nilpotent_witness(1)?, NilpotentWitness::Found { .. }))
}

/// Whether K ≅ k^G for a p-group G: the dual of K is spanned by grouplikes
/// forming a p-group.
pub fn is_dual_of_p_group(h: &HopfSC, k: &Subspace) -> Result<bool> {
    let kk = h.restrict(k)?;
    let g = dual_grouplike_group(&kk)?;
    Ok(g.order() == kk.dim() && g.is_p_group(h.ctx().p() as usize))
}

/// P(H,K) for K ⊆ H: conjugation stability, the Hopf subalgebra it generates,
/// strict inclusion over K+, the H(1)_0 identity and centrality of K.
pub fn relprim(label: &str, h: &HopfSC, k: &Subspace) -> Result<CheckReport> {
    require_valid(h)?;
    h.check_hopf_subalgebra(k)?;
    let mut rep = CheckReport::new(label, "relprim");
    let rp = h.relative_primitives(k)?;
    let kplus = h.augmentation_of(k);
    rep.fact("dim K", k.dim());
    rep.fact("dim P(H,K)", rp.space.dim());

    let ctx = h.ctx().clone();
    let n = h.dim();
    let one = Subspace::span(&ctx, n, vec![h.unit().to_vec()]);
    let gl: Vec<Vec<Fe>> = h.grouplikes().into_iter().filter(|g| k.contains(g)).collect();
    let gspan = Subspace::span(&ctx, n, gl);
    let stable = h.is_conjugation_stable(&rp.space, &one) && h.is_conjugation_stable(&rp.space, &gspan);
    rep.verdict("conjugation stable", Some(stable));

    let gen = h.alg().subalgebra_generated(rp.space.basis());
    let hopf_sub = h.is_hopf_subalgebra(&gen) && gen.contains_space(k)?;
    rep.verdict("k<P(H,K)> Hopf subalgebra containing K", Some(hopf_sub));

    let proper = k.dim() < n;
    let irreducible = h.is_irreducible();
    let strict = (proper && irreducible).then(|| rp.space.dim() > kplus.dim());
    rep.verdict("P(H,K) strictly contains K+", strict);

    let w = h.first_wedge_bicoinvariants(k)?;
    rep.fact("dim H(1)_0", w.dim() - k.dim());
    rep.verdict("dim P(H,K)/K+ = dim H(1)_0", Some(rp.space.dim() - kplus.dim() == w.dim() - k.dim()));

    let hyp = is_dual_of_p_group(h, k)? && no_nilpotent_primitive(h)?;
    rep.fact("central-K hypotheses", hyp);
    let central = hyp.then(|| {
        let alg = h.alg();
        k.basis().iter().all(|a| {
            gen.basis().iter().all(|b| vector::is_zero(&alg.commutator(a, b)))
        })
    });
    rep.verdict("K central in k<P(H,K)>", central);
    close_all_true(&mut rep);
    Ok(rep)
}

/// The decomposition J ≅ K ⊗ Q for J generated by K and x ∈ P(H,K) ∖ K.
pub fn section3(label: &str, h: &HopfSC, k: &Subspace, x: &[Fe]) -> Result<CheckReport> {
    require_valid(h)?;
    h.check_hopf_subalgebra(k)?;
    if k.contains(x) {
        return Err(Error::ElementInSubalgebra);
    }
    let rp = h.relative_primitives(k)?;
    if !rp.space.contains(x) {
        return Err(Error::Invalid {
            what: "section3",
            detail: "x is not in P(H,K)".into(),
        });
    }
    let mut rep = CheckReport::new(label, "section3");
    let hyp = h.is_irreducible() && no_nilpotent_primitive(h)?;
    rep.fact("hypotheses", hyp);

    let mut gens = k.basis().to_vec();
    gens.push(x.to_vec());
    let jspace = h.hopf_subalgebra_generated(&gens);
    let j = h.restrict(&jspace)?;
    let ctx = h.ctx().clone();
    let kj = Subspace::span(
        &ctx,
        j.dim(),
        k.basis().iter().map(|v| jspace.coords(v).expect("K ⊆ J")).collect(),
    );
    let ideal = j.alg().product_space(&j.augmentation_of(&kj), &Subspace::full(&ctx, j.dim()));
    let q = j.hopf_quotient(&ideal)?;
    rep.fact("dim J", j.dim());
    rep.fact("dim Q", q.hopf.dim());
    rep.verdict("coinvariants = K", Some(j.coinvariants(&q) == kj));
    rep.verdict("dim J = dim K dim Q", Some(j.dim() == k.dim() * q.hopf.dim()));
    let xq = q.pi.apply(&jspace.coords(x).expect("x ∈ J"));
    let q_prims = q.hopf.primitives();
    let generated = q_prims.contains(&xq) && q.hopf.alg().subalgebra_generated(&[xq]).is_full();
    rep.verdict("Q generated by primitive pi(x)", Some(generated));
    rep.verdict("J semisimple", hyp.then(|| j.alg().is_semisimple()));
    close_all_true(&mut rep);
    Ok(rep)
}

/// Number of primitive idempotents of H after extending scalars by degree m.
pub fn idempotent_count_after(h: &HopfSC, m: u32) -> Result<usize> {
    let ext = gf(h.ctx().p(), h.ctx().degree() * m)?;
    let hm = if ext.degree() == h.ctx().degree() { h.clone() } else { h.base_change(ext.degree())? };
    Ok(hm.alg().primitive_idempotents()?.len())
}
