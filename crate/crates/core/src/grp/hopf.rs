use std::sync::Arc;

use super::FiniteGroup;
use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{gf, vector, Fe, FieldCtx, MatF, Subspace};
use crate::hopf::HopfSC;

/// kG: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_hopf(g: &FiniteGroup, ctx: &Arc<FieldCtx>) -> HopfSC {
    let n = g.order();
    let alg = AlgebraSC::from_fn(ctx, n, vector::unit(n, g.identity()), |a, b| {
        vector::unit(n, g.mul(a, b))
    })
    .expect("square table");
    HopfSC::from_fns(alg, |i| vec![(i, i, Fe::ONE)], vec![Fe::ONE; n], |i| {
        vector::unit(n, g.inv(i))
    })
    .expect("shapes")
}

/// k^G on the indicator functions e_g: pointwise product, Δe_g = Σ_{ab=g} e_a⊗e_b.
pub fn dual_group_hopf(g: &FiniteGroup, ctx: &Arc<FieldCtx>) -> HopfSC {
    let n = g.order();
    let alg = AlgebraSC::from_fn(ctx, n, vec![Fe::ONE; n], |a, b| {
        if a == b {
            vector::unit(n, a)
        } else {
            vector::zeros(n)
        }
    })
    .expect("square table");
    let mut splits = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            splits[g.mul(a, b)].push((a, b, Fe::ONE));
        }
    }
    HopfSC::from_fns(
        alg,
        |i| std::mem::take(&mut splits[i]),
        vector::unit(n, g.identity()),
        |i| vector::unit(n, g.inv(i)),
    )
    .expect("shapes")
}

/// The image of k^{G/N} in k^G: functions constant on the cosets.
pub fn quotient_pullback(g: &FiniteGroup, cosets: &[usize], ctx: &Arc<FieldCtx>) -> Subspace {
    let n = g.order();
    let count = cosets.iter().copied().max().map_or(0, |c| c + 1);
    let vecs = (0..count)
        .map(|c| {
            (0..n)
                .map(|x| if cosets[x] == c { Fe::ONE } else { Fe::ZERO })
                .collect()
        })
        .collect();
    Subspace::span(ctx, n, vecs)
}

/// The GF(p)-form {f : G → GF(p^m) | f(σg) = f(g)^p} of k^G.
///
/// Each σ-orbit of size d contributes GF(p^d): for g the orbit's first
/// element and β in a GF(p)-basis of GF(p^d), the function σ^k g ↦ β^{p^k}.
pub fn galois_twisted_dual(
    g: &FiniteGroup,
    sigma: &[usize],
    p: u64,
    m: u32,
) -> Result<HopfSC> {
    if !g.is_automorphism(sigma) {
        return Err(Error::Invalid {
            what: "Galois action",
            detail: "not an automorphism".into(),
        });
    }
    let n = g.order();
    if (0..n).any(|x| (0..m).fold(x, |y, _| sigma[y]) != x) {
        return Err(Error::Invalid {
            what: "Galois action",
            detail: format!("order does not divide {m}"),
        });
    }
    let big = gf(p, m)?;
    let small = gf(p, 1)?;

    let mut seen = vec![false; n];
    let mut funcs: Vec<Vec<Fe>> = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut x = sigma[start];
        while x != start {
            seen[x] = true;
            orbit.push(x);
            x = sigma[x];
        }
        for beta in subfield_basis(&big, orbit.len() as u32) {
            let mut f = vector::zeros(n);
            let mut v = beta;
            for &y in &orbit {
                f[y] = v;
                v = big.frobenius(v);
            }
            funcs.push(f);
        }
    }

    // coordinates of a GF(p^m)-valued function in the GF(p)-basis `funcs`
    let b = MatF::from_columns(&big, n, &funcs)?;
    let binv = b.inverse().expect("the forms span k^G over GF(p^m)");
    let to_small = |v: Vec<Fe>| -> Result<Vec<Fe>> {
        v.into_iter()
            .map(|c| {
                if c.0 < p as u32 {
                    Ok(c)
                } else {
                    Err(Error::Invalid {
                        what: "Galois action",
                        detail: "structure constants leave GF(p)".into(),
                    })
                }
            })
            .collect()
    };

    let mut table = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for c in 0..n {
            let prod: Vec<Fe> = (0..n).map(|x| big.mul(funcs[a][x], funcs[c][x])).collect();
            table.extend(to_small(binv.apply(&prod))?);
        }
    }
    let unit = to_small(binv.apply(&vec![Fe::ONE; n]))?;
    let alg = AlgebraSC::new(&small, n, table, unit)?;

    // Δf(x, y) = f(xy), expanded in funcs ⊗ funcs via binv ⊗ binv
    let mut delta = MatF::zeros(&small, n * n, n);
    for (i, f) in funcs.iter().enumerate() {
        let mut w = vector::zeros(n * n);
        for x in 0..n {
            for y in 0..n {
                w[x * n + y] = f[g.mul(x, y)];
            }
        }
        let w = to_small(crate::hopf::tensor_apply(&big, &binv, &w))?;
        for (k, c) in w.into_iter().enumerate() {
            delta.set(k, i, c);
        }
    }
    let eps = to_small(funcs.iter().map(|f| f[g.identity()]).collect())?;
    let mut s = MatF::zeros(&small, n, n);
    for (i, f) in funcs.iter().enumerate() {
        let sf: Vec<Fe> = (0..n).map(|x| f[g.inv(x)]).collect();
        for (k, c) in to_small(binv.apply(&sf))?.into_iter().enumerate() {
            s.set(k, i, c);
        }
    }
    HopfSC::new(alg, delta, eps, s)
}

/// A GF(p)-basis of the subfield GF(p^d) ⊆ ctx, chosen greedily in element order.
fn subfield_basis(ctx: &Arc<FieldCtx>, d: u32) -> Vec<Fe> {
    let p = ctx.p() as u32;
    let m = ctx.degree() as usize;
    let prime = gf(ctx.p(), 1).expect("prime field");
    let mut chosen: Vec<Fe> = Vec::new();
    let mut rows: Vec<Vec<Fe>> = Vec::new();
    for x in ctx.elements() {
        if chosen.len() == d as usize {
            break;
        }
        if (0..d).fold(x, |y, _| ctx.frobenius(y)) != x || x.is_zero() {
            continue;
        }
        let coeffs: Vec<Fe> = ctx.coeffs(x).into_iter().map(|c| Fe(c % p)).collect();
        let mut trial = rows.clone();
        trial.push(coeffs);
        let rank = MatF::from_rows(&prime, m, &trial).expect("shape").rank();
        if rank == trial.len() {
            rows = trial;
            chosen.push(x);
        }
    }
    chosen
}
