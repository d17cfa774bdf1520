//! Restricted Lie algebra tables over GF(p): exhaustive and seeded samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{gf, vector, Fe, FieldCtx, MatF};
use crate::rlie::RestrictedLie;
use std::sync::Arc;

/// Largest number of raw candidate tables the exhaustive mode will scan.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Draws per requested sample before giving up.
const SAMPLE_ATTEMPTS: usize = 10_000;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn from_upper(ctx: &Arc<FieldCtx>, n: usize, upper: &[Vec<Fe>], pmap: Vec<Vec<Fe>>) -> RestrictedLie {
    let mut bracket = vec![vector::zeros(n); n * n];
    for (&(i, j), v) in pairs(n).iter().zip(upper) {
        bracket[i * n + j] = v.clone();
        bracket[j * n + i] = vector::neg(ctx, v);
    }
    RestrictedLie::new(ctx, n, bracket, pmap).expect("shapes")
}

/// Every valid (bracket, p-map) table of dimension n over GF(p), in
/// lexicographic order of the upper bracket entries followed by the p-map.
pub fn enumerate_rlie(p: u64, n: usize) -> Result<Vec<RestrictedLie>> {
    let ctx = gf(p, 1)?;
    let np = pairs(n).len();
    let digits = (np + n) * n;
    let total = p.checked_pow(digits as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT);
    let Some(_) = total else {
        return Err(Error::Invalid {
            what: "enumeration",
            detail: format!("p={p} n={n} is too large to enumerate; use sampling"),
        });
    };
    let bracket_digits = np * n;
    let mut out = Vec::new();
    let mut bracket_counter = vec![0u32; bracket_digits];
    loop {
        let upper: Vec<Vec<Fe>> = bracket_counter.chunks(n.max(1)).map(to_fe).collect();
        let upper = if np == 0 { Vec::new() } else { upper };
        let lie = from_upper(&ctx, n, &upper, vec![vector::zeros(n); n]);
        if lie_axioms_hold(&lie) {
            let mut pcounter = vec![0u32; n * n];
            loop {
                let pmap: Vec<Vec<Fe>> = pcounter.chunks(n.max(1)).map(to_fe).collect();
                let pmap = if n == 0 { Vec::new() } else { pmap };
                let cand = from_upper(&ctx, n, &upper, pmap);
                if cand.is_valid() {
                    out.push(cand);
                }
                if !step(&mut pcounter, p as u32) {
                    break;
                }
            }
        }
        if !step(&mut bracket_counter, p as u32) {
            break;
        }
    }
    Ok(out)
}

fn to_fe(c: &[u32]) -> Vec<Fe> {
    c.iter().map(|&x| Fe(x)).collect()
}

/// Lexicographic successor, last digit fastest; false after the last value.
fn step(counter: &mut [u32], base: u32) -> bool {
    for d in counter.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn lie_axioms_hold(l: &RestrictedLie) -> bool {
    l.validate()
        .witnesses
        .iter()
        .all(|w| w.condition != "jacobi" && w.condition != "antisymmetry")
}

/// `count` valid algebras drawn from a ChaCha8 stream seeded with `seed`:
/// a uniform bracket satisfying Jacobi, then for each basis vector a uniform
/// solution v of ad(v) = (ad x_i)^p.
pub fn sample_rlie(p: u64, n: usize, seed: u64, count: usize) -> Result<Vec<RestrictedLie>> {
    let ctx = gf(p, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let np = pairs(n).len();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > SAMPLE_ATTEMPTS * count.max(1) {
            return Err(Error::Invalid {
                what: "sampling",
                detail: format!("only {} valid tables after {attempts} draws", out.len()),
            });
        }
        let upper: Vec<Vec<Fe>> = (0..np)
            .map(|_| (0..n).map(|_| Fe(rng.gen_range(0..p as u32))).collect())
            .collect();
        let lie = from_upper(&ctx, n, &upper, vec![vector::zeros(n); n]);
        if !lie_axioms_hold(&lie) {
            continue;
        }
        let Some(pmap) = random_pmap(&lie, &mut rng) else {
            continue;
        };
        let cand = from_upper(&ctx, n, &upper, pmap);
        if cand.is_valid() {
            out.push(cand);
        }
    }
    Ok(out)
}

fn random_pmap(l: &RestrictedLie, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<Fe>>> {
    let ctx = l.ctx().clone();
    let n = l.dim();
    let p = ctx.p();
    let flat = |m: &MatF| m.data().to_vec();
    let ads: Vec<Vec<Fe>> = (0..n).map(|i| flat(&l.ad(&vector::unit(n, i)))).collect();
    let center = MatF::from_columns(&ctx, n * n, &ads).expect("lengths").kernel();
    let mut pmap = Vec::with_capacity(n);
    for i in 0..n {
        let target = flat(&l.ad(&vector::unit(n, i)).pow(p).expect("square"));
        let mut cols = ads.clone();
        cols.push(target);
        let ker = MatF::from_columns(&ctx, n * n, &cols).expect("lengths").kernel();
        let w = ker.basis().iter().find(|w| !w[n].is_zero())?;
        let scale = ctx.neg(ctx.inv(w[n]).expect("nonzero"));
        let mut v = vector::scale(&ctx, scale, &w[..n]);
        for z in center.basis() {
            let c = Fe(rng.gen_range(0..p as u32));
            vector::axpy(&ctx, &mut v, c, z);
        }
        pmap.push(v);
    }
    Some(pmap)
}
