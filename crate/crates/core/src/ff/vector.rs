//! Coordinate vectors as plain `Vec<Fe>` slices.

use crate::ff::field::{Fe, FieldCtx};

pub fn zeros(n: usize) -> Vec<Fe> {
    vec![Fe::ZERO; n]
}

pub fn unit(n: usize, i: usize) -> Vec<Fe> {
    let mut v = zeros(n);
    v[i] = Fe::ONE;
    v
}

pub fn is_zero(v: &[Fe]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// acc += s·v
#[inline]
pub fn axpy(ctx: &FieldCtx, acc: &mut [Fe], s: Fe, v: &[Fe]) {
    if s.is_zero() {
        return;
    }
    if s == Fe::ONE {
        for (a, &b) in acc.iter_mut().zip(v) {
            if !b.is_zero() {
                *a = ctx.add(*a, b);
            }
        }
    } else {
        for (a, &b) in acc.iter_mut().zip(v) {
            if !b.is_zero() {
                *a = ctx.add(*a, ctx.mul(s, b));
            }
        }
    }
}

pub fn add(ctx: &FieldCtx, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| ctx.add(x, y)).collect()
}

pub fn sub(ctx: &FieldCtx, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| ctx.sub(x, y)).collect()
}

pub fn scale(ctx: &FieldCtx, s: Fe, a: &[Fe]) -> Vec<Fe> {
    a.iter().map(|&x| ctx.mul(s, x)).collect()
}

pub fn neg(ctx: &FieldCtx, a: &[Fe]) -> Vec<Fe> {
    a.iter().map(|&x| ctx.neg(x)).collect()
}

pub fn dot(ctx: &FieldCtx, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

/// Kronecker product; index (i, j) ↦ i·len(b) + j.
pub fn tensor(ctx: &FieldCtx, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let mut out = zeros(a.len() * b.len());
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i * b.len() + j] = ctx.mul(x, y);
        }
    }
    out
}

/// Raw packed values, for witnesses in reports.
pub fn raw(v: &[Fe]) -> Vec<u32> {
    v.iter().map(|x| x.0).collect()
}

/// Scales so the first nonzero entry is one.
pub fn normalize(ctx: &FieldCtx, v: &[Fe]) -> Vec<Fe> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(&lead) => scale(ctx, ctx.inv(lead).expect("nonzero"), v),
        None => v.to_vec(),
    }
}
