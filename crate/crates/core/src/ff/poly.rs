//! Univariate polynomials over a [`FieldCtx`], coefficients low to high.

use crate::ff::field::{Fe, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Fe>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Fe::ONE])
    }

    /// T - c
    pub fn linear(ctx: &FieldCtx, c: Fe) -> Self {
        Poly(vec![ctx.neg(c), Fe::ONE])
    }

    pub fn from_coeffs(mut c: Vec<Fe>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.0
    }

    pub fn leading(&self) -> Fe {
        self.0.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let c = (0..n)
            .map(|i| {
                let a = self.0.get(i).copied().unwrap_or(Fe::ZERO);
                let b = other.0.get(i).copied().unwrap_or(Fe::ZERO);
                ctx.add(a, b)
            })
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Fe::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                c[i + j] = ctx.add(c[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, ctx: &FieldCtx, s: Fe) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| ctx.mul(a, s)).collect())
    }

    pub fn monic(&self, ctx: &FieldCtx) -> Poly {
        match ctx.inv(self.leading()) {
            Ok(inv) => self.scale(ctx, inv),
            Err(_) => Poly::zero(),
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, ctx: &FieldCtx, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = ctx.inv(d.leading()).expect("nonzero leading coefficient");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), Poly::from_coeffs(r));
        }
        let mut q = vec![Fe::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = ctx.mul(r[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            q[top - dd] = c;
            for (i, &b) in d.0.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = ctx.sub(r[idx], ctx.mul(c, b));
            }
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn gcd(ctx: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(ctx, &b).1;
            a = b;
            b = r;
        }
        a.monic(ctx)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        self.0
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// Roots in the coefficient field, by exhaustive evaluation.
    pub fn roots(&self, ctx: &FieldCtx) -> Vec<Fe> {
        ctx.elements().filter(|&x| self.eval(ctx, x).is_zero()).collect()
    }
}
