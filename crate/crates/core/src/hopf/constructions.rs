use std::sync::Arc;

use super::HopfSC;
use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{gf, vector, Embedding, Fe, FieldCtx, MatF};

impl HopfSC {
    /// The one-dimensional Hopf algebra k.
    pub fn trivial(ctx: &Arc<FieldCtx>) -> HopfSC {
        let alg = AlgebraSC::new(ctx, 1, vec![Fe::ONE], vec![Fe::ONE]).expect("1-dim");
        HopfSC::from_fns(alg, |_| vec![(0, 0, Fe::ONE)], vec![Fe::ONE], |_| vec![Fe::ONE])
            .expect("1-dim")
    }

    /// k[z]/(z^d) with z primitive; d must be a power of p so that z^d is
    /// primitive too. Basis 1, z, …, z^{d−1}.
    pub fn truncated_primitive(ctx: &Arc<FieldCtx>, d: usize) -> Result<HopfSC> {
        let p = ctx.p() as usize;
        let mut pp = 1;
        while pp < d {
            pp *= p;
        }
        if pp != d {
            return Err(Error::Invalid {
                what: "truncated polynomial Hopf algebra",
                detail: format!("{d} is not a power of {p}"),
            });
        }
        let mut f = vec![Fe::ZERO; d + 1];
        f[d] = Fe::ONE;
        let alg = AlgebraSC::from_polynomial(ctx, &f)?;
        let binom = binomials_mod(d, ctx.p());
        HopfSC::from_fns(
            alg,
            |i| {
                (0..=i)
                    .filter_map(|j| {
                        let c = binom[i][j];
                        (c != 0).then(|| (j, i - j, Fe(c)))
                    })
                    .collect()
            },
            vector::unit(d, 0),
            |i| {
                let sign = if i % 2 == 0 { Fe::ONE } else { ctx.neg(Fe::ONE) };
                let mut v = vector::zeros(d);
                v[i] = sign;
                v
            },
        )
    }

    /// H1 ⊗ H2 with basis e_i ⊗ f_j at index i·dim H2 + j.
    pub fn tensor(&self, other: &HopfSC) -> Result<HopfSC> {
        let alg = self.alg.tensor(&other.alg)?;
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 * n2;
        let ctx = self.ctx().clone();
        let eps = vector::tensor(&ctx, &self.eps, &other.eps);
        HopfSC::from_fns(
            alg,
            |i| {
                let (i1, i2) = (i / n2, i % n2);
                let mut terms = Vec::new();
                for &(a, b, c) in self.delta_terms(i1) {
                    for &(u, v, d) in other.delta_terms(i2) {
                        let left = a as usize * n2 + u as usize;
                        let right = b as usize * n2 + v as usize;
                        terms.push((left, right, ctx.mul(c, d)));
                    }
                }
                terms
            },
            eps,
            |i| {
                vector::tensor(
                    &ctx,
                    &self.antipode.column(i / n2),
                    &other.antipode.column(i % n2),
                )
            },
        )
        .inspect(|h| {
            debug_assert_eq!(h.dim(), n);
        })
    }

    /// Extension of scalars to GF(p^m').
    pub fn base_change(&self, m2: u32) -> Result<HopfSC> {
        let to = gf(self.ctx().p(), m2)?;
        let e = Embedding::new(self.ctx(), &to)?;
        let alg = self.alg.base_change_along(&e)?;
        let map = |m: &MatF| {
            MatF::from_raw(&to, m.rows(), m.cols(), e.map_vec(m.data())).expect("shape")
        };
        HopfSC::new(alg, map(&self.delta), e.map_vec(&self.eps), map(&self.antipode))
    }
}

/// Binomial coefficients C(i, j) mod p for 0 ≤ j ≤ i < n.
pub(crate) fn binomials_mod(n: usize, p: u64) -> Vec<Vec<u32>> {
    let p = p as u32;
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![1u32; i + 1];
        for j in 1..i {
            row[j] = (rows[i - 1][j - 1] + rows[i - 1][j]) % p;
        }
        rows.push(row);
    }
    rows
}
