//! u(L) on the PBW monomials x_1^{a_1} ⋯ x_n^{a_n}, 0 ≤ a_i < p, with
//! x^a at index Σ a_i p^{i−1}.

use super::RestrictedLie;
use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{vector, Fe, FieldCtx, MatF};
use crate::hopf::HopfSC;

struct Straightener<'a> {
    ctx: &'a FieldCtx,
    l: &'a RestrictedLie,
    p: usize,
    dim: usize,
    /// x_k · x^a at k·dim + index(a)
    memo: Vec<Option<Vec<Fe>>>,
}

impl<'a> Straightener<'a> {
    fn new(l: &'a RestrictedLie) -> Self {
        let p = l.ctx.p() as usize;
        let dim = p.pow(l.n as u32);
        Straightener {
            ctx: &l.ctx,
            l,
            p,
            dim,
            memo: vec![None; l.n * dim],
        }
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        (0..self.l.n)
            .map(|_| {
                let a = idx % self.p;
                idx /= self.p;
                a
            })
            .collect()
    }

    fn stride(&self, i: usize) -> usize {
        self.p.pow(i as u32)
    }

    /// x_k times the normal monomial at `idx`, in normal form.
    fn gen_times(&mut self, k: usize, idx: usize) -> Vec<Fe> {
        if let Some(v) = &self.memo[k * self.dim + idx] {
            return v.clone();
        }
        let a = self.exponents(idx);
        let out = match a.iter().position(|&e| e > 0) {
            Some(j) if j < k => {
                // x_k x_j = x_j x_k + [x_k, x_j], with x^a = x_j · m
                let m = idx - self.stride(j);
                let inner = self.gen_times(k, m);
                let mut out = self.gen_times_vec(j, &inner);
                let br = self.l.bracket[k * self.l.n + j].clone();
                for (l, &c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        let t = self.gen_times(l, m);
                        vector::axpy(self.ctx, &mut out, c, &t);
                    }
                }
                out
            }
            Some(j) if j == k && a[k] + 1 == self.p => {
                // x_k^p = x_k^{[p]}
                let rest = idx - a[k] * self.stride(k);
                let pk = self.l.pmap[k].clone();
                let mut out = vector::zeros(self.dim);
                for (l, &c) in pk.iter().enumerate() {
                    if !c.is_zero() {
                        let t = self.gen_times(l, rest);
                        vector::axpy(self.ctx, &mut out, c, &t);
                    }
                }
                out
            }
            _ => vector::unit(self.dim, idx + self.stride(k)),
        };
        self.memo[k * self.dim + idx] = Some(out.clone());
        out
    }

    fn gen_times_vec(&mut self, k: usize, v: &[Fe]) -> Vec<Fe> {
        let mut out = vector::zeros(self.dim);
        for (idx, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                let t = self.gen_times(k, idx);
                vector::axpy(self.ctx, &mut out, c, &t);
            }
        }
        out
    }

    /// x^a · x^b: apply x_n^{a_n}, …, x_1^{a_1} from the left.
    fn product(&mut self, a: usize, b: usize) -> Vec<Fe> {
        let e = self.exponents(a);
        let mut v = vector::unit(self.dim, b);
        for i in (0..self.l.n).rev() {
            for _ in 0..e[i] {
                v = self.gen_times_vec(i, &v);
            }
        }
        v
    }
}

impl RestrictedLie {
    /// The restricted enveloping algebra with Δx = x⊗1 + 1⊗x on L.
    pub fn env(&self) -> Result<&HopfSC> {
        self.env.get_or_try_init(|| self.build_env())
    }

    fn build_env(&self) -> Result<HopfSC> {
        let rep = self.validate();
        if let Some(w) = rep.witnesses.first() {
            return Err(Error::Invalid {
                what: "restricted Lie algebra",
                detail: format!("{}: {}", w.condition, w.detail),
            });
        }
        let mut st = Straightener::new(self);
        let dim = st.dim;
        let p = st.p;
        let ctx = self.ctx.clone();
        let alg = AlgebraSC::from_fn(&ctx, dim, vector::unit(dim, 0), |a, b| st.product(a, b))?;

        let binom = crate::hopf::binomials_mod(p, ctx.p());
        let st = Straightener::new(self);
        let exps: Vec<Vec<usize>> = (0..dim).map(|i| st.exponents(i)).collect();
        let strides: Vec<usize> = (0..self.n).map(|i| st.stride(i)).collect();
        let index = |e: &[usize]| e.iter().zip(&strides).map(|(a, s)| a * s).sum::<usize>();
        let neg_one = ctx.neg(Fe::ONE);
        let antipode = |i: usize| -> Vec<Fe> {
            // S(x^a) = (−1)^{|a|} x_n^{a_n} ⋯ x_1^{a_1}
            let e = &exps[i];
            let mut v = vector::unit(dim, 0);
            for k in 0..self.n {
                v = alg.mul(&vector::unit(dim, e[k] * strides[k]), &v);
            }
            let deg: usize = e.iter().sum();
            if deg % 2 == 1 {
                v = vector::scale(&ctx, neg_one, &v);
            }
            v
        };
        let antipode: Vec<Vec<Fe>> = (0..dim).map(antipode).collect();
        HopfSC::from_fns(
            alg.clone(),
            |i| {
                // Δx^a = Σ_{b ≤ a} Π C(a_k, b_k) x^b ⊗ x^{a−b}
                let a = &exps[i];
                let mut terms = Vec::new();
                let mut b = vec![0usize; self.n];
                loop {
                    let c = (0..self.n).fold(1u32, |acc, k| {
                        acc * binom[a[k]][b[k]] % ctx.p() as u32
                    });
                    if c != 0 {
                        let rest: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                        terms.push((index(&b), index(&rest), Fe(c)));
                    }
                    // next b ≤ a
                    let mut k = 0;
                    while k < self.n && b[k] == a[k] {
                        b[k] = 0;
                        k += 1;
                    }
                    if k == self.n {
                        break;
                    }
                    b[k] += 1;
                }
                terms
            },
            vector::unit(dim, 0),
            |i| antipode[i].clone(),
        )
    }

    /// Column i is x_i inside u(L).
    pub fn embedding_into_env(&self) -> MatF {
        let p = self.ctx.p() as usize;
        let dim = p.pow(self.n as u32);
        let cols: Vec<Vec<Fe>> = (0..self.n).map(|i| vector::unit(dim, p.pow(i as u32))).collect();
        MatF::from_columns(&self.ctx, dim, &cols).expect("lengths")
    }

    /// z^{[p]} as the p-th power of z in u(L).
    pub fn pmap(&self, z: &[Fe]) -> Result<Vec<Fe>> {
        let env = self.env()?;
        let emb = self.embedding_into_env();
        let zp = env.alg().pow(&emb.apply(z), self.ctx.p());
        let p = self.ctx.p() as usize;
        let back: Vec<Fe> = (0..self.n).map(|i| zp[p.pow(i as u32)]).collect();
        if emb.apply(&back) != zp {
            return Err(Error::Invalid {
                what: "restricted enveloping algebra",
                detail: "p-th power leaves L".into(),
            });
        }
        Ok(back)
    }
}

impl HopfSC {
    /// P(H) on its canonical basis, with commutator bracket and p-th power.
    pub fn primitives_restricted(&self) -> Result<RestrictedLie> {
        let prim = self.primitives();
        let basis = prim.basis();
        let d = basis.len();
        let alg = self.alg();
        let coords = |v: Vec<Fe>| {
            prim.coords(&v).ok_or(Error::Invalid {
                what: "primitives",
                detail: "not closed".into(),
            })
        };
        let mut bracket = Vec::with_capacity(d * d);
        for x in basis {
            for y in basis {
                bracket.push(coords(alg.commutator(x, y))?);
            }
        }
        let pmap = basis
            .iter()
            .map(|x| coords(alg.pow(x, self.ctx().p())))
            .collect::<Result<_>>()?;
        RestrictedLie::new(self.ctx(), d, bracket, pmap)
    }
}
