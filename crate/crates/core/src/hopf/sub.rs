use super::coalgebra::{in_tensor, tensor_sum_preimage};
use super::HopfSC;
use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{vector, Fe, MatF, Subspace};

/// A Hopf quotient H → H/I on the canonical complement of I.
#[derive(Clone, Debug)]
pub struct HopfQuotient {
    pub hopf: HopfSC,
    /// The projection as a (dim H/I) × (dim H) matrix.
    pub pi: MatF,
    pub representatives: Vec<usize>,
}

impl HopfSC {
    pub fn check_hopf_subalgebra(&self, v: &Subspace) -> Result<()> {
        let n = self.dim();
        if v.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.ambient_dim(),
            });
        }
        if !v.contains(self.unit()) {
            return Err(Error::NotHopfSubalgebra("unit is missing"));
        }
        for x in v.basis() {
            for y in v.basis() {
                if !v.contains(&self.mul(x, y)) {
                    return Err(Error::NotHopfSubalgebra("not closed under multiplication"));
                }
            }
            if !in_tensor(&self.coproduct(x), n, v, v) {
                return Err(Error::NotHopfSubalgebra("coproduct leaves V⊗V"));
            }
            if !v.contains(&self.antipode(x)) {
                return Err(Error::NotHopfSubalgebra("not stable under the antipode"));
            }
        }
        Ok(())
    }

    pub fn is_hopf_subalgebra(&self, v: &Subspace) -> bool {
        self.check_hopf_subalgebra(v).is_ok()
    }

    /// Smallest subcoalgebra containing x: the span of the middle slices
    /// (f ⊗ id ⊗ g)Δ²(x).
    pub fn subcoalgebra_generated(&self, x: &[Fe]) -> Subspace {
        let n = self.dim();
        let ctx = self.ctx().clone();
        let mut d2 = vector::zeros(n * n * n);
        let w = self.coproduct(x);
        for (ab, &c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for &(u, v, d) in self.delta_terms(a) {
                let k = (u as usize * n + v as usize) * n + b;
                d2[k] = ctx.add(d2[k], ctx.mul(c, d));
            }
        }
        let mut slices = Vec::new();
        for a in 0..n {
            for c in 0..n {
                let s: Vec<Fe> = (0..n).map(|b| d2[(a * n + b) * n + c]).collect();
                if !vector::is_zero(&s) {
                    slices.push(s);
                }
            }
        }
        Subspace::span(&ctx, n, slices)
    }

    /// Smallest Hopf subalgebra containing S: alternate multiplicative,
    /// coalgebra and antipode closure until nothing changes.
    pub fn hopf_subalgebra_generated(&self, s: &[Vec<Fe>]) -> Subspace {
        let n = self.dim();
        let ctx = self.ctx().clone();
        let mut vecs = vec![self.unit().to_vec()];
        vecs.extend(s.iter().cloned());
        let mut v = Subspace::span(&ctx, n, vecs);
        loop {
            let mut w = v.sum(&self.alg.product_space(&v, &v)).expect("ambient");
            for x in w.basis().to_vec() {
                w = w.sum(&self.subcoalgebra_generated(&x)).expect("ambient");
            }
            let images: Vec<Vec<Fe>> = w.basis().iter().map(|x| self.antipode(x)).collect();
            w = w.sum(&Subspace::span(&ctx, n, images)).expect("ambient");
            if w == v {
                return v;
            }
            v = w;
        }
    }

    /// The Hopf subalgebra V in its canonical basis.
    pub fn restrict(&self, v: &Subspace) -> Result<HopfSC> {
        self.check_hopf_subalgebra(v)?;
        let alg = self.alg.restrict_to(v)?;
        let d = v.dim();
        let piv = v.pivots();
        let n = self.dim();
        let basis = v.basis();
        HopfSC::from_fns(
            alg,
            |s| {
                let w = self.coproduct(&basis[s]);
                let mut terms = Vec::new();
                for a in 0..d {
                    for b in 0..d {
                        let c = w[piv[a] * n + piv[b]];
                        if !c.is_zero() {
                            terms.push((a, b, c));
                        }
                    }
                }
                terms
            },
            basis.iter().map(|x| self.counit(x)).collect(),
            |s| v.coords(&self.antipode(&basis[s])).expect("stable"),
        )
    }

    /// H/I after checking that I is a Hopf ideal.
    pub fn hopf_quotient(&self, i: &Subspace) -> Result<HopfQuotient> {
        let n = self.dim();
        let ctx = self.ctx().clone();
        if let Err(Error::NotAnIdeal { basis }) = self.alg.is_ideal(i) {
            return Err(Error::NotHopfIdeal {
                inclusion: "H I H ⊆ I",
                witness: vector::raw(&vector::unit(n, basis - 1)),
            });
        }
        for x in i.basis() {
            if !self.counit(x).is_zero() {
                return Err(Error::NotHopfIdeal {
                    inclusion: "ε(I) = 0",
                    witness: vector::raw(x),
                });
            }
            if !i.contains(&self.antipode(x)) {
                return Err(Error::NotHopfIdeal {
                    inclusion: "S(I) ⊆ I",
                    witness: vector::raw(x),
                });
            }
        }
        let co = tensor_sum_preimage(&self.delta, n, i, i);
        if let Some(x) = i.basis().iter().find(|x| !co.contains(x)) {
            return Err(Error::NotHopfIdeal {
                inclusion: "Δ(I) ⊆ I⊗H + H⊗I",
                witness: vector::raw(x),
            });
        }
        let quot = self.alg.quotient_by_ideal(i)?;
        let reps = quot.representatives.clone();
        let d = reps.len();
        let mut pi = MatF::zeros(&ctx, d, n);
        for j in 0..n {
            let c = quot.project(&vector::unit(n, j));
            for (r, &v) in c.iter().enumerate() {
                pi.set(r, j, v);
            }
        }
        let alg: AlgebraSC = quot.algebra;
        let hopf = HopfSC::from_fns(
            alg,
            |s| {
                let w = self.coproduct(&vector::unit(n, reps[s]));
                let w = super::tensor_apply(&ctx, &pi, &w);
                let mut terms = Vec::new();
                for (ab, &c) in w.iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((ab / d, ab % d, c));
                    }
                }
                terms
            },
            reps.iter().map(|&r| self.eps[r]).collect(),
            |s| pi.apply(&self.antipode(&vector::unit(n, reps[s]))),
        )?;
        Ok(HopfQuotient {
            hopf,
            pi,
            representatives: reps,
        })
    }

    /// Right coinvariants {h : (id ⊗ π)Δh = h ⊗ π(1)}.
    pub fn coinvariants(&self, q: &HopfQuotient) -> Subspace {
        let n = self.dim();
        let d = q.pi.rows();
        let ctx = self.ctx().clone();
        let id = MatF::identity(&ctx, n);
        let pi_one = q.pi.apply(self.unit());
        let mut m = MatF::zeros(&ctx, n * d, n);
        for j in 0..n {
            let ej = vector::unit(n, j);
            let lhs = super::tensor_apply2(&ctx, &id, &q.pi, &self.coproduct(&ej));
            let rhs = vector::tensor(&ctx, &ej, &pi_one);
            for (k, c) in vector::sub(&ctx, &lhs, &rhs).into_iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m.kernel()
    }

    /// Σ b_1 ⊗ π(b_2) = Σ b_2 ⊗ π(b_1) for every basis b.
    pub fn is_cocentral(&self, q: &HopfQuotient) -> bool {
        let n = self.dim();
        let ctx = self.ctx().clone();
        let id = MatF::identity(&ctx, n);
        (0..n).all(|i| {
            let w = self.delta.column(i);
            let mut flipped = vector::zeros(n * n);
            for a in 0..n {
                for b in 0..n {
                    flipped[b * n + a] = w[a * n + b];
                }
            }
            super::tensor_apply2(&ctx, &id, &q.pi, &w)
                == super::tensor_apply2(&ctx, &id, &q.pi, &flipped)
        })
    }
}
