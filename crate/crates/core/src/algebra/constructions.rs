use std::sync::Arc;

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{gf, prime_field, vector, Embedding, Fe, FieldCtx, Subspace};

/// An algebra together with how its basis sits in or maps from another one.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: AlgebraSC,
    /// Ambient indices whose unit vectors represent the quotient basis.
    pub representatives: Vec<usize>,
    pub ideal: Subspace,
}

impl Quotient {
    /// Coordinates of the class of an ambient vector.
    pub fn project(&self, v: &[Fe]) -> Vec<Fe> {
        let r = self.ideal.reduce(v);
        self.representatives.iter().map(|&j| r[j]).collect()
    }

    /// The ambient representative of a quotient vector.
    pub fn lift(&self, w: &[Fe], ambient: usize) -> Vec<Fe> {
        let mut v = vector::zeros(ambient);
        for (&j, &c) in self.representatives.iter().zip(w) {
            v[j] = c;
        }
        v
    }
}

impl AlgebraSC {
    /// k[T]/(f) for monic f (coefficients low to high), basis 1, T, …, T^{d−1}.
    pub fn from_polynomial(ctx: &Arc<FieldCtx>, f: &[Fe]) -> Result<AlgebraSC> {
        let d = f.len().checked_sub(1).filter(|&d| d > 0).ok_or(Error::Invalid {
            what: "polynomial",
            detail: "degree must be positive".into(),
        })?;
        if f[d] != Fe::ONE {
            return Err(Error::Invalid {
                what: "polynomial",
                detail: "must be monic".into(),
            });
        }
        // T^k for k < 2d − 1, reduced
        let mut powers: Vec<Vec<Fe>> = (0..d).map(|i| vector::unit(d, i)).collect();
        for k in d..2 * d - 1 {
            let prev = &powers[k - 1];
            let mut next = vector::zeros(d);
            next[1..].copy_from_slice(&prev[..d - 1]);
            let top = prev[d - 1];
            for (i, &c) in f[..d].iter().enumerate() {
                next[i] = ctx.sub(next[i], ctx.mul(top, c));
            }
            powers.push(next);
        }
        AlgebraSC::from_fn(ctx, d, vector::unit(d, 0), |i, j| powers[i + j].clone())
    }

    /// k^n with componentwise product.
    pub fn split(ctx: &Arc<FieldCtx>, n: usize) -> AlgebraSC {
        let unit = vec![Fe::ONE; n];
        AlgebraSC::from_fn(ctx, n, unit, |i, j| {
            if i == j {
                vector::unit(n, i)
            } else {
                vector::zeros(n)
            }
        })
        .expect("consistent shapes")
    }

    /// Closure of span{1, S} under multiplication.
    pub fn subalgebra_generated(&self, s: &[Vec<Fe>]) -> Subspace {
        let mut vecs = vec![self.unit.clone()];
        vecs.extend(s.iter().cloned());
        let mut v = Subspace::span(&self.ctx, self.n, vecs);
        loop {
            let next = v
                .sum(&self.product_space(&v, &v))
                .expect("same ambient");
            if next == v {
                return v;
            }
            v = next;
        }
    }

    /// Smallest two-sided ideal containing S.
    pub fn ideal_generated(&self, s: &[Vec<Fe>]) -> Subspace {
        let all = Subspace::full(&self.ctx, self.n);
        let start = Subspace::span(&self.ctx, self.n, s.to_vec());
        let left = self.product_space(&all, &start).sum(&start).expect("same ambient");
        self.product_space(&left, &all).sum(&left).expect("same ambient")
    }

    /// A/I on the canonical complement of I (unit vectors at non-pivot columns).
    pub fn quotient_by_ideal(&self, i: &Subspace) -> Result<Quotient> {
        self.is_ideal(i)?;
        let reps = i.complement_indices();
        let d = reps.len();
        let unit: Vec<Fe> = {
            let r = i.reduce(&self.unit);
            reps.iter().map(|&j| r[j]).collect()
        };
        let algebra = AlgebraSC::from_fn(&self.ctx, d, unit, |a, b| {
            let r = i.reduce(self.basis_product(reps[a], reps[b]));
            reps.iter().map(|&j| r[j]).collect()
        })?;
        Ok(Quotient {
            algebra,
            representatives: reps,
            ideal: i.clone(),
        })
    }

    /// The subalgebra V in its canonical basis.
    pub fn restrict_to(&self, v: &Subspace) -> Result<AlgebraSC> {
        let b = v.basis();
        let unit = v.coords(&self.unit).ok_or(Error::Invalid {
            what: "subalgebra",
            detail: "unit is missing".into(),
        })?;
        let mut table = Vec::with_capacity(b.len().pow(3));
        for x in b {
            for y in b {
                let c = v.coords(&self.mul(x, y)).ok_or(Error::Invalid {
                    what: "subalgebra",
                    detail: "not closed under multiplication".into(),
                })?;
                table.extend(c);
            }
        }
        AlgebraSC::new(&self.ctx, b.len(), table, unit)
    }

    /// A ⊗ B with basis e_i ⊗ f_j at index i·dim B + j.
    pub fn tensor(&self, other: &AlgebraSC) -> Result<AlgebraSC> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        let nb = other.n;
        let unit = vector::tensor(&self.ctx, &self.unit, &other.unit);
        AlgebraSC::from_fn(&self.ctx, self.n * nb, unit, |a, b| {
            vector::tensor(
                &self.ctx,
                self.basis_product(a / nb, b / nb),
                other.basis_product(a % nb, b % nb),
            )
        })
    }

    /// Extension of scalars to GF(p^m'), m dividing m'.
    pub fn base_change(&self, m2: u32) -> Result<AlgebraSC> {
        let to = gf(self.ctx.p(), m2)?;
        let e = Embedding::new(&self.ctx, &to)?;
        self.base_change_along(&e)
    }

    pub fn base_change_along(&self, e: &Embedding) -> Result<AlgebraSC> {
        if *e.source() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        AlgebraSC::new(e.target(), self.n, e.map_vec(&self.mul), e.map_vec(&self.unit))
    }

    /// The same ring viewed over the prime field: basis e_i t^k at index
    /// i·m + k, where t generates GF(p^m).
    pub fn restrict_scalars(&self) -> Result<AlgebraSC> {
        let m = self.ctx.degree() as usize;
        let fp = prime_field(self.ctx.p())?;
        if m == 1 {
            return AlgebraSC::new(&fp, self.n, self.mul.clone(), self.unit.clone());
        }
        let ctx = &*self.ctx;
        let t = ctx.generator().expect("extension field");
        let split = |v: &[Fe]| -> Vec<Fe> {
            v.iter()
                .flat_map(|&a| ctx.coeffs(a).into_iter().map(Fe))
                .collect()
        };
        let unit = split(&self.unit);
        AlgebraSC::from_fn(&fp, self.n * m, unit, |a, b| {
            let (i, ka) = (a / m, a % m);
            let (j, kb) = (b / m, b % m);
            let s = ctx.pow(t, (ka + kb) as u64);
            split(&vector::scale(ctx, s, self.basis_product(i, j)))
        })
    }

    /// Inverse of the coordinate split used by [`Self::restrict_scalars`].
    pub fn join_scalars(ctx: &Arc<FieldCtx>, v: &[Fe]) -> Vec<Fe> {
        let m = ctx.degree() as usize;
        v.chunks(m)
            .map(|c| ctx.from_coeffs(&c.iter().map(|x| x.0).collect::<Vec<_>>()))
            .collect()
    }
}
