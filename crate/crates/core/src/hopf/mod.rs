//! Hopf algebras by structure constants.
//!
//! Δ is an n² × n matrix whose column i is Δ(e_i) in the basis e_a ⊗ e_b,
//! indexed a·n + b. The antipode matrix has S(e_j) in column j.

mod coalgebra;
mod constructions;
mod filtration;
mod relative;
mod sub;
#[cfg(test)]
mod tests;

use std::fmt;
use std::sync::Arc;

use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{vector, Fe, FieldCtx, MatF};
use crate::report::CheckReport;

pub(crate) use constructions::binomials_mod;
pub use filtration::GradedHopf;
pub use relative::RelativePrimitives;
pub use sub::HopfQuotient;

#[derive(Clone)]
pub struct HopfSC {
    alg: AlgebraSC,
    delta: MatF,
    eps: Vec<Fe>,
    antipode: MatF,
    /// Nonzero terms ((a, b), c) of each Δ(e_i).
    dsparse: Vec<Vec<(u32, u32, Fe)>>,
}

impl PartialEq for HopfSC {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg
            && self.delta == other.delta
            && self.eps == other.eps
            && self.antipode == other.antipode
    }
}

impl Eq for HopfSC {}

impl fmt::Debug for HopfSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfSC(dim {} over {:?})", self.dim(), self.ctx())
    }
}

impl HopfSC {
    pub fn new(alg: AlgebraSC, delta: MatF, eps: Vec<Fe>, antipode: MatF) -> Result<Self> {
        let n = alg.dim();
        if delta.rows() != n * n || delta.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                got: delta.rows() * delta.cols(),
            });
        }
        if eps.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: eps.len(),
            });
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: antipode.rows() * antipode.cols(),
            });
        }
        if **delta.ctx() != **alg.ctx() || **antipode.ctx() != **alg.ctx() {
            return Err(Error::ContextMismatch);
        }
        let dsparse = (0..n)
            .map(|i| {
                (0..n * n)
                    .filter_map(|ab| {
                        let c = delta.get(ab, i);
                        (!c.is_zero()).then_some(((ab / n) as u32, (ab % n) as u32, c))
                    })
                    .collect()
            })
            .collect();
        Ok(HopfSC {
            alg,
            delta,
            eps,
            antipode,
            dsparse,
        })
    }

    /// Builds Δ and S from functions of the basis index.
    pub fn from_fns(
        alg: AlgebraSC,
        mut delta: impl FnMut(usize) -> Vec<(usize, usize, Fe)>,
        eps: Vec<Fe>,
        mut antipode: impl FnMut(usize) -> Vec<Fe>,
    ) -> Result<Self> {
        let n = alg.dim();
        let ctx = alg.ctx().clone();
        let mut d = MatF::zeros(&ctx, n * n, n);
        let mut s = MatF::zeros(&ctx, n, n);
        for i in 0..n {
            for (a, b, c) in delta(i) {
                let old = d.get(a * n + b, i);
                d.set(a * n + b, i, ctx.add(old, c));
            }
            for (k, c) in antipode(i).into_iter().enumerate() {
                s.set(k, i, c);
            }
        }
        HopfSC::new(alg, d, eps, s)
    }

    pub fn alg(&self) -> &AlgebraSC {
        &self.alg
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.alg.ctx()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn delta_matrix(&self) -> &MatF {
        &self.delta
    }

    pub fn eps(&self) -> &[Fe] {
        &self.eps
    }

    pub fn antipode_matrix(&self) -> &MatF {
        &self.antipode
    }

    pub fn unit(&self) -> &[Fe] {
        self.alg.unit()
    }

    pub fn mul(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        self.alg.mul(x, y)
    }

    /// Terms ((a, b), c) of Δ(e_i).
    pub fn delta_terms(&self, i: usize) -> &[(u32, u32, Fe)] {
        &self.dsparse[i]
    }

    pub fn coproduct(&self, x: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let ctx = &**self.ctx();
        let mut out = vector::zeros(n * n);
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(a, b, c) in &self.dsparse[i] {
                let k = a as usize * n + b as usize;
                out[k] = ctx.add(out[k], ctx.mul(xi, c));
            }
        }
        out
    }

    pub fn counit(&self, x: &[Fe]) -> Fe {
        vector::dot(self.ctx(), &self.eps, x)
    }

    pub fn antipode(&self, x: &[Fe]) -> Vec<Fe> {
        self.antipode.apply(x)
    }

    /// (a ⊗ b)(c ⊗ d) = ac ⊗ bd on Kronecker-indexed vectors.
    pub fn tensor_mul(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let ctx = &**self.ctx();
        let mut out = vector::zeros(n * n);
        for (ab, &xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for (cd, &yv) in y.iter().enumerate() {
                if yv.is_zero() {
                    continue;
                }
                let (c, d) = (cd / n, cd % n);
                let s = ctx.mul(xv, yv);
                let left = self.alg.basis_product(a, c);
                let right = self.alg.basis_product(b, d);
                for (u, &lu) in left.iter().enumerate() {
                    if lu.is_zero() {
                        continue;
                    }
                    let su = ctx.mul(s, lu);
                    for (v, &rv) in right.iter().enumerate() {
                        if !rv.is_zero() {
                            out[u * n + v] = ctx.add(out[u * n + v], ctx.mul(su, rv));
                        }
                    }
                }
            }
        }
        out
    }

    /// Σ c · S(x_1) x_2 when `left`, else Σ c · x_1 S(x_2).
    fn antipode_convolution(&self, i: usize, left: bool) -> Vec<Fe> {
        let n = self.dim();
        let ctx = &**self.ctx();
        let mut out = vector::zeros(n);
        for &(a, b, c) in &self.dsparse[i] {
            let (a, b) = (a as usize, b as usize);
            let term = if left {
                self.alg.mul(&self.antipode.column(a), &self.alg.basis_vector(b))
            } else {
                self.alg.mul(&self.alg.basis_vector(a), &self.antipode.column(b))
            };
            vector::axpy(ctx, &mut out, c, &term);
        }
        out
    }

    /// Checks every Hopf algebra axiom as a matrix identity on basis vectors.
    pub fn validate(&self) -> CheckReport {
        let mut rep = self.alg.validate();
        rep.battery = "validate-hopf".into();
        rep.status = crate::report::Status::Pass;
        let n = self.dim();
        let ctx = &**self.ctx();

        for i in 0..n {
            // coassociativity in H⊗H⊗H, index (a n + b) n + c
            let mut lhs = vector::zeros(n * n * n);
            let mut rhs = vector::zeros(n * n * n);
            for &(a, b, c) in &self.dsparse[i] {
                for &(u, v, d) in &self.dsparse[a as usize] {
                    let k = (u as usize * n + v as usize) * n + b as usize;
                    lhs[k] = ctx.add(lhs[k], ctx.mul(c, d));
                }
                for &(u, v, d) in &self.dsparse[b as usize] {
                    let k = (a as usize * n + u as usize) * n + v as usize;
                    rhs[k] = ctx.add(rhs[k], ctx.mul(c, d));
                }
            }
            if lhs != rhs {
                rep.witness("coassociativity", format!("basis {}", i + 1));
            }

            // counit
            let mut left = vector::zeros(n);
            let mut right = vector::zeros(n);
            for &(a, b, c) in &self.dsparse[i] {
                let (a, b) = (a as usize, b as usize);
                left[b] = ctx.add(left[b], ctx.mul(c, self.eps[a]));
                right[a] = ctx.add(right[a], ctx.mul(c, self.eps[b]));
            }
            let ei = vector::unit(n, i);
            if left != ei || right != ei {
                rep.witness("counit", format!("basis {}", i + 1));
            }

            // antipode
            let target = vector::scale(ctx, self.eps[i], self.unit());
            if self.antipode_convolution(i, true) != target {
                rep.witness("antipode (S ⊗ id)", format!("basis {}", i + 1));
            }
            if self.antipode_convolution(i, false) != target {
                rep.witness("antipode (id ⊗ S)", format!("basis {}", i + 1));
            }
        }

        // bialgebra compatibility
        let unit = self.unit().to_vec();
        if self.coproduct(&unit) != vector::tensor(ctx, &unit, &unit) {
            rep.witness("coproduct of unit", "Δ(1) ≠ 1⊗1");
        }
        if self.counit(&unit) != Fe::ONE {
            rep.witness("counit of unit", "ε(1) ≠ 1");
        }
        let deltas: Vec<Vec<Fe>> = (0..n).map(|i| self.delta.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = self.alg.basis_product(i, j);
                if self.coproduct(prod) != self.tensor_mul(&deltas[i], &deltas[j]) {
                    rep.witness("coproduct multiplicative", format!("({}, {})", i + 1, j + 1));
                }
                if self.counit(prod) != ctx.mul(self.eps[i], self.eps[j]) {
                    rep.witness("counit multiplicative", format!("({}, {})", i + 1, j + 1));
                }
            }
        }
        rep.close_validation()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|a| (0..n).all(|b| self.delta.get(a * n + b, i) == self.delta.get(b * n + a, i)))
        })
    }

    /// The dual Hopf algebra on the dual basis e^i: products from Δ,
    /// coproduct from the multiplication, unit ε, counit the unit, S transposed.
    pub fn dual(&self) -> HopfSC {
        let n = self.dim();
        let ctx = self.ctx().clone();
        let alg = AlgebraSC::from_fn(&ctx, n, self.eps.clone(), |a, b| {
            (0..n).map(|i| self.delta.get(a * n + b, i)).collect()
        })
        .expect("square table");
        let mut d = MatF::zeros(&ctx, n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, &c) in self.alg.basis_product(i, j).iter().enumerate() {
                    d.set(i * n + j, k, c);
                }
            }
        }
        HopfSC::new(alg, d, self.unit().to_vec(), self.antipode.transpose()).expect("shapes")
    }

    /// Structure constants in the basis f_j = Σ_i P[i][j] e_i.
    pub fn change_basis(&self, p: &MatF) -> Result<HopfSC> {
        let n = self.dim();
        let pinv = p.inverse().ok_or(Error::Invalid {
            what: "basis change",
            detail: "matrix is singular".into(),
        })?;
        let ctx = self.ctx().clone();
        let cols: Vec<Vec<Fe>> = (0..n).map(|j| p.column(j)).collect();
        let alg = AlgebraSC::from_fn(&ctx, n, pinv.apply(self.unit()), |a, b| {
            pinv.apply(&self.alg.mul(&cols[a], &cols[b]))
        })?;
        let mut d = MatF::zeros(&ctx, n * n, n);
        for (j, col) in cols.iter().enumerate() {
            let w = self.coproduct(col);
            let w = tensor_apply(&ctx, &pinv, &w);
            for (k, &c) in w.iter().enumerate() {
                d.set(k, j, c);
            }
        }
        let eps = cols.iter().map(|c| self.counit(c)).collect();
        let s = pinv.mul(&self.antipode)?.mul(p)?;
        HopfSC::new(alg, d, eps, s)
    }
}

/// (M ⊗ M) w for Kronecker-indexed w, M square of size n.
pub(crate) fn tensor_apply(ctx: &FieldCtx, m: &MatF, w: &[Fe]) -> Vec<Fe> {
    tensor_apply2(ctx, m, m, w)
}

/// (M ⊗ N) w, with w indexed a·cols(N) + b.
pub(crate) fn tensor_apply2(ctx: &FieldCtx, m: &MatF, nm: &MatF, w: &[Fe]) -> Vec<Fe> {
    let (r1, c1, r2, c2) = (m.rows(), m.cols(), nm.rows(), nm.cols());
    // first apply N to each row block, then M across blocks
    let mut mid = vector::zeros(c1 * r2);
    for a in 0..c1 {
        let block = &w[a * c2..(a + 1) * c2];
        if vector::is_zero(block) {
            continue;
        }
        let img = nm.apply(block);
        mid[a * r2..(a + 1) * r2].copy_from_slice(&img);
    }
    let mut out = vector::zeros(r1 * r2);
    for a in 0..c1 {
        let block = &mid[a * r2..(a + 1) * r2];
        if vector::is_zero(block) {
            continue;
        }
        for u in 0..r1 {
            let c = m.get(u, a);
            if !c.is_zero() {
                vector::axpy(ctx, &mut out[u * r2..(u + 1) * r2], c, block);
            }
        }
    }
    out
}
