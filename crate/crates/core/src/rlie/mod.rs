//! Restricted Lie algebras by structure constants.

mod env;
#[cfg(test)]
mod tests;

use std::fmt;
use std::sync::Arc;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::ff::{gf, vector, Embedding, Fe, FieldCtx, MatF};
use crate::hopf::HopfSC;
use crate::report::CheckReport;

/// Largest projective search, in points, per extension degree.
pub const WITNESS_SEARCH_LIMIT: u64 = 1 << 20;

/// Default extension-degree cap for [`RestrictedLie::nilpotent_witness`].
pub const DEFAULT_WITNESS_DEGREE: u32 = 6;

/// Exhaustive torus test runs when the algebra has at most this many elements.
pub const EXHAUSTIVE_TORUS_LIMIT: u64 = 729;

pub struct RestrictedLie {
    ctx: Arc<FieldCtx>,
    n: usize,
    /// [x_i, x_j] at i·n + j.
    bracket: Vec<Vec<Fe>>,
    pmap: Vec<Vec<Fe>>,
    env: OnceCell<HopfSC>,
}

impl Clone for RestrictedLie {
    fn clone(&self) -> Self {
        RestrictedLie {
            ctx: self.ctx.clone(),
            n: self.n,
            bracket: self.bracket.clone(),
            pmap: self.pmap.clone(),
            env: self.env.clone(),
        }
    }
}

impl PartialEq for RestrictedLie {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx
            && self.n == other.n
            && self.bracket == other.bracket
            && self.pmap == other.pmap
    }
}

impl Eq for RestrictedLie {}

impl fmt::Debug for RestrictedLie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictedLie")
            .field("n", &self.n)
            .field("bracket", &self.bracket)
            .field("pmap", &self.pmap)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusVerdict {
    pub torus: bool,
    pub abelian: bool,
    /// The p-map matrix on the basis is invertible.
    pub pmap_invertible: bool,
    /// Every nonzero element is semisimple in u(L); `None` when too many elements.
    pub exhaustive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotentWitness {
    /// z ≠ 0 over GF(p^m) with z^{[p]} = 0.
    Found { m: u32, z: Vec<Fe> },
    /// Abelian with invertible p-map matrix: no witness over any extension.
    CertifiedNone,
    /// Nothing found over GF(p^m) for m up to the cap.
    NotFound { searched_up_to: u32 },
}

impl RestrictedLie {
    pub fn new(
        ctx: &Arc<FieldCtx>,
        n: usize,
        bracket: Vec<Vec<Fe>>,
        pmap: Vec<Vec<Fe>>,
    ) -> Result<Self> {
        if bracket.len() != n * n || pmap.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: bracket.len(),
            });
        }
        if let Some(v) = bracket.iter().chain(&pmap).find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        Ok(RestrictedLie {
            ctx: ctx.clone(),
            n,
            bracket,
            pmap,
            env: OnceCell::new(),
        })
    }

    /// An abelian algebra with the given p-map columns.
    pub fn abelian(ctx: &Arc<FieldCtx>, pmap: Vec<Vec<Fe>>) -> Result<Self> {
        let n = pmap.len();
        Self::new(ctx, n, vec![vector::zeros(n); n * n], pmap)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bracket_table(&self) -> &[Vec<Fe>] {
        &self.bracket
    }

    pub fn pmap_table(&self) -> &[Vec<Fe>] {
        &self.pmap
    }

    pub fn bracket(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        bracket_in(&self.ctx, self.n, &self.bracket, x, y)
    }

    /// Column j of ad x is [x, x_j].
    pub fn ad(&self, x: &[Fe]) -> MatF {
        let cols: Vec<Vec<Fe>> =
            (0..self.n).map(|j| self.bracket(x, &vector::unit(self.n, j))).collect();
        MatF::from_columns(&self.ctx, self.n, &cols).expect("square")
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| vector::is_zero(v))
    }

    /// The p-map on the basis as a matrix (column i is x_i^{[p]}).
    pub fn pmap_matrix(&self) -> MatF {
        MatF::from_columns(&self.ctx, self.n, &self.pmap).expect("square")
    }

    /// Antisymmetry, Jacobi, ad(x^{[p]}) = (ad x)^p on the basis, and
    /// Jacobson's formula on basis pairs, checked through ad.
    pub fn validate(&self) -> CheckReport {
        let n = self.n;
        let ctx = &self.ctx;
        let p = ctx.p();
        let mut rep = CheckReport::new("", "validate-rlie");
        let e = |i: usize| vector::unit(n, i);
        for i in 0..n {
            if !vector::is_zero(&self.bracket[i * n + i]) {
                rep.witness("antisymmetry", format!("[x{0}, x{0}] ≠ 0", i + 1));
            }
            for j in i + 1..n {
                if vector::add(ctx, &self.bracket[i * n + j], &self.bracket[j * n + i])
                    .iter()
                    .any(|c| !c.is_zero())
                {
                    rep.witness("antisymmetry", format!("[x{}, x{}]", i + 1, j + 1));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&e(i), &self.bracket(&e(j), &e(k)));
                    let b = self.bracket(&e(j), &self.bracket(&e(k), &e(i)));
                    let c = self.bracket(&e(k), &self.bracket(&e(i), &e(j)));
                    if !vector::is_zero(&vector::add(ctx, &vector::add(ctx, &a, &b), &c)) {
                        rep.witness("jacobi", format!("({}, {}, {})", i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        if !rep.is_valid() {
            return rep.close_validation();
        }
        for i in 0..n {
            let lhs = self.ad(&self.pmap[i]);
            let rhs = self.ad(&e(i)).pow(p).expect("square");
            if lhs != rhs {
                rep.witness("p-map ad", format!("ad(x{0}^[p]) ≠ (ad x{0})^p", i + 1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vector::add(ctx, &self.pmap[i], &self.pmap[j]);
                for s in self.jacobson_terms(&e(i), &e(j)) {
                    v = vector::add(ctx, &v, &s);
                }
                let sum = vector::add(ctx, &e(i), &e(j));
                if self.ad(&v) != self.ad(&sum).pow(p).expect("square") {
                    rep.witness("jacobson", format!("(x{} + x{})^[p]", i + 1, j + 1));
                }
            }
        }
        rep.close_validation()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// s_1(x, y), …, s_{p−1}(x, y), where i·s_i is the coefficient of t^{i−1}
    /// in ad(tx + y)^{p−1}(x).
    pub fn jacobson_terms(&self, x: &[Fe], y: &[Fe]) -> Vec<Vec<Fe>> {
        jacobson_terms_in(&self.ctx, self.n, &self.bracket, x, y)
    }

    /// (Σ λ_i x_i)^{[p]} from the basis values by Jacobson's formula, over
    /// any extension of the base field.
    pub fn pmap_by_formula(&self, z: &[Fe], ext: &Arc<FieldCtx>) -> Result<Vec<Fe>> {
        let emb = Embedding::new(&self.ctx, ext)?;
        let bracket: Vec<Vec<Fe>> = self.bracket.iter().map(|v| emb.map_vec(v)).collect();
        let pmap: Vec<Vec<Fe>> = self.pmap.iter().map(|v| emb.map_vec(v)).collect();
        Ok(pmap_formula(ext, self.n, &bracket, &pmap, z))
    }

    /// The (b) test is the verdict; the exhaustive (a) test runs alongside
    /// when L has at most [`EXHAUSTIVE_TORUS_LIMIT`] elements.
    pub fn is_torus(&self) -> Result<TorusVerdict> {
        if !self.ctx.is_prime_field() {
            return Err(Error::NonPrimeField);
        }
        let abelian = self.is_abelian();
        let pmap_invertible = self.pmap_matrix().rank() == self.n;
        let total = self.ctx.order().checked_pow(self.n as u32);
        let exhaustive = match total {
            Some(t) if t <= EXHAUSTIVE_TORUS_LIMIT => Some(self.all_elements_semisimple()?),
            _ => None,
        };
        Ok(TorusVerdict {
            torus: abelian && pmap_invertible,
            abelian,
            pmap_invertible,
            exhaustive,
        })
    }

    fn all_elements_semisimple(&self) -> Result<bool> {
        let env = self.env()?;
        let embed = self.embedding_into_env();
        for z in all_vectors(&self.ctx, self.n).skip(1) {
            let x = embed.apply(&z);
            if !env.alg().p_poly_relation(&x)?.is_semisimple_element() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Some z ≠ 0 with z^{[p]} = 0 over GF(p^m), m ≤ max_m. The abelian
    /// case is decided by det of the p-map matrix; otherwise a projective
    /// search per degree, skipped beyond [`WITNESS_SEARCH_LIMIT`] points.
    pub fn nilpotent_witness(&self, max_m: u32) -> Result<NilpotentWitness> {
        let n = self.n;
        if self.is_abelian() {
            let a = self.pmap_matrix();
            let kernel = a.kernel();
            return Ok(match kernel.basis().first() {
                None => NilpotentWitness::CertifiedNone,
                Some(mu) => {
                    // (Σ λ_i x_i)^{[p]} = A λ^p, so λ = μ^{1/p}
                    let z = mu.iter().map(|&c| self.ctx.frobenius_inv(c)).collect();
                    NilpotentWitness::Found { m: 1, z }
                }
            });
        }
        let base = self.ctx.degree();
        for m in 1..=max_m {
            let ext = gf(self.ctx.p(), base * m)?;
            let q = ext.order();
            let points = match q.checked_pow(n as u32) {
                Some(t) => (t - 1) / (q - 1),
                None => u64::MAX,
            };
            if points > WITNESS_SEARCH_LIMIT {
                break;
            }
            let emb = Embedding::new(&self.ctx, &ext)?;
            let bracket: Vec<Vec<Fe>> = self.bracket.iter().map(|v| emb.map_vec(v)).collect();
            let pmap: Vec<Vec<Fe>> = self.pmap.iter().map(|v| emb.map_vec(v)).collect();
            for z in projective_points(&ext, n) {
                if vector::is_zero(&pmap_formula(&ext, n, &bracket, &pmap, &z)) {
                    return Ok(NilpotentWitness::Found { m, z });
                }
            }
        }
        Ok(NilpotentWitness::NotFound {
            searched_up_to: max_m,
        })
    }

    /// Basis change to y_j = Σ_i P[i][j] x_i.
    pub fn change_basis(&self, p: &MatF) -> Result<RestrictedLie> {
        let n = self.n;
        let pinv = p.inverse().ok_or(Error::Invalid {
            what: "basis change",
            detail: "matrix is singular".into(),
        })?;
        let cols: Vec<Vec<Fe>> = (0..n).map(|j| p.column(j)).collect();
        let mut bracket = Vec::with_capacity(n * n);
        for a in &cols {
            for b in &cols {
                bracket.push(pinv.apply(&self.bracket(a, b)));
            }
        }
        let pmap = cols
            .iter()
            .map(|c| Ok(pinv.apply(&self.pmap(c)?)))
            .collect::<Result<_>>()?;
        RestrictedLie::new(&self.ctx, n, bracket, pmap)
    }
}

fn bracket_in(ctx: &FieldCtx, n: usize, table: &[Vec<Fe>], x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    let mut out = vector::zeros(n);
    for (i, &a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            if !b.is_zero() {
                vector::axpy(ctx, &mut out, ctx.mul(a, b), &table[i * n + j]);
            }
        }
    }
    out
}

fn jacobson_terms_in(
    ctx: &FieldCtx,
    n: usize,
    table: &[Vec<Fe>],
    x: &[Fe],
    y: &[Fe],
) -> Vec<Vec<Fe>> {
    let p = ctx.p() as usize;
    // coefficients of t^0 … t^{p−1}, each a vector in L
    let mut v = vec![vector::zeros(n); p];
    v[0] = x.to_vec();
    for _ in 0..p - 1 {
        let mut next = vec![vector::zeros(n); p];
        for d in 0..p {
            if vector::is_zero(&v[d]) {
                continue;
            }
            let yv = bracket_in(ctx, n, table, y, &v[d]);
            next[d] = vector::add(ctx, &next[d], &yv);
            if d + 1 < p {
                let xv = bracket_in(ctx, n, table, x, &v[d]);
                next[d + 1] = vector::add(ctx, &next[d + 1], &xv);
            }
        }
        v = next;
    }
    (1..p)
        .map(|i| {
            let inv = ctx.inv(ctx.from_i64(i as i64)).expect("i < p");
            vector::scale(ctx, inv, &v[i - 1])
        })
        .collect()
}

/// Adds one basis term at a time: (u + λx_i)^{[p]} = u^{[p]} + λ^p x_i^{[p]} + Σ s_k(u, λx_i).
fn pmap_formula(ctx: &FieldCtx, n: usize, bracket: &[Vec<Fe>], pmap: &[Vec<Fe>], z: &[Fe]) -> Vec<Fe> {
    let mut u = vector::zeros(n);
    let mut out = vector::zeros(n);
    for (i, &l) in z.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let term = vector::scale(ctx, l, &vector::unit(n, i));
        vector::axpy(ctx, &mut out, ctx.frobenius(l), &pmap[i]);
        for s in jacobson_terms_in(ctx, n, bracket, &u, &term) {
            out = vector::add(ctx, &out, &s);
        }
        u = vector::add(ctx, &u, &term);
    }
    out
}

/// All vectors of GF(q)^n in counting order, zero first.
fn all_vectors(ctx: &Arc<FieldCtx>, n: usize) -> impl Iterator<Item = Vec<Fe>> {
    let q = ctx.order();
    let total = q.pow(n as u32);
    (0..total).map(move |mut k| {
        (0..n)
            .map(|_| {
                let c = Fe((k % q) as u32);
                k /= q;
                c
            })
            .collect()
    })
}

/// Nonzero vectors whose last nonzero coordinate is 1.
fn projective_points(ctx: &Arc<FieldCtx>, n: usize) -> impl Iterator<Item = Vec<Fe>> {
    all_vectors(ctx, n).filter(|v| v.iter().rev().find(|c| !c.is_zero()) == Some(&Fe::ONE))
}
