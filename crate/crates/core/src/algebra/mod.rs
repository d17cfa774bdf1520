//! Finite-dimensional associative unital algebras given by structure constants.

mod constructions;
mod idempotents;
pub mod radical;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{vector, Fe, FieldCtx, MatF, Poly, Subspace};
use crate::report::CheckReport;

pub use constructions::Quotient;
pub use idempotents::PrimitiveIdempotent;
pub use radical::OracleOutcome;

/// Multiplication table `e_i e_j = Σ_k mul[(i n + j) n + k] e_k` and a unit.
#[derive(Clone)]
pub struct AlgebraSC {
    ctx: Arc<FieldCtx>,
    n: usize,
    mul: Vec<Fe>,
    unit: Vec<Fe>,
    /// Nonzero entries of each basis product, for fast bilinear evaluation.
    sparse: Vec<Vec<(u32, Fe)>>,
}

impl PartialEq for AlgebraSC {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.n == other.n && self.mul == other.mul && self.unit == other.unit
    }
}

impl Eq for AlgebraSC {}

impl fmt::Debug for AlgebraSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSC(dim {} over {:?})", self.n, self.ctx)
    }
}

/// Minimal relation c_0 x + c_1 x^p + … + c_{r−1} x^{p^{r−1}} + x^{p^r} = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPolyRelation {
    pub r: usize,
    pub c: Vec<Fe>,
}

impl PPolyRelation {
    pub fn is_semisimple_element(&self) -> bool {
        !self.c[0].is_zero()
    }
}

impl AlgebraSC {
    pub fn new(ctx: &Arc<FieldCtx>, n: usize, mul: Vec<Fe>, unit: Vec<Fe>) -> Result<Self> {
        if mul.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                got: mul.len(),
            });
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: unit.len(),
            });
        }
        let sparse = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = mul[ij * n + k];
                        (!c.is_zero()).then_some((k as u32, c))
                    })
                    .collect()
            })
            .collect();
        Ok(AlgebraSC {
            ctx: ctx.clone(),
            n,
            mul,
            unit,
            sparse,
        })
    }

    /// Builds the table from a function giving `e_i e_j`.
    pub fn from_fn(
        ctx: &Arc<FieldCtx>,
        n: usize,
        unit: Vec<Fe>,
        mut f: impl FnMut(usize, usize) -> Vec<Fe>,
    ) -> Result<Self> {
        let mut mul = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: v.len(),
                    });
                }
                mul.extend(v);
            }
        }
        Self::new(ctx, n, mul, unit)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> &[Fe] {
        &self.unit
    }

    pub fn table(&self) -> &[Fe] {
        &self.mul
    }

    /// e_i e_j
    pub fn basis_product(&self, i: usize, j: usize) -> &[Fe] {
        let s = (i * self.n + j) * self.n;
        &self.mul[s..s + self.n]
    }

    pub fn zero(&self) -> Vec<Fe> {
        vector::zeros(self.n)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Fe> {
        vector::unit(self.n, i)
    }

    pub fn mul(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let ctx = &*self.ctx;
        let mut out = vector::zeros(self.n);
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = ctx.mul(a, b);
                for &(k, c) in &self.sparse[i * self.n + j] {
                    let k = k as usize;
                    out[k] = ctx.add(out[k], ctx.mul(ab, c));
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[Fe], mut e: u64) -> Vec<Fe> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn commutator(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        vector::sub(&self.ctx, &self.mul(x, y), &self.mul(y, x))
    }

    /// Matrix of y ↦ x y.
    pub fn left_regular(&self, x: &[Fe]) -> MatF {
        let cols: Vec<Vec<Fe>> = (0..self.n)
            .map(|j| self.mul(x, &self.basis_vector(j)))
            .collect();
        MatF::from_columns(&self.ctx, self.n, &cols).expect("square")
    }

    /// Matrix of y ↦ y x.
    pub fn right_regular(&self, x: &[Fe]) -> MatF {
        let cols: Vec<Vec<Fe>> = (0..self.n)
            .map(|j| self.mul(&self.basis_vector(j), x))
            .collect();
        MatF::from_columns(&self.ctx, self.n, &cols).expect("square")
    }

    /// Associativity on all basis triples and the two unit laws.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new("", "validate-algebra");
        let n = self.n;
        let ctx = &*self.ctx;
        for i in 0..n {
            let ei = self.basis_vector(i);
            if self.mul(&self.unit, &ei) != ei {
                rep.witness("left unit", format!("basis {}", i + 1));
            }
            if self.mul(&ei, &self.unit) != ei {
                rep.witness("right unit", format!("basis {}", i + 1));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let eij = self.basis_product(i, j);
                for k in 0..n {
                    // (e_i e_j) e_k as a combination of rows e_l e_k
                    let mut lhs = vector::zeros(n);
                    for (l, &c) in eij.iter().enumerate() {
                        vector::axpy(ctx, &mut lhs, c, self.basis_product(l, k));
                    }
                    let mut rhs = vector::zeros(n);
                    for (l, &c) in self.basis_product(j, k).iter().enumerate() {
                        vector::axpy(ctx, &mut rhs, c, self.basis_product(i, l));
                    }
                    if lhs != rhs {
                        rep.witness("associativity", format!("({}, {}, {})", i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        rep.close_validation()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// {x : x e_j = e_j x for every basis element}
    pub fn center(&self) -> Subspace {
        let n = self.n;
        let mut m = MatF::zeros(&self.ctx, n * n, n);
        for i in 0..n {
            for j in 0..n {
                let c = vector::sub(&self.ctx, self.basis_product(i, j), self.basis_product(j, i));
                for (k, &v) in c.iter().enumerate() {
                    m.set(j * n + k, i, v);
                }
            }
        }
        m.kernel()
    }

    /// Minimal monic q with q(x) = 0.
    pub fn min_poly(&self, x: &[Fe]) -> Poly {
        self.min_poly_with_unit(x, &self.unit)
    }

    /// Minimal polynomial of x inside a corner algebra whose unit is `one`.
    pub(crate) fn min_poly_with_unit(&self, x: &[Fe], one: &[Fe]) -> Poly {
        let mut powers = vec![one.to_vec()];
        loop {
            let cols = MatF::from_columns(&self.ctx, self.n, &powers).expect("lengths");
            let ker = cols.kernel();
            if let Some(v) = ker.basis().first() {
                // powers were independent up to the last one, so the kernel is
                // a line whose last coordinate is nonzero
                let lead = *v.last().expect("nonempty");
                let inv = self.ctx.inv(lead).expect("last coefficient nonzero");
                return Poly::from_coeffs(vector::scale(&self.ctx, inv, v));
            }
            let next = self.mul(powers.last().expect("nonempty"), x);
            powers.push(next);
        }
    }

    /// Shortest monic relation among x, x^p, x^{p^2}, …
    pub fn p_poly_relation(&self, x: &[Fe]) -> Result<PPolyRelation> {
        if vector::is_zero(x) {
            return Err(Error::ZeroElement);
        }
        let p = self.ctx.p();
        let mut powers = vec![x.to_vec()];
        loop {
            let next = self.pow(powers.last().expect("nonempty"), p);
            powers.push(next);
            let cols = MatF::from_columns(&self.ctx, self.n, &powers).expect("lengths");
            if let Some(v) = cols.kernel().basis().first() {
                let lead = *v.last().expect("nonempty");
                let inv = self.ctx.inv(lead).expect("last coefficient nonzero");
                let mut c = vector::scale(&self.ctx, inv, v);
                c.pop();
                return Ok(PPolyRelation { r: c.len(), c });
            }
        }
    }

    /// span{u v : u ∈ U, v ∈ V}
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                vecs.push(self.mul(a, b));
            }
        }
        Subspace::span(&self.ctx, self.n, vecs)
    }

    pub fn is_ideal(&self, i: &Subspace) -> Result<()> {
        for v in i.basis() {
            for k in 0..self.n {
                let e = self.basis_vector(k);
                if !i.contains(&self.mul(&e, v)) || !i.contains(&self.mul(v, &e)) {
                    return Err(Error::NotAnIdeal { basis: k + 1 });
                }
            }
        }
        Ok(())
    }

    /// Whether I^k = 0 for some k ≤ dim + 1.
    pub fn is_nilpotent_ideal(&self, i: &Subspace) -> bool {
        let mut pow = i.clone();
        for _ in 0..=self.n {
            if pow.is_zero() {
                return true;
            }
            let next = self.product_space(&pow, i);
            if next == pow {
                return false;
            }
            pow = next;
        }
        pow.is_zero()
    }

    pub fn is_nilpotent_element(&self, x: &[Fe]) -> bool {
        let mut y = x.to_vec();
        for _ in 0..=self.n {
            if vector::is_zero(&y) {
                return true;
            }
            y = self.mul(&y, x);
        }
        false
    }
}
