//! Primitive idempotents of commutative semisimple algebras.

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{vector, Fe, MatF};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveIdempotent {
    pub element: Vec<Fe>,
    /// Degree over the base field of the residue field e·A.
    pub residue_degree: usize,
}

impl AlgebraSC {
    /// Splits the unit along the fixed points of x ↦ x^q. Every fixed point
    /// b has a split minimal polynomial, and the Lagrange idempotents of its
    /// roots refine the current set; once every basis fixed point has been
    /// used, each corner e·A is a field.
    pub fn primitive_idempotents(&self) -> Result<Vec<PrimitiveIdempotent>> {
        let f = self.frobenius_matrix()?;
        if !self.radical_frobenius()?.is_zero() {
            return Err(Error::WrongAlgebraKind("semisimple"));
        }
        let ctx = &*self.ctx;
        let fixed = f.add(&minus_identity(&f))?.kernel();
        let mut idems = vec![self.unit.clone()];
        for b in fixed.basis() {
            let mut next = Vec::with_capacity(idems.len());
            for e in idems {
                let y = self.mul(b, &e);
                let roots = self.min_poly_with_unit(&y, &e).roots(ctx);
                if roots.len() <= 1 {
                    next.push(e);
                    continue;
                }
                for &c in &roots {
                    let mut part = e.clone();
                    for &d in roots.iter().filter(|&&d| d != c) {
                        let shifted = vector::sub(ctx, &y, &vector::scale(ctx, d, &e));
                        let scale = ctx.inv(ctx.sub(c, d)).expect("distinct roots");
                        part = vector::scale(ctx, scale, &self.mul(&part, &shifted));
                    }
                    next.push(part);
                }
            }
            idems = next;
        }
        let mut out: Vec<PrimitiveIdempotent> = idems
            .into_iter()
            .map(|e| PrimitiveIdempotent {
                residue_degree: self.left_regular(&e).rank(),
                element: e,
            })
            .collect();
        out.sort_by_key(|a| vector::raw(&a.element));
        Ok(out)
    }

    /// Smallest m such that the algebra splits over GF(q^m): the lcm of the
    /// residue degrees.
    pub fn splitting_degree(&self) -> Result<u32> {
        let idems = self.primitive_idempotents()?;
        Ok(idems
            .iter()
            .fold(1u32, |acc, e| lcm(acc, e.residue_degree as u32)))
    }
}

fn minus_identity(f: &MatF) -> MatF {
    let ctx = f.ctx();
    let mut m = MatF::zeros(ctx, f.rows(), f.cols());
    let minus_one = ctx.neg(Fe::ONE);
    for i in 0..f.rows() {
        m.set(i, i, minus_one);
    }
    m
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}
