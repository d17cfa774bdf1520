//! Field embeddings GF(p^m) → GF(p^m') for m dividing m'.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::field::{Fe, FieldCtx};

/// Lookup table of an embedding. The generator of the smaller field is sent
/// to the smallest (by packed value) root of its modulus in the larger one.
#[derive(Clone, Debug)]
pub struct Embedding {
    from: Arc<FieldCtx>,
    to: Arc<FieldCtx>,
    table: Vec<Fe>,
}

impl Embedding {
    pub fn new(from: &Arc<FieldCtx>, to: &Arc<FieldCtx>) -> Result<Self> {
        let (m, m2) = (from.degree(), to.degree());
        if from.p() != to.p() || m2 % m != 0 {
            return Err(Error::BadExtension { from: m, to: m2 });
        }
        let image_of_t = if m == 1 {
            Fe::ZERO
        } else {
            let modulus: Vec<Fe> = from.modulus().iter().map(|&c| Fe(c)).collect();
            to.elements()
                .find(|&r| eval(to, &modulus, r).is_zero())
                .ok_or(Error::BadExtension { from: m, to: m2 })?
        };
        let table = from
            .elements()
            .map(|a| {
                if m == 1 {
                    return a;
                }
                // subfield coefficients are prime-field values, valid in both
                let coeffs: Vec<Fe> = from.coeffs(a).into_iter().map(Fe).collect();
                eval(to, &coeffs, image_of_t)
            })
            .collect();
        Ok(Embedding {
            from: from.clone(),
            to: to.clone(),
            table,
        })
    }

    pub fn source(&self) -> &Arc<FieldCtx> {
        &self.from
    }

    pub fn target(&self) -> &Arc<FieldCtx> {
        &self.to
    }

    pub fn map(&self, a: Fe) -> Fe {
        self.table[a.0 as usize]
    }

    pub fn map_vec(&self, v: &[Fe]) -> Vec<Fe> {
        v.iter().map(|&a| self.map(a)).collect()
    }
}

fn eval(ctx: &FieldCtx, coeffs: &[Fe], x: Fe) -> Fe {
    coeffs
        .iter()
        .rev()
        .fold(Fe::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
}
