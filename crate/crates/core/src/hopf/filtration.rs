use super::coalgebra::tensor_sum_preimage;
use super::HopfSC;
use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{vector, Fe, MatF, Subspace};

/// gr H with the degree of each basis element and the adapted basis of H
/// it was read from (columns of `basis`).
#[derive(Clone, Debug)]
pub struct GradedHopf {
    pub hopf: HopfSC,
    pub degrees: Vec<usize>,
    pub basis: MatF,
}

impl GradedHopf {
    /// Indices of the basis elements of the given degree.
    pub fn component(&self, d: usize) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

impl HopfSC {
    /// F_0 = K, F_{n+1} = Δ⁻¹(K⊗H + H⊗F_n), until the chain stops growing.
    pub fn wedge_filtration(&self, k: &Subspace) -> Result<Vec<Subspace>> {
        self.check_hopf_subalgebra(k)?;
        let n = self.dim();
        let mut chain = vec![k.clone()];
        loop {
            let last = chain.last().expect("nonempty");
            let next = tensor_sum_preimage(&self.delta, n, k, last);
            if next == *last {
                return Ok(chain);
            }
            chain.push(next);
        }
    }

    /// The coradical filtration F_n = ⋀^{n+1} k·1 of an irreducible H.
    pub fn coradical_filtration(&self) -> Result<Vec<Subspace>> {
        let one = Subspace::span(self.ctx(), self.dim(), vec![self.unit().to_vec()]);
        let chain = self.wedge_filtration(&one)?;
        if !chain.last().expect("nonempty").is_full() || !self.is_irreducible() {
            return Err(Error::NotIrreducible);
        }
        Ok(chain)
    }

    /// Associated graded Hopf algebra of the coradical filtration, on the
    /// basis of echelon complements F_d ⊖ F_{d−1} ordered by degree.
    pub fn gr(&self) -> Result<GradedHopf> {
        let chain = self.coradical_filtration()?;
        let n = self.dim();
        let ctx = self.ctx().clone();
        let mut cols: Vec<Vec<Fe>> = chain[0].basis().to_vec();
        let mut degrees = vec![0; cols.len()];
        for d in 1..chain.len() {
            let comp = chain[d - 1].quotient_basis(&chain[d])?;
            degrees.extend(std::iter::repeat_n(d, comp.len()));
            cols.extend(comp);
        }
        let p = MatF::from_columns(&ctx, n, &cols)?;
        let h = self.change_basis(&p)?;

        let keep = |v: Vec<Fe>, deg: usize| -> Vec<Fe> {
            v.into_iter()
                .enumerate()
                .map(|(k, c)| if degrees[k] == deg { c } else { Fe::ZERO })
                .collect()
        };
        let unit = keep(h.unit().to_vec(), 0);
        let alg = AlgebraSC::from_fn(&ctx, n, unit, |a, b| {
            keep(h.alg.basis_product(a, b).to_vec(), degrees[a] + degrees[b])
        })?;
        let mut delta = MatF::zeros(&ctx, n * n, n);
        for i in 0..n {
            for &(a, b, c) in h.delta_terms(i) {
                let (a, b) = (a as usize, b as usize);
                if degrees[a] + degrees[b] == degrees[i] {
                    delta.set(a * n + b, i, c);
                }
            }
        }
        let eps = (0..n)
            .map(|i| if degrees[i] == 0 { h.eps[i] } else { Fe::ZERO })
            .collect();
        let mut s = MatF::zeros(&ctx, n, n);
        for j in 0..n {
            let col = keep(h.antipode.column(j), degrees[j]);
            for (k, c) in col.into_iter().enumerate() {
                s.set(k, j, c);
            }
        }
        Ok(GradedHopf {
            hopf: HopfSC::new(alg, delta, eps, s)?,
            degrees,
            basis: p,
        })
    }

    /// Whether x lies in F_d of the chain, for each d: the filtration degree.
    pub fn filtration_degree(chain: &[Subspace], x: &[Fe]) -> Option<usize> {
        if vector::is_zero(x) {
            return Some(0);
        }
        chain.iter().position(|f| f.contains(x))
    }
}
