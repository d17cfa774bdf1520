use super::coalgebra::tensor_sum_preimage;
use super::HopfSC;
use crate::error::Result;
use crate::ff::{vector, Fe, MatF, Subspace};

/// P(H, K) with the map x ↦ γ_x = Δx − x⊗1 − 1⊗x on its canonical basis.
#[derive(Clone, Debug)]
pub struct RelativePrimitives {
    pub space: Subspace,
    /// Column s is γ of the s-th basis vector of `space`.
    pub gamma: MatF,
}

impl HopfSC {
    /// H⁺ = ker ε
    pub fn augmentation_ideal(&self) -> Subspace {
        Subspace::span(self.ctx(), self.dim(), vec![self.eps.clone()]).annihilator()
    }

    /// K⁺ = K ∩ ker ε
    pub fn augmentation_of(&self, k: &Subspace) -> Subspace {
        k.intersect(&self.augmentation_ideal()).expect("same ambient")
    }

    /// P(H, K) = {x ∈ H⁺ : γ_x ∈ K⊗K}, using K⊗K = (K⊗H) ∩ (H⊗K).
    pub fn relative_primitives(&self, k: &Subspace) -> Result<RelativePrimitives> {
        self.check_hopf_subalgebra(k)?;
        let n = self.dim();
        let gamma = self.primitive_defect_matrix();
        let zero = Subspace::zero(self.ctx(), n);
        let left = tensor_sum_preimage(&gamma, n, k, &zero);
        let right = tensor_sum_preimage(&gamma, n, &zero, k);
        let space = left
            .intersect(&right)?
            .intersect(&self.augmentation_ideal())?;
        let cols: Vec<Vec<Fe>> = space.basis().iter().map(|x| gamma.apply(x)).collect();
        let gamma = MatF::from_columns(self.ctx(), n * n, &cols)?;
        Ok(RelativePrimitives { space, gamma })
    }

    /// The pullback to F_1 = Δ⁻¹(K⊗H + H⊗K) of the two-sided coinvariants of
    /// the (K, K)-bicomodule F_1/K: those u with Δu − 1⊗u ∈ H⊗K and
    /// Δu − u⊗1 ∈ K⊗H. Its dimension minus dim K is dim H(1)_0.
    pub fn first_wedge_bicoinvariants(&self, k: &Subspace) -> Result<Subspace> {
        let chain = self.wedge_filtration(k)?;
        let n = self.dim();
        let f1 = chain.get(1).unwrap_or(&chain[0]).clone();
        let ctx = self.ctx().clone();
        let one = self.unit().to_vec();
        let mut left = self.delta.clone();
        let mut right = self.delta.clone();
        for j in 0..n {
            let ej = vector::unit(n, j);
            let l = vector::tensor(&ctx, &one, &ej);
            let r = vector::tensor(&ctx, &ej, &one);
            for k in 0..n * n {
                if !l[k].is_zero() {
                    left.set(k, j, ctx.sub(left.get(k, j), l[k]));
                }
                if !r[k].is_zero() {
                    right.set(k, j, ctx.sub(right.get(k, j), r[k]));
                }
            }
        }
        let zero = Subspace::zero(&ctx, n);
        let a = tensor_sum_preimage(&left, n, &zero, k);
        let b = tensor_sum_preimage(&right, n, k, &zero);
        f1.intersect(&a)?.intersect(&b)
    }

    /// a ⊳ h = Σ a_1 h S(a_2)
    pub fn conjugation(&self, a: &[Fe], h: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let ctx = self.ctx().clone();
        let w = self.coproduct(a);
        let mut out = vector::zeros(n);
        for (ab, &c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (x, y) = (ab / n, ab % n);
            let t = self.mul(&self.mul(&self.alg.basis_vector(x), h), &self.antipode.column(y));
            vector::axpy(&ctx, &mut out, c, &t);
        }
        out
    }

    /// Whether B ⊳ V ⊆ V.
    pub fn is_conjugation_stable(&self, v: &Subspace, b: &Subspace) -> bool {
        b.basis()
            .iter()
            .all(|a| v.basis().iter().all(|h| v.contains(&self.conjugation(a, h))))
    }
}
