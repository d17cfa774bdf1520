use super::HopfSC;
use crate::algebra::AlgebraSC;
use crate::ff::{vector, Fe, MatF, Subspace};

/// Largest coradical (as q^dim) searched exhaustively for grouplikes.
pub const GROUPLIKE_ENUMERATION_LIMIT: u64 = 1 << 20;

impl HopfSC {
    /// Matrix of x ↦ Δx − x⊗1 − 1⊗x.
    pub fn primitive_defect_matrix(&self) -> MatF {
        let n = self.dim();
        let ctx = self.ctx().clone();
        let one = self.unit().to_vec();
        let mut m = self.delta.clone();
        for j in 0..n {
            let ej = vector::unit(n, j);
            let corr = vector::add(&ctx, &vector::tensor(&ctx, &ej, &one), &vector::tensor(&ctx, &one, &ej));
            for (k, &c) in corr.iter().enumerate() {
                if !c.is_zero() {
                    let v = m.get(k, j);
                    m.set(k, j, ctx.sub(v, c));
                }
            }
        }
        m
    }

    /// P(H) = {x : Δx = x⊗1 + 1⊗x}
    pub fn primitives(&self) -> Subspace {
        self.primitive_defect_matrix().kernel()
    }

    /// The coradical as the annihilator of the radical of the dual algebra.
    pub fn coradical(&self) -> Subspace {
        self.dual().alg().radical().annihilator()
    }

    pub fn coradical_dim(&self) -> usize {
        self.coradical().dim()
    }

    /// Coradical equal to k·1.
    pub fn is_irreducible(&self) -> bool {
        self.coradical_dim() == 1
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.dual().alg().is_semisimple()
    }

    fn is_grouplike(&self, g: &[Fe]) -> bool {
        self.counit(g) == Fe::ONE && self.coproduct(g) == vector::tensor(self.ctx(), g, g)
    }

    /// All g with Δg = g⊗g and ε(g) = 1, sorted by coordinates. Searches the
    /// coradical exhaustively when it is small enough, and otherwise reads them
    /// off as the characters of the dual algebra.
    pub fn grouplikes(&self) -> Vec<Vec<Fe>> {
        let corad = self.coradical();
        let q = self.ctx().order();
        let small = q
            .checked_pow(corad.dim() as u32)
            .is_some_and(|c| c <= GROUPLIKE_ENUMERATION_LIMIT);
        if small {
            self.grouplikes_by_enumeration_in(&corad)
        } else {
            self.grouplikes_by_characters()
        }
    }

    /// Exhaustive search inside the coradical.
    pub fn grouplikes_by_enumeration(&self) -> Vec<Vec<Fe>> {
        self.grouplikes_by_enumeration_in(&self.coradical())
    }

    fn grouplikes_by_enumeration_in(&self, corad: &Subspace) -> Vec<Vec<Fe>> {
        let q = self.ctx().order() as u32;
        let d = corad.dim();
        let mut coords = vec![0u32; d];
        let mut out = Vec::new();
        loop {
            let c: Vec<Fe> = coords.iter().map(|&x| Fe(x)).collect();
            let g = corad.combine(&c);
            if self.is_grouplike(&g) {
                out.push(g);
            }
            let mut i = 0;
            while i < d {
                coords[i] += 1;
                if coords[i] < q {
                    break;
                }
                coords[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        out.sort_by_key(|g| vector::raw(g));
        out
    }

    /// Algebra maps H* → k, found as the degree-one primitive idempotents of
    /// the commutative semisimple quotient H*/([H*, H*] + radical).
    pub fn grouplikes_by_characters(&self) -> Vec<Vec<Fe>> {
        let dual = self.dual();
        let d = dual.alg();
        let n = d.dim();
        let ctx = self.ctx().clone();
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..a {
                let c = d.commutator(&d.basis_vector(a), &d.basis_vector(b));
                if !vector::is_zero(&c) {
                    comms.push(c);
                }
            }
        }
        let ideal = d.ideal_generated(&comms);
        let q1 = d.quotient_by_ideal(&ideal).expect("generated ideal");
        if q1.algebra.dim() == 0 {
            return Vec::new();
        }
        let rad = q1.algebra.radical();
        let q2 = q1.algebra.quotient_by_ideal(&rad).expect("radical is an ideal");
        let s: &AlgebraSC = &q2.algebra;
        let idems = s.primitive_idempotents().expect("commutative semisimple");
        let mut out = Vec::new();
        for e in idems.iter().filter(|e| e.residue_degree == 1) {
            // y e = χ(y) e; read χ at the first nonzero coordinate of e
            let k = e.element.iter().position(|x| !x.is_zero()).expect("nonzero idempotent");
            let inv = ctx.inv(e.element[k]).expect("nonzero");
            let g: Vec<Fe> = (0..n)
                .map(|i| {
                    let y = q2.project(&q1.project(&d.basis_vector(i)));
                    ctx.mul(s.mul(&y, &e.element)[k], inv)
                })
                .collect();
            out.push(g);
        }
        out.sort_by_key(|g| vector::raw(g));
        out
    }
}

/// {x : Mx ∈ L⊗H + H⊗R} for M mapping into an n²-dimensional tensor square.
/// The annihilator of L⊗H + H⊗R is L^⊥ ⊗ R^⊥.
pub(crate) fn tensor_sum_preimage(m: &MatF, n: usize, l: &Subspace, r: &Subspace) -> Subspace {
    let ctx = m.ctx().clone();
    let la = l.annihilator();
    let ra = r.annihilator();
    let mut rows = Vec::with_capacity(la.dim() * ra.dim());
    // row (a ⊗ b)ᵀ M, computed column by column through the n × n reshape
    for a in la.basis() {
        // (aᵀ ⊗ id) M: for each column j, the vector Σ_u a_u M[(u, ·), j]
        let partial: Vec<Vec<Fe>> = (0..m.cols())
            .map(|j| {
                let mut acc = vector::zeros(n);
                for (u, &au) in a.iter().enumerate() {
                    if au.is_zero() {
                        continue;
                    }
                    for v in 0..n {
                        let c = m.get(u * n + v, j);
                        if !c.is_zero() {
                            acc[v] = ctx.add(acc[v], ctx.mul(au, c));
                        }
                    }
                }
                acc
            })
            .collect();
        for b in ra.basis() {
            rows.push(partial.iter().map(|col| vector::dot(&ctx, b, col)).collect());
        }
    }
    if rows.is_empty() {
        return Subspace::full(&ctx, m.cols());
    }
    MatF::from_rows(&ctx, m.cols(), &rows).expect("lengths").kernel()
}

/// Whether a Kronecker-indexed w lies in L ⊗ R: its n × n reshape must have
/// columns in L and rows in R.
pub(crate) fn in_tensor(w: &[Fe], n: usize, l: &Subspace, r: &Subspace) -> bool {
    (0..n).all(|a| r.contains(&w[a * n..(a + 1) * n]))
        && (0..n).all(|b| l.contains(&(0..n).map(|a| w[a * n + b]).collect::<Vec<_>>()))
}
