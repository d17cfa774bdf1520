//! Jacobson radical: a trace criterion over the prime field, a Frobenius
//! kernel for commutative algebras, and a brute-force nilpotent-ideal search.

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{vector, Fe, MatF, Subspace};

/// Result of the brute-force search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    /// The search proved this is the radical.
    Certified(Subspace),
    /// A nilpotent ideal was found but maximality could not be proved
    /// within the budget.
    Undecided { partial: Subspace },
}

impl OracleOutcome {
    pub fn certified(&self) -> Option<&Subspace> {
        match self {
            OracleOutcome::Certified(s) => Some(s),
            OracleOutcome::Undecided { .. } => None,
        }
    }
}

/// Default number of candidate elements the oracle may inspect per round.
pub const ORACLE_BUDGET: u64 = 1 << 20;

impl AlgebraSC {
    /// The radical, by the Frobenius kernel when commutative and by the trace
    /// criterion otherwise.
    pub fn radical(&self) -> Subspace {
        if self.is_commutative() {
            self.radical_frobenius().expect("commutative")
        } else {
            self.radical_trace()
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    /// Matrix of x ↦ x^q, which is linear when the algebra is commutative.
    pub fn frobenius_matrix(&self) -> Result<MatF> {
        if !self.is_commutative() {
            return Err(Error::WrongAlgebraKind("commutative"));
        }
        let q = self.ctx.order();
        let cols: Vec<Vec<Fe>> = (0..self.n)
            .map(|i| self.pow(&self.basis_vector(i), q))
            .collect();
        Ok(MatF::from_columns(&self.ctx, self.n, &cols).expect("square"))
    }

    /// Nilradical of a commutative algebra: kernel of x ↦ x^{q^e}, q^e ≥ dim.
    pub fn radical_frobenius(&self) -> Result<Subspace> {
        let f = self.frobenius_matrix()?;
        let q = self.ctx.order();
        let (mut e, mut qe) = (1u32, q);
        while (qe as usize) < self.n {
            e += 1;
            qe = qe.saturating_mul(q);
        }
        Ok(f.pow(e as u64)?.kernel())
    }

    /// Trace criterion over GF(p). With l = ⌊log_p n⌋ and I_{-1} = A,
    /// I_i = {a ∈ I_{i-1} : g_i(a b) = 0 for all b}, where
    /// g_i(a) = (Tr(L̃_a^{p^i}) mod p^{i+1}) / p^i on an integer lift L̃_a of the
    /// left-regular matrix. The radical is I_l. Over GF(p^m) the ring is first
    /// viewed over GF(p) and the answer spanned back over GF(p^m).
    pub fn radical_trace(&self) -> Subspace {
        if self.ctx.is_prime_field() {
            return trace_prime(self);
        }
        let down = self.restrict_scalars().expect("prime subfield exists");
        let rad = trace_prime(&down);
        let vecs = rad
            .basis()
            .iter()
            .map(|v| AlgebraSC::join_scalars(&self.ctx, v))
            .collect();
        Subspace::span(&self.ctx, self.n, vecs)
    }

    /// Largest nilpotent ideal found by an ascending search: repeatedly look
    /// in A/C for a nilpotent element generating a nilpotent ideal, enlarge C,
    /// and certify the end state by exhausting A/C, or by the absence of
    /// nilpotent elements when A/C is commutative.
    pub fn radical_oracle(&self, budget: u64) -> OracleOutcome {
        let mut c = Subspace::zero(&self.ctx, self.n);
        loop {
            let quot = self.quotient_by_ideal(&c).expect("c is an ideal");
            let b = &quot.algebra;
            if b.dim() == 0 {
                return OracleOutcome::Certified(c);
            }
            match find_nilpotent_ideal(b, budget) {
                Search::Found(j) => {
                    let lifted: Vec<Vec<Fe>> = j
                        .basis()
                        .iter()
                        .map(|v| quot.lift(v, self.n))
                        .collect();
                    c = c
                        .sum(&Subspace::span(&self.ctx, self.n, lifted))
                        .expect("same ambient");
                }
                Search::Exhausted => return OracleOutcome::Certified(c),
                Search::OutOfBudget => {
                    if b.is_commutative() && no_nilpotents(b) {
                        return OracleOutcome::Certified(c);
                    }
                    return OracleOutcome::Undecided { partial: c };
                }
            }
        }
    }
}

fn trace_prime(a: &AlgebraSC) -> Subspace {
    let n = a.n;
    let p = a.ctx.p();
    let mut l = 0u32;
    while p.pow(l + 1) <= n as u64 {
        l += 1;
    }
    let regular: Vec<MatF> = (0..n).map(|k| a.left_regular(&a.basis_vector(k))).collect();
    let mut ideal = Subspace::full(&a.ctx, n);
    for i in 0..=l {
        if ideal.is_zero() {
            break;
        }
        let pi = p.pow(i);
        let modulus = pi * p;
        let basis = ideal.basis().to_vec();
        let mut g = MatF::zeros(&a.ctx, n, basis.len());
        for (col, x) in basis.iter().enumerate() {
            let lx = a.left_regular(x);
            for (k, lk) in regular.iter().enumerate() {
                // L_{x e_k} = L_x L_{e_k}
                let m = lx.mul(lk).expect("square");
                let t = lifted_trace_of_power(&m, pi, modulus);
                g.set(k, col, Fe(((t / pi) % p) as u32));
            }
        }
        let ker = g.kernel();
        let vecs = ker.basis().iter().map(|c| combine(a, &basis, c)).collect();
        ideal = Subspace::span(&a.ctx, n, vecs);
    }
    ideal
}

fn combine(a: &AlgebraSC, basis: &[Vec<Fe>], coeffs: &[Fe]) -> Vec<Fe> {
    let mut out = vector::zeros(a.n);
    for (b, &c) in basis.iter().zip(coeffs) {
        vector::axpy(&a.ctx, &mut out, c, b);
    }
    out
}

/// Tr(M̃^e) mod `modulus`, for M̃ the lift of M to integers in [0, p).
fn lifted_trace_of_power(m: &MatF, e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let lift: Vec<u64> = m.data().iter().map(|x| x.0 as u64 % modulus).collect();
    let mut acc: Option<Vec<u64>> = None;
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => int_mul(&a, &base, n, modulus),
            });
        }
        e >>= 1;
        if e > 0 {
            base = int_mul(&base, &base, n, modulus);
        }
    }
    let acc = acc.expect("exponent is positive");
    (0..n).map(|i| acc[i * n + i]).sum::<u64>() % modulus
}

fn int_mul(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            let row = &b[k * n..(k + 1) * n];
            let o = &mut out[i * n..(i + 1) * n];
            for (oj, &bj) in o.iter_mut().zip(row) {
                *oj += x * bj;
            }
        }
        for v in &mut out[i * n..(i + 1) * n] {
            *v %= modulus;
        }
    }
    out
}

enum Search {
    Found(Subspace),
    Exhausted,
    OutOfBudget,
}

/// Walks projective representatives (first nonzero coordinate 1) by
/// increasing support size.
fn find_nilpotent_ideal(b: &AlgebraSC, budget: u64) -> Search {
    let d = b.dim();
    let q = b.ctx.order() as u32;
    let mut visited = 0u64;
    for w in 1..=d {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            // coefficients on support[1..] range over nonzero field elements
            let mut coeffs = vec![1u32; w];
            loop {
                visited += 1;
                if visited > budget {
                    return Search::OutOfBudget;
                }
                let mut x = vector::zeros(d);
                for (&s, &c) in support.iter().zip(&coeffs) {
                    x[s] = Fe(c);
                }
                if b.is_nilpotent_element(&x) {
                    let j = b.ideal_generated(&[x]);
                    if b.is_nilpotent_ideal(&j) {
                        return Search::Found(j);
                    }
                }
                // odometer over positions 1..w
                let mut pos = w;
                let advanced = loop {
                    if pos <= 1 {
                        break false;
                    }
                    pos -= 1;
                    coeffs[pos] += 1;
                    if coeffs[pos] < q {
                        break true;
                    }
                    coeffs[pos] = 1;
                };
                if !advanced {
                    break;
                }
            }
            if !next_combination(&mut support, d) {
                break;
            }
        }
    }
    Search::Exhausted
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// For commutative algebras: no nonzero x with x^{q^e} = 0.
fn no_nilpotents(b: &AlgebraSC) -> bool {
    b.radical_frobenius().map(|r| r.is_zero()).unwrap_or(false)
}
