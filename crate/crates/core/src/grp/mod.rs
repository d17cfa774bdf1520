//! Finite groups as Cayley tables, with the identity at index 0.

mod hopf;

use crate::error::{Error, Result};
use crate::report::CheckReport;

pub use hopf::{dual_group_hopf, galois_twisted_dual, group_hopf, quotient_pullback};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
}

/// A subgroup as the sorted list of its elements.
pub type Subgroup = Vec<usize>;

impl FiniteGroup {
    /// A group from its Cayley table; `table[a·order + b]` is the index of ab.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<Self> {
        if table.len() != order * order || order == 0 {
            return Err(Error::DimensionMismatch {
                expected: order * order,
                got: table.len(),
            });
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::Invalid {
                what: "group table",
                detail: "entry out of range".into(),
            });
        }
        Ok(FiniteGroup {
            order,
            table,
            identity: 0,
        })
    }

    /// Builds the table from a multiplication on indices.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(f(a, b) as u32);
            }
        }
        FiniteGroup {
            order,
            table,
            identity: 0,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// G × H with (g, h) at index g·|H| + h.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order;
        Self::from_fn(g.order * m, |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))
    }

    /// ⟨r, s | r⁴ = s² = 1, s r s = r⁻¹⟩, with r^i s^j at index 2i + j.
    pub fn dihedral8() -> Self {
        Self::from_fn(8, |a, b| {
            let (i, j) = (a / 2, a % 2);
            let (k, l) = (b / 2, b % 2);
            let k = if j == 1 { (4 - k) % 4 } else { k };
            ((i + k) % 4) * 2 + (j + l) % 2
        })
    }

    /// Unit quaternions ±1, ±i, ±j, ±k; index 4·(sign bit) + unit.
    pub fn quaternion8() -> Self {
        // unit products among 1, i, j, k as (sign, unit)
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        Self::from_fn(8, |a, b| {
            let (s, t) = T[a % 4][b % 4];
            ((a / 4 + b / 4 + s) % 2) * 4 + t
        })
    }

    /// Unitriangular 3×3 matrices over GF(p) for odd p, (a, b, c) at
    /// index a p² + b p + c with product (a+a', b+b', c+c'+ab').
    /// For p = 2 this is the dihedral group of order 8.
    pub fn heisenberg(p: usize) -> Result<Self> {
        check_prime(p)?;
        if p == 2 {
            return Ok(Self::dihedral8());
        }
        Ok(Self::from_fn(p * p * p, |x, y| {
            let (a, b, c) = (x / (p * p), (x / p) % p, x % p);
            let (d, e, f) = (y / (p * p), (y / p) % p, y % p);
            ((a + d) % p) * p * p + ((b + e) % p) * p + (c + f + a * e) % p
        }))
    }

    /// C_{p²} ⋊ C_p with b a b⁻¹ = a^{1+p}; a^i b^j at index i p + j.
    pub fn modular(p: usize) -> Result<Self> {
        check_prime(p)?;
        let n = p * p;
        Ok(Self::from_fn(n * p, |x, y| {
            let (i, j) = (x / p, x % p);
            let (k, l) = (y / p, y % p);
            // b^j a^k = a^{k(1+p)^j} b^j
            let mut twist = 1;
            for _ in 0..j {
                twist = twist * (1 + p) % n;
            }
            ((i + k * twist) % n) * p + (j + l) % p
        }))
    }

    /// Permutations of {0, 1, 2} in lexicographic order of their images.
    pub fn symmetric3() -> Self {
        const P: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |q: [usize; 3]| P.iter().position(|&x| x == q).expect("permutation");
        // (σ τ)(x) = σ(τ(x))
        Self::from_fn(6, |a, b| index([P[a][P[b][0]], P[a][P[b][1]], P[a][P[b][2]]]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated group")
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| lcm(acc, self.element_order(a)))
    }

    /// Identity, associativity and invertibility by exhaustive checks.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new("", "validate-group");
        let n = self.order;
        for a in 0..n {
            if self.mul(self.identity, a) != a || self.mul(a, self.identity) != a {
                rep.witness("identity", format!("element {}", a + 1));
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.mul(a, b)] = true;
                col[self.mul(b, a)] = true;
            }
            if !row.iter().all(|&x| x) || !col.iter().all(|&x| x) {
                rep.witness("inverses", format!("element {}", a + 1));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        rep.witness("associativity", format!("({}, {}, {})", a + 1, b + 1, c + 1));
                    }
                }
            }
        }
        rep.close_validation()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order a power of p (the trivial group counts).
    pub fn is_p_group(&self, p: usize) -> bool {
        let mut n = self.order;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1 && p > 1
    }

    /// The prime p with |G| = p^k, if any.
    pub fn prime(&self) -> Option<usize> {
        (2..=self.order).find(|&p| self.order.is_multiple_of(p)).filter(|&p| self.is_p_group(p))
    }

    pub fn center(&self) -> Subgroup {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        let mut out = elems;
        out.sort_unstable();
        out
    }

    pub fn is_normal(&self, n: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in n {
            inside[x] = true;
        }
        (0..self.order).all(|g| {
            let gi = self.inv(g);
            n.iter().all(|&x| inside[self.mul(self.mul(g, x), gi)])
        })
    }

    /// [A, B] = ⟨a b a⁻¹ b⁻¹⟩
    pub fn commutator_subgroup(&self, a: &[usize], b: &[usize]) -> Subgroup {
        let mut gens = Vec::new();
        for &x in a {
            for &y in b {
                let c = self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)));
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.generated(&gens)
    }

    /// G/N, with cosets numbered by their smallest element, and the map
    /// sending each element to its coset.
    pub fn quotient(&self, n: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::Invalid {
                what: "quotient",
                detail: "subgroup is not normal".into(),
            });
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &x in n {
                coset[self.mul(g, x)] = c;
            }
        }
        let q = FiniteGroup::from_fn(reps.len(), |a, b| coset[self.mul(reps[a], reps[b])]);
        Ok((q, coset))
    }

    /// Lower central series G = γ_1 ⊃ γ_2 = [G, G] ⊃ … until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let all: Subgroup = (0..self.order).collect();
        let mut series = vec![all.clone()];
        loop {
            let next = self.commutator_subgroup(&all, series.last().expect("nonempty"));
            if next == *series.last().expect("nonempty") {
                return series;
            }
            series.push(next);
        }
    }

    /// Central series with every step of index p: the lower central series,
    /// with each abelian section refined one cyclic factor at a time.
    pub fn central_series(&self) -> Result<Vec<Subgroup>> {
        if self.order == 1 {
            return Ok(vec![vec![self.identity]]);
        }
        let p = self.prime().ok_or(Error::NotPGroup(self.order as u64))?;
        let lcs = self.lower_central_series();
        let mut series = vec![lcs[0].clone()];
        for w in lcs.windows(2) {
            let (upper, lower) = (&w[0], &w[1]);
            // ascend from `lower` to `upper` by index-p steps
            let mut chain = vec![lower.clone()];
            let mut m = lower.clone();
            while m.len() < upper.len() {
                let mut x = *upper.iter().find(|x| m.binary_search(x).is_err()).expect("proper");
                loop {
                    let xp = self.pow(x, p);
                    if m.binary_search(&xp).is_ok() {
                        break;
                    }
                    x = xp;
                }
                let mut gens = m.clone();
                gens.push(x);
                m = self.generated(&gens);
                chain.push(m.clone());
            }
            chain.pop();
            series.extend(chain.into_iter().rev());
        }
        Ok(series)
    }

    /// Whether `sigma` is an automorphism.
    pub fn is_automorphism(&self, sigma: &[usize]) -> bool {
        if sigma.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &s in sigma {
            if s >= self.order || seen[s] {
                return false;
            }
            seen[s] = true;
        }
        (0..self.order)
            .all(|a| (0..self.order).all(|b| sigma[self.mul(a, b)] == self.mul(sigma[a], sigma[b])))
    }
}

fn check_prime(p: usize) -> Result<()> {
    if crate::ff::field::is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests;
