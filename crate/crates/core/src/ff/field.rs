//! Arithmetic in GF(p) and GF(p^m).
//!
//! An element of GF(p^m) is the residue of a polynomial `c_0 + c_1 t + ... +
//! c_{m-1} t^{m-1}` modulo the field's defining polynomial. It is stored packed
//! as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, so the prime subfield
//! is exactly the values `0..p`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Largest supported field order. Multiplication in extension fields goes
/// through log/exp tables of this size.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// A packed field element. Only meaningful together with its [`FieldCtx`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic context for GF(p^m).
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length m + 1). Empty when m = 1.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Vec<u32>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.p, self.m, self.modulus)
        }
    }
}

static FIELDS: Lazy<Mutex<HashMap<(u32, u32), Arc<FieldCtx>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The shared context for GF(p^m) with the default (lowest) modulus.
pub fn gf(p: u64, m: u32) -> Result<Arc<FieldCtx>> {
    let key = (p as u32, m);
    if let Some(ctx) = FIELDS.lock().unwrap().get(&key) {
        return Ok(ctx.clone());
    }
    let ctx = Arc::new(FieldCtx::new(p, m)?);
    Ok(FIELDS.lock().unwrap().entry(key).or_insert(ctx).clone())
}

/// Shorthand for the prime field GF(p).
pub fn prime_field(p: u64) -> Result<Arc<FieldCtx>> {
    gf(p, 1)
}

// Polynomials over GF(p) as plain coefficient vectors (low to high); only used
// while building a context, before any `FieldCtx` for the extension exists.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = pow_mod(b[db], p - 2, p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        for (i, &bc) in b.iter().enumerate() {
            let idx = top - db + i;
            r[idx] = (r[idx] + p - (c * bc) % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn pow_mod(mut b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = b as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    b = acc as u32;
    b
}

fn digits(v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    let mut v = v;
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

fn pack(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 || f[deg] != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low as u32, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    /// Builds GF(p^m) using the lowest monic irreducible modulus, where
    /// polynomials are ordered by their packed lower coefficients.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadModulus(0));
        }
        let q = (p as u128).pow(m);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, m });
        }
        let p32 = p as u32;
        if m == 1 {
            return Self::with_modulus(p, &[]);
        }
        for low in 0..(q as u32) {
            let mut f = digits(low, p32, m);
            f.push(1);
            if is_irreducible_mod_p(&f, p32) {
                return Self::with_modulus(p, &f);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// Builds GF(p^m) from an explicit monic modulus (coefficients low to
    /// high). Irreducibility is verified by trial factorization.
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p32 = p as u32;
        if modulus.is_empty() {
            if p > MAX_FIELD_ORDER {
                return Err(Error::FieldTooLarge { p, m: 1 });
            }
            return Ok(FieldCtx {
                p: p32,
                m: 1,
                q: p32,
                modulus: Vec::new(),
                exp: Vec::new(),
                log: Vec::new(),
                add_table: Vec::new(),
            });
        }
        let m = (modulus.len() - 1) as u32;
        if modulus.iter().any(|&c| c >= p32) || !is_irreducible_mod_p(modulus, p32) {
            return Err(Error::BadModulus(m as usize));
        }
        if m == 1 {
            // a linear modulus defines the prime field itself
            return Self::with_modulus(p, &[]);
        }
        let q128 = (p as u128).pow(m);
        if q128 > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, m });
        }
        let q = q128 as u32;
        let raw_mul = |a: u32, b: u32| -> u32 {
            let da = digits(a, p32, m);
            let db = digits(b, p32, m);
            let mut prod = vec![0u32; 2 * m as usize];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p32;
                }
            }
            let mut r = poly_rem(&prod, modulus, p32);
            r.resize(m as usize, 0);
            pack(&r, p32)
        };
        // find a generator of the multiplicative group
        let mut exp = Vec::new();
        'search: for g in 2..q {
            exp.clear();
            let mut x = 1u32;
            for _ in 0..(q - 1) {
                exp.push(x);
                x = raw_mul(x, g);
                if x == 1 && exp.len() < (q - 1) as usize {
                    continue 'search;
                }
            }
            break;
        }
        debug_assert_eq!(exp.len(), (q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let add_table = if p32 != 2 && q <= 1024 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p32, m);
                for b in 0..q {
                    let db = digits(b, p32, m);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p32).collect();
                    t[(a * q + b) as usize] = pack(&s, p32);
                }
            }
            t
        } else {
            Vec::new()
        };
        Ok(FieldCtx {
            p: p32,
            m,
            q,
            modulus: modulus.to_vec(),
            exp,
            log,
            add_table,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.q as u64
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// Defining polynomial, low to high; empty for the prime field.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// The class of `t` (a root of the modulus); `None` over the prime field.
    pub fn generator(&self) -> Option<Fe> {
        (self.m > 1).then_some(Fe(self.p))
    }

    /// Checked conversion from a packed value.
    pub fn element(&self, v: u64) -> Result<Fe> {
        if v < self.q as u64 {
            Ok(Fe(v as u32))
        } else {
            Err(Error::Invalid {
                what: "field element",
                detail: format!("{v} is not below {}", self.q),
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_i64(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    /// Coefficients of the polynomial residue (length m).
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        digits(a.0, self.p, self.m)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Fe {
        Fe(pack(c, self.p))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if self.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        if !self.add_table.is_empty() {
            return Fe(self.add_table[(a.0 * self.q + b.0) as usize]);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.m {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        if self.m == 1 {
            return Fe(self.p - a.0);
        }
        let d: Vec<u32> = self
            .coeffs(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        Fe(pack(&d, self.p))
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        let qm1 = self.q - 1;
        Fe(self.exp[(if s >= qm1 { s - qm1 } else { s }) as usize])
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        if self.m > 1 {
            let qm1 = (self.q - 1) as u64;
            let l = (self.log[a.0 as usize] as u64 * (e % qm1)) % qm1;
            return Fe(self.exp[l as usize]);
        }
        // Fermat: a^{k(p-1)} = 1 for a ≠ 0
        Fe(pow_mod(a.0, (e % (self.p as u64 - 1)) as u32, self.p))
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::InverseOfZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// a ↦ a^p.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u64)
    }

    /// a ↦ a^{1/p}, the inverse of [`Self::frobenius`].
    pub fn frobenius_inv(&self, a: Fe) -> Fe {
        self.pow(a, (self.q / self.p) as u64)
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

/// A field element bundled with its context, for callers that want checked
/// arithmetic across contexts.
#[derive(Clone, Debug)]
pub struct FieldElem {
    ctx: Arc<FieldCtx>,
    value: Fe,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.value == other.value
    }
}

impl FieldElem {
    pub fn new(ctx: &Arc<FieldCtx>, value: Fe) -> Result<Self> {
        ctx.element(value.0 as u64)?;
        Ok(FieldElem {
            ctx: ctx.clone(),
            value,
        })
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    fn same(&self, other: &Self) -> Result<()> {
        if *self.ctx == *other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn wrap(&self, value: Fe) -> Self {
        FieldElem {
            ctx: self.ctx.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.ctx.add(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.ctx.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.ctx.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.ctx.pow(self.value, e))
    }

    pub fn frobenius(&self) -> Self {
        self.wrap(self.ctx.frobenius(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f2 = gf(2, 1).unwrap();
        assert_eq!(f2.add(Fe(1), Fe(1)), Fe(0));
        let f3 = gf(3, 1).unwrap();
        assert_eq!(f3.mul(Fe(2), Fe(2)), Fe(1));
        // GF(4) = GF(2)[t]/(t^2 + t + 1): t·t = t + 1
        let f4 = gf(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let t = f4.generator().unwrap();
        assert_eq!(f4.mul(t, t), f4.from_coeffs(&[1, 1]));
    }

    #[test]
    fn lowest_modulus_is_chosen() {
        // x^3 + x + 1 precedes x^3 + x^2 + 1 in packed order
        assert_eq!(gf(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        // x^2 + 1 is irreducible over GF(3)
        assert_eq!(gf(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn explicit_modulus_is_checked() {
        assert_eq!(
            FieldCtx::with_modulus(2, &[1, 0, 1]).unwrap_err(),
            Error::BadModulus(2)
        );
        assert!(FieldCtx::with_modulus(2, &[1, 1, 1]).is_ok());
        assert_eq!(FieldCtx::new(6, 1).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn inverse_of_zero_and_context_mismatch() {
        let f3 = gf(3, 1).unwrap();
        assert_eq!(f3.inv(Fe(0)), Err(Error::InverseOfZero));
        let a = FieldElem::new(&f3, Fe(1)).unwrap();
        let b = FieldElem::new(&gf(2, 1).unwrap(), Fe(1)).unwrap();
        assert_eq!(a.add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.inv().unwrap().value(), Fe(1));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, m) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)] {
            let f = gf(p, m).unwrap();
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE, "{f:?} {a:?}");
                }
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                assert_eq!(f.frobenius_inv(f.frobenius(a)), a);
                for b in f.elements() {
                    // Frobenius is additive
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
        }
    }

    #[test]
    fn frobenius_is_bijective() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4)] {
            let f = gf(p, m).unwrap();
            let mut seen = vec![false; f.order() as usize];
            for a in f.elements() {
                seen[f.frobenius(a).0 as usize] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
