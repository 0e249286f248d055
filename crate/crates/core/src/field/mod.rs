//! Exact arithmetic in GF(p^m).
//!
//! An element is stored as the base-`p` integer whose digits are its
//! coordinates in the power basis `1, t, ..., t^(m-1)` of the defining
//! modulus. Fields of order at most 2^20 get log/antilog tables; larger
//! fields fall back to schoolbook multiplication (carry-less for `p = 2`).
//! Frobenius powers are precomputed as images of the power basis so that
//! `a -> a^(p^e)` is a single linear map.

mod extension;
pub(crate) mod gfp;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use extension::Embedding;

const TABLE_LIMIT: u64 = 1 << 20;
const ORDER_LIMIT: u128 = 1 << 63;

static DEFAULT_FIELDS: LazyLock<Mutex<HashMap<(u64, u32), FieldCtx>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// An element of some GF(p^m), packed as `sum c_i p^i`.
///
/// Zero and one have the same encoding in every field.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps a packed encoding without checking it against any field;
    /// [`FieldCtx::elem`] is the checked form.
    pub const fn from_index_unchecked(index: u64) -> FieldElem {
        FieldElem(index)
    }

    /// The packed integer encoding.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `p^e mod (q - 1)` for each Frobenius exponent `e`.
    frob_factor: Vec<u64>,
}

struct Inner {
    p: u64,
    m: u32,
    order: u64,
    modulus: Vec<u64>,
    modulus_bits: u128,
    pow_p: Vec<u64>,
    generator: Option<FieldElem>,
    tables: Option<Tables>,
    /// `frob[e][i] = (t^i)^(p^e)`.
    frob: Vec<Vec<FieldElem>>,
}

/// Immutable, cheaply clonable handle on GF(p^m).
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .inner
            .modulus
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| monomial_text(c, i, "t"))
            .collect();
        write!(
            f,
            "GF({}^{}; modulus = {})",
            self.inner.p,
            self.inner.m,
            terms.join(" + ")
        )
    }
}

pub(crate) fn monomial_text(c: u64, k: usize, var: &str) -> String {
    match (c, k) {
        (c, 0) => c.to_string(),
        (1, 1) => var.to_string(),
        (1, k) => format!("{var}^{k}"),
        (c, 1) => format!("{c}*{var}"),
        (c, k) => format!("{c}*{var}^{k}"),
    }
}

impl FieldCtx {
    /// Builds GF(p^m). Without an explicit modulus the lowest monic
    /// irreducible (in base-`p` order of its lower coefficients) is used.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if m == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        if !gfp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if (p as u128).checked_pow(m).is_none_or(|q| q >= ORDER_LIMIT) {
            return Err(Error::FieldTooLarge { p, m });
        }
        match modulus {
            Some(coeffs) => {
                let found = coeffs.len().saturating_sub(1) as u32;
                if found != m {
                    return Err(Error::DegreeMismatch { expected: m, found });
                }
                if coeffs.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficients must lie in [0, {p})"
                    )));
                }
                if coeffs[m as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !gfp::is_irreducible(coeffs, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                Ok(Self::build(p, m, coeffs.to_vec()))
            }
            None => {
                let mut cache = DEFAULT_FIELDS.lock().unwrap_or_else(|e| e.into_inner());
                let ctx = cache
                    .entry((p, m))
                    .or_insert_with(|| Self::build(p, m, gfp::least_irreducible(p, m)));
                Ok(ctx.clone())
            }
        }
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn build(p: u64, m: u32, modulus: Vec<u64>) -> Self {
        let order = p.pow(m);
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i))
        } else {
            0
        };
        let pow_p = (0..m).map(|i| p.pow(i)).collect();
        let mut inner = Inner {
            p,
            m,
            order,
            modulus,
            modulus_bits,
            pow_p,
            generator: None,
            tables: None,
            frob: Vec::new(),
        };

        // Frobenius images of the power basis, computed with plain arithmetic.
        let basis: Vec<FieldElem> = (0..m).map(|i| FieldElem(inner.pow_p[i as usize])).collect();
        let mut frob = vec![basis];
        if m > 1 {
            let first: Vec<FieldElem> = frob[0].iter().map(|&b| inner.slow_pow(b, p)).collect();
            frob.push(first);
            for e in 2..m as usize {
                let prev = &frob[e - 1];
                let next = prev.iter().map(|&b| inner.linear(&frob[1], b)).collect();
                frob.push(next);
            }
        }
        inner.frob = frob;

        if order <= TABLE_LIMIT {
            let generator = inner.find_generator();
            let q1 = (order - 1) as usize;
            let mut exp = vec![0u32; 2 * q1.max(1)];
            let mut log = vec![0u32; order as usize];
            let mut x = FieldElem::ONE;
            for i in 0..q1 {
                exp[i] = x.0 as u32;
                exp[i + q1] = x.0 as u32;
                log[x.0 as usize] = i as u32;
                x = inner.slow_mul(x, generator);
            }
            let frob_factor = (0..m)
                .map(|e| gfp::pow_mod(p, e as u64, (order - 1).max(1)))
                .collect();
            inner.generator = Some(generator);
            inner.tables = Some(Tables {
                exp,
                log,
                frob_factor,
            });
        }
        FieldCtx {
            inner: Arc::new(inner),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree `m` over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// A primitive element, known whenever the field is small enough to be tabulated.
    pub fn generator(&self) -> Option<FieldElem> {
        self.inner.generator
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.inner.order
    }

    /// Element from its packed index.
    pub fn elem(&self, index: u64) -> Result<FieldElem> {
        if index < self.inner.order {
            Ok(FieldElem(index))
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Element from power-basis coordinates (reduced mod `p`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.inner.m as usize {
            return Err(Error::DegreeMismatch {
                expected: self.inner.m,
                found: coeffs.len() as u32,
            });
        }
        let p = self.inner.p;
        Ok(FieldElem(
            coeffs
                .iter()
                .zip(&self.inner.pow_p)
                .map(|(&c, &w)| (c % p) * w)
                .sum(),
        ))
    }

    /// Coordinates of `a`, always exactly `m` residues.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        let mut d = [0u64; 64];
        self.inner.digits(a.0, &mut d);
        d[..self.inner.m as usize].to_vec()
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let p = self.inner.p as i128;
        FieldElem(((n as i128).rem_euclid(p)) as u64)
    }

    /// The power basis `1, t, ..., t^(m-1)`, linearly independent over GF(p).
    pub fn prime_basis(&self) -> Vec<FieldElem> {
        self.inner.pow_p.iter().map(|&w| FieldElem(w)).collect()
    }

    /// Every element, in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.inner.order).map(FieldElem)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(0..self.inner.order))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(1..self.inner.order))
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.inner.add(a.0, b.0))
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.inner.neg(a.0))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize] as u64)
            }
            None => self.inner.slow_mul(a, b),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.inner.tables {
            Some(t) => {
                let q1 = (self.inner.order - 1) as usize;
                FieldElem(t.exp[(q1 - t.log[a.0 as usize] as usize) % q1] as u64)
            }
            None => self.inner.slow_pow(a, self.inner.order - 2),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, k: u64) -> FieldElem {
        match &self.inner.tables {
            Some(t) if a.0 != 0 => {
                let q1 = self.inner.order - 1;
                let e = gfp::mul_mod(t.log[a.0 as usize] as u64, k % q1, q1);
                FieldElem(t.exp[e as usize] as u64)
            }
            _ => self.inner.slow_pow(a, k),
        }
    }

    /// `a^(p^e)`; `e` is taken modulo `m`.
    #[inline]
    pub fn frob(&self, a: FieldElem, e: u32) -> FieldElem {
        let e = e % self.inner.m;
        if e == 0 || a.0 <= 1 {
            return a;
        }
        match &self.inner.tables {
            Some(t) => {
                let q1 = self.inner.order - 1;
                let k = gfp::mul_mod(t.log[a.0 as usize] as u64, t.frob_factor[e as usize], q1);
                FieldElem(t.exp[k as usize] as u64)
            }
            None => self.inner.linear(&self.inner.frob[e as usize], a),
        }
    }

    /// Applies `sigma` after checking that both it and `a` belong to this field.
    pub fn apply_aut(&self, sigma: Automorphism, a: FieldElem) -> Result<FieldElem> {
        if sigma.degree != self.inner.m || !self.contains(a) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.frob(a, sigma.exp))
    }

    /// `a * sigma(a) * ... * sigma^(k-1)(a)` with `k` the order of `sigma`:
    /// the norm to the fixed field of `sigma`. Two nonzero elements are
    /// sigma-conjugate exactly when their norms agree.
    pub fn sigma_norm(&self, sigma: Automorphism, a: FieldElem) -> Result<FieldElem> {
        if sigma.degree != self.inner.m || !self.contains(a) {
            return Err(Error::ContextMismatch);
        }
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut acc = a;
        let mut cur = a;
        for _ in 1..sigma.order() {
            cur = self.frob(cur, sigma.exp);
            acc = self.mul(acc, cur);
        }
        Ok(acc)
    }

    /// GF(p^M) together with an embedding of this field into it.
    pub fn extend(&self, big_degree: u32) -> Result<(FieldCtx, Embedding)> {
        extension::extend_field(self, big_degree)
    }

    /// Human-readable element, highest power of `t` first.
    pub fn format_elem(&self, a: FieldElem) -> String {
        let coeffs = self.coeffs(a);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| monomial_text(c, i, "t"))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Multiplication by an element of the prime subfield given as an integer.
    pub(crate) fn scale(&self, c: u64, a: FieldElem) -> FieldElem {
        FieldElem(self.inner.scale(c % self.inner.p, a.0))
    }
}

impl Inner {
    #[inline]
    fn digits(&self, mut a: u64, out: &mut [u64; 64]) {
        let m = self.m as usize;
        if self.p == 2 {
            for d in out.iter_mut().take(m) {
                *d = a & 1;
                a >>= 1;
            }
        } else {
            for d in out.iter_mut().take(m) {
                *d = a % self.p;
                a /= self.p;
            }
        }
    }

    #[inline]
    fn pack(&self, d: &[u64]) -> u64 {
        d.iter().zip(&self.pow_p).map(|(&c, &w)| c * w).sum()
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a as u128 + b as u128;
            return (s % self.p as u128) as u64;
        }
        let (mut x, mut y) = (a, b);
        let mut out = 0u64;
        for &w in &self.pow_p {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * w;
            x /= self.p;
            y /= self.p;
        }
        out
    }

    #[inline]
    fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut x = a;
        let mut out = 0u64;
        for &w in &self.pow_p {
            let d = x % self.p;
            if d != 0 {
                out += (self.p - d) * w;
            }
            x /= self.p;
        }
        out
    }

    fn scale(&self, c: u64, a: u64) -> u64 {
        match c {
            0 => 0,
            1 => a,
            _ => {
                let mut d = [0u64; 64];
                self.digits(a, &mut d);
                let m = self.m as usize;
                for x in d.iter_mut().take(m) {
                    *x = gfp::mul_mod(*x, c, self.p);
                }
                self.pack(&d[..m])
            }
        }
    }

    /// `sum_i a_i * images[i]` where `a_i` are the coordinates of `a`.
    fn linear(&self, images: &[FieldElem], a: FieldElem) -> FieldElem {
        let m = self.m as usize;
        if self.p == 2 {
            let mut acc = 0u64;
            let mut x = a.0;
            let mut i = 0;
            while x != 0 {
                if x & 1 == 1 {
                    acc ^= images[i].0;
                }
                x >>= 1;
                i += 1;
            }
            return FieldElem(acc);
        }
        let mut coords = [0u64; 64];
        self.digits(a.0, &mut coords);
        let mut acc = [0u128; 64];
        let mut img = [0u64; 64];
        for i in 0..m {
            if coords[i] == 0 {
                continue;
            }
            self.digits(images[i].0, &mut img);
            for j in 0..m {
                acc[j] += coords[i] as u128 * img[j] as u128;
            }
        }
        let mut out = [0u64; 64];
        for j in 0..m {
            out[j] = (acc[j] % self.p as u128) as u64;
        }
        FieldElem(self.pack(&out[..m]))
    }

    fn slow_mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let m = self.m as usize;
        if self.p == 2 {
            let mut prod: u128 = 0;
            let mut x = a.0;
            let mut shift = 0;
            while x != 0 {
                if x & 1 == 1 {
                    prod ^= (b.0 as u128) << shift;
                }
                x >>= 1;
                shift += 1;
            }
            for bit in (m..2 * m).rev() {
                if (prod >> bit) & 1 == 1 {
                    prod ^= self.modulus_bits << (bit - m);
                }
            }
            return FieldElem(prod as u64);
        }
        let p = self.p as u128;
        if m == 1 {
            return FieldElem(((a.0 as u128 * b.0 as u128) % p) as u64);
        }
        let mut da = [0u64; 64];
        let mut db = [0u64; 64];
        self.digits(a.0, &mut da);
        self.digits(b.0, &mut db);
        let mut conv = [0u128; 128];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                conv[i + j] += da[i] as u128 * db[j] as u128;
            }
        }
        for c in conv.iter_mut().take(2 * m - 1) {
            *c %= p;
        }
        for d in (m..2 * m - 1).rev() {
            let c = conv[d];
            if c == 0 {
                continue;
            }
            conv[d] = 0;
            for i in 0..m {
                let sub = c * self.modulus[i] as u128 % p;
                conv[d - m + i] = (conv[d - m + i] + p - sub) % p;
            }
        }
        let mut out = [0u64; 64];
        for i in 0..m {
            out[i] = conv[i] as u64;
        }
        FieldElem(self.pack(&out[..m]))
    }

    fn slow_pow(&self, a: FieldElem, mut k: u64) -> FieldElem {
        let mut acc = FieldElem::ONE;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> FieldElem {
        let q1 = self.order - 1;
        let factors = gfp::prime_factors(q1);
        (1..self.order)
            .map(FieldElem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.slow_pow(g, q1 / r) != FieldElem::ONE)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }
}

/// A Frobenius power `a -> a^(p^e)` of a specific GF(p^m).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    exp: u32,
    degree: u32,
}

impl Automorphism {
    pub fn identity(ctx: &FieldCtx) -> Self {
        Automorphism {
            exp: 0,
            degree: ctx.degree(),
        }
    }

    /// `a -> a^(p^e)` for `0 <= e < m`.
    pub fn frobenius(ctx: &FieldCtx, e: u32) -> Result<Self> {
        let degree = ctx.degree();
        if e >= degree {
            return Err(Error::InvalidExponent { exp: e, degree });
        }
        Ok(Automorphism { exp: e, degree })
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    /// Degree of the field this automorphism acts on.
    pub fn field_degree(self) -> u32 {
        self.degree
    }

    pub fn is_identity(self) -> bool {
        self.exp == 0
    }

    /// Smallest `k >= 1` with `sigma^k = id`.
    pub fn order(self) -> u32 {
        self.degree / gcd(self.exp, self.degree)
    }

    pub fn pow(self, k: u32) -> Self {
        let exp = ((self.exp as u64 * k as u64) % self.degree as u64) as u32;
        Automorphism { exp, ..self }
    }

    pub fn inverse(self) -> Self {
        Automorphism {
            exp: (self.degree - self.exp) % self.degree,
            ..self
        }
    }

    pub fn compose(self, other: Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::ContextMismatch);
        }
        Ok(Automorphism {
            exp: (self.exp + other.exp) % self.degree,
            ..self
        })
    }

    #[inline]
    pub fn apply(self, ctx: &FieldCtx, a: FieldElem) -> FieldElem {
        debug_assert_eq!(ctx.degree(), self.degree);
        ctx.frob(a, self.exp)
    }

    /// `sigma^k(a)`.
    #[inline]
    pub fn apply_pow(self, ctx: &FieldCtx, a: FieldElem, k: usize) -> FieldElem {
        let e = (self.exp as u64 * k as u64) % self.degree as u64;
        ctx.frob(a, e as u32)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldCtx {
        FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn construction() {
        let f = gf4();
        assert_eq!(f.order(), 4);
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f5.modulus(), &[0, 1]);
        assert_eq!(
            FieldCtx::new(7, 0, None).unwrap_err(),
            Error::DegreeMismatch {
                expected: 1,
                found: 0
            }
        );
        assert_eq!(FieldCtx::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldCtx::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus(2)
        );
        assert!(matches!(
            FieldCtx::new(2, 64, None),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn frobenius_on_gf4() {
        let f = gf4();
        let w = f.elem(2).unwrap();
        let s = Automorphism::frobenius(&f, 1).unwrap();
        let w2 = f.apply_aut(s, w).unwrap();
        assert_eq!(w2, f.add(w, f.one()));
        assert_eq!(w2, f.mul(w, w));
        assert_eq!(f.apply_aut(s, f.one()).unwrap(), f.one());
        let id = Automorphism::identity(&f);
        assert_eq!(f.apply_aut(id, w).unwrap(), w);
        assert_eq!(s.order(), 2);
        let other = FieldCtx::new(2, 3, None).unwrap();
        assert_eq!(other.apply_aut(s, w).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn table_and_plain_arithmetic_agree() {
        for (p, m) in [(2, 5), (3, 3), (5, 2), (7, 1)] {
            let f = FieldCtx::new(p, m, None).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.inner.slow_mul(a, b));
                }
                for e in 0..m {
                    assert_eq!(f.frob(a, e), f.inner.slow_pow(a, p.pow(e)));
                    assert_eq!(f.frob(a, e), f.inner.linear(&f.inner.frob[e as usize], a));
                }
            }
        }
    }

    #[test]
    fn inverses() {
        let f = FieldCtx::new(3, 4, None).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn large_fields_without_tables() {
        let f = FieldCtx::new(2, 24, None).unwrap();
        assert!(f.generator().is_none());
        let a = f.elem(0xabcdef).unwrap();
        let inv = f.inv(a).unwrap();
        assert_eq!(f.mul(a, inv), f.one());
        assert_eq!(f.frob(a, 3), f.pow(a, 8));
        let g = FieldCtx::new(3, 20, None).unwrap();
        let b = g.elem(123_456_789).unwrap();
        assert_eq!(g.mul(b, g.inv(b).unwrap()), g.one());
        assert_eq!(g.frob(b, 2), g.pow(b, 9));
        let big = FieldCtx::prime(2_305_843_009_213_693_951).unwrap();
        let c = big.from_int(-1);
        assert_eq!(big.mul(c, c), big.one());
    }

    #[test]
    fn sigma_norm_examples() {
        let f = gf4();
        let s = Automorphism::frobenius(&f, 1).unwrap();
        let w = f.elem(2).unwrap();
        assert_eq!(f.sigma_norm(s, w).unwrap(), f.one());
        assert_eq!(f.sigma_norm(s, f.one()).unwrap(), f.one());
        assert_eq!(f.sigma_norm(s, f.zero()), Err(Error::ZeroElement));

        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let g = f9.generator().unwrap();
        let s9 = Automorphism::frobenius(&f9, 1).unwrap();
        assert_eq!(f9.sigma_norm(s9, g).unwrap(), f9.pow(g, 4));
    }

    #[test]
    fn basis_and_coordinates() {
        let f = FieldCtx::new(2, 3, None).unwrap();
        let basis = f.prime_basis();
        assert_eq!(basis.len(), 3);
        assert_eq!(f.coeffs(basis[2]), vec![0, 0, 1]);
        assert_eq!(
            FieldCtx::prime(5).unwrap().prime_basis(),
            vec![FieldElem::ONE]
        );
        let g = FieldCtx::new(5, 2, None).unwrap();
        let a = g.from_coeffs(&[3, 4]).unwrap();
        assert_eq!(g.coeffs(a), vec![3, 4]);
        assert_eq!(g.format_elem(a), "4*t + 3");
        assert_eq!(format!("{}", gf4()), "GF(2^2; modulus = 1 + t + t^2)");
    }
}
