//! Univariate Ore polynomials `A[x; sigma]` with `x a = sigma(a) x`.
//!
//! The same type doubles as the ring of formal operator polynomials
//! `sum a_i sigma^i` under composition (see [`crate::opeval`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{monomial_text, Automorphism, Embedding, FieldCtx, FieldElem};

/// Dense skew polynomial; `coeffs[i]` multiplies `x^i` from the left.
#[derive(Clone, PartialEq, Eq)]
pub struct OrePoly {
    ctx: FieldCtx,
    sigma: Automorphism,
    coeffs: Vec<FieldElem>,
}

impl OrePoly {
    pub fn zero(ctx: &FieldCtx, sigma: Automorphism) -> Self {
        OrePoly {
            ctx: ctx.clone(),
            sigma,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldCtx, sigma: Automorphism) -> Self {
        Self::constant(ctx, sigma, FieldElem::ONE)
    }

    pub fn constant(ctx: &FieldCtx, sigma: Automorphism, c: FieldElem) -> Self {
        Self::from_coeffs(ctx, sigma, vec![c])
    }

    /// The indeterminate `x`.
    pub fn x(ctx: &FieldCtx, sigma: Automorphism) -> Self {
        Self::monomial(ctx, sigma, FieldElem::ONE, 1)
    }

    /// `c x^k`.
    pub fn monomial(ctx: &FieldCtx, sigma: Automorphism, c: FieldElem, k: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(ctx, sigma, coeffs)
    }

    pub fn from_coeffs(ctx: &FieldCtx, sigma: Automorphism, coeffs: Vec<FieldElem>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| ctx.contains(c)));
        let mut p = OrePoly {
            ctx: ctx.clone(),
            sigma,
            coeffs,
        };
        p.normalize();
        p
    }

    /// Random polynomial of degree exactly `deg`.
    pub fn random<R: Rng + ?Sized>(
        ctx: &FieldCtx,
        sigma: Automorphism,
        deg: usize,
        rng: &mut R,
    ) -> Self {
        let mut coeffs: Vec<FieldElem> = (0..deg).map(|_| ctx.random(rng)).collect();
        coeffs.push(ctx.random_nonzero(rng));
        Self::from_coeffs(ctx, sigma, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn sigma(&self) -> Automorphism {
        self.sigma
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// `None` stands for the degree of the zero polynomial, minus infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElem::ONE
    }

    pub fn leading_coeff(&self) -> Option<FieldElem> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.ctx == other.ctx
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<FieldElem>) -> Self {
        Self::from_coeffs(&self.ctx, self.sigma, coeffs)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    /// Product under `x^i a = sigma^i(a) x^i`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx, self.sigma));
        }
        let ctx = &self.ctx;
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let twisted = self.sigma.apply_pow(ctx, b, i);
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, twisted));
            }
        }
        Ok(self.with_coeffs(out))
    }

    /// `c * self`, a left scalar multiple (no twist).
    pub fn scale_left(&self, c: FieldElem) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.ctx.mul(c, a)).collect();
        self.with_coeffs(coeffs)
    }

    /// `self * c`: each `a_i` becomes `a_i sigma^i(c)`.
    pub fn scale_right(&self, c: FieldElem) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| self.ctx.mul(a, self.sigma.apply_pow(&self.ctx, c, i)))
            .collect();
        self.with_coeffs(coeffs)
    }

    /// Applies a field automorphism to every coefficient, fixing `x`.
    pub fn twist(&self, tau: Automorphism, k: usize) -> Self {
        if k == 0 || tau.is_identity() {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| tau.apply_pow(&self.ctx, a, k))
            .collect();
        self.with_coeffs(coeffs)
    }

    /// `x^k * self`.
    pub fn shift_left(&self, k: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; k];
        coeffs.extend(self.twist(self.sigma, k).coeffs);
        self.with_coeffs(coeffs)
    }

    /// Moves the polynomial into a larger field along `embedding`, now
    /// twisted by `sigma` (which must restrict to the current automorphism).
    pub fn embed(&self, embedding: &Embedding, sigma: Automorphism) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| embedding.apply(a)).collect();
        Self::from_coeffs(embedding.target(), sigma, coeffs)
    }

    /// Unique `(q, r)` with `self = q * b + r` and `deg r < deg b`.
    pub fn right_divmod(&self, b: &Self) -> Result<(Self, Self)> {
        self.check_ring(b)?;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let ctx = &self.ctx;
        let lead = b.coeffs[db];
        let mut r = self.coeffs.clone();
        let mut q = vec![FieldElem::ZERO; r.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let k = top - db;
            // c x^k * b has leading coefficient c sigma^k(lead)
            let c = ctx.div(r[top], self.sigma.apply_pow(ctx, lead, k))?;
            q[k] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let t = ctx.mul(c, self.sigma.apply_pow(ctx, bj, k));
                r[j + k] = ctx.sub(r[j + k], t);
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((self.with_coeffs(q), self.with_coeffs(r)))
    }

    /// Unique `(q, r)` with `self = b * q + r` and `deg r < deg b`.
    pub fn left_divmod(&self, b: &Self) -> Result<(Self, Self)> {
        self.check_ring(b)?;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let ctx = &self.ctx;
        let lead_inv = ctx.inv(b.coeffs[db])?;
        let undo = self.sigma.inverse();
        let mut r = self.coeffs.clone();
        let mut q = vec![FieldElem::ZERO; r.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let k = top - db;
            // b * c x^k has leading coefficient lead sigma^db(c)
            let c = undo.apply_pow(ctx, ctx.mul(lead_inv, r[top]), db);
            q[k] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let t = ctx.mul(bj, self.sigma.apply_pow(ctx, c, j));
                r[j + k] = ctx.sub(r[j + k], t);
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((self.with_coeffs(q), self.with_coeffs(r)))
    }

    /// `lc^-1 * self`.
    pub fn make_monic(&self) -> Result<Self> {
        let lead = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale_left(self.ctx.inv(lead)?))
    }

    /// Monic greatest common right divisor.
    pub fn gcrd(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.right_divmod(&b)?;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Text form with the indeterminate spelled `var`.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayOre { poly: self, var }
    }
}

struct DisplayOre<'a> {
    poly: &'a OrePoly,
    var: &'a str,
}

impl fmt::Display for DisplayOre<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = &self.poly.ctx;
        let terms: Vec<String> = self
            .poly
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| term_text(ctx, c, k, self.var))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `c*var^k` with the coefficient parenthesized when it has several terms.
pub(crate) fn term_text(ctx: &FieldCtx, c: FieldElem, k: usize, var: &str) -> String {
    let power = monomial_text(1, k, var);
    if k == 0 {
        return ctx.format_elem(c);
    }
    if c == FieldElem::ONE {
        return power;
    }
    let text = ctx.format_elem(c);
    let single = ctx.coeffs(c).iter().filter(|&&d| d != 0).count() == 1;
    if single {
        format!("{text}*{power}")
    } else {
        format!("({text})*{power}")
    }
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly[e={}]({})", self.sigma.exponent(), self)
    }
}

impl Add for &OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        self.try_add(rhs)
            .expect("ring mismatch in OrePoly addition")
    }
}

impl Sub for &OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self.try_sub(rhs)
            .expect("ring mismatch in OrePoly subtraction")
    }
}

impl Mul for &OrePoly {
    type Output = OrePoly;
    fn mul(self, rhs: &OrePoly) -> OrePoly {
        self.try_mul(rhs)
            .expect("ring mismatch in OrePoly multiplication")
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        let coeffs = self.coeffs.iter().map(|&a| self.ctx.neg(a)).collect();
        self.with_coeffs(coeffs)
    }
}
