//! The Ore algebra `A[x1; s1][x2; s2]` with commuting `x1`, `x2`.
//!
//! Elements are stored recursively as polynomials in `x2` whose
//! coefficients are [`OrePoly`] values in `x1`. Since `s2` fixes `x1`,
//! moving `x2` past an `x1`-polynomial twists each field coefficient by `s2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Automorphism, Embedding, FieldCtx, FieldElem};
use crate::ore::{term_text, OrePoly};

#[derive(Clone, PartialEq, Eq)]
pub struct BivarOrePoly {
    ctx: FieldCtx,
    sigma1: Automorphism,
    sigma2: Automorphism,
    coeffs: Vec<OrePoly>,
}

impl BivarOrePoly {
    pub fn zero(ctx: &FieldCtx, sigma1: Automorphism, sigma2: Automorphism) -> Self {
        BivarOrePoly {
            ctx: ctx.clone(),
            sigma1,
            sigma2,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldCtx, sigma1: Automorphism, sigma2: Automorphism) -> Self {
        Self::constant(ctx, sigma1, sigma2, FieldElem::ONE)
    }

    pub fn constant(
        ctx: &FieldCtx,
        sigma1: Automorphism,
        sigma2: Automorphism,
        c: FieldElem,
    ) -> Self {
        Self::from_inner(ctx, sigma1, sigma2, OrePoly::constant(ctx, sigma1, c))
    }

    /// An `x1`-polynomial viewed as constant in `x2`.
    pub fn from_inner(
        ctx: &FieldCtx,
        sigma1: Automorphism,
        sigma2: Automorphism,
        a: OrePoly,
    ) -> Self {
        Self::from_coeffs(ctx, sigma1, sigma2, vec![a]).expect("inner polynomial ring")
    }

    pub fn x1(ctx: &FieldCtx, sigma1: Automorphism, sigma2: Automorphism) -> Self {
        Self::from_inner(ctx, sigma1, sigma2, OrePoly::x(ctx, sigma1))
    }

    pub fn x2(ctx: &FieldCtx, sigma1: Automorphism, sigma2: Automorphism) -> Self {
        let coeffs = vec![OrePoly::zero(ctx, sigma1), OrePoly::one(ctx, sigma1)];
        Self::from_coeffs(ctx, sigma1, sigma2, coeffs).expect("inner polynomial ring")
    }

    /// `coeffs[i]` is the coefficient of `x2^i`.
    pub fn from_coeffs(
        ctx: &FieldCtx,
        sigma1: Automorphism,
        sigma2: Automorphism,
        coeffs: Vec<OrePoly>,
    ) -> Result<Self> {
        if coeffs.iter().any(|c| c.sigma() != sigma1 || c.ctx() != ctx) {
            return Err(Error::RingMismatch);
        }
        if sigma2.field_degree() != ctx.degree() {
            return Err(Error::ContextMismatch);
        }
        let mut f = BivarOrePoly {
            ctx: ctx.clone(),
            sigma1,
            sigma2,
            coeffs,
        };
        f.normalize();
        Ok(f)
    }

    /// Random element with `deg_x2 = deg_x2` exactly and every `x1`-degree at most `deg_x1`.
    pub fn random<R: Rng + ?Sized>(
        ctx: &FieldCtx,
        sigma1: Automorphism,
        sigma2: Automorphism,
        deg_x1: usize,
        deg_x2: usize,
        rng: &mut R,
    ) -> Self {
        let mut coeffs = Vec::with_capacity(deg_x2 + 1);
        for i in 0..=deg_x2 {
            let d = rng.gen_range(0..=deg_x1);
            let c = if i == deg_x2 || rng.gen_bool(0.85) {
                OrePoly::random(ctx, sigma1, d, rng)
            } else {
                OrePoly::zero(ctx, sigma1)
            };
            coeffs.push(c);
        }
        Self::from_coeffs(ctx, sigma1, sigma2, coeffs).expect("same ring")
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn sigma1(&self) -> Automorphism {
        self.sigma1
    }

    pub fn sigma2(&self) -> Automorphism {
        self.sigma2
    }

    pub fn coeffs(&self) -> &[OrePoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest power of `x2` with a nonzero coefficient; `None` for zero.
    pub fn degree_x2(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x2^i` (zero when out of range).
    pub fn coeff_x2(&self, i: usize) -> OrePoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| OrePoly::zero(&self.ctx, self.sigma1))
    }

    pub fn leading_x2(&self) -> OrePoly {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| OrePoly::zero(&self.ctx, self.sigma1))
    }

    /// Largest `x1`-degree over all coefficients.
    pub fn max_degree_x1(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(OrePoly::degree).max()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.sigma1 == other.sigma1 && self.sigma2 == other.sigma2 && self.ctx == other.ctx
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<OrePoly>) -> Self {
        let mut f = BivarOrePoly {
            ctx: self.ctx.clone(),
            sigma1: self.sigma1,
            sigma2: self.sigma2,
            coeffs,
        };
        f.normalize();
        f
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| &self.coeff_x2(i) + &other.coeff_x2(i))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| &self.coeff_x2(i) - &other.coeff_x2(i))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    /// `(a x2^i)(b x2^j) = a * s2^i(b) * x2^(i+j)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx, self.sigma1, self.sigma2));
        }
        let mut out =
            vec![OrePoly::zero(&self.ctx, self.sigma1); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a * &b.twist(self.sigma2, i);
                out[i + j] = &out[i + j] + &term;
            }
        }
        Ok(self.with_coeffs(out))
    }

    /// `x2^k * self`: coefficient of `x2^(i+k)` is `s2^k(a_i)`.
    pub fn shift_left(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![OrePoly::zero(&self.ctx, self.sigma1); k];
        coeffs.extend(self.coeffs.iter().map(|a| a.twist(self.sigma2, k)));
        self.with_coeffs(coeffs)
    }

    /// Left multiplication by an `x1`-polynomial.
    pub fn mul_left_inner(&self, a: &OrePoly) -> Result<Self> {
        let lifted = Self::from_coeffs(&self.ctx, self.sigma1, self.sigma2, vec![a.clone()])?;
        lifted.try_mul(self)
    }

    /// Moves every field coefficient along `embedding`; the automorphisms are
    /// replaced by lifts acting on the target field.
    pub fn embed(&self, embedding: &Embedding, sigma1: Automorphism, sigma2: Automorphism) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.embed(embedding, sigma1))
            .collect();
        BivarOrePoly::from_coeffs(embedding.target(), sigma1, sigma2, coeffs)
            .expect("embedded coefficients share the target ring")
    }
}

impl fmt::Display for BivarOrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let inner = match a.term_count() {
                1 => {
                    let k = a.degree().expect("nonzero");
                    term_text(&self.ctx, a.coeff(k), k, "x1")
                }
                _ => a.display_with("x1").to_string(),
            };
            let power = match i {
                0 => String::new(),
                1 => "x2".to_string(),
                i => format!("x2^{i}"),
            };
            let term = if i == 0 {
                inner
            } else if a.is_one() {
                power
            } else if a.term_count() == 1 {
                format!("{inner}*{power}")
            } else {
                format!("({inner})*{power}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for BivarOrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BivarOrePoly[e1={}, e2={}]({})",
            self.sigma1.exponent(),
            self.sigma2.exponent(),
            self
        )
    }
}

impl Add for &BivarOrePoly {
    type Output = BivarOrePoly;
    fn add(self, rhs: &BivarOrePoly) -> BivarOrePoly {
        self.try_add(rhs)
            .expect("ring mismatch in BivarOrePoly addition")
    }
}

impl Sub for &BivarOrePoly {
    type Output = BivarOrePoly;
    fn sub(self, rhs: &BivarOrePoly) -> BivarOrePoly {
        self.try_sub(rhs)
            .expect("ring mismatch in BivarOrePoly subtraction")
    }
}

impl Mul for &BivarOrePoly {
    type Output = BivarOrePoly;
    fn mul(self, rhs: &BivarOrePoly) -> BivarOrePoly {
        self.try_mul(rhs)
            .expect("ring mismatch in BivarOrePoly multiplication")
    }
}

impl Neg for &BivarOrePoly {
    type Output = BivarOrePoly;
    fn neg(self) -> BivarOrePoly {
        self.with_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> (FieldCtx, Automorphism, FieldElem) {
        let ctx = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let s = Automorphism::frobenius(&ctx, 1).unwrap();
        (ctx.clone(), s, ctx.elem(2).unwrap())
    }

    #[test]
    fn x2_twists_coefficients() {
        let (ctx, s, w) = gf4();
        let x2 = BivarOrePoly::x2(&ctx, s, s);
        let cw = BivarOrePoly::constant(&ctx, s, s, w);
        let wp1 = ctx.add(w, ctx.one());
        let prod = &x2 * &cw;
        assert_eq!(prod.degree_x2(), Some(1));
        assert_eq!(prod.coeff_x2(1), OrePoly::constant(&ctx, s, wp1));

        // x2 (w x1) = (w + 1) x1 x2
        let wx1 = BivarOrePoly::from_inner(&ctx, s, s, OrePoly::monomial(&ctx, s, w, 1));
        let prod = &x2 * &wx1;
        assert_eq!(prod.coeff_x2(1), OrePoly::monomial(&ctx, s, wp1, 1));
        assert_eq!(&prod * &BivarOrePoly::one(&ctx, s, s), prod);
    }

    #[test]
    fn indeterminates_commute() {
        let (ctx, s, _) = gf4();
        let id = Automorphism::identity(&ctx);
        for (s1, s2) in [(s, s), (s, id), (id, s)] {
            let x1 = BivarOrePoly::x1(&ctx, s1, s2);
            let x2 = BivarOrePoly::x2(&ctx, s1, s2);
            assert_eq!(&x1 * &x2, &x2 * &x1);
        }
    }

    #[test]
    fn shifts() {
        let (ctx, s, w) = gf4();
        let f = BivarOrePoly::constant(&ctx, s, s, w);
        assert_eq!(f.shift_left(0), f);
        let g = f.shift_left(1);
        assert_eq!(g.coeff_x2(1), OrePoly::constant(&ctx, s, ctx.frob(w, 1)));
        assert!(g.coeff_x2(0).is_zero());
        let x2 = BivarOrePoly::x2(&ctx, s, s);
        assert_eq!(g, &x2 * &f);
    }

    #[test]
    fn accessors() {
        let (ctx, s, _) = gf4();
        let x1 = BivarOrePoly::x1(&ctx, s, s);
        let x2 = BivarOrePoly::x2(&ctx, s, s);
        let f = &(&x1 * &(&x2 * &x2)) + &x2;
        assert_eq!(f.degree_x2(), Some(2));
        assert_eq!(f.leading_x2(), OrePoly::x(&ctx, s));
        assert!(f.coeff_x2(5).is_zero());
        assert_eq!(BivarOrePoly::zero(&ctx, s, s).degree_x2(), None);
        assert_eq!(f.to_string(), "x1*x2^2 + x2");
    }
}
