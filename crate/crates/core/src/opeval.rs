//! Operator evaluation `x1 -> sigma1`.
//!
//! A polynomial `sum a_i x^i` becomes the additive map
//! `a -> sum a_i sigma^i(a)`. The formal operator polynomial is kept
//! unreduced: `sigma^ord(sigma) = id` would otherwise introduce zero
//! divisors. [`detect_kernel_collision`] reports when a formal polynomial
//! is long enough for two different ones to act identically.

use crate::bivar::BivarOrePoly;
use crate::error::{Error, Result};
use crate::field::{gfp, Automorphism, FieldCtx, FieldElem};
use crate::ore::OrePoly;

/// A formal operator polynomial `sum a_i sigma^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedOp {
    pub formal: OrePoly,
}

impl LinearizedOp {
    pub fn identity(ctx: &FieldCtx, sigma: Automorphism) -> Self {
        LinearizedOp {
            formal: OrePoly::one(ctx, sigma),
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.formal.ctx()
    }

    pub fn sigma(&self) -> Automorphism {
        self.formal.sigma()
    }

    pub fn degree(&self) -> Option<usize> {
        self.formal.degree()
    }

    /// `self o other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(LinearizedOp {
            formal: self.formal.try_mul(&other.formal)?,
        })
    }

    pub fn apply(&self, a: FieldElem) -> Result<FieldElem> {
        op_apply(self, a)
    }
}

pub fn eval_uni(f: &OrePoly) -> LinearizedOp {
    LinearizedOp { formal: f.clone() }
}

pub fn op_apply(op: &LinearizedOp, a: FieldElem) -> Result<FieldElem> {
    let ctx = op.ctx();
    if !ctx.contains(a) {
        return Err(Error::ContextMismatch);
    }
    Ok(apply_unchecked(&op.formal, a))
}

/// Horner-free sum; the powers `sigma^i(a)` are computed incrementally.
pub(crate) fn apply_unchecked(formal: &OrePoly, a: FieldElem) -> FieldElem {
    let ctx = formal.ctx();
    let sigma = formal.sigma();
    let mut acc = FieldElem::ZERO;
    let mut power = a;
    for (i, &c) in formal.coeffs().iter().enumerate() {
        if i > 0 {
            power = sigma.apply(ctx, power);
        }
        if !c.is_zero() {
            acc = ctx.add(acc, ctx.mul(c, power));
        }
    }
    acc
}

/// Matrix over GF(p) of `a -> op(a)` in the power basis; column `j` holds
/// the coordinates of `op(t^j)`.
pub fn op_matrix(op: &LinearizedOp, ctx: &FieldCtx) -> Result<Vec<Vec<u64>>> {
    if op.ctx() != ctx {
        return Err(Error::ContextMismatch);
    }
    let m = ctx.degree() as usize;
    let columns: Vec<Vec<u64>> = ctx
        .prime_basis()
        .into_iter()
        .map(|b| ctx.coeffs(apply_unchecked(&op.formal, b)))
        .collect();
    Ok((0..m)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect())
}

/// Product of square matrices over GF(p).
pub fn prime_matmul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(0, |acc, k| (acc + gfp::mul_mod(a[i][k], b[k][j], p)) % p))
                .collect()
        })
        .collect()
}

/// True when the formal degree reaches the order of `sigma`, so that point
/// evaluations can no longer tell the polynomial apart from a shorter one.
pub fn detect_kernel_collision(op: &LinearizedOp) -> bool {
    op.degree()
        .is_some_and(|d| d >= op.sigma().order() as usize)
}

/// `sum a_i(sigma1) x2^i` with operator coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpBivarPoly {
    pub coeffs: Vec<LinearizedOp>,
    pub sigma2: Automorphism,
    formal: BivarOrePoly,
}

impl OpBivarPoly {
    fn from_formal(formal: BivarOrePoly) -> Self {
        OpBivarPoly {
            coeffs: formal.coeffs().iter().map(eval_uni).collect(),
            sigma2: formal.sigma2(),
            formal,
        }
    }

    /// The same object read back as a polynomial with `sigma1` renamed `x1`.
    pub fn formal(&self) -> &BivarOrePoly {
        &self.formal
    }

    pub fn degree_x2(&self) -> Option<usize> {
        self.formal.degree_x2()
    }

    /// Product twisting the right factor's coefficients by `sigma2`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_formal(self.formal.try_mul(&other.formal)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_formal(self.formal.try_add(&other.formal)?))
    }
}

pub fn eval_bivar(f: &BivarOrePoly) -> OpBivarPoly {
    OpBivarPoly::from_formal(f.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> (FieldCtx, Automorphism, FieldElem) {
        let ctx = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let s = Automorphism::frobenius(&ctx, 1).unwrap();
        (ctx.clone(), s, ctx.generator().unwrap())
    }

    #[test]
    fn apply_examples() {
        let (ctx, s, w) = gf4();
        let x = eval_uni(&OrePoly::x(&ctx, s));
        assert_eq!(op_apply(&x, w).unwrap(), ctx.add(w, ctx.one()));
        let x_minus_1 = eval_uni(&(&OrePoly::x(&ctx, s) - &OrePoly::one(&ctx, s)));
        assert_eq!(op_apply(&x_minus_1, ctx.one()).unwrap(), ctx.zero());
        let zero = eval_uni(&OrePoly::zero(&ctx, s));
        assert!(ctx
            .elements()
            .all(|a| op_apply(&zero, a).unwrap().is_zero()));
        let sq = eval_uni(&OrePoly::monomial(&ctx, s, ctx.one(), 2));
        assert!(ctx.elements().all(|a| op_apply(&sq, a).unwrap() == a));
        assert_eq!(op_apply(&sq, FieldElem::default()).unwrap(), ctx.zero());
        assert!(op_apply(&x, ctx.elem(3).unwrap()).is_ok());
        let big = FieldCtx::new(2, 4, None).unwrap();
        assert_eq!(
            op_apply(&x, big.elem(9).unwrap()).unwrap_err(),
            Error::ContextMismatch
        );
    }

    #[test]
    fn frobenius_matrix_on_gf4() {
        let (ctx, s, _) = gf4();
        let x = eval_uni(&OrePoly::x(&ctx, s));
        assert_eq!(op_matrix(&x, &ctx).unwrap(), vec![vec![1, 1], vec![0, 1]]);
        let id = LinearizedOp::identity(&ctx, s);
        assert_eq!(op_matrix(&id, &ctx).unwrap(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn full_power_is_identity_on_gf8() {
        let ctx = FieldCtx::new(2, 3, None).unwrap();
        let s = Automorphism::frobenius(&ctx, 1).unwrap();
        let op = eval_uni(&OrePoly::monomial(&ctx, s, ctx.one(), 3));
        let eye = op_matrix(&LinearizedOp::identity(&ctx, s), &ctx).unwrap();
        assert_eq!(op_matrix(&op, &ctx).unwrap(), eye);
        assert!(ctx.elements().all(|a| op_apply(&op, a).unwrap() == a));
    }

    #[test]
    fn kernel_collision_flags() {
        let (ctx, s, _) = gf4();
        assert!(!detect_kernel_collision(&eval_uni(&OrePoly::x(&ctx, s))));
        let sq = OrePoly::monomial(&ctx, s, ctx.one(), 2);
        assert!(detect_kernel_collision(&eval_uni(&sq)));
        let big = FieldCtx::new(2, 8, None).unwrap();
        let sb = Automorphism::frobenius(&big, 1).unwrap();
        let p5 = OrePoly::monomial(&big, sb, big.one(), 5);
        assert!(!detect_kernel_collision(&eval_uni(&p5)));
    }

    #[test]
    fn bivariate_renaming() {
        let (ctx, s, _) = gf4();
        let f = &BivarOrePoly::x1(&ctx, s, s) * &BivarOrePoly::x2(&ctx, s, s);
        let e = eval_bivar(&f);
        assert_eq!(e.coeffs.len(), 2);
        assert!(e.coeffs[0].formal.is_zero());
        assert_eq!(e.coeffs[1].formal, OrePoly::x(&ctx, s));
        let c = BivarOrePoly::constant(&ctx, s, s, ctx.elem(2).unwrap());
        assert_eq!(eval_bivar(&c).formal(), &c);
    }
}
