//! Field extensions GF(p^m) -> GF(p^M) with an explicit embedding.

use super::{FieldCtx, FieldElem};
use crate::error::{Error, Result};

/// Injective ring homomorphism between two fields of the same characteristic,
/// fixed by the image of the source generator `t`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: FieldCtx,
    target: FieldCtx,
    /// Images of the source power basis.
    images: Vec<FieldElem>,
}

impl Embedding {
    pub fn identity(ctx: &FieldCtx) -> Self {
        Embedding {
            source: ctx.clone(),
            target: ctx.clone(),
            images: ctx.prime_basis(),
        }
    }

    pub fn source(&self) -> &FieldCtx {
        &self.source
    }

    pub fn target(&self) -> &FieldCtx {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }

    /// Image of the source generator `t`.
    pub fn image_of_generator(&self) -> FieldElem {
        self.images.get(1).copied().unwrap_or_else(|| {
            // prime field: t is the root of the linear modulus t + c
            let c = self.target.from_int(self.source.modulus()[0] as i64);
            self.target.neg(c)
        })
    }

    pub fn apply(&self, a: FieldElem) -> FieldElem {
        if self.is_identity() {
            return a;
        }
        self.source
            .coeffs(a)
            .iter()
            .zip(&self.images)
            .fold(FieldElem::ZERO, |acc, (&c, &img)| {
                self.target.add(acc, self.target.scale(c, img))
            })
    }

    /// Inverse image of `b`, if `b` lies in the embedded subfield.
    pub fn preimage(&self, b: FieldElem) -> Option<FieldElem> {
        if self.is_identity() {
            return Some(b);
        }
        let p = self.source.characteristic();
        let m = self.images.len();
        let big = self.target.degree() as usize;
        // augmented big x (m + 1) system over GF(p)
        let cols: Vec<Vec<u64>> = self.images.iter().map(|&x| self.target.coeffs(x)).collect();
        let rhs = self.target.coeffs(b);
        let mut rows: Vec<Vec<u64>> = (0..big)
            .map(|r| {
                let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
                row.push(rhs[r]);
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::with_capacity(m);
        for col in 0..m {
            let Some(sel) = (pivot_row..big).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(pivot_row, sel);
            let inv = super::gfp::inv_mod(rows[pivot_row][col], p);
            for x in rows[pivot_row].iter_mut() {
                *x = super::gfp::mul_mod(*x, inv, p);
            }
            for r in 0..big {
                if r != pivot_row && rows[r][col] != 0 {
                    let factor = rows[r][col];
                    let pivot = rows[pivot_row].clone();
                    for (x, &y) in rows[r].iter_mut().zip(&pivot) {
                        *x = (*x + p - super::gfp::mul_mod(factor, y, p)) % p;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if rows[pivot_row..].iter().any(|row| row[m] != 0) {
            return None;
        }
        let mut coeffs = vec![0u64; m];
        for (r, &col) in pivots.iter().enumerate() {
            coeffs[col] = rows[r][m];
        }
        self.source.from_coeffs(&coeffs).ok()
    }
}

pub(super) fn extend_field(ctx: &FieldCtx, big_degree: u32) -> Result<(FieldCtx, Embedding)> {
    let m = ctx.degree();
    if big_degree == 0 || !big_degree.is_multiple_of(m) {
        return Err(Error::NotAnExtension {
            from: m,
            to: big_degree,
        });
    }
    if big_degree == m {
        return Ok((ctx.clone(), Embedding::identity(ctx)));
    }
    let target = FieldCtx::new(ctx.characteristic(), big_degree, None)?;
    let f: Vec<FieldElem> = ctx
        .modulus()
        .iter()
        .map(|&c| target.from_int(c as i64))
        .collect();
    let mut roots = Vec::with_capacity(m as usize);
    split(&target, f, &mut roots);
    let root = roots
        .into_iter()
        .min()
        .ok_or_else(|| Error::Internal("modulus has no root in the extension".into()))?;
    let mut images = Vec::with_capacity(m as usize);
    let mut power = FieldElem::ONE;
    for _ in 0..m {
        images.push(power);
        power = target.mul(power, root);
    }
    let embedding = Embedding {
        source: ctx.clone(),
        target: target.clone(),
        images,
    };
    Ok((target, embedding))
}

// Commutative polynomials over a field, constant term first.

fn trim(v: &mut Vec<FieldElem>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn mul(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ctx.add(out[i + j], ctx.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

fn divrem(ctx: &FieldCtx, a: &[FieldElem], f: &[FieldElem]) -> (Vec<FieldElem>, Vec<FieldElem>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = ctx.inv(f[df]).expect("trimmed divisor");
    let mut q = vec![FieldElem::ZERO; r.len().saturating_sub(df)];
    while r.len() > df {
        let top = r.len() - 1;
        let c = ctx.mul(r[top], lead_inv);
        let shift = top - df;
        q[shift] = c;
        for (i, &fi) in f.iter().enumerate() {
            r[shift + i] = ctx.sub(r[shift + i], ctx.mul(c, fi));
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn gcd(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem(ctx, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn powmod(ctx: &FieldCtx, base: &[FieldElem], mut exp: u64, f: &[FieldElem]) -> Vec<FieldElem> {
    let mut acc = vec![FieldElem::ONE];
    let mut b = divrem(ctx, base, f).1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = divrem(ctx, &mul(ctx, &acc, &b), f).1;
        }
        b = divrem(ctx, &mul(ctx, &b, &b), f).1;
        exp >>= 1;
    }
    acc
}

fn add_const(ctx: &FieldCtx, a: &mut Vec<FieldElem>, c: FieldElem) {
    if a.is_empty() {
        a.push(FieldElem::ZERO);
    }
    a[0] = ctx.add(a[0], c);
    trim(a);
}

/// Candidate splitting polynomial number `k` for `f`.
fn splitter(ctx: &FieldCtx, f: &[FieldElem], k: u64) -> Vec<FieldElem> {
    let delta = FieldElem(k % ctx.order());
    if ctx.characteristic() == 2 {
        // absolute trace of delta * x
        let mut y = divrem(ctx, &[FieldElem::ZERO, delta], f).1;
        let mut acc = y.clone();
        for _ in 1..ctx.degree() {
            y = divrem(ctx, &mul(ctx, &y, &y), f).1;
            let n = acc.len().max(y.len());
            acc.resize(n, FieldElem::ZERO);
            for (i, &c) in y.iter().enumerate() {
                acc[i] = ctx.add(acc[i], c);
            }
            trim(&mut acc);
        }
        acc
    } else {
        let mut h = powmod(ctx, &[delta, FieldElem::ONE], (ctx.order() - 1) / 2, f);
        add_const(ctx, &mut h, ctx.neg(FieldElem::ONE));
        h
    }
}

/// All roots of a squarefree polynomial that splits into linear factors.
fn split(ctx: &FieldCtx, f: Vec<FieldElem>, out: &mut Vec<FieldElem>) {
    let d = f.len() - 1;
    if d == 0 {
        return;
    }
    if d == 1 {
        let r = ctx.div(ctx.neg(f[0]), f[1]).expect("trimmed polynomial");
        out.push(r);
        return;
    }
    for k in 1..ctx.order() {
        let h = splitter(ctx, &f, k);
        let g = gcd(ctx, &f, &h);
        if g.len() > 1 && g.len() < f.len() {
            let (cofactor, _) = divrem(ctx, &f, &g);
            split(ctx, g, out);
            split(ctx, cofactor, out);
            return;
        }
    }
    unreachable!("squarefree split polynomial always separates");
}
