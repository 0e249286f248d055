//! Slow reference implementations for checking `ore-elim`.
//!
//! Nothing here calls into the arithmetic of the main crate. Field elements
//! are unpacked into digit vectors and multiplied with [`RefField`], a
//! schoolbook implementation; Ore products commute `x` past one coefficient
//! at a time; resultants and determinants use cofactor expansion.

use ore_elim::{Automorphism, BivarOrePoly, Error, FieldCtx, FieldElem, OrePoly, Result};

/// Fields above this order are refused by [`brute_conjugacy`].
pub const BRUTE_LIMIT: u64 = 1 << 12;

/// GF(p^m) on coefficient vectors, constant term first.
#[derive(Clone, Debug)]
pub struct RefField {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
}

type Digits = Vec<u64>;

impl RefField {
    pub fn new(ctx: &FieldCtx) -> Self {
        RefField {
            p: ctx.characteristic(),
            m: ctx.degree() as usize,
            modulus: ctx.modulus().to_vec(),
        }
    }

    pub fn unpack(&self, a: FieldElem) -> Digits {
        let mut n = a.index();
        (0..self.m)
            .map(|_| {
                let d = n % self.p;
                n /= self.p;
                d
            })
            .collect()
    }

    pub fn pack(&self, a: &[u64]) -> FieldElem {
        let index = a.iter().rev().fold(0u64, |acc, &d| acc * self.p + d);
        FieldElem::from_index_unchecked(index)
    }

    pub fn zero(&self) -> Digits {
        vec![0; self.m]
    }

    pub fn one(&self) -> Digits {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Digits {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Digits {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Digits {
        self.sub(&self.zero(), a)
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&d| d == 0)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Digits {
        let p = self.p as u128;
        let mut prod = vec![0u128; 2 * self.m];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        // reduce with t^m = -(lower modulus terms)
        for k in (self.m..2 * self.m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..self.m {
                let sub = c * self.modulus[i] as u128 % p;
                prod[k - self.m + i] = (prod[k - self.m + i] + p - sub) % p;
            }
        }
        prod[..self.m].iter().map(|&c| c as u64).collect()
    }

    pub fn pow(&self, a: &[u64], mut k: u128) -> Digits {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.m as u32)
    }

    pub fn inv(&self, a: &[u64]) -> Digits {
        assert!(!self.is_zero(a), "inverse of zero");
        self.pow(a, self.order() - 2)
    }

    /// `a^(p^e)`, by repeated p-th powers.
    pub fn frob(&self, a: &[u64], e: u32) -> Digits {
        (0..e).fold(a.to_vec(), |x, _| self.pow(&x, self.p as u128))
    }
}

fn check_same(f: &OrePoly, g: &OrePoly) -> Result<()> {
    if f.ctx() != g.ctx() || f.sigma() != g.sigma() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Term-by-term product: `x^i` moves past `b` one factor of `x` at a time.
pub fn naive_ore_mul(f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
    check_same(f, g)?;
    let rf = RefField::new(f.ctx());
    let e = f.sigma().exponent();
    let (a, b) = (f.coeffs(), g.coeffs());
    let mut out = vec![rf.zero(); (a.len() + b.len()).saturating_sub(1)];
    for (i, &ai) in a.iter().enumerate() {
        let ai = rf.unpack(ai);
        for (j, &bj) in b.iter().enumerate() {
            let mut moved = rf.unpack(bj);
            for _ in 0..i {
                moved = rf.frob(&moved, e);
            }
            out[i + j] = rf.add(&out[i + j], &rf.mul(&ai, &moved));
        }
    }
    let coeffs = out.iter().map(|c| rf.pack(c)).collect();
    Ok(OrePoly::from_coeffs(f.ctx(), f.sigma(), coeffs))
}

/// `(a x1^k x2^i)(b x1^l x2^j) = a s1^k(s2^i(b)) x1^(k+l) x2^(i+j)`, term by term.
pub fn naive_bivar_mul(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<BivarOrePoly> {
    if f.ctx() != g.ctx() || f.sigma1() != g.sigma1() || f.sigma2() != g.sigma2() {
        return Err(Error::RingMismatch);
    }
    let rf = RefField::new(f.ctx());
    let (e1, e2) = (f.sigma1().exponent(), f.sigma2().exponent());
    let d1 = f.max_degree_x1().unwrap_or(0) + g.max_degree_x1().unwrap_or(0) + 1;
    let d2 = (f.coeffs().len() + g.coeffs().len()).saturating_sub(1);
    let mut out = vec![vec![rf.zero(); d1]; d2];
    for (i, fi) in f.coeffs().iter().enumerate() {
        for (k, &a) in fi.coeffs().iter().enumerate() {
            let a = rf.unpack(a);
            for (j, gj) in g.coeffs().iter().enumerate() {
                for (l, &b) in gj.coeffs().iter().enumerate() {
                    let mut moved = rf.unpack(b);
                    for _ in 0..i {
                        moved = rf.frob(&moved, e2);
                    }
                    for _ in 0..k {
                        moved = rf.frob(&moved, e1);
                    }
                    let slot = &mut out[i + j][k + l];
                    *slot = rf.add(slot, &rf.mul(&a, &moved));
                }
            }
        }
    }
    let coeffs = out
        .iter()
        .map(|row| {
            let c = row.iter().map(|d| rf.pack(d)).collect();
            OrePoly::from_coeffs(f.ctx(), f.sigma1(), c)
        })
        .collect();
    BivarOrePoly::from_coeffs(f.ctx(), f.sigma1(), f.sigma2(), coeffs)
}

/// Commutative polynomials over a [`RefField`], constant term first.
#[derive(Clone, Debug)]
struct CommRing {
    field: RefField,
}

type Poly = Vec<Digits>;

impl CommRing {
    fn trim(&self, mut a: Poly) -> Poly {
        while a.last().is_some_and(|c| self.field.is_zero(c)) {
            a.pop();
        }
        a
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| {
                self.field
                    .add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))
            })
            .collect();
        self.trim(out)
    }

    fn neg(&self, a: &Poly) -> Poly {
        a.iter().map(|c| self.field.neg(c)).collect()
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.trim(out)
    }

    /// Laplace expansion along the first row.
    fn det(&self, m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        match n {
            0 => vec![self.field.one()],
            1 => m[0][0].clone(),
            _ => {
                let mut acc = Vec::new();
                for col in 0..n {
                    if m[0][col].is_empty() {
                        continue;
                    }
                    let minor: Vec<Vec<Poly>> = m[1..]
                        .iter()
                        .map(|row| {
                            row.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != col)
                                .map(|(_, e)| e.clone())
                                .collect()
                        })
                        .collect();
                    let term = self.mul(&m[0][col], &self.det(&minor));
                    acc = if col % 2 == 0 {
                        self.add(&acc, &term)
                    } else {
                        self.add(&acc, &self.neg(&term))
                    };
                }
                acc
            }
        }
    }

    fn poly_of(&self, p: &OrePoly) -> Poly {
        self.trim(p.coeffs().iter().map(|&c| self.field.unpack(c)).collect())
    }

    fn to_ore(&self, p: &Poly, ctx: &FieldCtx, sigma: Automorphism) -> OrePoly {
        OrePoly::from_coeffs(ctx, sigma, p.iter().map(|c| self.field.pack(c)).collect())
    }
}

/// Determinant of a square matrix with entries read as commutative
/// polynomials (any twist is ignored).
pub fn classical_det(rows: &[Vec<OrePoly>]) -> Result<OrePoly> {
    let first = rows
        .first()
        .and_then(|r| r.first())
        .ok_or(Error::NotSquare)?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(Error::NotSquare);
    }
    let ring = CommRing {
        field: RefField::new(first.ctx()),
    };
    let m: Vec<Vec<Poly>> = rows
        .iter()
        .map(|r| r.iter().map(|e| ring.poly_of(e)).collect())
        .collect();
    Ok(ring.to_ore(&ring.det(&m), first.ctx(), first.sigma()))
}

/// Textbook Sylvester resultant with respect to `x2`, treating both inputs
/// as commutative polynomials.
pub fn classical_resultant(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<OrePoly> {
    let n = f.degree_x2().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree_x2().ok_or(Error::ZeroPolynomial)?;
    if n == 0 && m == 0 {
        return Err(Error::BothConstant);
    }
    let size = n + m;
    let zero = OrePoly::zero(f.ctx(), f.sigma1());
    let mut rows = Vec::with_capacity(size);
    // row r of a block: coefficients a_n .. a_0 starting at column r
    for (count, p, deg) in [(m, f, n), (n, g, m)] {
        for r in 0..count {
            let mut row = vec![zero.clone(); size];
            for k in 0..=deg {
                row[r + k] = p.coeff_x2(deg - k);
            }
            rows.push(row);
        }
    }
    classical_det(&rows)
}

/// Classes of nonzero elements under `a ~ sigma(c) a c^-1`, by enumeration.
/// Each class is sorted and classes are ordered by their least member.
pub fn brute_conjugacy(ctx: &FieldCtx, sigma: Automorphism) -> Result<Vec<Vec<FieldElem>>> {
    if ctx.order() > BRUTE_LIMIT {
        return Err(Error::FieldTooLarge {
            p: ctx.characteristic(),
            m: ctx.degree(),
        });
    }
    let rf = RefField::new(ctx);
    let q = ctx.order();
    let nonzero: Vec<Digits> = (1..q)
        .map(|i| rf.unpack(FieldElem::from_index_unchecked(i)))
        .collect();
    let mut seen = vec![false; q as usize];
    let mut classes = Vec::new();
    for a in &nonzero {
        if seen[rf.pack(a).index() as usize] {
            continue;
        }
        let mut class: Vec<FieldElem> = Vec::new();
        for c in &nonzero {
            let conj = rf.mul(&rf.mul(&rf.frob(c, sigma.exponent()), a), &rf.inv(c));
            let idx = rf.pack(&conj);
            if !seen[idx.index() as usize] {
                seen[idx.index() as usize] = true;
                class.push(idx);
            }
        }
        class.sort();
        classes.push(class);
    }
    classes.sort();
    Ok(classes)
}
