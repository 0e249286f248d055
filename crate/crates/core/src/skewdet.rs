//! Matrices over `A[x; sigma]` and their Dieudonné determinant.
//!
//! The determinant of a matrix over a skew field is only defined modulo
//! commutators. Reducing to upper-triangular form with left row operations
//! and signed swaps (both of determinant one) keeps every diagonal entry a
//! polynomial, so the row-ordered product of the diagonal is a polynomial
//! representative of the class. Its vanishing and its degree do not depend
//! on the reduction path; the representative itself does, unless `sigma`
//! is the identity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Automorphism, FieldCtx, FieldElem};
use crate::ore::OrePoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreMatrix {
    n: usize,
    ctx: FieldCtx,
    sigma: Automorphism,
    entries: Vec<OrePoly>,
}

impl OreMatrix {
    pub fn from_rows(rows: Vec<Vec<OrePoly>>) -> Result<Self> {
        let n = rows.len();
        let first = rows
            .first()
            .and_then(|r| r.first())
            .ok_or(Error::NotSquare)?;
        let (ctx, sigma) = (first.ctx().clone(), first.sigma());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        let entries: Vec<OrePoly> = rows.into_iter().flatten().collect();
        if entries
            .iter()
            .any(|e| e.sigma() != sigma || e.ctx() != &ctx)
        {
            return Err(Error::RingMismatch);
        }
        Ok(OreMatrix {
            n,
            ctx,
            sigma,
            entries,
        })
    }

    pub fn identity(ctx: &FieldCtx, sigma: Automorphism, n: usize) -> Self {
        Self::diagonal(&vec![OrePoly::one(ctx, sigma); n], ctx, sigma)
    }

    pub fn diagonal(diag: &[OrePoly], ctx: &FieldCtx, sigma: Automorphism) -> Self {
        let n = diag.len();
        let mut entries = vec![OrePoly::zero(ctx, sigma); n * n];
        for (i, d) in diag.iter().enumerate() {
            entries[i * n + i] = d.clone();
        }
        OreMatrix {
            n,
            ctx: ctx.clone(),
            sigma,
            entries,
        }
    }

    /// Random `n x n` matrix; each entry is zero with probability `zero_prob`
    /// and otherwise has degree uniform in `0..=max_deg`.
    pub fn random<R: Rng + ?Sized>(
        ctx: &FieldCtx,
        sigma: Automorphism,
        n: usize,
        max_deg: usize,
        zero_prob: f64,
        rng: &mut R,
    ) -> Self {
        let entries = (0..n * n)
            .map(|_| {
                if rng.gen_bool(zero_prob) {
                    OrePoly::zero(ctx, sigma)
                } else {
                    let d = rng.gen_range(0..=max_deg);
                    OrePoly::random(ctx, sigma, d, rng)
                }
            })
            .collect();
        OreMatrix {
            n,
            ctx: ctx.clone(),
            sigma,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn sigma(&self) -> Automorphism {
        self.sigma
    }

    pub fn get(&self, i: usize, j: usize) -> &OrePoly {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[OrePoly] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<OrePoly>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    /// Multiplies row `i` on the left by the scalar `u`.
    pub fn scale_row(&self, i: usize, u: FieldElem) -> Result<Self> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange);
        }
        let mut out = self.clone();
        for j in 0..self.n {
            out.entries[i * self.n + j] = self.get(i, j).scale_left(u);
        }
        Ok(out)
    }

    fn add_mul_in_place(&mut self, src: usize, dst: usize, q: &OrePoly) {
        for c in 0..self.n {
            let s = self.get(src, c);
            if s.is_zero() {
                continue;
            }
            let prod = q * s;
            let idx = dst * self.n + c;
            self.entries[idx] = &self.entries[idx] + &prod;
        }
    }

    fn swap_signed_in_place(&mut self, i: usize, j: usize) {
        for c in 0..self.n {
            let a = i * self.n + c;
            let b = j * self.n + c;
            self.entries.swap(a, b);
            self.entries[a] = -&self.entries[a];
        }
    }

    /// Replays a log of row operations.
    pub fn apply_ops(&self, ops: &[RowOp]) -> Result<Self> {
        ops.iter().try_fold(self.clone(), |m, op| match op {
            RowOp::AddMul { src, dst, q } => {
                let q = OrePoly::from_coeffs(&self.ctx, self.sigma, q.clone());
                row_addmul(&m, *src, *dst, &q)
            }
            RowOp::SwapSigned { i, j } => row_swap_signed(&m, *i, *j),
        })
    }
}

/// An elementary row operation, recorded for audit and replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum RowOp {
    /// `row[dst] += q * row[src]`; `q` lists coefficients, constant first.
    AddMul {
        src: usize,
        dst: usize,
        q: Vec<FieldElem>,
    },
    /// `row[j] <- row[i]`, `row[i] <- -row[j]`.
    SwapSigned { i: usize, j: usize },
}

/// `row[j] <- row[j] + q * row[i]` (the elementary matrix `E_ij(q)`).
pub fn row_addmul(m: &OreMatrix, i: usize, j: usize, q: &OrePoly) -> Result<OreMatrix> {
    if i >= m.n || j >= m.n {
        return Err(Error::IndexOutOfRange);
    }
    if i == j {
        return Err(Error::EqualRows);
    }
    if q.ctx() != &m.ctx || q.sigma() != m.sigma {
        return Err(Error::RingMismatch);
    }
    let mut out = m.clone();
    out.add_mul_in_place(i, j, q);
    Ok(out)
}

/// Signed interchange: `row[j] <- row[i]` and `row[i] <- -row[j]`.
pub fn row_swap_signed(m: &OreMatrix, i: usize, j: usize) -> Result<OreMatrix> {
    if i >= m.n || j >= m.n || i == j {
        return Err(Error::IndexOutOfRange);
    }
    let mut out = m.clone();
    out.swap_signed_in_place(i, j);
    Ok(out)
}

/// How the next pivot is chosen among the candidate rows of a column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// Lowest degree, ties to the lowest row index.
    #[default]
    MinDegree,
    /// First candidate row.
    FirstNonzero,
    /// Uniformly random candidate from a seeded generator.
    Seeded(u64),
}

/// Upper-triangular form plus the operations that produced it.
#[derive(Clone, Debug)]
pub struct Triangularized {
    pub matrix: OreMatrix,
    pub op_log: Vec<RowOp>,
}

pub fn triangularize(m: &OreMatrix) -> OreMatrix {
    triangularize_with(m, PivotRule::MinDegree).matrix
}

/// Euclidean reduction of each column below the diagonal.
///
/// The first pivot of column `i` is chosen among rows `i..n`; afterwards
/// only the remainders below the diagonal compete, each strictly smaller in
/// degree than the current pivot, so every rule terminates.
pub fn triangularize_with(m: &OreMatrix, rule: PivotRule) -> Triangularized {
    let n = m.n;
    let mut b = m.clone();
    let mut log = Vec::new();
    let mut rng = match rule {
        PivotRule::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    for i in 0..n.saturating_sub(1) {
        let mut start = i;
        loop {
            let candidates: Vec<usize> = (start..n).filter(|&k| !b.get(k, i).is_zero()).collect();
            if candidates.is_empty() {
                break;
            }
            let k = match rule {
                PivotRule::MinDegree => *candidates
                    .iter()
                    .min_by_key(|&&k| (b.get(k, i).degree(), k))
                    .expect("nonempty"),
                PivotRule::FirstNonzero => candidates[0],
                PivotRule::Seeded(_) => {
                    let rng = rng.as_mut().expect("seeded rule");
                    candidates[rng.gen_range(0..candidates.len())]
                }
            };
            if k != i {
                // pivot row lands on the diagonal unnegated
                b.swap_signed_in_place(k, i);
                log.push(RowOp::SwapSigned { i: k, j: i });
            }
            start = i + 1;
            let pivot = b.get(i, i).clone();
            let pivot_deg = pivot.degree().expect("nonzero pivot");
            for r in i + 1..n {
                let entry = b.get(r, i);
                match entry.degree() {
                    Some(d) if d >= pivot_deg => {
                        let (q, _) = entry.right_divmod(&pivot).expect("nonzero pivot");
                        let neg_q = -&q;
                        b.add_mul_in_place(i, r, &neg_q);
                        // guards termination if the ring arithmetic is ever wrong
                        assert!(
                            b.get(r, i).degree() < Some(pivot_deg),
                            "Euclidean step failed to lower the degree"
                        );
                        log.push(RowOp::AddMul {
                            src: i,
                            dst: r,
                            q: neg_q.coeffs().to_vec(),
                        });
                    }
                    _ => {}
                }
            }
            if (i + 1..n).all(|r| b.get(r, i).is_zero()) {
                break;
            }
        }
    }
    Triangularized {
        matrix: b,
        op_log: log,
    }
}

/// A polynomial representative of a Dieudonné determinant.
#[derive(Clone, Debug)]
pub struct DetResult {
    /// Row-ordered product of the triangular diagonal.
    pub rep: OrePoly,
    pub is_zero: bool,
    /// `None` for the zero determinant.
    pub degree: Option<usize>,
    pub diagonal: Vec<OrePoly>,
    pub op_log: Vec<RowOp>,
}

impl DetResult {
    pub(crate) fn from_triangular(t: Triangularized) -> Self {
        let n = t.matrix.n;
        let diagonal: Vec<OrePoly> = (0..n).map(|i| t.matrix.get(i, i).clone()).collect();
        let rep = if diagonal.iter().any(OrePoly::is_zero) {
            OrePoly::zero(&t.matrix.ctx, t.matrix.sigma)
        } else {
            diagonal
                .iter()
                .fold(OrePoly::one(&t.matrix.ctx, t.matrix.sigma), |acc, d| {
                    &acc * d
                })
        };
        DetResult {
            is_zero: rep.is_zero(),
            degree: rep.degree(),
            rep,
            diagonal,
            op_log: t.op_log,
        }
    }

    /// The representative scaled to leading coefficient one (zero stays zero).
    pub fn monic_rep(&self) -> OrePoly {
        self.rep.make_monic().unwrap_or_else(|_| self.rep.clone())
    }
}

pub fn dieudonne_det(m: &OreMatrix) -> DetResult {
    dieudonne_det_with(m, PivotRule::MinDegree)
}

pub fn dieudonne_det_with(m: &OreMatrix, rule: PivotRule) -> DetResult {
    DetResult::from_triangular(triangularize_with(m, rule))
}

/// Computable stand-ins for equality modulo commutators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurrogateVerdict {
    pub zero_agrees: bool,
    pub degree_agrees: bool,
    /// Representative equality up to sign; only decided when `sigma` is the identity.
    pub rep_agrees: Option<bool>,
}

impl SurrogateVerdict {
    pub fn holds(&self) -> bool {
        self.zero_agrees && self.degree_agrees && self.rep_agrees.unwrap_or(true)
    }
}

pub fn det_surrogates_equal(d1: &DetResult, d2: &DetResult) -> SurrogateVerdict {
    let commutative = d1.rep.sigma().is_identity() && d1.rep.same_ring(&d2.rep);
    SurrogateVerdict {
        zero_agrees: d1.is_zero == d2.is_zero,
        degree_agrees: d1.degree == d2.degree,
        rep_agrees: commutative.then(|| d1.rep == d2.rep || d1.rep == -&d2.rep),
    }
}
