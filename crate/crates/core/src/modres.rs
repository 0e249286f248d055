//! Eliminant recovery by evaluation and interpolation.
//!
//! The Sylvester matrix is triangularized once over formal
//! `sigma1`-polynomials. The diagonal operators `d_1, ..., d_k` are then
//! applied as a chain `d_1(d_2(... d_k(a)))` at each point `a` of a GF(p)
//! basis of a work field, which gives the value of the eliminant, read as an
//! operator, without multiplying the diagonal out. Since that operator is
//! GF(p)-linear, its values on a basis fix it, and its coefficients are the
//! solution of a Moore system `sum_i r_i sigma1^i(a_j) = v_j`.
//!
//! Recovery needs `sigma1` to have order above the degree bound `D` on the
//! work field, otherwise two formal polynomials act the same. The plan
//! extends the field and, if necessary, lifts `sigma1` to another Frobenius
//! power that restricts to it on the input field.

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bivar::BivarOrePoly;
use crate::error::{Error, Result};
use crate::field::{gcd, Automorphism, Embedding, FieldCtx, FieldElem};
use crate::opeval::{apply_unchecked, eval_bivar, eval_uni, op_matrix};
use crate::ore::OrePoly;
use crate::resultant::{degree_bound, sylvester_matrix};
use crate::skewdet::{triangularize_with, DetResult, PivotRule, Triangularized};

/// Where and how the eliminant is evaluated.
#[derive(Clone, Debug)]
pub struct ModularPlan {
    pub work_ctx: FieldCtx,
    pub embedding: Embedding,
    /// `sigma1` lifted to the work field.
    pub sigma1: Automorphism,
    /// `sigma2` lifted to the work field.
    pub sigma2: Automorphism,
    pub points: Vec<FieldElem>,
    pub degree_bound: usize,
}

impl ModularPlan {
    /// A plan with caller-chosen work field and lifts; no check that
    /// `degree_bound` is small enough for recovery.
    pub fn custom(
        embedding: Embedding,
        sigma1: Automorphism,
        sigma2: Automorphism,
        degree_bound: usize,
    ) -> Result<Self> {
        let work_ctx = embedding.target().clone();
        if sigma1.field_degree() != work_ctx.degree() || sigma2.field_degree() != work_ctx.degree()
        {
            return Err(Error::ContextMismatch);
        }
        Ok(ModularPlan {
            points: work_ctx.prime_basis(),
            work_ctx,
            embedding,
            sigma1,
            sigma2,
            degree_bound,
        })
    }

    /// True when distinct formal polynomials of degree at most the bound
    /// act as distinct maps on the work field.
    pub fn is_well_formed(&self) -> bool {
        (self.sigma1.order() as usize) > self.degree_bound
    }
}

impl Serialize for ModularPlan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ModularPlan", 6)?;
        st.serialize_field("base_field", &self.embedding.source().to_string())?;
        st.serialize_field("work_field", &self.work_ctx.to_string())?;
        st.serialize_field("sigma1", &self.sigma1.exponent())?;
        st.serialize_field("sigma2", &self.sigma2.exponent())?;
        st.serialize_field("points", &self.points)?;
        st.serialize_field("degree_bound", &self.degree_bound)?;
        st.end()
    }
}

/// Chain value of the eliminant operator at one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PartialEval {
    pub point: FieldElem,
    pub value: FieldElem,
}

/// Everything the modular pipeline produced.
#[derive(Clone, Debug)]
pub struct ModularRun {
    /// Eliminant over the input field when its coefficients lie there.
    pub result: DetResult,
    /// Eliminant over the work field.
    pub work_rep: OrePoly,
    pub plan: ModularPlan,
    pub evals: Vec<PartialEval>,
}

pub fn plan_modular(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<ModularPlan> {
    // the Sylvester checks double as input validation
    sylvester_matrix(f, g)?;
    let ctx = f.ctx();
    let d = degree_bound(f, g);
    let m = ctx.degree();
    let (e1, e2) = (f.sigma1().exponent(), f.sigma2().exponent());
    for j in 1u32.. {
        let big = m
            .checked_mul(j)
            .ok_or_else(|| Error::PlanFailure("extension degree overflow".into()))?;
        if (big as usize) <= d {
            continue;
        }
        // exponents e1 + k m all restrict to sigma1 on the input field
        let lift = (0..j)
            .map(|k| e1 + k * m)
            .find(|&e| (big / gcd(e, big)) as usize > d);
        let Some(lift) = lift else { continue };
        let (work_ctx, embedding) = ctx.extend(big).map_err(|e| match e {
            Error::FieldTooLarge { p, m } => Error::PlanFailure(format!(
                "degree bound {d} needs a work field GF({p}^{m}), beyond the supported size"
            )),
            other => other,
        })?;
        let sigma1 = Automorphism::frobenius(&work_ctx, lift)?;
        let sigma2 = Automorphism::frobenius(&work_ctx, e2)?;
        return ModularPlan::custom(embedding, sigma1, sigma2, d);
    }
    unreachable!("the degree search is unbounded")
}

/// True when the leading `x2`-coefficient of `f`, as an operator on the
/// work field, is the zero map. A polynomial from another field counts as
/// a bad evaluation.
pub fn check_bad_eval(f: &BivarOrePoly, plan: &ModularPlan) -> bool {
    if f.ctx() != plan.embedding.source() {
        return true;
    }
    let lifted = f.embed(&plan.embedding, plan.sigma1, plan.sigma2);
    let lead = eval_uni(&lifted.leading_x2());
    op_matrix(&lead, &plan.work_ctx)
        .map(|mat| mat.iter().flatten().all(|&c| c == 0))
        .unwrap_or(true)
}

pub fn res_x2_modular(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<DetResult> {
    Ok(modular_run(f, g)?.result)
}

pub fn modular_run(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<ModularRun> {
    let plan = plan_modular(f, g)?;
    modular_run_with(f, g, plan)
}

pub fn modular_run_with(
    f: &BivarOrePoly,
    g: &BivarOrePoly,
    plan: ModularPlan,
) -> Result<ModularRun> {
    // a partner of x2-degree zero contributes no rows, so only the
    // polynomials that are actually shifted into the matrix are checked
    let f_used = g.degree_x2().is_some_and(|m| m > 0);
    let g_used = f.degree_x2().is_some_and(|n| n > 0);
    if (f_used && check_bad_eval(f, &plan)) || (g_used && check_bad_eval(g, &plan)) {
        return Err(Error::BadEvaluation);
    }
    let ef = eval_bivar(&f.embed(&plan.embedding, plan.sigma1, plan.sigma2));
    let eg = eval_bivar(&g.embed(&plan.embedding, plan.sigma1, plan.sigma2));
    let sylvester = sylvester_matrix(ef.formal(), eg.formal())?;
    let Triangularized { matrix, op_log } =
        triangularize_with(&sylvester.inner, PivotRule::MinDegree);
    let diagonal: Vec<OrePoly> = (0..matrix.dim())
        .map(|i| matrix.get(i, i).clone())
        .collect();

    let evals: Vec<PartialEval> = plan
        .points
        .par_iter()
        .map(|&point| PartialEval {
            point,
            value: chain_value(&diagonal, point),
        })
        .collect();

    let coeffs = solve_moore(&plan, &evals)?;
    let work_rep = OrePoly::from_coeffs(&plan.work_ctx, plan.sigma1, coeffs);

    let rep = pull_back(&work_rep, &plan, f.sigma1());
    let diagonal = diagonal
        .iter()
        .map(|d| pull_back(d, &plan, f.sigma1()))
        .collect();
    let result = DetResult {
        is_zero: rep.is_zero(),
        degree: rep.degree(),
        rep,
        diagonal,
        op_log,
    };
    Ok(ModularRun {
        result,
        work_rep,
        plan,
        evals,
    })
}

/// `d_1(d_2(... d_k(a)))`.
pub fn chain_value(diagonal: &[OrePoly], a: FieldElem) -> FieldElem {
    diagonal.iter().rev().fold(a, |v, d| {
        if v.is_zero() {
            v
        } else {
            apply_unchecked(d, v)
        }
    })
}

/// Exact solve of the overdetermined Moore system.
fn solve_moore(plan: &ModularPlan, evals: &[PartialEval]) -> Result<Vec<FieldElem>> {
    let ctx = &plan.work_ctx;
    let unknowns = plan.degree_bound + 1;
    let mut rows: Vec<Vec<FieldElem>> = evals
        .iter()
        .map(|e| {
            let mut row = Vec::with_capacity(unknowns + 1);
            let mut power = e.point;
            for i in 0..unknowns {
                if i > 0 {
                    power = plan.sigma1.apply(ctx, power);
                }
                row.push(power);
            }
            row.push(e.value);
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let Some(sel) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return Err(Error::SingularMooreSystem);
        };
        rows.swap(pivot_row, sel);
        let inv = ctx.inv(rows[pivot_row][col])?;
        for x in rows[pivot_row].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &px) in row.iter_mut().zip(&pivot) {
                *x = ctx.sub(*x, ctx.mul(factor, px));
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(Error::PlanFailure(
            "chain values are not those of a polynomial within the degree bound".into(),
        ));
    }
    Ok(rows[..unknowns].iter().map(|row| row[unknowns]).collect())
}

/// Maps a work-field polynomial back to the input field when possible.
fn pull_back(p: &OrePoly, plan: &ModularPlan, sigma: Automorphism) -> OrePoly {
    let back: Option<Vec<FieldElem>> = p
        .coeffs()
        .iter()
        .map(|&c| plan.embedding.preimage(c))
        .collect();
    match back {
        Some(coeffs) => OrePoly::from_coeffs(plan.embedding.source(), sigma, coeffs),
        None => p.clone(),
    }
}

/// Points grouped by their `sigma`-norm.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConjugacyReport {
    pub classes: Vec<ConjugacyClass>,
    /// Number of zero points, which belong to no class.
    pub zero_points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConjugacyClass {
    pub norm: FieldElem,
    pub members: Vec<FieldElem>,
}

impl ConjugacyReport {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }
}

pub fn conjugacy_audit(
    ctx: &FieldCtx,
    points: &[FieldElem],
    sigma: Automorphism,
) -> Result<ConjugacyReport> {
    let mut classes: Vec<ConjugacyClass> = Vec::new();
    let mut zero_points = 0;
    for &a in points {
        if a.is_zero() {
            zero_points += 1;
            continue;
        }
        let norm = ctx.sigma_norm(sigma, a)?;
        match classes.iter_mut().find(|c| c.norm == norm) {
            Some(c) => c.members.push(a),
            None => classes.push(ConjugacyClass {
                norm,
                members: vec![a],
            }),
        }
    }
    classes.sort_by_key(|c| c.norm);
    Ok(ConjugacyReport {
        classes,
        zero_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::res_x2_direct;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf4() -> (FieldCtx, Automorphism) {
        let ctx = FieldCtx::new(2, 2, None).unwrap();
        let s = Automorphism::frobenius(&ctx, 1).unwrap();
        (ctx, s)
    }

    #[test]
    fn plan_sizes() {
        let (ctx, s) = gf4();
        let x1 = BivarOrePoly::x1(&ctx, s, s);
        let x2 = BivarOrePoly::x2(&ctx, s, s);
        let one = BivarOrePoly::one(&ctx, s, s);
        // D = 1
        let plan = plan_modular(&(&x2 + &x1), &(&x2 + &one)).unwrap();
        assert_eq!(plan.work_ctx, ctx);
        assert_eq!(plan.points, ctx.prime_basis());
        // D = 3
        let f = &x2 + &(&(&x1 * &x1) * &x1);
        let plan = plan_modular(&f, &(&x2 + &one)).unwrap();
        assert_eq!(plan.work_ctx.order(), 16);
        assert_eq!(plan.points.len(), 4);
        assert_eq!(plan.sigma1.exponent(), 1);
        // D = 0
        let plan = plan_modular(&(&x2 + &one), &x2).unwrap();
        assert_eq!(plan.degree_bound, 0);
        assert_eq!(plan.points.len(), 2);
    }

    #[test]
    fn identity_sigma_is_lifted() {
        let f7 = FieldCtx::prime(7).unwrap();
        let id = Automorphism::identity(&f7);
        let x1 = BivarOrePoly::x1(&f7, id, id);
        let x2 = BivarOrePoly::x2(&f7, id, id);
        let plan = plan_modular(&(&x2 - &x1), &(&x2 - &(&x1 * &x1))).unwrap();
        assert!(plan.is_well_formed());
        assert_eq!(plan.work_ctx.degree(), 4);
        assert_eq!(plan.sigma1.exponent(), 1);
        // GF(4) with sigma = id: exponents stay even, so M = 4
        let (ctx, _) = gf4();
        let id4 = Automorphism::identity(&ctx);
        let a = BivarOrePoly::x2(&ctx, id4, id4);
        let b = &a + &BivarOrePoly::x1(&ctx, id4, id4);
        let plan = plan_modular(&a, &b).unwrap();
        assert_eq!((plan.work_ctx.degree(), plan.sigma1.exponent()), (4, 2));
    }

    #[test]
    fn bad_evaluation_flags() {
        let big = FieldCtx::new(2, 8, None).unwrap();
        let s = Automorphism::frobenius(&big, 1).unwrap();
        let x1 = BivarOrePoly::x1(&big, s, s);
        let x2 = BivarOrePoly::x2(&big, s, s);
        let f = &x1 * &x2;
        let plan = plan_modular(&f, &x2).unwrap();
        assert!(!check_bad_eval(&f, &plan));
        assert!(!check_bad_eval(&x2, &plan));

        // x1^2 - 1 acts as zero on GF(4) when sigma has order 2
        let (ctx, s) = gf4();
        let lead = &OrePoly::monomial(&ctx, s, ctx.one(), 2) - &OrePoly::one(&ctx, s);
        let f = BivarOrePoly::from_coeffs(&ctx, s, s, vec![OrePoly::one(&ctx, s), lead]).unwrap();
        let g = BivarOrePoly::x2(&ctx, s, s);
        let plan = ModularPlan::custom(Embedding::identity(&ctx), s, s, 2).unwrap();
        assert!(check_bad_eval(&f, &plan));
        assert!(!plan.is_well_formed());
        assert_eq!(
            modular_run_with(&f, &g, plan).unwrap_err(),
            Error::BadEvaluation
        );
    }

    #[test]
    fn modular_matches_direct() {
        let ctx = FieldCtx::new(2, 4, None).unwrap();
        let s1 = Automorphism::frobenius(&ctx, 1).unwrap();
        let s2 = Automorphism::frobenius(&ctx, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..10 {
            let f = BivarOrePoly::random(&ctx, s1, s2, 2, 2, &mut rng);
            let g = BivarOrePoly::random(&ctx, s1, s2, 2, 1, &mut rng);
            let direct = res_x2_direct(&f, &g).unwrap();
            let run = modular_run(&f, &g).unwrap();
            assert_eq!(run.result.rep, direct.rep);
            assert_eq!(run.result.diagonal, direct.diagonal);
            for e in &run.evals {
                assert_eq!(apply_unchecked(&run.work_rep, e.point), e.value);
            }
        }
    }

    #[test]
    fn common_factor_gives_zero() {
        let ctx = FieldCtx::new(3, 2, None).unwrap();
        let s = Automorphism::frobenius(&ctx, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let h = BivarOrePoly::random(&ctx, s, s, 1, 1, &mut rng);
        let u = BivarOrePoly::random(&ctx, s, s, 1, 1, &mut rng);
        let v = BivarOrePoly::random(&ctx, s, s, 0, 1, &mut rng);
        let run = modular_run(&(&u * &h), &(&v * &h)).unwrap();
        assert!(run.result.is_zero);
        assert!(run.evals.iter().all(|e| e.value.is_zero()));
    }

    #[test]
    fn audit_examples() {
        let (ctx, s) = gf4();
        let nonzero: Vec<FieldElem> = ctx.elements().skip(1).collect();
        let report = conjugacy_audit(&ctx, &nonzero, s).unwrap();
        assert_eq!(report.class_sizes(), vec![3]);
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let s9 = Automorphism::frobenius(&f9, 1).unwrap();
        let all: Vec<FieldElem> = f9.elements().collect();
        let report = conjugacy_audit(&f9, &all, s9).unwrap();
        assert_eq!(report.class_sizes(), vec![4, 4]);
        assert_eq!(report.zero_points, 1);
    }
}
