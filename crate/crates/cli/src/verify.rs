//! The acceptance suite, A1 to A10.
//!
//! Each criterion draws its instances from a seeded generator, checks them
//! against an independent reference where one exists, and reports a single
//! verdict with its running time. A criterion that overruns its time budget
//! fails.

use std::time::{Duration, Instant};

use ore_elim::modres::chain_value;
use ore_elim::{
    conjugacy_audit, det_surrogates_equal, dieudonne_det, dieudonne_det_with, eval_bivar, eval_uni,
    modular_run, op_apply, res_x2_direct, row_swap_signed, Automorphism, BivarOrePoly, FieldCtx,
    FieldElem, OreMatrix, OrePoly, PivotRule,
};
use ore_elim_oracle::{brute_conjugacy, classical_resultant, naive_ore_mul};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bench::{cmd_bench, medians, BenchConfig};

pub const DEFAULT_SEED: u64 = 0x0e1e_5eed;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
    pub budget_secs: u64,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{} {:<4} {:<44} {:>8} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.millis,
            self.detail
        )
    }
}

type Check = fn(u64) -> Result<String, String>;

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub budget: Duration,
    check: Check,
}

impl Criterion {
    pub fn run(&self, seed: u64) -> Outcome {
        let start = Instant::now();
        let check = self.check;
        let result = std::panic::catch_unwind(move || check(seed)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if elapsed > self.budget {
            passed = false;
            detail = format!("{detail}; over the {} s budget", self.budget.as_secs());
        }
        Outcome {
            id: self.id,
            title: self.title,
            passed,
            detail,
            millis: elapsed.as_millis(),
            budget_secs: self.budget.as_secs(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, title, secs, check| Criterion {
        id,
        title,
        budget: Duration::from_secs(secs),
        check,
    };
    vec![
        c(
            "A1",
            "commutative case equals classical resultant",
            30,
            a1 as Check,
        ),
        c("A2", "common right factor forces zero", 60, a2),
        c("A3", "operator chain matches direct eliminant", 60, a3),
        c("A4", "modular equals direct", 120, a4),
        c("A5", "surrogates independent of pivot rule", 60, a5),
        c("A6", "evaluation is a ring morphism", 30, a6),
        c("A7", "norm classes equal conjugacy classes", 10, a7),
        c("A8", "signed swaps", 10, a8),
        c("A9", "right division reconstructs", 30, a9),
        c("A10", "benchmark verdicts agree", 120, a10),
    ]
}

/// Runs the criteria whose ids are listed (all when `only` is empty).
pub fn run_all(seed: u64, only: &[String]) -> Vec<Outcome> {
    criteria()
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|id| id.eq_ignore_ascii_case(c.id)))
        .map(|c| c.run(seed))
        .collect()
}

fn rng_for(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ id.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn nontrivial(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> Automorphism {
    Automorphism::frobenius(ctx, rng.gen_range(1..ctx.degree())).expect("exponent below degree")
}

fn field(p: u64, m: u32) -> FieldCtx {
    FieldCtx::new(p, m, None).expect("small default field")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn a1(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 1);
    let ctx = field(7, 1);
    let id = Automorphism::identity(&ctx);
    let mut nonzero = 0;
    for i in 0..200 {
        let f = BivarOrePoly::random(
            &ctx,
            id,
            id,
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
            &mut rng,
        );
        let g = BivarOrePoly::random(
            &ctx,
            id,
            id,
            rng.gen_range(0..=3),
            rng.gen_range(1..=3),
            &mut rng,
        );
        let classical =
            classical_resultant(&f, &g).map_err(|e| format!("pair {i}: oracle: {e}"))?;
        let direct = res_x2_direct(&f, &g)
            .map_err(|e| format!("pair {i}: {e}"))?
            .rep;
        ensure(direct == classical || direct == -&classical, || {
            format!("pair {i}: f = {f}, g = {g}: {direct} vs {classical}")
        })?;
        nonzero += usize::from(!direct.is_zero());
    }
    Ok(format!("200 pairs over GF(7), {nonzero} nonzero"))
}

fn a2(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 2);
    let ctx = field(2, 4);
    for i in 0..100 {
        let s1 = nontrivial(&ctx, &mut rng);
        let s2 = nontrivial(&ctx, &mut rng);
        let h = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(1..=2),
            &mut rng,
        );
        let u = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(0..=1),
            &mut rng,
        );
        let v = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(0..=1),
            &mut rng,
        );
        let det =
            res_x2_direct(&(&u * &h), &(&v * &h)).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(det.is_zero, || {
            format!("instance {i}: eliminant {} is not zero", det.rep)
        })?;
    }
    Ok("100 constructions over GF(16) vanish".into())
}

fn a3(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 3);
    let ctx = field(2, 8);
    let mut points = 0;
    for i in 0..50 {
        let s1 = nontrivial(&ctx, &mut rng);
        let s2 = nontrivial(&ctx, &mut rng);
        let f = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(1..=2),
            &mut rng,
        );
        let g = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(1..=2),
            &mut rng,
        );
        let direct = res_x2_direct(&f, &g).map_err(|e| format!("instance {i}: {e}"))?;
        let run = modular_run(&f, &g).map_err(|e| format!("instance {i}: {e}"))?;
        let lifted = eval_uni(&direct.rep.embed(&run.plan.embedding, run.plan.sigma1));
        let diagonal: Vec<OrePoly> = direct
            .diagonal
            .iter()
            .map(|d| d.embed(&run.plan.embedding, run.plan.sigma1))
            .collect();
        for e in &run.evals {
            let expected = op_apply(&lifted, e.point).map_err(|e| e.to_string())?;
            ensure(
                expected == e.value && chain_value(&diagonal, e.point) == e.value,
                || format!("instance {i}: disagreement at point {}", e.point.index()),
            )?;
            points += 1;
        }
    }
    Ok(format!("50 instances over GF(2^8), {points} points"))
}

fn a4(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 4);
    let mut checked = 0;
    for (p, m) in [(2, 8), (3, 4), (5, 2)] {
        let ctx = field(p, m);
        for i in 0..50 {
            let s1 = nontrivial(&ctx, &mut rng);
            let s2 = nontrivial(&ctx, &mut rng);
            let f = BivarOrePoly::random(
                &ctx,
                s1,
                s2,
                rng.gen_range(0..=2),
                rng.gen_range(1..=2),
                &mut rng,
            );
            let g = BivarOrePoly::random(
                &ctx,
                s1,
                s2,
                rng.gen_range(0..=2),
                rng.gen_range(1..=2),
                &mut rng,
            );
            let tag = || format!("GF({p}^{m}) instance {i}");
            let direct = res_x2_direct(&f, &g).map_err(|e| format!("{}: {e}", tag()))?;
            let run = modular_run(&f, &g).map_err(|e| format!("{}: {e}", tag()))?;
            ensure(run.result.rep == direct.rep, || {
                format!(
                    "{}: modular {} vs direct {}",
                    tag(),
                    run.result.rep,
                    direct.rep
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} instances over GF(2^8), GF(3^4), GF(5^2)"
    ))
}

fn a5(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 5);
    let mut singular = 0;
    for i in 0..100 {
        let (p, m) = [(2, 4), (3, 2), (5, 1), (2, 3)][i % 4];
        let ctx = field(p, m);
        let s = Automorphism::frobenius(&ctx, rng.gen_range(0..m)).expect("exponent below degree");
        let n = rng.gen_range(1..=5);
        let mut mat = OreMatrix::random(&ctx, s, n, 3, 0.2, &mut rng);
        if n >= 2 && i % 3 == 0 {
            // a row that is a left multiple of another makes the matrix singular
            let q = OrePoly::random(&ctx, s, rng.gen_range(0..=1), &mut rng);
            let src = rng.gen_range(0..n);
            let dst = (src + 1) % n;
            let rows: Vec<Vec<OrePoly>> = (0..n)
                .map(|r| {
                    if r == dst {
                        mat.row(src).iter().map(|e| &q * e).collect()
                    } else {
                        mat.row(r).to_vec()
                    }
                })
                .collect();
            mat = OreMatrix::from_rows(rows).map_err(|e| e.to_string())?;
        }
        let base = dieudonne_det(&mat);
        singular += usize::from(base.is_zero);
        for rule in [PivotRule::FirstNonzero, PivotRule::Seeded(seed ^ i as u64)] {
            let other = dieudonne_det_with(&mat, rule);
            ensure(
                base.is_zero == other.is_zero && base.degree == other.degree,
                || {
                    format!(
                        "matrix {i}: {rule:?} gives degree {:?}, default {:?}",
                        other.degree, base.degree
                    )
                },
            )?;
        }
    }
    Ok(format!("100 matrices, {singular} singular"))
}

fn a6(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 6);
    let fields = [(2, 8), (3, 3), (5, 2), (7, 1)];
    for i in 0..200 {
        let (p, m) = fields[i % fields.len()];
        let ctx = field(p, m);
        let s1 = Automorphism::frobenius(&ctx, rng.gen_range(0..m)).expect("exponent below degree");
        let s2 = Automorphism::frobenius(&ctx, rng.gen_range(0..m)).expect("exponent below degree");
        let f = OrePoly::random(&ctx, s1, rng.gen_range(0..=4), &mut rng);
        let g = OrePoly::random(&ctx, s1, rng.gen_range(0..=4), &mut rng);
        let composed = eval_uni(&f)
            .compose(&eval_uni(&g))
            .map_err(|e| e.to_string())?;
        ensure(eval_uni(&(&f * &g)) == composed, || {
            format!("univariate pair {i}")
        })?;
        let bf = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            &mut rng,
        );
        let bg = BivarOrePoly::random(
            &ctx,
            s1,
            s2,
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            &mut rng,
        );
        let product = eval_bivar(&bf)
            .try_mul(&eval_bivar(&bg))
            .map_err(|e| e.to_string())?;
        ensure(eval_bivar(&(&bf * &bg)) == product, || {
            format!("bivariate pair {i}")
        })?;
    }
    Ok("200 univariate and 200 bivariate pairs".into())
}

fn a7(_seed: u64) -> Result<String, String> {
    let mut compared = 0;
    for (p, m) in [(2, 2), (2, 3), (3, 2)] {
        let ctx = field(p, m);
        let nonzero: Vec<FieldElem> = ctx.elements().skip(1).collect();
        for e in 0..m {
            let s = Automorphism::frobenius(&ctx, e).expect("exponent below degree");
            let report = conjugacy_audit(&ctx, &nonzero, s).map_err(|e| e.to_string())?;
            let mut ours: Vec<Vec<FieldElem>> =
                report.classes.into_iter().map(|c| c.members).collect();
            ours.iter_mut().for_each(|c| c.sort());
            ours.sort();
            let brute = brute_conjugacy(&ctx, s).map_err(|e| e.to_string())?;
            ensure(ours == brute, || format!("GF({p}^{m}) with exponent {e}"))?;
            compared += 1;
        }
    }
    Ok(format!(
        "{compared} (field, sigma) pairs over GF(4), GF(8), GF(9)"
    ))
}

fn a8(seed: u64) -> Result<String, String> {
    let ctx = field(7, 1);
    let id = Automorphism::identity(&ctx);
    let swapped =
        row_swap_signed(&OreMatrix::identity(&ctx, id, 2), 0, 1).map_err(|e| e.to_string())?;
    let one = OrePoly::one(&ctx, id);
    let zero = OrePoly::zero(&ctx, id);
    ensure(
        swapped.rows() == vec![vec![zero.clone(), -&one], vec![one, zero]],
        || "swap of the identity is not [[0, -1], [1, 0]]".into(),
    )?;
    let mut rng = rng_for(seed, 8);
    for i in 0..50 {
        let (p, m) = [(2, 4), (3, 2), (7, 1)][i % 3];
        let ctx = field(p, m);
        let s = Automorphism::frobenius(&ctx, rng.gen_range(0..m)).expect("exponent below degree");
        let n = rng.gen_range(2..=5);
        let mat = OreMatrix::random(&ctx, s, n, 2, 0.2, &mut rng);
        let base = dieudonne_det(&mat);
        let mut cur = mat;
        for _ in 0..10 {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            cur = row_swap_signed(&cur, a, b).map_err(|e| e.to_string())?;
        }
        ensure(
            det_surrogates_equal(&base, &dieudonne_det(&cur)).holds(),
            || format!("matrix {i}: surrogates changed under signed swaps"),
        )?;
    }
    Ok("identity swap exact; 50 matrices after 10 swaps".into())
}

fn a9(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 9);
    let fields = [(2, 4), (3, 3), (5, 2), (2, 8), (11, 1)];
    let rings: Vec<(FieldCtx, Vec<Automorphism>)> = fields
        .iter()
        .map(|&(p, m)| {
            let ctx = field(p, m);
            let sigmas = (0..m)
                .map(|e| Automorphism::frobenius(&ctx, e).expect("exponent below degree"))
                .collect();
            (ctx, sigmas)
        })
        .collect();
    for i in 0..10_000 {
        let (ctx, sigmas) = &rings[i % rings.len()];
        let s = sigmas[rng.gen_range(0..sigmas.len())];
        let a = OrePoly::random(ctx, s, rng.gen_range(0..=6), &mut rng);
        let b = OrePoly::random(ctx, s, rng.gen_range(0..=4), &mut rng);
        let (q, r) = a
            .right_divmod(&b)
            .map_err(|e| format!("instance {i}: {e}"))?;
        ensure(r.degree() < b.degree(), || {
            format!("instance {i}: remainder too large")
        })?;
        let qb = naive_ore_mul(&q, &b).map_err(|e| e.to_string())?;
        ensure(&qb + &r == a, || format!("instance {i}: q*b + r != a"))?;
    }
    Ok("10000 divisions".into())
}

fn a10(seed: u64) -> Result<String, String> {
    let ctx = field(2, 8);
    let cfg = BenchConfig {
        sigma1: Automorphism::frobenius(&ctx, 1).expect("exponent below degree"),
        sigma2: Automorphism::frobenius(&ctx, 3).expect("exponent below degree"),
        ctx,
        trials: 20,
        deg_x1: 3,
        deg_x2: 3,
        seed,
    };
    let rows = cmd_bench(&cfg).map_err(|e| e.to_string())?;
    let bad = rows.iter().filter(|r| r.verdict != "ok").count() / 2;
    let (direct, modular) = medians(&rows);
    ensure(bad == 0, || {
        format!("{bad} of {} trials disagree", cfg.trials)
    })?;
    Ok(format!(
        "{} trials agree; median direct {direct} us, modular {modular} us",
        cfg.trials
    ))
}
