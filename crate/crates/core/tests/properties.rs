//! Algebraic invariants checked on random inputs.

use ore_elim::modres::chain_value;
use ore_elim::opeval::prime_matmul;
use ore_elim::{
    degree_bound, det_surrogates_equal, dieudonne_det, dieudonne_det_with, eval_bivar, eval_uni,
    modular_run, op_apply, op_matrix, res_x2_direct, row_swap_signed, Automorphism, BivarOrePoly,
    FieldCtx, OreMatrix, OrePoly, PivotRule,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `(p, m)` pairs small enough for quick random tests.
const FIELDS: &[(u64, u32)] = &[
    (2, 1),
    (2, 3),
    (2, 4),
    (3, 2),
    (5, 2),
    (7, 1),
    (2, 8),
    (3, 4),
];

fn ring(seed: u64) -> (FieldCtx, Automorphism, Automorphism, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, m) = FIELDS[rng.gen_range(0..FIELDS.len())];
    let ctx = FieldCtx::new(p, m, None).unwrap();
    let s1 = Automorphism::frobenius(&ctx, rng.gen_range(0..m)).unwrap();
    let s2 = Automorphism::frobenius(&ctx, rng.gen_range(0..m)).unwrap();
    (ctx, s1, s2, rng)
}

fn poly(ctx: &FieldCtx, s: Automorphism, rng: &mut ChaCha8Rng, max: usize) -> OrePoly {
    if rng.gen_bool(0.1) {
        return OrePoly::zero(ctx, s);
    }
    let d = rng.gen_range(0..=max);
    OrePoly::random(ctx, s, d, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(seed in any::<u64>()) {
        let (ctx, s, _, mut rng) = ring(seed);
        let (a, b, c) = (ctx.random(&mut rng), ctx.random(&mut rng), ctx.random(&mut rng));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        prop_assert_eq!(s.apply(&ctx, ctx.mul(a, b)), ctx.mul(s.apply(&ctx, a), s.apply(&ctx, b)));
        prop_assert_eq!(s.apply(&ctx, ctx.add(a, b)), ctx.add(s.apply(&ctx, a), s.apply(&ctx, b)));
        prop_assert_eq!(s.inverse().apply(&ctx, s.apply(&ctx, a)), a);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), ctx.one());
            // the norm lands in the fixed field of sigma
            let n = ctx.sigma_norm(s, a).unwrap();
            prop_assert_eq!(s.apply(&ctx, n), n);
        }
    }

    #[test]
    fn ore_ring_laws(seed in any::<u64>()) {
        let (ctx, s, _, mut rng) = ring(seed);
        let f = poly(&ctx, s, &mut rng, 4);
        let g = poly(&ctx, s, &mut rng, 4);
        let h = poly(&ctx, s, &mut rng, 4);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        if let (Some(df), Some(dg)) = (f.degree(), g.degree()) {
            prop_assert_eq!((&f * &g).degree(), Some(df + dg));
        }
    }

    #[test]
    fn divisions_are_unique(seed in any::<u64>()) {
        let (ctx, s, _, mut rng) = ring(seed);
        let b = OrePoly::random(&ctx, s, rng.gen_range(0..4), &mut rng);
        let q = poly(&ctx, s, &mut rng, 4);
        let r = if b.degree() == Some(0) { OrePoly::zero(&ctx, s) } else {
            poly(&ctx, s, &mut rng, b.degree().unwrap() - 1)
        };
        let a = &(&q * &b) + &r;
        prop_assert_eq!(a.right_divmod(&b).unwrap(), (q.clone(), r.clone()));
        let a = &(&b * &q) + &r;
        prop_assert_eq!(a.left_divmod(&b).unwrap(), (q, r));
    }

    #[test]
    fn gcrd_divides_both(seed in any::<u64>()) {
        let (ctx, s, _, mut rng) = ring(seed);
        let h = OrePoly::random(&ctx, s, rng.gen_range(1..3), &mut rng);
        let u = OrePoly::random(&ctx, s, rng.gen_range(0..3), &mut rng);
        let v = OrePoly::random(&ctx, s, rng.gen_range(0..3), &mut rng);
        let d = (&u * &h).gcrd(&(&v * &h)).unwrap();
        prop_assert!((&u * &h).right_divmod(&d).unwrap().1.is_zero());
        prop_assert!((&v * &h).right_divmod(&d).unwrap().1.is_zero());
        prop_assert!(d.right_divmod(&h).unwrap().1.is_zero());
        prop_assert_eq!(d.leading_coeff(), Some(ctx.one()));
    }

    #[test]
    fn bivariate_ring_laws(seed in any::<u64>()) {
        let (ctx, s1, s2, mut rng) = ring(seed);
        let f = BivarOrePoly::random(&ctx, s1, s2, 2, 2, &mut rng);
        let g = BivarOrePoly::random(&ctx, s1, s2, 2, 2, &mut rng);
        let h = BivarOrePoly::random(&ctx, s1, s2, 1, 1, &mut rng);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        let x1 = BivarOrePoly::x1(&ctx, s1, s2);
        let x2 = BivarOrePoly::x2(&ctx, s1, s2);
        prop_assert_eq!(&x1 * &x2, &x2 * &x1);
        prop_assert_eq!(f.shift_left(2), &(&x2 * &x2) * &f);
    }

    #[test]
    fn degree_bound_and_determinism(seed in any::<u64>()) {
        let (ctx, s1, s2, mut rng) = ring(seed);
        let f = BivarOrePoly::random(&ctx, s1, s2, rng.gen_range(0..3), rng.gen_range(1..3), &mut rng);
        let g = BivarOrePoly::random(&ctx, s1, s2, rng.gen_range(0..3), rng.gen_range(1..3), &mut rng);
        let det = res_x2_direct(&f, &g).unwrap();
        if let Some(d) = det.degree {
            prop_assert!(d <= degree_bound(&f, &g));
        }
        prop_assert_eq!(res_x2_direct(&f, &g).unwrap().rep, det.rep);
    }

    #[test]
    fn pivot_rules_share_surrogates(seed in any::<u64>()) {
        let (ctx, s, _, mut rng) = ring(seed);
        let n = rng.gen_range(1..5);
        let m = OreMatrix::random(&ctx, s, n, 3, 0.2, &mut rng);
        let base = dieudonne_det(&m);
        for rule in [PivotRule::FirstNonzero, PivotRule::Seeded(seed)] {
            let other = dieudonne_det_with(&m, rule);
            prop_assert!(det_surrogates_equal(&base, &other).holds());
        }
        if n >= 2 {
            let swapped = row_swap_signed(&m, 0, n - 1).unwrap();
            prop_assert!(det_surrogates_equal(&base, &dieudonne_det(&swapped)).holds());
        }
    }

    #[test]
    fn evaluation_is_a_morphism(seed in any::<u64>()) {
        let (ctx, s1, s2, mut rng) = ring(seed);
        let f = poly(&ctx, s1, &mut rng, 4);
        let g = poly(&ctx, s1, &mut rng, 4);
        let a = ctx.random(&mut rng);
        let fg = eval_uni(&(&f * &g));
        prop_assert_eq!(&fg, &eval_uni(&f).compose(&eval_uni(&g)).unwrap());
        let inner = op_apply(&eval_uni(&g), a).unwrap();
        prop_assert_eq!(op_apply(&fg, a).unwrap(), op_apply(&eval_uni(&f), inner).unwrap());
        let b = ctx.random(&mut rng);
        prop_assert_eq!(
            op_apply(&eval_uni(&f), ctx.add(a, b)).unwrap(),
            ctx.add(op_apply(&eval_uni(&f), a).unwrap(), op_apply(&eval_uni(&f), b).unwrap())
        );
        let mf = op_matrix(&eval_uni(&f), &ctx).unwrap();
        let mg = op_matrix(&eval_uni(&g), &ctx).unwrap();
        prop_assert_eq!(op_matrix(&fg, &ctx).unwrap(), prime_matmul(&mf, &mg, ctx.characteristic()));

        let bf = BivarOrePoly::random(&ctx, s1, s2, 2, 2, &mut rng);
        let bg = BivarOrePoly::random(&ctx, s1, s2, 2, 2, &mut rng);
        let lhs = eval_bivar(&(&bf * &bg));
        let rhs = eval_bivar(&bf).try_mul(&eval_bivar(&bg)).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.degree_x2(), bf.degree_x2().zip(bg.degree_x2()).map(|(a, b)| a + b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modular_recovers_direct(seed in any::<u64>()) {
        let (ctx, s1, s2, mut rng) = ring(seed);
        let f = BivarOrePoly::random(&ctx, s1, s2, rng.gen_range(0..3), rng.gen_range(1..3), &mut rng);
        let g = BivarOrePoly::random(&ctx, s1, s2, rng.gen_range(0..3), rng.gen_range(1..3), &mut rng);
        let direct = res_x2_direct(&f, &g).unwrap();
        let run = modular_run(&f, &g).unwrap();
        prop_assert!(run.plan.is_well_formed());
        prop_assert_eq!(&run.result.rep, &direct.rep);
        let lifted = direct.rep.embed(&run.plan.embedding, run.plan.sigma1);
        let diag: Vec<OrePoly> = direct
            .diagonal
            .iter()
            .map(|d| d.embed(&run.plan.embedding, run.plan.sigma1))
            .collect();
        for e in &run.evals {
            prop_assert_eq!(op_apply(&eval_uni(&lifted), e.point).unwrap(), e.value);
            prop_assert_eq!(op_apply(&eval_uni(&run.work_rep), e.point).unwrap(), e.value);
            prop_assert_eq!(chain_value(&diag, e.point), e.value);
        }
    }
}

#[test]
fn op_apply_is_additive_exhaustively() {
    for (p, m) in [(2, 2), (2, 3), (3, 2), (2, 6), (7, 2)] {
        let ctx = FieldCtx::new(p, m, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(p * 100 + m as u64);
        for e in 0..m {
            let s = Automorphism::frobenius(&ctx, e).unwrap();
            let op = eval_uni(&OrePoly::random(&ctx, s, 3, &mut rng));
            for a in ctx.elements() {
                for b in ctx.elements() {
                    let lhs = op_apply(&op, ctx.add(a, b)).unwrap();
                    let rhs = ctx.add(op_apply(&op, a).unwrap(), op_apply(&op, b).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
