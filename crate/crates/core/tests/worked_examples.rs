//! Small hand-checkable instances with frozen expected values.

use ore_elim::{
    check_bad_eval, eval_uni, op_apply, op_matrix, plan_modular, res_x2_direct, res_x2_modular,
    row_swap_signed, Automorphism, BivarOrePoly, Error, FieldCtx, OreMatrix, OrePoly,
};
use ore_elim_oracle::classical_resultant;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gf4() -> (FieldCtx, Automorphism) {
    let ctx = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
    let s = Automorphism::frobenius(&ctx, 1).unwrap();
    (ctx, s)
}

#[test]
fn gf4_frobenius_and_norms() {
    let (ctx, s) = gf4();
    let w = ctx.generator().unwrap();
    assert_eq!(ctx.mul(w, w), ctx.add(w, ctx.one()));
    assert_eq!(s.apply(&ctx, w), ctx.add(w, ctx.one()));
    for a in ctx.elements().skip(1) {
        assert_eq!(ctx.sigma_norm(s, a).unwrap(), ctx.one());
    }
    assert_eq!(
        ctx.sigma_norm(s, ctx.zero()).unwrap_err(),
        Error::ZeroElement
    );
}

#[test]
fn gf4_skew_products_and_divisions() {
    let (ctx, s) = gf4();
    let w = ctx.generator().unwrap();
    let x = OrePoly::x(&ctx, s);
    let cw = OrePoly::constant(&ctx, s, w);
    // x w = (w + 1) x
    assert_eq!(
        &x * &cw,
        OrePoly::monomial(&ctx, s, ctx.add(w, ctx.one()), 1)
    );
    // (x^2 + 1) = (w x) (w x) + 1 since w (w + 1) = 1
    let a = &(&x * &x) + &OrePoly::one(&ctx, s);
    let b = &cw * &x;
    let (q, r) = a.right_divmod(&b).unwrap();
    assert_eq!(q, b);
    assert_eq!(r, OrePoly::one(&ctx, s));
}

#[test]
fn gf5_linear_pair() {
    let f5 = FieldCtx::prime(5).unwrap();
    let id = Automorphism::identity(&f5);
    let x1 = BivarOrePoly::x1(&f5, id, id);
    let x2 = BivarOrePoly::x2(&f5, id, id);
    let two = BivarOrePoly::constant(&f5, id, id, f5.from_int(2));
    let f = &x2 - &x1;
    let g = &x2 - &two;
    let expected = OrePoly::from_coeffs(&f5, id, vec![f5.from_int(3), f5.one()]);
    assert_eq!(classical_resultant(&f, &g).unwrap(), expected);
    assert_eq!(res_x2_direct(&f, &g).unwrap().monic_rep(), expected);
    assert_eq!(res_x2_modular(&f, &g).unwrap().monic_rep(), expected);
    assert_eq!(expected.display_with("x1").to_string(), "x1 + 3");
}

#[test]
fn signed_swap_of_identity() {
    let f7 = FieldCtx::prime(7).unwrap();
    let id = Automorphism::identity(&f7);
    let eye = OreMatrix::identity(&f7, id, 2);
    let one = OrePoly::one(&f7, id);
    let zero = OrePoly::zero(&f7, id);
    assert_eq!(
        row_swap_signed(&eye, 0, 1).unwrap().rows(),
        vec![vec![zero.clone(), -&one], vec![one, zero]]
    );
}

#[test]
fn operator_examples() {
    let (ctx, s) = gf4();
    let w = ctx.generator().unwrap();
    let x = eval_uni(&OrePoly::x(&ctx, s));
    assert_eq!(op_apply(&x, w).unwrap(), ctx.add(w, ctx.one()));
    assert_eq!(op_matrix(&x, &ctx).unwrap(), vec![vec![1, 1], vec![0, 1]]);
}

#[test]
fn bad_evaluation_is_excluded_by_plans() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let ctx = FieldCtx::new(2, 8, None).unwrap();
    let s = Automorphism::frobenius(&ctx, 1).unwrap();
    for _ in 0..20 {
        let f = BivarOrePoly::random(&ctx, s, s, 2, 2, &mut rng);
        let g = BivarOrePoly::random(&ctx, s, s, 2, 2, &mut rng);
        let plan = plan_modular(&f, &g).unwrap();
        assert!(plan.is_well_formed());
        assert!(!check_bad_eval(&f, &plan));
        assert!(!check_bad_eval(&g, &plan));
    }
}

#[test]
fn plan_serializes() {
    let (ctx, s) = gf4();
    let x1 = BivarOrePoly::x1(&ctx, s, s);
    let x2 = BivarOrePoly::x2(&ctx, s, s);
    let plan = plan_modular(&(&x2 + &x1), &x2).unwrap();
    let json = serde_json::to_value(&plan).unwrap();
    assert_eq!(json["work_field"], "GF(2^2; modulus = 1 + t + t^2)");
    assert_eq!(json["points"], serde_json::json!([1, 2]));
    assert_eq!(json["degree_bound"], 1);
}
