//! Direct elimination of `x2` through a skew Sylvester matrix.
//!
//! Row `r < m` holds the `x2`-coefficients of `x2^(m-1-r) * f` and row
//! `m + r` those of `x2^(n-1-r) * g`, highest power leftmost. The shifts are
//! computed by [`BivarOrePoly::shift_left`], so the `s2`-twist of shifted
//! coefficients is part of the construction.

use crate::bivar::BivarOrePoly;
use crate::error::{Error, Result};
use crate::skewdet::{dieudonne_det, DetResult, OreMatrix};

#[derive(Clone, Debug)]
pub struct SylvesterMatrix {
    pub inner: OreMatrix,
    /// `deg_x2 f`.
    pub n: usize,
    /// `deg_x2 g`.
    pub m: usize,
}

pub fn sylvester_matrix(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<SylvesterMatrix> {
    if !f.same_ring(g) {
        return Err(Error::RingMismatch);
    }
    let n = f.degree_x2().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree_x2().ok_or(Error::ZeroPolynomial)?;
    if n == 0 && m == 0 {
        return Err(Error::BothConstant);
    }
    let size = n + m;
    let row_of = |p: &BivarOrePoly| (0..size).rev().map(|pow| p.coeff_x2(pow)).collect();
    let rows: Vec<Vec<_>> = (0..m)
        .map(|r| row_of(&f.shift_left(m - 1 - r)))
        .chain((0..n).map(|r| row_of(&g.shift_left(n - 1 - r))))
        .collect();
    Ok(SylvesterMatrix {
        inner: OreMatrix::from_rows(rows)?,
        n,
        m,
    })
}

/// `m * max deg_x1 a_i + n * max deg_x1 b_j`, a bound on `deg_x1` of the eliminant.
pub fn degree_bound(f: &BivarOrePoly, g: &BivarOrePoly) -> usize {
    let n = f.degree_x2().unwrap_or(0);
    let m = g.degree_x2().unwrap_or(0);
    m * f.max_degree_x1().unwrap_or(0) + n * g.max_degree_x1().unwrap_or(0)
}

/// The eliminant `res_x2(f, g)` as a Dieudonné determinant representative.
pub fn res_x2_direct(f: &BivarOrePoly, g: &BivarOrePoly) -> Result<DetResult> {
    Ok(dieudonne_det(&sylvester_matrix(f, g)?.inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Automorphism, FieldCtx};
    use crate::ore::OrePoly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn linear_pair_over_gf5() {
        let f5 = FieldCtx::prime(5).unwrap();
        let id = Automorphism::identity(&f5);
        let x1 = BivarOrePoly::x1(&f5, id, id);
        let x2 = BivarOrePoly::x2(&f5, id, id);
        let two = BivarOrePoly::constant(&f5, id, id, f5.from_int(2));
        let f = &x2 - &x1;
        let g = &x2 - &two;
        let s = sylvester_matrix(&f, &g).unwrap();
        let one = OrePoly::one(&f5, id);
        let x = OrePoly::x(&f5, id);
        assert_eq!(
            s.inner.rows(),
            vec![
                vec![one.clone(), -&x],
                vec![one.clone(), OrePoly::constant(&f5, id, f5.from_int(3))]
            ]
        );
        let det = res_x2_direct(&f, &g).unwrap();
        let expected = OrePoly::from_coeffs(&f5, id, vec![f5.from_int(3), f5.one()]);
        assert!(det.rep == expected || det.rep == -&expected);
        assert_eq!(det.monic_rep(), expected);
    }

    #[test]
    fn shifted_rows_carry_twists() {
        let ctx = FieldCtx::new(2, 4, None).unwrap();
        let s1 = Automorphism::frobenius(&ctx, 1).unwrap();
        let s2 = Automorphism::frobenius(&ctx, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = BivarOrePoly::random(&ctx, s1, s2, 2, 2, &mut rng);
        let g = BivarOrePoly::random(&ctx, s1, s2, 2, 1, &mut rng);
        let s = sylvester_matrix(&f, &g).unwrap();
        assert_eq!((s.n, s.m, s.inner.dim()), (2, 1, 3));
        let g_shift = g.shift_left(1);
        assert_eq!(s.inner.get(1, 0), &g_shift.coeff_x2(2));
        assert_eq!(s.inner.get(1, 1), &g_shift.coeff_x2(1));
        assert!(s.inner.get(1, 2).is_zero());
        assert_eq!(s.inner.get(0, 0), &f.coeff_x2(2));
        assert_eq!(s.inner.get(2, 2), &g.coeff_x2(0));
    }

    #[test]
    fn errors() {
        let ctx = FieldCtx::new(2, 2, None).unwrap();
        let s = Automorphism::frobenius(&ctx, 1).unwrap();
        let x2 = BivarOrePoly::x2(&ctx, s, s);
        let zero = BivarOrePoly::zero(&ctx, s, s);
        let one = BivarOrePoly::one(&ctx, s, s);
        assert_eq!(
            sylvester_matrix(&x2, &zero).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert_eq!(
            sylvester_matrix(&one, &one).unwrap_err(),
            Error::BothConstant
        );
    }

    #[test]
    fn constant_partner() {
        let f7 = FieldCtx::prime(7).unwrap();
        let id = Automorphism::identity(&f7);
        let x2 = BivarOrePoly::x2(&f7, id, id);
        let f = &(&x2 * &x2) + &BivarOrePoly::x1(&f7, id, id);
        let c = BivarOrePoly::constant(&f7, id, id, f7.from_int(3));
        // res(f, c) = c^deg f
        let det = res_x2_direct(&f, &c).unwrap();
        assert_eq!(det.rep, OrePoly::constant(&f7, id, f7.from_int(2)));
    }

    #[test]
    fn common_factor_vanishes() {
        let ctx = FieldCtx::new(2, 4, None).unwrap();
        let s1 = Automorphism::frobenius(&ctx, 1).unwrap();
        let s2 = Automorphism::frobenius(&ctx, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = BivarOrePoly::random(&ctx, s1, s2, 1, 1, &mut rng);
        let u = BivarOrePoly::random(&ctx, s1, s2, 1, 1, &mut rng);
        let v = BivarOrePoly::random(&ctx, s1, s2, 2, 1, &mut rng);
        let det = res_x2_direct(&(&u * &h), &(&v * &h)).unwrap();
        assert!(det.is_zero);
    }
}
