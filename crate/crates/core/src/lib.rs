//! Elimination for bivariate Ore polynomials over finite fields.
//!
//! Two polynomials `f, g` in `GF(p^m)[x1; sigma1][x2; sigma2]` are reduced
//! to a single eliminant in `x1` by a skew Sylvester matrix and its
//! Dieudonné determinant. A modular route evaluates the eliminant as a
//! linearized operator at many points of an extension field and
//! interpolates it back.

pub mod bivar;
pub mod error;
pub mod field;
pub mod modres;
pub mod opeval;
pub mod ore;
pub mod resultant;
pub mod skewdet;
pub mod text;

pub use bivar::BivarOrePoly;
pub use error::{Error, Result};
pub use field::{Automorphism, Embedding, FieldCtx, FieldElem};
pub use modres::{
    check_bad_eval, conjugacy_audit, modular_run, plan_modular, res_x2_modular, ModularPlan,
    ModularRun, PartialEval,
};
pub use opeval::{
    detect_kernel_collision, eval_bivar, eval_uni, op_apply, op_matrix, LinearizedOp, OpBivarPoly,
};
pub use ore::OrePoly;
pub use resultant::{degree_bound, res_x2_direct, sylvester_matrix, SylvesterMatrix};
pub use skewdet::{
    det_surrogates_equal, dieudonne_det, dieudonne_det_with, row_addmul, row_swap_signed,
    triangularize, triangularize_with, DetResult, OreMatrix, PivotRule, RowOp,
};
pub use text::{parse_bivar, parse_elem, parse_field, parse_uni};
