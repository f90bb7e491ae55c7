pub mod braid;
pub mod matrix;
pub mod rep;
pub mod scalar;

pub use braid::{
    braid_rho, check_braid_relations, check_with, is_trivial_braid, search_kernel, BraidParams, BraidReport, BraidWord, Branch,
    KernelSearch,
};
pub use matrix::{rank, Matrix};
pub use rep::{
    checked_pow, e_row, equiv_j, eta, gamma_mat, h_eval, h_mat, independence_check, independence_check_limited, mat_star, phi_mat, rep_jones,
    rep_kn, rep_kn_limited, DEFAULT_MAX_DIM,
};
pub use scalar::{parse_rat, QExt, Rat, Scalar};
