//! Normal forms and word problems for the `L`, `K` and `J` families.

pub mod jones;
pub mod knf;
pub mod lnf;

pub use jones::{eq_jn, eq_kn, jones_forms, measure_kn, normalize_kn, BlockItem, BlockWord, JonesNf};
pub use knf::{collapse_lnf, eq_j, eq_k, knf_append, normalize_k, Knf};
pub use lnf::{eq_l, lnf_append, normalize_ext, normalize_l, Lnf};
