//! Exact computation with lambda-quiddities: tuples `(a_1, ..., a_n)` over a
//! cyclic subgroup `<w>` of the complex numbers with
//! `M_n(a_1, ..., a_n) = +-Id`.

pub mod cache;
pub mod classify;
pub mod numfield;
pub mod par;
pub mod polycrit;
pub mod quiddity;
pub mod reducibility;
