//! Matrix words `M_n`, continuants, the sum of tuples, dihedral equivalence
//! and the `+-1` reduction identities.

mod euler;
mod matrix;
mod tuple;

pub use euler::{euler_expansion, max_abs_coefficient, ZPolyGraded};
pub use matrix::{continuant, e_matrix, m_from_continuants_of, m_product_of, Mat2};
pub use tuple::{
    canonical_form, canonical_multipliers, dihedral_image, dihedral_images, equivalent, equivalent_multipliers,
    is_quiddity, m_from_continuants, m_product, oplus, oplus_sum, reduce_pm_one, QuiddityError, QuiddityTuple,
    TupleJson,
};
