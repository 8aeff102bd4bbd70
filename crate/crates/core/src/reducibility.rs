//! Exact reducibility decision with replayable witnesses.
//!
//! A quiddity `c` is reducible when some dihedral image equals `a ⊕ b` with
//! `b` a quiddity and both sizes at least 3. Fix the image `c'` and the size
//! `l` of `b`. Then `b = (b_1, c'_{m+1}, ..., c'_n, b_l)` with `m = n + 2 - l`,
//! and with `P = M_{l-2}(c'_{m+1}, ..., c'_n)` the condition
//! `E(b_l) P E(b_1) = eps Id` forces `P_11 = -eps`, `b_1 = eps P_12`,
//! `b_l = -eps P_21` (and `P_22 = eps (b_1 b_l - 1)`, implied by `det P = 1`).
//! The left summand is then `a = (c'_1 - b_l, c'_2, ..., c'_{m-1}, c'_m - b_1)`.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::numfield::FieldElement;
use crate::quiddity::{dihedral_image, dihedral_images, e_matrix, is_quiddity, oplus, Mat2, QuiddityTuple};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("tuple is not a quiddity")]
    NotAQuiddity,
    #[error("boundary multiplier does not fit in 64 bits")]
    Overflow,
}

/// `image(c, rotation, reflected) = a ⊕ b` with `b` a quiddity of sign
/// `epsilon_b`; `split_m` is the size of `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionWitness {
    pub rotation: usize,
    pub reflected: bool,
    pub split_m: usize,
    pub a_multipliers: Vec<i64>,
    pub b_multipliers: Vec<i64>,
    pub epsilon_b: i8,
}

impl ReductionWitness {
    /// Replays the witness against `t`: sizes, the sum, and the quiddity
    /// property of `b`.
    pub fn replays(&self, t: &QuiddityTuple) -> bool {
        let n = t.len();
        let l = self.b_multipliers.len();
        if self.split_m < 3 || l < 3 || self.a_multipliers.len() != self.split_m || self.split_m + l != n + 2 {
            return false;
        }
        let image = dihedral_image(t.multipliers(), self.rotation, self.reflected);
        let Ok(sum) = oplus(&self.a_multipliers, &self.b_multipliers) else {
            return false;
        };
        sum == image && is_quiddity(&t.with_multipliers(self.b_multipliers.clone())) == Some(self.epsilon_b)
    }
}

/// Membership `x = k w`, with the zero generator handled separately.
fn member(x: &FieldElement, w: &FieldElement) -> Result<Option<i64>, ReductionError> {
    if w.is_zero() {
        return Ok(x.is_zero().then_some(0));
    }
    match x.subgroup_member(w).expect("compatible, nonzero generator") {
        None => Ok(None),
        Some(k) => k.to_i64().map(Some).ok_or(ReductionError::Overflow),
    }
}

/// First witness in scan order (unreflected rotations ascending, then
/// reflected ones; summand size `l` ascending), or `None` when irreducible.
pub fn find_reduction(t: &QuiddityTuple) -> Result<Option<ReductionWitness>, ReductionError> {
    if is_quiddity(t).is_none() {
        return Err(ReductionError::NotAQuiddity);
    }
    let n = t.len();
    if n < 4 {
        return Ok(None);
    }
    let w = t.generator();
    let field = t.field();
    for (rotation, reflected, image) in dihedral_images(t.multipliers()) {
        let entry = |i: usize| w.scale_int(image[i]);
        // P for l = 2 is the empty product; each larger l prepends c'_{m+1}.
        let mut p = Mat2::identity(field);
        for l in 3..n {
            let m = n + 2 - l;
            p = &p * &e_matrix(&entry(m));
            let eps: i8 = match p.m11.as_rational() {
                Some(v) if v == num_rational::BigRational::from_integer((-1).into()) => 1,
                Some(v) if v == num_rational::BigRational::from_integer(1.into()) => -1,
                _ => continue,
            };
            let (b1, bl) = if eps == 1 { (p.m12.clone(), -&p.m21) } else { (-&p.m12, p.m21.clone()) };
            let expected_p22 = (&(&b1 * &bl) - &field.one()).scale_int(eps as i64);
            if p.m22 != expected_p22 {
                continue;
            }
            let (Some(k1), Some(kl)) = (member(&b1, w)?, member(&bl, w)?) else {
                continue;
            };
            let mut b = Vec::with_capacity(l);
            b.push(k1);
            b.extend_from_slice(&image[m..]);
            b.push(kl);
            let mut a = image[..m].to_vec();
            a[0] -= kl;
            a[m - 1] -= k1;
            let witness = ReductionWitness { rotation, reflected, split_m: m, a_multipliers: a, b_multipliers: b, epsilon_b: eps };
            assert!(witness.replays(t), "forced-boundary witness failed to replay");
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Exhaustive oracle: tries every image, split and pair of boundary
/// multipliers `|b_1|, |b_l| <= k_bound`, checking the definition directly.
pub fn brute_force_reduction(t: &QuiddityTuple, k_bound: i64) -> Result<Option<ReductionWitness>, ReductionError> {
    if is_quiddity(t).is_none() {
        return Err(ReductionError::NotAQuiddity);
    }
    let n = t.len();
    for (rotation, reflected, image) in dihedral_images(t.multipliers()) {
        for l in 3..n {
            let m = n + 2 - l;
            for k1 in -k_bound..=k_bound {
                for kl in -k_bound..=k_bound {
                    let mut b = vec![k1];
                    b.extend_from_slice(&image[m..]);
                    b.push(kl);
                    let Some(eps) = is_quiddity(&t.with_multipliers(b.clone())) else {
                        continue;
                    };
                    let mut a = image[..m].to_vec();
                    a[0] -= kl;
                    a[m - 1] -= k1;
                    if oplus(&a, &b).ok().as_deref() == Some(&image[..]) {
                        return Ok(Some(ReductionWitness {
                            rotation,
                            reflected,
                            split_m: m,
                            a_multipliers: a,
                            b_multipliers: b,
                            epsilon_b: eps,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
