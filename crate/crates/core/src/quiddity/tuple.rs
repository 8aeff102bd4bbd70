//! Tuples over a cyclic subgroup `<w>`, stored as integer multipliers.

use serde::{Deserialize, Serialize};

use super::matrix::{m_from_continuants_of, m_product_of, Mat2};
use crate::numfield::{FieldDescriptor, FieldElement, FieldError, NumberField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiddityError {
    #[error("both summands need at least two entries")]
    SizeTooSmall,
    #[error("tuples use different generators")]
    GeneratorMismatch,
    #[error("entry {0} is not +1 or -1")]
    NotPlusMinusOne(usize),
    #[error("position {0} is out of range")]
    BadPosition(usize),
    #[error("tuple needs at least {0} entries")]
    TooShort(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `(k_1 w, ..., k_n w)` for a generator `w` in a number field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiddityTuple {
    generator: FieldElement,
    multipliers: Vec<i64>,
}

impl QuiddityTuple {
    pub fn new(generator: FieldElement, multipliers: Vec<i64>) -> Self {
        QuiddityTuple { generator, multipliers }
    }

    /// A tuple over `Z = <1>`.
    pub fn integers(multipliers: &[i64]) -> Self {
        Self::new(NumberField::rationals().one(), multipliers.to_vec())
    }

    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    pub fn field(&self) -> &NumberField {
        self.generator.field()
    }

    pub fn multipliers(&self) -> &[i64] {
        &self.multipliers
    }

    pub fn len(&self) -> usize {
        self.multipliers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multipliers.is_empty()
    }

    /// Same generator, new multipliers.
    pub fn with_multipliers(&self, multipliers: Vec<i64>) -> Self {
        Self::new(self.generator.clone(), multipliers)
    }

    pub fn entry(&self, i: usize) -> FieldElement {
        self.generator.scale_int(self.multipliers[i])
    }

    pub fn entries(&self) -> Vec<FieldElement> {
        (0..self.len()).map(|i| self.entry(i)).collect()
    }

    pub fn same_generator(&self, other: &QuiddityTuple) -> bool {
        self.generator == other.generator
    }

    pub fn to_json(&self) -> TupleJson {
        TupleJson {
            field: self.field().descriptor(),
            generator: self.generator.coord_strings(),
            multipliers: self.multipliers.clone(),
        }
    }
}

/// Tuple JSON document: `{"field": ..., "generator": [coords], "multipliers": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub field: FieldDescriptor,
    pub generator: Vec<String>,
    pub multipliers: Vec<i64>,
}

impl TupleJson {
    pub fn build(&self) -> Result<QuiddityTuple, QuiddityError> {
        let field = self.field.build()?;
        let w = field.parse_element(&self.generator)?;
        Ok(QuiddityTuple::new(w, self.multipliers.clone()))
    }
}

/// `M_n(a_1, ..., a_n) = E(a_n) ... E(a_1)`.
pub fn m_product(t: &QuiddityTuple) -> Mat2 {
    m_product_of(t.field(), &t.entries())
}

/// `M_n` assembled from continuants; equals [`m_product`].
pub fn m_from_continuants(t: &QuiddityTuple) -> Mat2 {
    m_from_continuants_of(t.field(), &t.entries())
}

/// `Some(eps)` iff `M_n = eps * Id`.
pub fn is_quiddity(t: &QuiddityTuple) -> Option<i8> {
    if t.is_empty() {
        return None;
    }
    m_product(t).scalar_sign()
}

/// `(a_1 + b_m, a_2, ..., a_{n-1}, a_n + b_1, b_2, ..., b_{m-1})`.
pub fn oplus(a: &[i64], b: &[i64]) -> Result<Vec<i64>, QuiddityError> {
    let (n, m) = (a.len(), b.len());
    if n < 2 || m < 2 {
        return Err(QuiddityError::SizeTooSmall);
    }
    let mut out = Vec::with_capacity(n + m - 2);
    out.push(a[0] + b[m - 1]);
    out.extend_from_slice(&a[1..n - 1]);
    out.push(a[n - 1] + b[0]);
    out.extend_from_slice(&b[1..m - 1]);
    Ok(out)
}

pub fn oplus_sum(a: &QuiddityTuple, b: &QuiddityTuple) -> Result<QuiddityTuple, QuiddityError> {
    if !a.same_generator(b) {
        return Err(QuiddityError::GeneratorMismatch);
    }
    Ok(a.with_multipliers(oplus(a.multipliers(), b.multipliers())?))
}

/// Image under the dihedral action: `base[(i + rotation) mod n]` where
/// `base` is the tuple, reversed when `reflected`.
pub fn dihedral_image(ks: &[i64], rotation: usize, reflected: bool) -> Vec<i64> {
    let n = ks.len();
    let base: Vec<i64> = if reflected { ks.iter().rev().copied().collect() } else { ks.to_vec() };
    (0..n).map(|i| base[(i + rotation) % n]).collect()
}

/// All `2n` images in scan order: rotations ascending, then the reflected ones.
pub fn dihedral_images(ks: &[i64]) -> impl Iterator<Item = (usize, bool, Vec<i64>)> + '_ {
    let n = ks.len();
    [false, true]
        .into_iter()
        .flat_map(move |refl| (0..n).map(move |rot| (rot, refl, dihedral_image(ks, rot, refl))))
}

/// Lexicographically least dihedral image.
pub fn canonical_multipliers(ks: &[i64]) -> Vec<i64> {
    dihedral_images(ks).map(|(_, _, img)| img).min().unwrap_or_default()
}

pub fn canonical_form(t: &QuiddityTuple) -> QuiddityTuple {
    t.with_multipliers(canonical_multipliers(t.multipliers()))
}

pub fn equivalent_multipliers(a: &[i64], b: &[i64]) -> bool {
    a.len() == b.len() && dihedral_images(a).any(|(_, _, img)| img == b)
}

/// Equal up to rotation and reversal (same generator required).
pub fn equivalent(a: &QuiddityTuple, b: &QuiddityTuple) -> bool {
    a.same_generator(b) && equivalent_multipliers(a.multipliers(), b.multipliers())
}

/// Removes an entry equal to `+-1` (0-based `position`) using
/// `M_3(a, 1, b) = M_2(a - 1, b - 1)` and `M_3(a, -1, b) = -M_2(a + 1, b + 1)`.
/// Neighbours are taken cyclically at the ends; the flag reports whether the
/// `-1` identity was used.
pub fn reduce_pm_one(t: &QuiddityTuple, position: usize) -> Result<(QuiddityTuple, bool), QuiddityError> {
    let n = t.len();
    if n < 3 {
        return Err(QuiddityError::TooShort(3));
    }
    if position >= n {
        return Err(QuiddityError::BadPosition(position));
    }
    let value = t.entry(position).as_rational();
    let one = num_rational::BigRational::from_integer(1.into());
    let flip = match value {
        Some(v) if v == one => false,
        Some(v) if v == -one => true,
        _ => return Err(QuiddityError::NotPlusMinusOne(position)),
    };
    // Both identities subtract the removed entry from each neighbour.
    let k = t.multipliers()[position];
    let mut ks = t.multipliers().to_vec();
    let prev = (position + n - 1) % n;
    let next = (position + 1) % n;
    ks[prev] -= k;
    ks[next] -= k;
    ks.remove(position);
    Ok((t.with_multipliers(ks), flip))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(ks: &[i64]) -> QuiddityTuple {
        QuiddityTuple::integers(ks)
    }

    #[test]
    fn products_of_small_tuples() {
        let q = NumberField::rationals();
        assert_eq!(m_product(&z(&[0, 0])), Mat2::identity(&q).neg());
        assert_eq!(m_product(&z(&[1, 1, 1])), Mat2::identity(&q).neg());
        assert_eq!(m_product(&z(&[1, 2, 1, 2])), Mat2::identity(&q).neg());
        assert_eq!(is_quiddity(&z(&[0, 0])), Some(-1));
        assert_eq!(is_quiddity(&z(&[1, 1])), None);
    }

    #[test]
    fn oplus_examples() {
        assert_eq!(oplus(&[-1, 2, 4], &[3, 0, 1]).unwrap(), vec![0, 2, 7, 0]);
        assert_eq!(oplus(&[2, 1, 0, 2], &[1, -3, 2, 5, 1]).unwrap(), vec![3, 1, 0, 3, -3, 2, 5]);
        assert_eq!(oplus(&[-2, 1, 3, 1], &[2, 3, 1]).unwrap(), vec![-1, 1, 3, 3, 3]);
        assert_eq!(oplus(&[5, 6, 7], &[0, 0]).unwrap(), vec![5, 6, 7]);
        // on the left the formula yields a rotation
        assert_eq!(oplus(&[0, 0], &[5, 6, 7]).unwrap(), vec![7, 5, 6]);
        assert!(equivalent_multipliers(&oplus(&[0, 0], &[5, 6, 7]).unwrap(), &[5, 6, 7]));
        assert_eq!(oplus(&[1], &[0, 0]), Err(QuiddityError::SizeTooSmall));
    }

    #[test]
    fn dihedral_equivalence() {
        assert!(equivalent(&z(&[-1, 2, 4]), &z(&[4, 2, -1])));
        assert!(equivalent(&z(&[0, 1, 0, -1]), &z(&[1, 0, -1, 0])));
        assert!(equivalent(&z(&[1, 2, 3]), &z(&[1, 3, 2])));
        assert!(!equivalent(&z(&[1, 2, 3, 4]), &z(&[1, 3, 2, 4])));
        assert_eq!(canonical_multipliers(&[2, 0, -2, 0]), vec![-2, 0, 2, 0]);
        assert_eq!(dihedral_images(&[1, 2, 3]).count(), 6);
    }

    #[test]
    fn plus_minus_one_reduction() {
        let (r, flip) = reduce_pm_one(&z(&[3, 1, 4]), 1).unwrap();
        assert_eq!((r.multipliers(), flip), (&[2, 3][..], false));
        let (r, flip) = reduce_pm_one(&z(&[3, -1, 4]), 1).unwrap();
        assert_eq!((r.multipliers(), flip), (&[4, 5][..], true));
        let (r, flip) = reduce_pm_one(&z(&[1, 1, 1]), 1).unwrap();
        assert_eq!((r.multipliers(), flip), (&[0, 0][..], false));
        assert_eq!(is_quiddity(&r), Some(-1));
        assert_eq!(reduce_pm_one(&z(&[3, 2, 4]), 1), Err(QuiddityError::NotPlusMinusOne(1)));
    }

    #[test]
    fn tuple_json_round_trip() {
        let t = z(&[0, 1, 0, -1]);
        let j = serde_json::to_string(&t.to_json()).unwrap();
        let back: TupleJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.build().unwrap(), t);
    }
}
