//! 2x2 matrices over a number field, the generator matrices `E(x)` and
//! continuants.

use std::ops::Mul;

use crate::numfield::{FieldElement, NumberField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub m11: FieldElement,
    pub m12: FieldElement,
    pub m21: FieldElement,
    pub m22: FieldElement,
}

impl Mat2 {
    pub fn identity(field: &NumberField) -> Mat2 {
        Mat2 { m11: field.one(), m12: field.zero(), m21: field.zero(), m22: field.one() }
    }

    pub fn det(&self) -> FieldElement {
        &(&self.m11 * &self.m22) - &(&self.m12 * &self.m21)
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { m11: -&self.m11, m12: -&self.m12, m21: -&self.m21, m22: -&self.m22 }
    }

    /// Returns `Some(eps)` when the matrix equals `eps * Id` for `eps = +-1`.
    pub fn scalar_sign(&self) -> Option<i8> {
        if !self.m12.is_zero() || !self.m21.is_zero() || self.m11 != self.m22 {
            return None;
        }
        let one = self.m11.field().one();
        if self.m11 == one {
            Some(1)
        } else if self.m11 == -&one {
            Some(-1)
        } else {
            None
        }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Mat2 {
        Mat2 { m11: self.m22.clone(), m12: -&self.m12, m21: -&self.m21, m22: self.m11.clone() }
    }

    /// `E(x) * self`, two multiplications instead of eight.
    pub fn left_mul_e(&self, x: &FieldElement) -> Mat2 {
        Mat2 {
            m11: &(x * &self.m11) - &self.m21,
            m12: &(x * &self.m12) - &self.m22,
            m21: self.m11.clone(),
            m22: self.m12.clone(),
        }
    }

    /// `self * E(x)`.
    pub fn right_mul_e(&self, x: &FieldElement) -> Mat2 {
        Mat2 {
            m11: &(&self.m11 * x) + &self.m12,
            m12: -&self.m11,
            m21: &(&self.m21 * x) + &self.m22,
            m22: -&self.m21,
        }
    }

    pub fn entries(&self) -> [&FieldElement; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            m11: &(&self.m11 * &o.m11) + &(&self.m12 * &o.m21),
            m12: &(&self.m11 * &o.m12) + &(&self.m12 * &o.m22),
            m21: &(&self.m21 * &o.m11) + &(&self.m22 * &o.m21),
            m22: &(&self.m21 * &o.m12) + &(&self.m22 * &o.m22),
        }
    }
}

/// `E(x) = [[x, -1], [1, 0]]`.
pub fn e_matrix(x: &FieldElement) -> Mat2 {
    let f = x.field();
    Mat2 { m11: x.clone(), m12: -&f.one(), m21: f.one(), m22: f.zero() }
}

/// `M_n = E(a_n) ... E(a_1)`; the identity for an empty word.
pub fn m_product_of(field: &NumberField, entries: &[FieldElement]) -> Mat2 {
    entries.iter().fold(Mat2::identity(field), |m, a| m.left_mul_e(a))
}

/// `K_n = a_n K_{n-1} - K_{n-2}` with `K_{-1} = 0`, `K_0 = 1`.
pub fn continuant(field: &NumberField, entries: &[FieldElement]) -> FieldElement {
    let mut prev = field.zero();
    let mut cur = field.one();
    for a in entries {
        let next = &(a * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `M_n` assembled from continuants:
/// `[[K_n(a_1..a_n), -K_{n-1}(a_2..a_n)], [K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1})]]`.
pub fn m_from_continuants_of(field: &NumberField, entries: &[FieldElement]) -> Mat2 {
    let n = entries.len();
    if n == 0 {
        return Mat2::identity(field);
    }
    let inner = if n >= 2 { &entries[1..n - 1] } else { &entries[1..1] };
    let m22 = if n >= 2 { -&continuant(field, inner) } else { field.zero() };
    Mat2 {
        m11: continuant(field, entries),
        m12: -&continuant(field, &entries[1..]),
        m21: continuant(field, &entries[..n - 1]),
        m22,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_matrices() {
        let q = NumberField::rationals();
        let e0 = e_matrix(&q.zero());
        assert_eq!(e0.m11, q.zero());
        assert_eq!(e0.m12, q.from_int(-1));
        let e1 = e_matrix(&q.one());
        assert_eq!(e1.m11, q.one());
        assert!(e1.det().is_one());
        assert_eq!(m_product_of(&q, &[q.one()]), e1);
    }

    #[test]
    fn small_continuants() {
        let q = NumberField::rationals();
        assert_eq!(continuant(&q, &[q.from_int(3), q.from_int(2)]), q.from_int(5));
        assert_eq!(continuant(&q, &[q.from_int(7)]), q.from_int(7));
        assert_eq!(continuant(&q, &[]), q.one());
        let t: Vec<_> = [0, 0].iter().map(|&k| q.from_int(k)).collect();
        assert_eq!(m_from_continuants_of(&q, &t).m11, q.from_int(-1));
        let t: Vec<_> = [1, 1, 1].iter().map(|&k| q.from_int(k)).collect();
        assert_eq!(continuant(&q, &t), q.from_int(-1));
    }

    #[test]
    fn right_and_left_multiplication_agree_with_product() {
        let q = NumberField::rationals();
        let m = m_product_of(&q, &[q.from_int(2), q.from_int(-3), q.from_int(5)]);
        let x = q.from_int(4);
        assert_eq!(m.left_mul_e(&x), &e_matrix(&x) * &m);
        assert_eq!(m.right_mul_e(&x), &m * &e_matrix(&x));
        assert!((&m * &m.inverse_unimodular()).scalar_sign() == Some(1));
    }
}
