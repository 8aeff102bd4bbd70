//! Continuants of `(k_1 X, ..., k_n X)` as integer polynomials in `X`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::numfield::{BigRat, FieldElement, QPoly};

/// Integer polynomial in one indeterminate, lowest degree first, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPolyGraded {
    coeffs: Vec<BigInt>,
}

impl ZPolyGraded {
    fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPolyGraded { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when every nonzero term has exponent congruent to `parity` mod 2.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| c.is_zero() || i % 2 == parity % 2)
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::from_bigints(&self.coeffs)
    }

    pub fn eval(&self, w: &FieldElement) -> FieldElement {
        let f = w.field();
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| &(&acc * w) + &f.from_rational(BigRat::from_integer(c.clone())))
    }

    /// `X * self * k - other`.
    fn step(&self, k: i64, other: &ZPolyGraded) -> ZPolyGraded {
        let len = (self.coeffs.len() + 1).max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c * k;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        ZPolyGraded::new(out)
    }
}

impl std::fmt::Display for ZPolyGraded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_qpoly())
    }
}

impl Serialize for ZPolyGraded {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// `p(X) = K_n(k_1 X, ..., k_n X)` by the continuant recurrence over `Z[X]`.
pub fn euler_expansion(multipliers: &[i64]) -> ZPolyGraded {
    let mut prev = ZPolyGraded::new(Vec::new());
    let mut cur = ZPolyGraded::from_i64s(&[1]);
    for &k in multipliers {
        let next = cur.step(k, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Largest absolute coefficient, handy for reports.
pub fn max_abs_coefficient(p: &ZPolyGraded) -> BigInt {
    p.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_expansions() {
        assert_eq!(euler_expansion(&[1, 1, 1]), ZPolyGraded::from_i64s(&[0, -2, 0, 1]));
        assert_eq!(euler_expansion(&[5]), ZPolyGraded::from_i64s(&[0, 5]));
        assert_eq!(euler_expansion(&[1, 1, 1, 1]), ZPolyGraded::from_i64s(&[1, 0, -3, 0, 1]));
        assert_eq!(euler_expansion(&[]), ZPolyGraded::from_i64s(&[1]));
        assert!(euler_expansion(&[2, -1, 3, 0, 5]).has_parity(5));
    }
}
