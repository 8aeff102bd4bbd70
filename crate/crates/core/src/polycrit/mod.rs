//! Exact polynomial criteria: irreducibility tests over the rationals and
//! root counts in disks centred at the origin.

mod irreducible;
mod modp;
mod schur_cohn;

pub use irreducible::{eisenstein, irreducible_over_q, osada, Criterion, IrreducibilityVerdict};
pub use modp::modp_irreducible;
pub use schur_cohn::{schur_cohn_count, unit_disk_count_strict};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::numfield::poly::QPoly;
use crate::numfield::rational::{format_rational, BigRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyCritError {
    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("radius must be positive")]
    BadRadius,
    #[error("Schur-Cohn reduction stayed singular after repeated repairs")]
    SingularStep,
    #[error("{0} is not a prime, or it divides the leading coefficient")]
    BadPrime(i64),
    #[error("dominant index {0} is out of range or has a zero coefficient")]
    BadDominantIndex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootCountMethod {
    SchurCohn,
    RoucheBound,
}

/// The two sides of a successful dominant-term comparison on `|z| = r`.
#[derive(Debug, Clone, PartialEq)]
pub struct RoucheEvidence {
    /// Sum over `i != j` of `|a_i| r^i`.
    pub others: BigRat,
    /// `|a_j| r^j`.
    pub dominant: BigRat,
}

/// Number of roots (with multiplicity) in the open disk `|z| < radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskRootCount {
    pub poly: QPoly,
    pub radius: BigRat,
    pub count: usize,
    /// Roots on `|z| = radius`, when the method determines it.
    pub on_boundary: Option<usize>,
    pub method: RootCountMethod,
    pub boundary_clear: bool,
    pub rouche: Option<RoucheEvidence>,
}

impl DiskRootCount {
    /// True when some root has modulus `>= radius`.
    pub fn has_root_outside_open_disk(&self) -> bool {
        self.poly.degree().is_some_and(|d| self.count < d)
    }
}

impl Serialize for DiskRootCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DiskRootCount", 8)?;
        st.serialize_field("poly", &self.poly)?;
        st.serialize_field("radius", &format_rational(&self.radius))?;
        st.serialize_field("count", &self.count)?;
        st.serialize_field("degree", &self.poly.degree())?;
        st.serialize_field("on_boundary", &self.on_boundary)?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("boundary_clear", &self.boundary_clear)?;
        let ev = self
            .rouche
            .as_ref()
            .map(|e| [format_rational(&e.others), format_rational(&e.dominant)]);
        st.serialize_field("rouche_others_vs_dominant", &ev)?;
        st.end()
    }
}

/// Dominant-term root count: if `sum_{i != j} |a_i| r^i < |a_j| r^j`, then
/// `p` and `a_j X^j` have the same number of zeros in `|z| < r`, namely `j`,
/// and no zero lies on `|z| = r`.
pub fn rouche_dominant_count(p: &QPoly, dominant: usize, radius: &BigRat) -> Result<Option<DiskRootCount>, PolyCritError> {
    if !radius.is_positive() {
        return Err(PolyCritError::BadRadius);
    }
    let aj = p.coeff(dominant);
    if aj.is_zero() {
        return Err(PolyCritError::BadDominantIndex(dominant));
    }
    let mut rk = BigRat::from_integer(1.into());
    let mut others = BigRat::zero();
    let mut dom = BigRat::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        let term = c.abs() * &rk;
        if i == dominant {
            dom = term;
        } else {
            others += term;
        }
        rk *= radius;
    }
    if others < dom {
        Ok(Some(DiskRootCount {
            poly: p.clone(),
            radius: radius.clone(),
            count: dominant,
            on_boundary: Some(0),
            method: RootCountMethod::RoucheBound,
            boundary_clear: true,
            rouche: Some(RoucheEvidence { others, dominant: dom }),
        }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational::int;

    #[test]
    fn dominant_term_counts() {
        let a = QPoly::from_i64s(&[5, 0, 0, 5, 10, 1]);
        let c = rouche_dominant_count(&a, 4, &int(2)).unwrap().unwrap();
        assert_eq!(c.count, 4);
        let ev = c.rouche.unwrap();
        assert_eq!((ev.others, ev.dominant), (int(77), int(160)));

        let cp = QPoly::from_i64s(&[11, 1, -1, 2, 0, 0, 5, 1]);
        let c = rouche_dominant_count(&cp, 6, &int(2)).unwrap().unwrap();
        assert_eq!(c.count, 6);
        let ev = c.rouche.unwrap();
        assert_eq!((ev.others, ev.dominant), (int(161), int(320)));

        let c = rouche_dominant_count(&QPoly::from_i64s(&[1, 0, 1]), 2, &int(2)).unwrap().unwrap();
        assert_eq!(c.count, 2);
        assert_eq!(c.rouche.unwrap().others, int(1));
    }

    #[test]
    fn dominant_term_failure_and_errors() {
        let p = QPoly::from_i64s(&[5, 0, 0, 5, 10, 1]);
        assert!(rouche_dominant_count(&p, 5, &int(2)).unwrap().is_none());
        assert_eq!(rouche_dominant_count(&p, 1, &int(2)), Err(PolyCritError::BadDominantIndex(1)));
        assert_eq!(rouche_dominant_count(&p, 4, &int(0)), Err(PolyCritError::BadRadius));
    }
}
