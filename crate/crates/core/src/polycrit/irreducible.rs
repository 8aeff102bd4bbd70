//! Irreducibility over the rationals: rational-root test, Eisenstein (with
//! small shifts), Osada, and reduction modulo small primes.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::modp::modp_irreducible;
use crate::numfield::poly::QPoly;
use crate::numfield::rational::{divisors, format_rational, is_prime, prime_factors, BigRat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "criterion", rename_all = "snake_case")]
pub enum Criterion {
    /// Degree one.
    Linear,
    /// Degree two or three with no rational root.
    RationalRootTest,
    /// Eisenstein at `prime` applied to `p(X + shift)`.
    Eisenstein { prime: i64, shift: i64 },
    Osada { prime: i64 },
    /// Irreducible modulo `prime`.
    ModP { prime: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Proven(Criterion),
    /// A nontrivial monic factor.
    Disproven(QPoly),
    Unknown,
}

impl IrreducibilityVerdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Proven(_))
    }
}

impl Serialize for IrreducibilityVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IrreducibilityVerdict", 2)?;
        match self {
            IrreducibilityVerdict::Proven(c) => {
                st.serialize_field("status", "proven")?;
                st.serialize_field("evidence", c)?;
            }
            IrreducibilityVerdict::Disproven(f) => {
                st.serialize_field("status", "disproven")?;
                st.serialize_field("factor", f)?;
            }
            IrreducibilityVerdict::Unknown => {
                st.serialize_field("status", "unknown")?;
            }
        }
        st.end()
    }
}

fn as_integer_poly(p: &QPoly) -> Vec<BigInt> {
    p.integer_coefficients()
}

/// Least prime `q` with `q | a_i` for `0 <= i < n`, `q` not dividing `a_n`
/// and `q^2` not dividing `a_0`. Denominators are cleared first.
pub fn eisenstein(poly: &QPoly) -> Option<i64> {
    let deg = poly.degree()?;
    if deg == 0 {
        return None;
    }
    let a = as_integer_poly(poly);
    let a0 = &a[0];
    if a0.is_zero() {
        return None;
    }
    let primes = prime_factors(a0)?;
    primes.into_iter().find_map(|q| {
        let q2 = &q * &q;
        let divides_middle = a[1..deg].iter().all(|c| (c % &q).is_zero());
        let ok = divides_middle && !(&a[deg] % &q).is_zero() && !(a0 % &q2).is_zero();
        if ok { q.to_i64() } else { None }
    })
}

/// Osada: `a_n X^n + ... + a_1 X +- q` with `q` prime and
/// `q > |a_1| + ... + |a_n|` is irreducible. Returns `q` when it applies.
pub fn osada(poly: &QPoly) -> Option<i64> {
    let deg = poly.degree()?;
    if deg == 0 {
        return None;
    }
    let a = as_integer_poly(poly);
    let q = a[0].abs();
    if !is_prime(&q) {
        return None;
    }
    let sum = a[1..].iter().fold(BigInt::zero(), |s, c| s + c.abs());
    if q > sum { q.to_i64() } else { None }
}

/// A rational root, if any, found by the rational-root test.
fn rational_root(poly: &QPoly) -> Option<Option<BigRat>> {
    let a = as_integer_poly(poly);
    if a[0].is_zero() {
        return Some(Some(BigRat::zero()));
    }
    let num = divisors(&a[0])?;
    let den = divisors(a.last().unwrap())?;
    if num.len().saturating_mul(den.len()) > 200_000 {
        return None;
    }
    for n in &num {
        for d in &den {
            for s in [n.clone(), -n.clone()] {
                let r = BigRat::new(s, d.clone());
                if poly.eval(&r).is_zero() {
                    return Some(Some(r));
                }
            }
        }
    }
    Some(None)
}

const SMALL_PRIMES: [i64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Decides irreducibility over Q when one of the implemented criteria
/// applies; `Unknown` otherwise.
pub fn irreducible_over_q(poly: &QPoly) -> IrreducibilityVerdict {
    let Some(deg) = poly.degree() else {
        return IrreducibilityVerdict::Unknown;
    };
    if deg == 0 {
        return IrreducibilityVerdict::Unknown;
    }
    if deg == 1 {
        return IrreducibilityVerdict::Proven(Criterion::Linear);
    }
    let g = poly.gcd(&poly.derivative());
    if g.degree().unwrap_or(0) > 0 {
        return IrreducibilityVerdict::Disproven(g);
    }
    match rational_root(poly) {
        Some(Some(r)) => return IrreducibilityVerdict::Disproven(QPoly::new(vec![-r, BigRat::one()])),
        Some(None) if deg <= 3 => return IrreducibilityVerdict::Proven(Criterion::RationalRootTest),
        _ => {}
    }
    for shift in [0i64, 1, -1, 2, -2, 3, -3] {
        let shifted = poly.taylor_shift(&BigRat::from_integer(shift.into()));
        if let Some(prime) = eisenstein(&shifted) {
            return IrreducibilityVerdict::Proven(Criterion::Eisenstein { prime, shift });
        }
    }
    if let Some(prime) = osada(poly) {
        return IrreducibilityVerdict::Proven(Criterion::Osada { prime });
    }
    for prime in SMALL_PRIMES {
        if let Ok(true) = modp_irreducible(poly, prime) {
            return IrreducibilityVerdict::Proven(Criterion::ModP { prime });
        }
    }
    IrreducibilityVerdict::Unknown
}

impl std::fmt::Display for IrreducibilityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IrreducibilityVerdict::Proven(c) => write!(f, "proven ({c:?})"),
            IrreducibilityVerdict::Disproven(g) => write!(f, "reducible, factor {g}"),
            IrreducibilityVerdict::Unknown => write!(f, "unknown"),
        }
    }
}

#[allow(dead_code)]
fn describe_root(r: &BigRat) -> String {
    format_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational::{int, ratio};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein(&p(&[5, 0, 0, 5, 10, 1])), Some(5));
        assert_eq!(eisenstein(&p(&[-2, 0, 1])), Some(2));
        assert_eq!(eisenstein(&p(&[-1, 0, 1])), None);
        assert_eq!(eisenstein(&p(&[4, 0, 1])), None);
    }

    #[test]
    fn osada_examples() {
        assert_eq!(osada(&p(&[11, 1, -1, 2, 0, 0, 5, 1])), Some(11));
        assert_eq!(osada(&p(&[2, 1])), Some(2));
        assert_eq!(osada(&p(&[3, 5, 1])), None);
        assert_eq!(osada(&p(&[5, 3, 1])), Some(5));
        assert_eq!(osada(&p(&[9, 1, 1])), None);
    }

    #[test]
    fn pipeline_examples() {
        let golden_like = QPoly::new(vec![ratio(-5, 2), int(-1), int(1)]);
        assert_eq!(irreducible_over_q(&golden_like), IrreducibilityVerdict::Proven(Criterion::RationalRootTest));
        assert_eq!(irreducible_over_q(&p(&[-1, 0, 1])), IrreducibilityVerdict::Disproven(p(&[-1, 1])));
        assert_eq!(
            irreducible_over_q(&p(&[1, 0, 0, 0, 1])),
            IrreducibilityVerdict::Proven(Criterion::Eisenstein { prime: 2, shift: 1 })
        );
        assert_eq!(
            irreducible_over_q(&p(&[5, 0, 0, 5, 10, 1])),
            IrreducibilityVerdict::Proven(Criterion::Eisenstein { prime: 5, shift: 0 })
        );
        // (X^2 + 1)(X^2 + 2) has no rational root and escapes every criterion
        assert_eq!(irreducible_over_q(&p(&[2, 0, 3, 0, 1])), IrreducibilityVerdict::Unknown);
        assert!(matches!(irreducible_over_q(&p(&[0, 0, 1])), IrreducibilityVerdict::Disproven(_)));
    }
}
