//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{common_denominator, format_rational, parse_rational, BigRat, ParseRationalError};

/// Polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::new(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigRat::from_integer(BigInt::from(c))).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| BigRat::from_integer(c.clone())).collect())
    }

    /// Parses comma separated exact coefficients, constant term first.
    pub fn parse_csv(s: &str) -> Result<Self, ParseRationalError> {
        let cs = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(cs))
    }

    pub fn parse_strings<S: AsRef<str>>(cs: &[S]) -> Result<Self, ParseRationalError> {
        let cs = cs.iter().map(|c| parse_rational(c.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(cs))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs.iter().rev().fold(BigRat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `p(X)` multiplied by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut cs = vec![BigRat::zero(); k];
        cs.extend(self.coeffs.iter().cloned());
        Self::new(cs)
    }

    /// `p(r X)`.
    pub fn scale_var(&self, r: &BigRat) -> Self {
        let mut pk = BigRat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pk);
            pk *= r;
        }
        Self::new(out)
    }

    /// `p(X + c)` by repeated synthetic division.
    pub fn taylor_shift(&self, c: &BigRat) -> Self {
        let mut cs = self.coeffs.clone();
        let n = cs.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &cs[j + 1] * c;
                cs[j] += t;
            }
        }
        Self::new(cs)
    }

    /// Reverses the coefficient list of length `deg + 1`: `X^deg p(1/X)`.
    pub fn reverse(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![BigRat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let f = &r[i + dd] * &lc_inv;
            if !f.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &f * dc;
                    r[i + j] -= t;
                }
            }
            q[i] = f;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// True when `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &QPoly) -> bool {
        self.rem(d).is_zero()
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Scales by a positive rational so the coefficients are coprime integers.
    pub fn primitive_rational(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let ints = self.integer_coefficients();
        QPoly::from_bigints(&ints)
    }

    /// Clears denominators and removes the integer content; the sign of the
    /// leading coefficient is preserved.
    pub fn integer_coefficients(&self) -> Vec<BigInt> {
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Monic squarefree part `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's squarefree decomposition: `(f_i, i)` with `p = lc * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(QPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.div_rem(&a).0;
        let mut c = fp.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn pow(&self, e: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Composition `self(q(X))`.
    pub fn compose(&self, q: &QPoly) -> QPoly {
        self.coeffs.iter().rev().fold(QPoly::zero(), |acc, c| &(&acc * q) + &QPoly::constant(c.clone()))
    }

    /// Sum of absolute values of coefficients (the 1-norm).
    pub fn l1_norm(&self) -> BigRat {
        self.coeffs.iter().map(|c| c.abs()).fold(BigRat::zero(), |a, b| a + b)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        QPoly::parse_strings(&v).map_err(serde::de::Error::custom)
    }
}

/// Resultant of two rational polynomials via the Euclidean remainder chain.
pub fn resultant(f: &QPoly, g: &QPoly) -> BigRat {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigRat::zero();
    };
    if n == 0 {
        return num_traits::pow(g.leading(), m);
    }
    if m == 0 {
        return num_traits::pow(f.leading(), n);
    }
    if m < n {
        // res(f, g) = (-1)^{mn} res(g, f)
        let r = resultant(g, f);
        return if (m * n) % 2 == 1 { -r } else { r };
    }
    // res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r) with r = f mod g.
    let r = f.rem(g);
    let Some(k) = r.degree() else {
        return BigRat::zero();
    };
    let sign = if (m * n) % 2 == 1 { -BigRat::one() } else { BigRat::one() };
    sign * num_traits::pow(g.leading(), m - k) * resultant(g, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational::{int, ratio};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn division_with_remainder() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(q, QPoly::new(vec![int(0), ratio(1, 2)]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = &p(&[-1, 1]) * &p(&[2, 0, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-2, 0, 1])), p(&[1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, QPoly::one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn shifts_and_scaling() {
        // (X+1)^4 + 1
        let q = p(&[1, 0, 0, 0, 1]).taylor_shift(&int(1));
        assert_eq!(q, p(&[2, 4, 6, 4, 1]));
        assert_eq!(p(&[1, 1, 1]).scale_var(&int(2)), p(&[1, 2, 4]));
        assert_eq!(p(&[1, 2, 3]).reverse(), p(&[3, 2, 1]));
    }

    #[test]
    fn squarefree_tools() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert!(!f.is_squarefree());
        assert_eq!(f.squarefree_part(), &p(&[-1, 1]) * &p(&[2, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        assert!(p(&[-2, 0, 1]).is_squarefree());
    }

    #[test]
    fn resultant_detects_common_roots() {
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), int(1));
        assert!(resultant(&p(&[-1, 0, 1]), &p(&[1, 1])).is_zero());
        // res(X - a, g) = g(a)
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[1, 0, 1])), int(10));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[5, 0, 5, 10, 1]).to_string(), "X^4 + 10X^3 + 5X^2 + 5");
        assert_eq!(QPoly::new(vec![ratio(-5, 2), int(-1), int(1)]).to_string(), "X^2 - X - 5/2");
    }
}
