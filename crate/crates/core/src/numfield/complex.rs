//! Gaussian rationals, polynomials over them, and rectangular complex
//! intervals with exact rational endpoints.

use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::QPoly;
use super::rational::{format_rational, parse_rational, BigRat, ParseRationalError};

pub type CRat = Complex<BigRat>;

pub fn crat(re: BigRat, im: BigRat) -> CRat {
    Complex::new(re, im)
}

pub fn creal(re: BigRat) -> CRat {
    Complex::new(re, BigRat::zero())
}

/// Polynomial over `Q(i)`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly(pub Vec<CRat>);

impl CPoly {
    pub fn new(mut cs: Vec<CRat>) -> Self {
        while cs.last().is_some_and(|c| c.is_zero()) {
            cs.pop();
        }
        CPoly(cs)
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        CPoly::new(p.coeffs().iter().cloned().map(creal).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, z: &CRat) -> CRat {
        self.0.iter().rev().fold(CRat::zero(), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        CPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * creal(BigRat::from_integer(i.into())))
                .collect(),
        )
    }

    /// `p(center + radius * X)`.
    pub fn recentre(&self, center: &CRat, radius: &BigRat) -> Self {
        let mut cs = self.0.clone();
        let n = cs.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &cs[j + 1] * center;
                cs[j] = &cs[j] + t;
            }
        }
        let mut pk = BigRat::one();
        for c in cs.iter_mut() {
            *c = c.clone() * creal(pk.clone());
            pk *= radius;
        }
        CPoly::new(cs)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|c| c.im.is_zero())
    }
}

/// Closed rectangle `[re.0, re.1] x [im.0, im.1]` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexInterval {
    pub re: (BigRat, BigRat),
    pub im: (BigRat, BigRat),
}

impl ComplexInterval {
    pub fn point(z: &CRat) -> Self {
        ComplexInterval { re: (z.re.clone(), z.re.clone()), im: (z.im.clone(), z.im.clone()) }
    }

    pub fn real(lo: BigRat, hi: BigRat) -> Self {
        ComplexInterval { re: (lo, hi), im: (BigRat::zero(), BigRat::zero()) }
    }

    pub fn around(center: &CRat, radius: &BigRat) -> Self {
        ComplexInterval {
            re: (&center.re - radius, &center.re + radius),
            im: (&center.im - radius, &center.im + radius),
        }
    }

    pub fn zero() -> Self {
        Self::point(&CRat::zero())
    }

    pub fn width(&self) -> BigRat {
        let a = &self.re.1 - &self.re.0;
        let b = &self.im.1 - &self.im.0;
        if a > b { a } else { b }
    }

    pub fn midpoint(&self) -> CRat {
        let two = BigRat::from_integer(2.into());
        crat((&self.re.0 + &self.re.1) / &two, (&self.im.0 + &self.im.1) / two)
    }

    pub fn contains(&self, z: &CRat) -> bool {
        self.re.0 <= z.re && z.re <= self.re.1 && self.im.0 <= z.im && z.im <= self.im.1
    }

    pub fn contains_interval(&self, o: &ComplexInterval) -> bool {
        self.re.0 <= o.re.0 && o.re.1 <= self.re.1 && self.im.0 <= o.im.0 && o.im.1 <= self.im.1
    }

    pub fn disjoint(&self, o: &ComplexInterval) -> bool {
        self.re.1 < o.re.0 || o.re.1 < self.re.0 || self.im.1 < o.im.0 || o.im.1 < self.im.0
    }

    pub fn intersect(&self, o: &ComplexInterval) -> Option<ComplexInterval> {
        if self.disjoint(o) {
            return None;
        }
        Some(ComplexInterval {
            re: (max(&self.re.0, &o.re.0), min(&self.re.1, &o.re.1)),
            im: (max(&self.im.0, &o.im.0), min(&self.im.1, &o.im.1)),
        })
    }

    pub fn add(&self, o: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: (&self.re.0 + &o.re.0, &self.re.1 + &o.re.1),
            im: (&self.im.0 + &o.im.0, &self.im.1 + &o.im.1),
        }
    }

    pub fn neg(&self) -> ComplexInterval {
        ComplexInterval { re: (-&self.re.1, -&self.re.0), im: (-&self.im.1, -&self.im.0) }
    }

    pub fn mul(&self, o: &ComplexInterval) -> ComplexInterval {
        let rr = imul(&self.re, &o.re);
        let ii = imul(&self.im, &o.im);
        let ri = imul(&self.re, &o.im);
        let ir = imul(&self.im, &o.re);
        ComplexInterval { re: (&rr.0 - &ii.1, &rr.1 - &ii.0), im: (&ri.0 + &ir.0, &ri.1 + &ir.1) }
    }

    pub fn scale(&self, c: &BigRat) -> ComplexInterval {
        let re = imul(&self.re, &(c.clone(), c.clone()));
        let im = imul(&self.im, &(c.clone(), c.clone()));
        ComplexInterval { re, im }
    }

    /// Interval hull of `|z|^2` over the rectangle.
    pub fn modulus_squared(&self) -> (BigRat, BigRat) {
        let a = isquare(&self.re);
        let b = isquare(&self.im);
        (&a.0 + &b.0, &a.1 + &b.1)
    }

    /// Complex conjugate rectangle.
    pub fn conj(&self) -> ComplexInterval {
        ComplexInterval { re: self.re.clone(), im: (-&self.im.1, -&self.im.0) }
    }
}

fn min(a: &BigRat, b: &BigRat) -> BigRat {
    if a < b { a.clone() } else { b.clone() }
}

fn max(a: &BigRat, b: &BigRat) -> BigRat {
    if a > b { a.clone() } else { b.clone() }
}

/// Real interval product.
pub fn imul(a: &(BigRat, BigRat), b: &(BigRat, BigRat)) -> (BigRat, BigRat) {
    let ps = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let lo = ps.iter().min().cloned().unwrap();
    let hi = ps.iter().max().cloned().unwrap();
    (lo, hi)
}

/// Real interval square (tight: nonnegative when the interval straddles 0).
pub fn isquare(a: &(BigRat, BigRat)) -> (BigRat, BigRat) {
    let l2 = &a.0 * &a.0;
    let h2 = &a.1 * &a.1;
    if !a.0.is_positive() && !a.1.is_negative() {
        (BigRat::zero(), if l2 > h2 { l2 } else { h2 })
    } else if l2 < h2 {
        (l2, h2)
    } else {
        (h2, l2)
    }
}

/// JSON form of a rational rectangle: `{"re": [lo, hi], "im": [lo, hi]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectDescriptor {
    pub re: [String; 2],
    pub im: [String; 2],
}

impl RectDescriptor {
    pub fn to_interval(&self) -> Result<ComplexInterval, ParseRationalError> {
        let r0 = parse_rational(&self.re[0])?;
        let r1 = parse_rational(&self.re[1])?;
        let i0 = parse_rational(&self.im[0])?;
        let i1 = parse_rational(&self.im[1])?;
        Ok(ComplexInterval { re: order(r0, r1), im: order(i0, i1) })
    }

    pub fn from_interval(b: &ComplexInterval) -> Self {
        RectDescriptor {
            re: [format_rational(&b.re.0), format_rational(&b.re.1)],
            im: [format_rational(&b.im.0), format_rational(&b.im.1)],
        }
    }
}

fn order(a: BigRat, b: BigRat) -> (BigRat, BigRat) {
    if a <= b { (a, b) } else { (b, a) }
}
