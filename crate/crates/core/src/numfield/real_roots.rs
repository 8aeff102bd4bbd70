//! Exact real root isolation by Descartes' rule of signs and bisection.

use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use super::rational::BigRat;

/// Isolating data for one real root of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RealRoot {
    /// The root is this rational number.
    Exact(BigRat),
    /// The open interval `(lo, hi)` contains exactly one root and neither
    /// endpoint is a root.
    Interval(BigRat, BigRat),
}

impl RealRoot {
    pub fn bounds(&self) -> (BigRat, BigRat) {
        match self {
            RealRoot::Exact(x) => (x.clone(), x.clone()),
            RealRoot::Interval(a, b) => (a.clone(), b.clone()),
        }
    }
}

/// Sign variations in the coefficient sequence, zeros skipped.
pub fn sign_variations(p: &QPoly) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for c in p.coeffs() {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// `(1 + x)^n p((a + b x) / (1 + x))`, whose positive roots correspond to
/// the roots of `p` in `(a, b)`.
fn mobius_transform(p: &QPoly, a: &BigRat, b: &BigRat) -> QPoly {
    let n = p.degree().unwrap_or(0);
    let num = QPoly::new(vec![a.clone(), b.clone()]);
    let den = QPoly::new(vec![BigRat::one(), BigRat::one()]);
    let mut out = QPoly::zero();
    let mut num_pow = QPoly::one();
    let mut den_pows = Vec::with_capacity(n + 1);
    let mut dp = QPoly::one();
    for _ in 0..=n {
        den_pows.push(dp.clone());
        dp = &dp * &den;
    }
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let term = (&num_pow * &den_pows[n - i]).scale(c);
            out = &out + &term;
        }
        num_pow = &num_pow * &num;
    }
    out
}

/// Cauchy bound: every complex root has modulus strictly below it.
pub fn cauchy_bound(p: &QPoly) -> BigRat {
    let lc = p.leading().abs();
    let m = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRat::zero);
    m + BigRat::one()
}

/// Isolates the real roots of `p` (made squarefree first) inside the open
/// interval `(a, b)`, in increasing order.
pub fn isolate_real_roots_in(p: &QPoly, a: &BigRat, b: &BigRat) -> Vec<RealRoot> {
    let p = p.squarefree_part();
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 || a >= b {
        return out;
    }
    isolate_rec(&p, a.clone(), b.clone(), &mut out);
    out
}

/// Isolates every real root of `p`.
pub fn isolate_real_roots(p: &QPoly) -> Vec<RealRoot> {
    let p = p.squarefree_part();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = cauchy_bound(&p);
    isolate_real_roots_in(&p, &-b.clone(), &b)
}

fn isolate_rec(p: &QPoly, a: BigRat, b: BigRat, out: &mut Vec<RealRoot>) {
    let v = sign_variations(&mobius_transform(p, &a, &b));
    if v == 0 {
        return;
    }
    if v == 1 && !p.eval(&a).is_zero() && !p.eval(&b).is_zero() {
        out.push(RealRoot::Interval(a, b));
        return;
    }
    let two = BigRat::from_integer(2.into());
    let m = (&a + &b) / two;
    isolate_rec(p, a, m.clone(), out);
    if p.eval(&m).is_zero() {
        out.push(RealRoot::Exact(m.clone()));
    }
    isolate_rec(p, m, b, out);
}

/// Number of distinct real roots in the open interval `(a, b)`.
pub fn count_real_roots_in(p: &QPoly, a: &BigRat, b: &BigRat) -> usize {
    isolate_real_roots_in(p, a, b).len()
}

/// Halves an isolating interval of a squarefree `p`, keeping the root.
pub fn bisect(p: &QPoly, root: &RealRoot) -> RealRoot {
    match root {
        RealRoot::Exact(_) => root.clone(),
        RealRoot::Interval(a, b) => {
            let two = BigRat::from_integer(2.into());
            let m = (a + b) / two;
            let pm = p.eval(&m);
            if pm.is_zero() {
                return RealRoot::Exact(m);
            }
            let pa = p.eval(a);
            if pa.is_positive() == pm.is_positive() {
                RealRoot::Interval(m, b.clone())
            } else {
                RealRoot::Interval(a.clone(), m)
            }
        }
    }
}
