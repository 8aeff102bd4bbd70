//! Exact Schur–Cohn root counting in disks.
//!
//! For `q` of degree `n` write `q*(z) = z^n conj(q(1/conj z))` and
//! `Tq = conj(a0) q - an q*`. With `g = |a0|^2 - |an|^2 != 0` Rouché's theorem
//! on the unit circle gives `inside(q) = inside(Tq)` when `g > 0` and
//! `inside(q) = n - inside(Tq)` when `g < 0`. A chain of nonsingular steps
//! also certifies that `q` has no zero on the circle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{DiskRootCount, PolyCritError, RootCountMethod};
use crate::numfield::complex::{creal, CPoly, CRat};
use crate::numfield::poly::QPoly;
use crate::numfield::rational::{common_denominator, ratio, BigRat};
use crate::numfield::real_roots::count_real_roots_in;

/// Maximum number of singular-step repairs before giving up.
const SINGULAR_BUDGET: usize = 64;

/// Scales a complex polynomial by a positive rational so that all real and
/// imaginary parts are coprime integers. Root location is unchanged.
fn normalize(p: &CPoly) -> CPoly {
    let den = common_denominator(p.0.iter().flat_map(|c| [&c.re, &c.im]));
    let scaled: Vec<(BigInt, BigInt)> = p
        .0
        .iter()
        .map(|c| {
            let d = BigRat::from_integer(den.clone());
            ((&c.re * &d).to_integer(), (&c.im * &d).to_integer())
        })
        .collect();
    let content = scaled.iter().fold(BigInt::zero(), |g, (a, b)| g.gcd(a).gcd(b));
    let content = if content.is_zero() { BigInt::one() } else { content };
    CPoly::new(
        scaled
            .into_iter()
            .map(|(a, b)| CRat::new(BigRat::from_integer(a / &content), BigRat::from_integer(b / &content)))
            .collect(),
    )
}

/// `q*` with respect to the formal degree `n`.
fn reciprocal(q: &CPoly) -> CPoly {
    CPoly::new(q.0.iter().rev().map(|c| c.conj()).collect())
}

/// One Schur transform step. Returns `(gamma, Tq)`.
fn transform(q: &CPoly) -> (BigRat, CPoly) {
    let n = q.0.len() - 1;
    let a0 = &q.0[0];
    let an = &q.0[n];
    let gamma = a0.norm_sqr() - an.norm_sqr();
    let star = reciprocal(q);
    let a0c = a0.conj();
    let len = q.0.len();
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let s = star.0.get(i).cloned().unwrap_or_else(CRat::zero);
        out.push(&a0c * &q.0[i] - an * s);
    }
    (gamma, normalize(&CPoly::new(out)))
}

/// Counts zeros in the open unit disk. Returns `None` when a singular step
/// occurs, which includes every polynomial with a zero on the unit circle.
pub fn unit_disk_count_strict(q: &CPoly) -> Option<usize> {
    let mut q = normalize(q);
    // inside(original) = offset + sign * inside(current)
    let mut offset: isize = 0;
    let mut sign: isize = 1;
    loop {
        let n = match q.degree() {
            None => return None,
            Some(0) => return Some(offset as usize),
            Some(n) => n,
        };
        let (gamma, t) = transform(&q);
        if gamma.is_zero() {
            return None;
        }
        if gamma.is_negative() {
            offset += sign * n as isize;
            sign = -sign;
        }
        q = t;
    }
}

/// Counts zeros of a real polynomial in the open unit disk, assuming none
/// lies on the circle. Singular steps are repaired by multiplying with
/// `(X - c)` for a rational `0 < c < 1`, which adds one known inside zero and
/// makes the next step nonsingular. A self-inversive intermediate (`Tq = 0`)
/// has half of its zeros inside.
fn unit_disk_count_off_circle(q: &CPoly) -> Result<usize, PolyCritError> {
    let shifts = [ratio(1, 2), ratio(1, 3), ratio(2, 3), ratio(2, 5), ratio(3, 4), ratio(3, 7)];
    let mut q = normalize(q);
    let mut offset: isize = 0;
    let mut sign: isize = 1;
    let mut repairs = 0usize;
    loop {
        let n = match q.degree() {
            None => return Err(PolyCritError::ZeroPolynomial),
            Some(0) => return Ok(offset as usize),
            Some(n) => n,
        };
        let (gamma, t) = transform(&q);
        if !gamma.is_zero() {
            if gamma.is_negative() {
                offset += sign * n as isize;
                sign = -sign;
            }
            q = t;
            continue;
        }
        if t.degree().is_none() {
            // Self-inversive and zero-free on the circle: zeros pair up as
            // z, 1/conj(z), so exactly half lie inside.
            if n % 2 == 1 {
                return Err(PolyCritError::SingularStep);
            }
            return Ok((offset + sign * (n / 2) as isize) as usize);
        }
        if repairs == SINGULAR_BUDGET {
            return Err(PolyCritError::SingularStep);
        }
        let c = &shifts[repairs % shifts.len()];
        repairs += 1;
        // inside(q) = inside(q * (X - c)) - 1
        let mut prod = vec![CRat::zero(); q.0.len() + 1];
        for (i, a) in q.0.iter().enumerate() {
            prod[i + 1] = &prod[i + 1] + a;
            prod[i] = &prod[i] - a * creal(c.clone());
        }
        offset -= sign;
        q = normalize(&CPoly::new(prod));
    }
}

/// Writes a palindromic `g` of degree `2s` as `z^s G(z + 1/z)` and returns `G`.
fn palindromic_to_trace(g: &QPoly) -> QPoly {
    let deg = g.degree().unwrap_or(0);
    let s = deg / 2;
    // D_0 = 2, D_1 = y, D_j = y D_{j-1} - D_{j-2}; z^j + z^-j = D_j(z + 1/z)
    let y = QPoly::x();
    let mut dickson = vec![QPoly::from_i64s(&[2]), y.clone()];
    for j in 2..=s {
        let next = &(&y * &dickson[j - 1]) - &dickson[j - 2];
        dickson.push(next);
    }
    let mut out = QPoly::constant(g.coeff(s));
    for j in 1..=s {
        out = &out + &dickson[j].scale(&g.coeff(s + j));
    }
    out
}

/// Number of zeros on the unit circle of a squarefree real polynomial whose
/// zero set is closed under `z -> 1/z`.
fn unit_circle_zeros(g: &QPoly) -> Result<usize, PolyCritError> {
    let mut g = g.clone();
    let mut count = 0;
    for r in [BigRat::one(), -BigRat::one()] {
        if g.eval(&r).is_zero() {
            count += 1;
            g = g.div_rem(&QPoly::new(vec![-r, BigRat::one()])).0;
        }
    }
    let Some(deg) = g.degree() else {
        return Err(PolyCritError::ZeroPolynomial);
    };
    if deg == 0 {
        return Ok(count);
    }
    if deg % 2 == 1 || g.reverse().monic() != g.monic() {
        return Err(PolyCritError::SingularStep);
    }
    let trace = palindromic_to_trace(&g);
    let two = BigRat::from_integer(2.into());
    Ok(count + 2 * count_real_roots_in(&trace, &-two.clone(), &two))
}

/// Counts roots of `p` with `|z| < radius`, with multiplicity, and reports
/// whether any root lies exactly on `|z| = radius`.
pub fn schur_cohn_count(p: &QPoly, radius: &BigRat) -> Result<DiskRootCount, PolyCritError> {
    if p.is_zero() {
        return Err(PolyCritError::ZeroPolynomial);
    }
    if !radius.is_positive() {
        return Err(PolyCritError::BadRadius);
    }
    let q = p.scale_var(radius);
    let mut inside = 0usize;
    let mut on_circle = 0usize;
    for (f, mult) in q.squarefree_decomposition() {
        let g = f.gcd(&f.reverse());
        let h = f.div_rem(&g).0;
        let inside_h = if h.degree().unwrap_or(0) == 0 {
            0
        } else {
            unit_disk_count_off_circle(&CPoly::from_qpoly(&h))?
        };
        let (inside_g, on_g) = match g.degree() {
            Some(d) if d > 0 => {
                let on = unit_circle_zeros(&g)?;
                ((d - on) / 2, on)
            }
            _ => (0, 0),
        };
        inside += mult * (inside_h + inside_g);
        on_circle += mult * on_g;
    }
    Ok(DiskRootCount {
        poly: p.clone(),
        radius: radius.clone(),
        count: inside,
        on_boundary: Some(on_circle),
        method: RootCountMethod::SchurCohn,
        boundary_clear: on_circle == 0,
        rouche: None,
    })
}
