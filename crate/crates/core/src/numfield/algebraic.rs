//! Annihilating polynomials for derived algebraic numbers and exact
//! comparison of a real algebraic value with a rational.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::complex::isquare;
use super::field::FieldElement;
use super::poly::{resultant, QPoly};
use super::rational::{pow2, BigRat};

/// Characteristic polynomial of multiplication by `x` (Faddeev–LeVerrier).
pub fn charpoly(x: &FieldElement) -> QPoly {
    let f = x.field();
    let n = f.degree();
    // Column j holds the coordinates of x * alpha^j.
    let mut a = vec![vec![BigRat::zero(); n]; n];
    let mut col = x.clone();
    let alpha = f.alpha();
    for j in 0..n {
        for i in 0..n {
            a[i][j] = col.coords()[i].clone();
        }
        col = &col * &alpha;
    }
    let mut c = vec![BigRat::zero(); n + 1];
    c[n] = BigRat::one();
    let mut m = vec![vec![BigRat::zero(); n]; n];
    for k in 1..=n {
        let mut am = matmul(&a, &m);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = am;
        let trace: BigRat = (0..n)
            .map(|i| (0..n).map(|l| &a[i][l] * &m[l][i]).fold(BigRat::zero(), |s, t| s + t))
            .fold(BigRat::zero(), |s, t| s + t);
        c[n - k] = -trace / BigRat::from_integer(k.into());
    }
    QPoly::new(c)
}

fn matmul(a: &[Vec<BigRat>], b: &[Vec<BigRat>]) -> Vec<Vec<BigRat>> {
    let n = a.len();
    let mut out = vec![vec![BigRat::zero(); n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[BigRat], ys: &[BigRat]) -> QPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut out = QPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = QPoly::new(vec![-xs[i].clone(), BigRat::one()]);
        out = &(&out * &factor) + &QPoly::constant(dd[i].clone());
    }
    out
}

/// Polynomial in `Y` of degree `deg_f * deg_f`, given by its values.
fn interpolate_resultant(deg: usize, value_at: impl Fn(&BigRat) -> BigRat) -> QPoly {
    let xs: Vec<BigRat> = (0..=deg as i64).map(|k| BigRat::from_integer(k.into())).collect();
    let ys: Vec<BigRat> = xs.iter().map(&value_at).collect();
    interpolate(&xs, &ys)
}

/// A nonzero polynomial vanishing at every product `a * b` of roots of `mu`.
pub fn products_annihilator(mu: &QPoly) -> QPoly {
    let m = mu.degree().unwrap_or(0);
    if m == 0 {
        return QPoly::one();
    }
    if mu.coeff(0).is_zero() {
        let rest = mu.div_rem(&QPoly::x()).0;
        return &QPoly::x() * &products_annihilator(&rest);
    }
    // Res_X(mu(X), X^m mu(Y / X))
    interpolate_resultant(m * m, |y| {
        let mut cs = vec![BigRat::zero(); m + 1];
        let mut yi = BigRat::one();
        for i in 0..=m {
            cs[m - i] = mu.coeff(i) * &yi;
            yi *= y;
        }
        resultant(mu, &QPoly::new(cs))
    })
}

/// A nonzero polynomial vanishing at every difference `a - b` of roots of `mu`.
pub fn differences_annihilator(mu: &QPoly) -> QPoly {
    let m = mu.degree().unwrap_or(0);
    if m == 0 {
        return QPoly::one();
    }
    interpolate_resultant(m * m, |y| resultant(mu, &mu.taylor_shift(y)))
}

/// From `P` with root `u`, a polynomial with root `u^2`.
pub fn square_annihilator(p: &QPoly) -> QPoly {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    let e = QPoly::new(even);
    let o = QPoly::new(odd);
    &(&e * &e) - &(&QPoly::x() * &(&o * &o))
}

/// Decides the sign of `v - q` for a real number `v` that is a root of
/// `annihilator` and is enclosed by `enclose(bits)`, an interval that
/// shrinks to `v` as `bits` grows.
pub fn decide_compare(annihilator: &QPoly, q: &BigRat, mut enclose: impl FnMut(u32) -> (BigRat, BigRat)) -> Ordering {
    let p = annihilator.squarefree_part();
    let delta = if p.eval(q).is_zero() { Some(root_separation(&p, q)) } else { None };
    let mut bits = 8;
    loop {
        let (lo, hi) = enclose(bits);
        if &hi < q {
            return Ordering::Less;
        }
        if &lo > q {
            return Ordering::Greater;
        }
        if let Some(d) = &delta {
            if lo > q - d && hi < q + d {
                return Ordering::Equal;
            }
        }
        bits += 16;
    }
}

/// A `delta > 0` such that `q` is the only root of the squarefree `p` in
/// the closed disk of radius `delta` around `q`.
fn root_separation(p: &QPoly, q: &BigRat) -> BigRat {
    let linear = QPoly::new(vec![-q.clone(), BigRat::one()]);
    let rest = p.div_rem(&linear).0;
    let s = rest.taylor_shift(q);
    let c0 = s.coeff(0).abs();
    let mut k = 0i64;
    loop {
        let d = pow2(-k);
        let mut dk = BigRat::one();
        let mut tail = BigRat::zero();
        for c in &s.coeffs()[1..] {
            dk *= &d;
            tail += c.abs() * &dk;
        }
        if tail < c0 {
            return d;
        }
        k += 1;
    }
}

/// Exact sign of `|sigma_index(x)| - threshold` for `threshold >= 0`.
pub fn modulus_compare(x: &FieldElement, index: usize, threshold: &BigRat) -> Ordering {
    let t2 = threshold * threshold;
    if x.is_zero() {
        return BigRat::zero().cmp(&t2);
    }
    if let Some(r) = x.as_rational() {
        return (&r * &r).cmp(&t2);
    }
    let ann = products_annihilator(&x.min_poly());
    decide_compare(&ann, &t2, |bits| x.embed(index, bits).modulus_squared())
}

/// Exact sign of `(Im sigma_index(x))^2 - q`.
pub fn imaginary_part_squared_compare(x: &FieldElement, index: usize, q: &BigRat) -> Ordering {
    if x.field().root_is_real(index) || x.as_rational().is_some() {
        return BigRat::zero().cmp(q);
    }
    // u = y - conj(y) = 2i Im y is a root of the differences annihilator,
    // v = u^2 = -4 (Im y)^2 of its square, so (Im y)^2 is a root of P_v(-4Y).
    let pu = differences_annihilator(&x.min_poly());
    let pv = square_annihilator(&pu);
    let ps = pv.scale_var(&BigRat::from_integer((-4).into()));
    decide_compare(&ps, q, |bits| isquare(&x.embed(index, bits).im))
}
