//! Irreducibility of integer polynomials reduced modulo a prime, by
//! distinct-degree factorisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::PolyCritError;
use crate::numfield::poly::QPoly;
use crate::numfield::rational::is_prime;

type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(out)
}

fn rem(a: &Fp, m: &Fp, p: u64) -> Fp {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let li = inv(*m.last().unwrap(), p);
    while r.len() > dm && !r.is_empty() {
        let lead = *r.last().unwrap();
        let f = ((lead as u128 * li as u128) % p as u128) as u64;
        let shift = r.len() - 1 - dm;
        for (j, &c) in m.iter().enumerate() {
            let t = ((f as u128 * c as u128) % p as u128) as u64;
            r[shift + j] = (r[shift + j] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn pow_poly_mod(base: &Fp, mut e: u64, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

/// True iff the reduction of `poly` (integer coefficients after clearing
/// denominators) is irreducible over `F_prime`. A `true` answer proves
/// irreducibility over the rationals.
pub fn modp_irreducible(poly: &QPoly, prime: i64) -> Result<bool, PolyCritError> {
    if prime < 2 || !is_prime(&BigInt::from(prime)) {
        return Err(PolyCritError::BadPrime(prime));
    }
    let p = prime as u64;
    let ints = poly.integer_coefficients();
    let reduce = |c: &BigInt| c.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let f: Fp = trim(ints.iter().map(reduce).collect());
    let Some(lead) = ints.last() else {
        return Err(PolyCritError::BadPrime(prime));
    };
    if (lead % BigInt::from(p)).is_zero() {
        return Err(PolyCritError::BadPrime(prime));
    }
    let n = f.len() - 1;
    if n == 0 {
        return Ok(false);
    }
    let x: Fp = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=n / 2 {
        xp = pow_poly_mod(&xp, p, &f, p);
        let g = gcd(&sub(&xp, &x, p), &f, p);
        if g.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
