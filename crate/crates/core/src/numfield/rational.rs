//! Helpers around [`BigRational`]: exact parsing, formatting and the few
//! rounding primitives needed by interval code.

use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type BigRat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as an exact rational")]
pub struct ParseRationalError(pub String);

pub fn int(v: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-5/2"`, `"1.414"`, `"-.5"` or `"2e-3"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRat, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRat::new(n, d));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let all: String = format!("{whole}{frac}");
    let mut value = BigRat::from_integer(BigInt::from_str(&all).map_err(|_| err())?);
    let scale = exponent - frac.len() as i32;
    let ten = BigRat::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if negative { -value } else { value })
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(x: &BigRat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &BigRat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division for values whose parts overflow f64.
        let shift = x.numer().bits().max(x.denom().bits()) as i64 - 1000;
        if shift <= 0 {
            return f64::NAN;
        }
        let n = x.numer() >> shift as usize;
        let d = x.denom() >> shift as usize;
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}

/// Exact conversion of a finite `f64`.
pub fn from_f64(v: f64) -> BigRat {
    BigRat::from_float(v).unwrap_or_else(BigRat::zero)
}

pub fn pow2(bits: i64) -> BigRat {
    if bits >= 0 {
        BigRat::from_integer(BigInt::one() << bits as usize)
    } else {
        BigRat::new(BigInt::one(), BigInt::one() << (-bits) as usize)
    }
}

/// Largest multiple of `2^-bits` that is `<= x`.
pub fn round_down(x: &BigRat, bits: u32) -> BigRat {
    let scaled = x * pow2(bits as i64);
    BigRat::new(scaled.floor().to_integer(), BigInt::one() << bits as usize)
}

/// Smallest multiple of `2^-bits` that is `>= x`.
pub fn round_up(x: &BigRat, bits: u32) -> BigRat {
    let scaled = x * pow2(bits as i64);
    BigRat::new(scaled.ceil().to_integer(), BigInt::one() << bits as usize)
}

/// Nearest multiple of `2^-bits` (ties toward +inf).
pub fn round_nearest(x: &BigRat, bits: u32) -> BigRat {
    let half = BigRat::new(BigInt::one(), BigInt::from(2));
    let scaled = x * pow2(bits as i64) + half;
    BigRat::new(scaled.floor().to_integer(), BigInt::one() << bits as usize)
}

/// A rational `s` with `sqrt(x) <= s <= sqrt(x) + 2^-bits`, for `x >= 0`.
pub fn sqrt_upper(x: &BigRat, bits: u32) -> BigRat {
    assert!(!x.is_negative(), "sqrt of a negative rational");
    if x.is_zero() {
        return BigRat::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits before taking the integer root.
    let scale = BigInt::one() << (2 * bits as usize);
    let radicand = x.numer() * x.denom() * scale;
    let mut root = radicand.sqrt();
    if &root * &root < radicand {
        root += 1;
    }
    BigRat::new(root, x.denom() << bits as usize)
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Trial division; `None` when `|n|` is too large to factor cheaply.
pub fn prime_factors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return Some(out);
    }
    let mut p = BigInt::from(2);
    let mut steps = 0u64;
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            out.push(p.clone());
            while (&m % &p).is_zero() {
                m /= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
        steps += 1;
        if steps > 2_000_000 {
            return None;
        }
    }
    if m > BigInt::one() {
        out.push(m);
    }
    Some(out)
}

pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus || n <= &BigInt::one() {
        return false;
    }
    matches!(prime_factors(n), Some(f) if f.len() == 1 && &f[0] == n)
}

/// All positive divisors, or `None` if factoring is out of budget.
pub fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let primes = prime_factors(n)?;
    let mut m = n.abs();
    let mut divs = vec![BigInt::one()];
    for p in primes {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_and_fraction_forms() {
        assert_eq!(parse_rational("-5/2").unwrap(), ratio(-5, 2));
        assert_eq!(parse_rational("1.414").unwrap(), ratio(1414, 1000));
        assert_eq!(parse_rational("-.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("2e-3").unwrap(), ratio(2, 1000));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn formats_round_trip() {
        for s in ["0", "-3", "7/4", "-11/2"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }

    #[test]
    fn sqrt_bound_brackets_root() {
        let two = int(2);
        let s = sqrt_upper(&two, 40);
        assert!(&s * &s >= two);
        let lower = &s - pow2(-40);
        assert!(&lower * &lower <= two);
        assert_eq!(sqrt_upper(&int(9), 10), int(3));
    }

    #[test]
    fn rounding_brackets_value() {
        let x = ratio(1, 3);
        assert!(round_down(&x, 10) <= x && x <= round_up(&x, 10));
        assert_eq!(&round_up(&x, 10) - &round_down(&x, 10), pow2(-10));
    }

    #[test]
    fn primes_and_divisors() {
        assert!(is_prime(&BigInt::from(11)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(15)));
        let d = divisors(&BigInt::from(-12)).unwrap();
        let d: Vec<i64> = d.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
