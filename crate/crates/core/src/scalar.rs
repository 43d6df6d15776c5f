//! Exact scalars and the few conversions that leave the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational of unbounded size, always reduced with positive denominator.
pub type Scalar = BigRational;

/// Floating-point value used only for roots of quadratics and cube roots.
pub type RealScalar = f64;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn sign(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn check_root(n: &BigInt, r: BigInt, k: u32) -> Option<BigInt> {
    (r.pow(k) == *n).then_some(r)
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = check_root(x.numer(), x.numer().sqrt(), 2)?;
    let d = check_root(x.denom(), x.denom().sqrt(), 2)?;
    Some(Scalar::new(n, d))
}

/// Exact real cube root when `x` is the cube of a rational.
pub fn cbrt_exact(x: &Scalar) -> Option<Scalar> {
    let n = check_root(x.numer(), x.numer().cbrt(), 3)?;
    let d = check_root(x.denom(), x.denom().cbrt(), 3)?;
    Some(Scalar::new(n, d))
}

/// Primitive integer representative of a coefficient vector: divide by
/// gcd(numerators)/lcm(denominators) and make the first nonzero entry positive.
pub fn canonical(v: &[Scalar]) -> Vec<Scalar> {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for x in v.iter().filter(|x| !x.is_zero()) {
        g = g.gcd(x.numer());
        l = l.lcm(x.denom());
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let mut content = Scalar::new(g, l);
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        content = -content;
    }
    v.iter().map(|x| x / &content).collect()
}

/// Largest absolute value in `v`.
pub fn max_abs(v: &[Scalar]) -> Scalar {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Scalar::zero)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid number {:?}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

fn parse_decimal(s: &str) -> Option<Scalar> {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mant.as_bytes().first()? {
        b'-' => (true, &mant[1..]),
        b'+' => (false, &mant[1..]),
        _ => (false, mant),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.bytes().chain(fp.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{ip}{fp}");
    let n = BigInt::parse_bytes(if digits.is_empty() { b"0" } else { digits.as_bytes() }, 10)?;
    let scale = exp - i32::try_from(fp.len()).ok()?;
    let ten = BigInt::from(10u8);
    let mut v = if scale >= 0 {
        Scalar::from_integer(n * ten.pow(scale.unsigned_abs()))
    } else {
        Scalar::new(n, ten.pow(scale.unsigned_abs()))
    };
    if neg {
        v = -v;
    }
    Some(v)
}

/// Parses `n`, `n/d` or a decimal such as `-0.75` or `1.5e-3`, exactly.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let t = s.trim();
    let err = || ParseScalarError(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.sign() == Sign::NoSign {
            return Err(err());
        }
        return Ok(Scalar::new(n, d));
    }
    parse_decimal(t).ok_or_else(err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_scalar("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_scalar("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_scalar("0.75").unwrap(), ratio(3, 4));
        assert_eq!(parse_scalar("-.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("1.5e-3").unwrap(), ratio(3, 2000));
        assert_eq!(parse_scalar("2E2").unwrap(), int(200));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        for bad in ["1/0", "", ".", "abc", "1.2.3", "1/x", "--1"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for x in [ratio(-965, 32768), int(0), int(-8), ratio(1, 3)] {
            assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn exact_roots() {
        assert_eq!(sqrt_exact(&ratio(9, 16)), Some(ratio(3, 4)));
        assert_eq!(sqrt_exact(&ratio(2, 1)), None);
        assert_eq!(sqrt_exact(&ratio(-1, 4)), None);
        assert_eq!(cbrt_exact(&ratio(-8, 27)), Some(ratio(-2, 3)));
        assert_eq!(cbrt_exact(&ratio(1, 48)), None);
    }

    #[test]
    fn canonical_form() {
        let v = canonical(&[ratio(-1, 2), int(0), ratio(3, 4)]);
        assert_eq!(v, vec![int(2), int(0), int(-3)]);
        assert_eq!(canonical(&[int(0), int(0)]), vec![int(0), int(0)]);
    }
}
